//! Constructions: sizes, shape, colorings and structural invariants.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsat_core::families::{build, valid_specs_up_to, FamilySpec, FriendshipShape};
use rsat_core::structure::{classify_degree_two, xi_membership};
use rsat_core::verifier::{check_rainbow_iff, check_sufficiency_disjoint_paths, rainbow};
use rsat_core::{is_rainbow_saturated, Color, ColoredGraph, EdgeColoring, SimpleGraph, Verdict};

fn order(spec: &FamilySpec) -> usize {
    match *spec {
        FamilySpec::FriendshipLike { shape, q, p } => {
            1 + q * (p - 1)
                + match shape {
                    FriendshipShape::Plain => 0,
                    FriendshipShape::Bar => 1,
                    FriendshipShape::Tilde => 2,
                }
        }
        FamilySpec::KStar { r } => 3 * r,
        FamilySpec::M { n }
        | FamilySpec::W { n }
        | FamilySpec::Omega { n, .. }
        | FamilySpec::Xi { n, .. }
        | FamilySpec::S { n }
        | FamilySpec::Gamma { n, .. }
        | FamilySpec::GammaR { n, .. }
        | FamilySpec::T { n, .. } => n,
    }
}

/// Edge counts from the block structure of each construction.
fn edges_by_blocks(spec: &FamilySpec) -> usize {
    let c2 = |k: usize| k * (k - 1) / 2;
    let w = |k: usize| 1 + 2 * (k - 2);
    match *spec {
        FamilySpec::FriendshipLike { shape, q, p } => {
            let big = match shape {
                FriendshipShape::Plain => 0,
                FriendshipShape::Bar => 1,
                FriendshipShape::Tilde => 2,
            };
            (q - big) * c2(p) + big * c2(p + 1)
        }
        // Triangles sharing one vertex; for even n one of them is a K4.
        FamilySpec::M { n } => 3 * ((n - 1) / 2) + if n % 2 == 0 { 3 } else { 0 },
        FamilySpec::W { n } => w(n),
        // K4 core plus one W block hanging from each core vertex.
        FamilySpec::Omega { partition, .. } => 6 + partition.iter().map(|&k| w(k)).sum::<usize>(),
        FamilySpec::Xi { a, partition, .. } => {
            6 + partition.iter().map(|&k| w(k)).sum::<usize>() + a.iter().map(|&t| 6 * t).sum::<usize>()
        }
        FamilySpec::S { n } => 2 * n - 2 + 2 * ((n - 1) % 3),
        FamilySpec::Gamma { n1, n2, .. } => w(n1) + w(n2) + 4,
        // Gamma on n - k vertices, then K_k joined to the four hubs.
        FamilySpec::GammaR { n, r } => {
            let k = r - 7;
            2 * (n - k) - 2 + c2(k) + 4 * k
        }
        FamilySpec::KStar { r } => c2(r) + 3 * r,
        FamilySpec::T { n, r } => {
            let k = r - 4;
            let wn = n - 3 * k;
            c2(k) + 3 * k + w(wn) + 2 * k
        }
    }
}

#[test]
fn every_spec_has_its_claimed_shape() {
    let specs = valid_specs_up_to(32);
    assert!(specs.len() > 100);
    for spec in &specs {
        let b = build(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        let g = b.graph();
        assert_eq!(g.order(), order(spec), "{spec}");
        assert_eq!(g.edge_count(), spec.closed_form_edges(), "{spec}");
        assert!(g.is_connected(), "{spec}");
        if spec.target_cycle().is_some() {
            assert!(g.min_degree() >= 2, "{spec}");
        }
        assert!(ColoredGraph::new(g.clone(), b.coloring().clone()).is_ok(), "{spec}");
    }
}

#[test]
fn closed_forms_match_block_counts() {
    for spec in valid_specs_up_to(32) {
        assert_eq!(spec.closed_form_edges(), edges_by_blocks(&spec), "{spec}");
    }
}

#[test]
fn monochromatic_colorings_never_saturate() {
    for spec in valid_specs_up_to(20) {
        let Some(r) = spec.target_cycle() else { continue };
        let g = build(&spec).unwrap().graph().clone();
        if g.is_complete() {
            continue;
        }
        let cg = ColoredGraph::new(g.clone(), EdgeColoring::monochromatic(&g, Color(0))).unwrap();
        assert_eq!(is_rainbow_saturated(&cg, r).unwrap().verdict, Verdict::Unsaturated, "{spec}");
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[test]
fn disjoint_rainbow_paths_imply_saturation() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut hits = 0;
    for _ in 0..600 {
        let n = rng.gen_range(4..=8);
        let r = rng.gen_range(4..=n);
        let p = rng.gen_range(0.4..0.9);
        let g = random_graph(&mut rng, n, p);
        let edges = g.edges();
        let k = rng.gen_range(1..=edges.len().max(1)) as u32;
        let colors: Vec<u32> = edges.iter().map(|_| rng.gen_range(0..k)).collect();
        let cg = ColoredGraph::new(g, EdgeColoring::from_edge_colors(&edges, &colors)).unwrap();
        let rep = is_rainbow_saturated(&cg, r).unwrap();
        if rep.rainbow_copy.is_some() {
            continue;
        }
        if check_sufficiency_disjoint_paths(&cg, r).unwrap().holds {
            hits += 1;
            assert!(rep.is_saturated());
        }
    }
    assert!(hits > 0);
}

#[test]
fn rainbow_criterion_matches_verifier() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut agree = [0usize; 2];
    for _ in 0..800 {
        let n = rng.gen_range(4..=8);
        let r = rng.gen_range(4..=n);
        let p = rng.gen_range(0.3..0.95);
        let g = random_graph(&mut rng, n, p);
        let direct = is_rainbow_saturated(&rainbow(&g), r).unwrap().is_saturated();
        assert_eq!(check_rainbow_iff(&g, r).unwrap().holds, direct, "{:?} r={r}", g.edges());
        agree[usize::from(direct)] += 1;
    }
    assert!(agree[0] > 0 && agree[1] > 0, "{agree:?}");
}

#[test]
fn xi_members_are_recognised() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for spec in valid_specs_up_to(24) {
        let g = build(&spec).unwrap().graph().clone();
        let member = xi_membership(&g);
        let triangle_block = match spec {
            FamilySpec::Xi { partition, .. } | FamilySpec::Omega { partition, .. } => partition.contains(&3),
            _ => false,
        };
        match spec {
            FamilySpec::Xi { .. } | FamilySpec::Omega { .. } if !triangle_block => assert!(member.is_none(), "{spec}"),
            FamilySpec::Xi { .. } | FamilySpec::Omega { .. } => {
                assert!(member.is_some(), "{spec}");
                let mut perm: Vec<usize> = (0..g.order()).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                assert!(xi_membership(&g.permuted(&perm)).is_some(), "{spec} relabeled");
            }
            FamilySpec::W { .. } | FamilySpec::M { .. } | FamilySpec::S { .. } => assert!(member.is_none(), "{spec}"),
            _ => {}
        }
    }
}

#[test]
fn bad_roots_pair_up() {
    let mut rng = ChaCha8Rng::seed_from_u64(10_000);
    let mut with_bad = 0;
    for _ in 0..10_000 {
        let base = rng.gen_range(3..=9);
        let hang = rng.gen_range(0..=3);
        let p = rng.gen_range(0.2..0.8);
        let mut g = SimpleGraph::empty(base + 2 * hang).unwrap();
        for e in random_graph(&mut rng, base, p).edges() {
            g.add_edge(e.u, e.v);
        }
        for h in 0..hang {
            let (x, y) = (base + 2 * h, base + 2 * h + 1);
            let w = rng.gen_range(0..base);
            for (a, b) in [(x, y), (x, w), (y, w)] {
                g.add_edge(a, b);
            }
        }
        let c = classify_degree_two(&g);
        let mut seen = vec![0usize; g.order()];
        for &(a, b) in &c.bad_root_pairs {
            assert!(g.has_edge(a, b));
            seen[a] += 1;
            seen[b] += 1;
        }
        for (v, &count) in seen.iter().enumerate() {
            let expected = usize::from(c.bad_roots.contains(&v));
            assert_eq!(count, expected, "vertex {v} of {:?}", g.edges());
        }
        for v in c.good_roots.iter().chain(&c.bad_roots) {
            assert_eq!(g.degree(*v), 2);
        }
        with_bad += usize::from(!c.bad_roots.is_empty());
    }
    assert!(with_bad > 1000);
}

/// Saturation of `Gamma_n(8)` as built. Every `P_8` between the two sides of
/// the failing nonedge runs through the single extra clique vertex, so this
/// does not hold; run with `--ignored` to see it fail.
#[test]
#[ignore = "Gamma_n(r) is not C_r-rainbow saturated as constructed"]
fn gamma_r_saturates_c8() {
    for n in 11..=16 {
        let b = build(&FamilySpec::GammaR { n, r: 8 }).unwrap();
        let rep = is_rainbow_saturated(&b.colored, 8).unwrap();
        assert!(rep.is_saturated(), "gammar-{n}-r8 fails at {:?}", rep.failing_nonedge);
    }
}
