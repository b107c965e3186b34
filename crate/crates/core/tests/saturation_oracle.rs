//! The saturation verifier against a naive oracle on random small instances.
//!
//! The oracle tries every existing color plus two distinct vacant colors on
//! every nonedge and looks for a rainbow cycle by scanning all vertex
//! sequences. Two vacant colors suffice: any unused color behaves the same.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsat_core::{is_rainbow_saturated, Color, ColoredGraph, EdgeColoring, SimpleGraph, Verdict};

fn has_rainbow_cycle(g: &SimpleGraph, c: &EdgeColoring, r: usize) -> bool {
    fn go(g: &SimpleGraph, c: &EdgeColoring, r: usize, seq: &mut Vec<usize>, used: &mut Vec<Color>) -> bool {
        let last = *seq.last().unwrap();
        if seq.len() == r {
            let close = g.has_edge(last, seq[0]).then(|| c.get(rsat_core::Edge::new(last, seq[0])).unwrap());
            return matches!(close, Some(col) if !used.contains(&col));
        }
        for x in seq[0] + 1..g.order() {
            if seq.contains(&x) || !g.has_edge(last, x) {
                continue;
            }
            let col = c.get(rsat_core::Edge::new(last, x)).unwrap();
            if used.contains(&col) {
                continue;
            }
            seq.push(x);
            used.push(col);
            let found = go(g, c, r, seq, used);
            seq.pop();
            used.pop();
            if found {
                return true;
            }
        }
        false
    }
    (0..g.order()).any(|s| go(g, c, r, &mut vec![s], &mut Vec::new()))
}

fn oracle(g: &SimpleGraph, c: &EdgeColoring, r: usize) -> Verdict {
    if has_rainbow_cycle(g, c, r) {
        return Verdict::ContainsRainbowCopy;
    }
    let mut palette: Vec<Color> = c.iter().map(|(_, col)| col).collect();
    palette.sort();
    palette.dedup();
    let top = palette.last().map_or(0, |c| c.0 + 1);
    palette.extend([Color(top), Color(top + 1)]);
    for e in g.nonedges() {
        let h = g.with_edge(e.u, e.v);
        for &col in &palette {
            let mut c2 = c.clone();
            c2.set(e, col);
            if !has_rainbow_cycle(&h, &c2, r) {
                return Verdict::Unsaturated;
            }
        }
    }
    Verdict::Saturated
}

#[test]
fn random_instances_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut tally = [0usize; 3];
    for _ in 0..1200 {
        let n = rng.gen_range(3..=7);
        let r = rng.gen_range(3..=n.clamp(4, 7));
        let density: f64 = rng.gen_range(0.3..0.95);
        let mut g = SimpleGraph::empty(n).unwrap();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(density) {
                    g.add_edge(i, j);
                }
            }
        }
        let edges = g.edges();
        let k = rng.gen_range(1..=edges.len().max(1)) as u32;
        let colors: Vec<u32> = edges.iter().map(|_| rng.gen_range(0..k)).collect();
        let coloring = EdgeColoring::from_edge_colors(&edges, &colors);
        let expected = oracle(&g, &coloring, r);
        let cg = ColoredGraph::new(g.clone(), coloring).unwrap();
        let got = is_rainbow_saturated(&cg, r).unwrap();
        assert_eq!(got.verdict, expected, "n={n} r={r} edges={edges:?} colors={colors:?}");
        tally[match expected {
            Verdict::Saturated => 0,
            Verdict::ContainsRainbowCopy => 1,
            Verdict::Unsaturated => 2,
        }] += 1;
    }
    // The sample must exercise every verdict.
    assert!(tally.iter().all(|&t| t > 20), "{tally:?}");
}

#[test]
fn failing_nonedge_reproduces() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.gen_range(4..=7);
        let r = rng.gen_range(4..=n);
        let mut g = SimpleGraph::empty(n).unwrap();
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(0.6) {
                    g.add_edge(i, j);
                }
            }
        }
        let edges = g.edges();
        let colors: Vec<u32> = edges.iter().map(|_| rng.gen_range(0..3)).collect();
        let coloring = EdgeColoring::from_edge_colors(&edges, &colors);
        let cg = ColoredGraph::new(g.clone(), coloring.clone()).unwrap();
        let rep = is_rainbow_saturated(&cg, r).unwrap();
        if rep.verdict != Verdict::Unsaturated {
            continue;
        }
        let e = rep.failing_nonedge.unwrap();
        let col = match rep.failing_color.unwrap() {
            rsat_core::FailingColor::Existing(c) => c,
            rsat_core::FailingColor::Fresh => coloring.vacant_color(),
        };
        let mut c2 = coloring.clone();
        c2.set(e, col);
        assert!(!has_rainbow_cycle(&g.with_edge(e.u, e.v), &c2, r));
    }
}
