//! Graph enumeration and coloring enumeration against brute force.

use std::collections::BTreeSet;

use rsat_core::canon::canonical_form;
use rsat_core::search::{bell, enumerate_colorings, RestrictedGrowth};
use rsat_core::{enumerate_graphs, SimpleGraph};

/// Canonical forms of every labeled graph on `n` vertices with `m` edges
/// that is connected with minimum degree at least 2.
fn brute_classes(n: usize, m: usize) -> BTreeSet<Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let g = SimpleGraph::from_edges(n, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e))
            .unwrap();
        if g.is_connected() && g.min_degree() >= 2 {
            out.insert(canonical_form(&g).rows);
        }
    }
    out
}

#[test]
fn classes_match_all_labelings() {
    for n in 3..=6 {
        for m in n..=n * (n - 1) / 2 {
            let got: Vec<Vec<u64>> = enumerate_graphs(n, m).iter().map(|g| g.rows().to_vec()).collect();
            let want: Vec<Vec<u64>> = brute_classes(n, m).into_iter().collect();
            assert_eq!(got, want, "n={n} m={m}");
        }
    }
}

#[test]
fn known_class_counts() {
    // C5, C5 + chord, the theta graphs and friends on five vertices.
    let counts: Vec<usize> = (5..=10).map(|m| enumerate_graphs(5, m).len()).collect();
    let brute: Vec<usize> = (5..=10).map(|m| brute_classes(5, m).len()).collect();
    assert_eq!(counts, brute);
    assert_eq!(counts[0], 1);
    assert_eq!(counts[5], 1);
}

fn brute_partition_count(len: usize) -> usize {
    // Assign each item a block label below `len` and count distinct
    // partitions as sets of blocks.
    let mut seen = BTreeSet::new();
    let total = (len.max(1) as u64).pow(len as u32);
    for code in 0..total {
        let mut c = code;
        let mut labels = vec![0usize; len];
        for l in labels.iter_mut() {
            *l = (c % len.max(1) as u64) as usize;
            c /= len.max(1) as u64;
        }
        let mut blocks: Vec<Vec<usize>> = (0..len).map(|b| (0..len).filter(|&i| labels[i] == b).collect()).collect();
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        seen.insert(blocks);
    }
    seen.len()
}

#[test]
fn restricted_growth_strings_are_partitions() {
    for len in 0..=6 {
        let mut rgs = RestrictedGrowth::new(len);
        let mut count = 0;
        while let Some(s) = rgs.next_string() {
            let mut max = None::<u8>;
            for &x in s {
                assert!(max.map_or(x == 0, |m| x <= m + 1));
                max = Some(max.map_or(x, |m| m.max(x)));
            }
            count += 1;
        }
        assert_eq!(count, brute_partition_count(len), "len {len}");
        assert_eq!(count as u128, bell(len));
    }
}

#[test]
fn colorings_of_a_triangle() {
    let k3 = SimpleGraph::complete(3).unwrap();
    let all: Vec<_> = enumerate_colorings(&k3, 12).unwrap().collect();
    assert_eq!(all.len(), 5);
    assert_eq!(all.iter().filter(|c| c.is_rainbow()).count(), 1);
    assert_eq!(all.iter().filter(|c| c.class_count() == 1).count(), 1);
}
