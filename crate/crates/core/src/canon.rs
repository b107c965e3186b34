//! Canonical labeling by color refinement plus individualization.
//!
//! The canonical form is the lexicographically smallest relabeled row vector
//! over every leaf of the search tree. Twin vertices inside a cell are tried
//! only once, since swapping two twins is an automorphism fixing everything
//! individualized so far.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{self, bit, VertexSet};
use crate::graph::SimpleGraph;

/// A canonical form together with the labeling that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    /// Rows of the relabeled graph.
    pub rows: Vec<VertexSet>,
    /// `perm[v]` is the canonical label of input vertex `v`.
    pub perm: Vec<usize>,
}

impl Canonical {
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_rows(self.rows.clone()).expect("relabeling preserves validity")
    }
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbours in every cell.
fn refine(rows: &[VertexSet], cells: &mut Vec<VertexSet>) {
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut next = Vec::with_capacity(cells.len() + 1);
        let mut split = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut buckets: Vec<(u32, VertexSet)> = Vec::new();
            for x in bits::iter(cell) {
                let k = (rows[x] & splitter).count_ones();
                match buckets.iter_mut().find(|(c, _)| *c == k) {
                    Some((_, m)) => *m |= bit(x),
                    None => buckets.push((k, bit(x))),
                }
            }
            if buckets.len() > 1 {
                split = true;
                buckets.sort_unstable_by_key(|&(k, _)| k);
            }
            next.extend(buckets.into_iter().map(|(_, m)| m));
        }
        *cells = next;
        // A split can make an earlier cell unstable, so restart the scan.
        s = if split { 0 } else { s + 1 };
    }
}

fn relabel(rows: &[VertexSet], cells: &[VertexSet]) -> (Vec<VertexSet>, Vec<usize>) {
    let n = rows.len();
    let mut perm = vec![0usize; n];
    for (i, &c) in cells.iter().enumerate() {
        perm[c.trailing_zeros() as usize] = i;
    }
    let mut out = vec![0u64; n];
    for v in 0..n {
        let mut row = 0u64;
        for w in bits::iter(rows[v]) {
            row |= bit(perm[w]);
        }
        out[perm[v]] = row;
    }
    (out, perm)
}

fn search(rows: &[VertexSet], mut cells: Vec<VertexSet>, best: &mut Option<(Vec<VertexSet>, Vec<usize>)>) {
    refine(rows, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let (form, perm) = relabel(rows, &cells);
        if best.as_ref().map_or(true, |(b, _)| form < *b) {
            *best = Some((form, perm));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for x in bits::iter(cell) {
        let twin = tried
            .iter()
            .any(|&y| rows[x] & !bit(y) == rows[y] & !bit(x));
        if twin {
            continue;
        }
        tried.push(x);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(bit(x));
        child.push(cell & !bit(x));
        child.extend_from_slice(&cells[target + 1..]);
        search(rows, child, best);
    }
}

/// Canonical form of `g`: isomorphic graphs, and only those, share `rows`.
pub fn canonical_form(g: &SimpleGraph) -> Canonical {
    let rows = g.rows();
    let mut best = None;
    search(rows, vec![g.vertex_mask()], &mut best);
    let (rows, perm) = best.expect("search visits at least one leaf");
    Canonical { rows, perm }
}

/// Shorthand for the canonical row vector.
pub fn canonical_rows(g: &SimpleGraph) -> Vec<VertexSet> {
    canonical_form(g).rows
}

/// An isomorphism `map` with `b.has_edge(map[x], map[y]) == a.has_edge(x, y)`.
pub fn isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.rows != cb.rows {
        return None;
    }
    let mut inverse_b = vec![0usize; b.order()];
    for (v, &p) in cb.perm.iter().enumerate() {
        inverse_b[p] = v;
    }
    Some(ca.perm.iter().map(|&p| inverse_b[p]).collect())
}
