//! Simple undirected graphs on at most 64 vertices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::{self, bit, low_mask, VertexSet};

/// Width of an adjacency row.
pub const MAX_VERTICES: usize = 64;

/// Vertex cap applied by verifier-facing entry points unless overridden.
pub const DEFAULT_VERTEX_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("rejected input: {0}")]
    Rejected(&'static str),
}

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the edge `{a, b}` in normalized order.
    ///
    /// Panics when `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn try_new(a: usize, b: usize) -> Option<Self> {
        (a != b).then(|| Edge::new(a, b))
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Undirected simple graph. Row `v` holds the neighbourhood `N(v)` as a bit set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleGraph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(SimpleGraph { n, rows: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (a, b) in edges {
            g.try_add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let valid = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !valid).trailing_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for w in bits::iter(row) {
                if rows[w] & bit(v) == 0 {
                    return Err(GraphError::Rejected("adjacency rows are not symmetric"));
                }
            }
        }
        Ok(SimpleGraph { n, rows })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Rejected("a cycle needs at least 3 vertices"));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// All vertices as a bit set.
    #[inline]
    pub fn vertex_mask(&self) -> VertexSet {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.rows[a] & bit(b) != 0
    }

    pub fn try_add_edge(&mut self, a: usize, b: usize) -> Result<bool, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        let fresh = self.rows[a] & bit(b) == 0;
        self.rows[a] |= bit(b);
        self.rows[b] |= bit(a);
        Ok(fresh)
    }

    /// Adds `ab`; panics on invalid endpoints.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.try_add_edge(a, b).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.n && b < self.n {
            self.rows[a] &= !bit(b);
            self.rows[b] &= !bit(a);
        }
    }

    pub fn with_edge(&self, a: usize, b: usize) -> Self {
        let mut g = self.clone();
        g.add_edge(a, b);
        g
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn edge_count(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|r| r.count_ones()).sum();
        (twice / 2) as usize
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits::iter(self.rows[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Non-adjacent pairs sorted by `(u, v)`.
    pub fn nonedges(&self) -> Vec<Edge> {
        let all = self.vertex_mask();
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = all & !self.rows[u] & !low_mask(u + 1);
            for v in bits::iter(missing) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits::iter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertex_mask()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Sorted degree sequence, non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0; self.n];
        for (v, &row) in self.rows.iter().enumerate() {
            let mut r = 0;
            for w in bits::iter(row) {
                r |= bit(perm[w]);
            }
            rows[perm[v]] = r;
        }
        SimpleGraph { n: self.n, rows }
    }

    /// Distance-limited BFS layers from `v`; `None` entries are unreachable.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut seen = bit(v);
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for x in bits::iter(frontier) {
                next |= self.rows[x];
            }
            next &= !seen;
            for x in bits::iter(next) {
                dist[x] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> SimpleGraph {
        SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::empty(1).unwrap().is_connected());
        assert!(!two_triangles().is_connected());
        assert!(SimpleGraph::cycle(5).unwrap().is_connected());
        assert!(!SimpleGraph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn degrees() {
        assert_eq!(SimpleGraph::complete(4).unwrap().min_degree(), 3);
        assert_eq!(SimpleGraph::star(4).unwrap().min_degree(), 1);
        assert_eq!(SimpleGraph::complete(5).unwrap().edge_count(), 10);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SimpleGraph::empty(0), Err(GraphError::VertexCount(0)));
        assert_eq!(SimpleGraph::empty(65), Err(GraphError::VertexCount(65)));
        assert!(SimpleGraph::empty(64).is_ok());
        assert_eq!(SimpleGraph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(SimpleGraph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn edges_and_nonedges_partition_pairs() {
        let g = SimpleGraph::cycle(6).unwrap();
        assert_eq!(g.edges().len() + g.nonedges().len(), 15);
        assert!(g.nonedges().iter().all(|e| !g.has_edge(e.u, e.v)));
        assert_eq!(g.edges()[0], Edge::new(1, 0));
    }

    #[test]
    fn full_width_graph() {
        let g = SimpleGraph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert!(g.nonedges().is_empty());
        assert!(g.is_connected());
    }

    #[test]
    fn permutation_preserves_structure() {
        let g = SimpleGraph::path(4).unwrap();
        let p = g.permuted(&[3, 2, 1, 0]);
        assert!(p.has_edge(3, 2) && p.has_edge(2, 1) && p.has_edge(1, 0));
        assert_eq!(p.edge_count(), 3);
    }

    #[test]
    fn distances() {
        let g = SimpleGraph::path(4).unwrap();
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), Some(2), Some(3)]);
        assert_eq!(two_triangles().distances_from(0)[4], None);
    }
}
