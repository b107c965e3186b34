//! Bounded-length path and cycle enumeration.
//!
//! Enumeration is a plain depth-first search over a visited bit mask. The
//! `t`-th vertex of a path must lie in a dedicated final mask and the earlier
//! ones in an inner mask, which covers both `u`-`v` paths and rooted cycles.
//! Candidates are always tried in increasing vertex order, so every stream is
//! lexicographic in the vertex sequence.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{bit, low_mask, VertexSet};
use crate::graph::{Edge, GraphError, SimpleGraph};

/// A path given by its vertex sequence; a `P_t` has `t` vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        PathWitness(v)
    }

    pub fn uses_edge(&self, e: Edge) -> bool {
        self.edges().any(|f| f == e)
    }
}

impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A cycle `v0 v1 ... v(k-1)` closing with the edge `v(k-1) v0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| Edge::new(self.0[i], self.0[(i + 1) % k]))
    }
}

/// Lazy depth-first walker producing vertex sequences of a fixed length.
#[derive(Debug, Clone)]
pub struct PathIter {
    rows: Vec<VertexSet>,
    len: usize,
    inner: VertexSet,
    last: VertexSet,
    path: Vec<usize>,
    stack: Vec<VertexSet>,
    visited: VertexSet,
}

impl PathIter {
    fn new(rows: Vec<VertexSet>, start: usize, len: usize, inner: VertexSet, last: VertexSet) -> Self {
        let mut it = PathIter {
            rows,
            len,
            inner,
            last,
            path: Vec::with_capacity(len),
            stack: Vec::with_capacity(len),
            visited: 0,
        };
        if len >= 2 {
            it.push(start);
        }
        it
    }

    #[inline]
    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.visited |= bit(v);
        let cand = if self.path.len() + 1 == self.len {
            self.rows[v] & self.last & !self.visited
        } else {
            self.rows[v] & self.inner & !self.visited
        };
        self.stack.push(cand);
    }

    /// Advances to the next full-length sequence, leaving it in `self.path`.
    #[inline]
    fn advance(&mut self) -> bool {
        loop {
            let Some(top) = self.stack.last_mut() else {
                return false;
            };
            if *top == 0 {
                self.stack.pop();
                if let Some(x) = self.path.pop() {
                    self.visited &= !bit(x);
                }
                continue;
            }
            let w = top.trailing_zeros() as usize;
            *top &= *top - 1;
            if self.path.len() + 1 == self.len {
                self.path.push(w);
                return true;
            }
            self.push(w);
        }
    }

    /// Visits every sequence without allocating; stops when `f` returns `false`.
    pub fn for_each_slice<F: FnMut(&[usize]) -> bool>(mut self, mut f: F) {
        while self.advance() {
            let keep_going = f(&self.path);
            self.path.pop();
            if !keep_going {
                return;
            }
        }
    }
}

impl Iterator for PathIter {
    type Item = PathWitness;

    fn next(&mut self) -> Option<PathWitness> {
        if self.advance() {
            let out = PathWitness(self.path.clone());
            self.path.pop();
            Some(out)
        } else {
            None
        }
    }
}

/// Streams every `P_t` (`t` vertices) from `u` to `v` that uses no edge of
/// `avoid_edges` and no vertex of `avoid_vertices`, in lexicographic order.
pub fn enumerate_paths(
    g: &SimpleGraph,
    u: usize,
    v: usize,
    t: usize,
    avoid_edges: &[Edge],
    avoid_vertices: VertexSet,
) -> Result<PathIter, GraphError> {
    let n = g.order();
    if u >= n || v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
    }
    if u == v {
        return Err(GraphError::Rejected("path endpoints must differ"));
    }
    if t < 2 || t > n {
        return Err(GraphError::Rejected("path length must satisfy 2 <= t <= n"));
    }
    if avoid_vertices & (bit(u) | bit(v)) != 0 {
        return Err(GraphError::Rejected("path endpoints cannot be avoided"));
    }
    if avoid_vertices & !low_mask(n) != 0 {
        return Err(GraphError::Rejected("avoided vertex out of range"));
    }
    Ok(paths_unchecked(g, u, v, t, avoid_edges, avoid_vertices))
}

/// `enumerate_paths` without parameter validation.
pub(crate) fn paths_unchecked(
    g: &SimpleGraph,
    u: usize,
    v: usize,
    t: usize,
    avoid_edges: &[Edge],
    avoid_vertices: VertexSet,
) -> PathIter {
    let mut rows = g.rows().to_vec();
    for e in avoid_edges {
        if e.u < rows.len() && e.v < rows.len() {
            rows[e.u] &= !bit(e.v);
            rows[e.v] &= !bit(e.u);
        }
    }
    let allowed = g.vertex_mask() & !avoid_vertices;
    PathIter::new(rows, u, t, allowed & !bit(v), bit(v))
}

/// Streams the `r`-cycles of `g`, each exactly once.
///
/// A cycle is reported starting at its smallest vertex and oriented so that
/// the second vertex is smaller than the last.
pub struct CycleIter<'g> {
    graph: &'g SimpleGraph,
    len: usize,
    root: usize,
    current: Option<PathIter>,
}

impl<'g> CycleIter<'g> {
    pub fn new(graph: &'g SimpleGraph, len: usize) -> Self {
        assert!(len >= 3, "cycles have at least 3 vertices");
        CycleIter { graph, len, root: 0, current: None }
    }

    fn walker_for(&self, root: usize) -> PathIter {
        let n = self.graph.order();
        let above = low_mask(n) & !low_mask(root + 1);
        let rows: Vec<VertexSet> = self.graph.rows().to_vec();
        PathIter::new(rows, root, self.len, above, above & self.graph.neighbors(root))
    }

    /// Visits every cycle as a vertex slice; stops when `f` returns `false`.
    pub fn for_each_slice<F: FnMut(&[usize]) -> bool>(self, mut f: F) {
        let n = self.graph.order();
        if self.len > n {
            return;
        }
        for root in 0..=(n - self.len) {
            let mut stop = false;
            self.walker_for(root).for_each_slice(|p| {
                if p[1] < p[p.len() - 1] && !f(p) {
                    stop = true;
                    return false;
                }
                true
            });
            if stop {
                return;
            }
        }
    }
}

impl Iterator for CycleIter<'_> {
    type Item = CycleWitness;

    fn next(&mut self) -> Option<CycleWitness> {
        let n = self.graph.order();
        if self.len > n {
            return None;
        }
        loop {
            if self.current.is_none() {
                if self.root + self.len > n {
                    return None;
                }
                self.current = Some(self.walker_for(self.root));
                self.root += 1;
            }
            let walker = self.current.as_mut().expect("walker present");
            match walker.next() {
                Some(p) => {
                    if p.0[1] < p.0[p.0.len() - 1] {
                        return Some(CycleWitness(p.0));
                    }
                }
                None => self.current = None,
            }
        }
    }
}

/// True iff `g` contains a cycle of length exactly `r`.
pub fn has_cycle_of_length(g: &SimpleGraph, r: usize) -> bool {
    CycleIter::new(g, r).next().is_some()
}

/// Returns the first `r`-cycle of `g`, if any.
pub fn first_cycle(g: &SimpleGraph, r: usize) -> Option<CycleWitness> {
    CycleIter::new(g, r).next()
}

/// Checks that `path` is a path of `g` with distinct vertices.
pub fn is_valid_path(g: &SimpleGraph, path: &[usize]) -> bool {
    let mut seen = 0u64;
    for &v in path {
        if v >= g.order() || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Collects every path as a `Vec`; convenience for small inputs.
pub fn collect_paths(g: &SimpleGraph, u: usize, v: usize, t: usize) -> Vec<PathWitness> {
    paths_unchecked(g, u, v, t, &[], 0).collect()
}
