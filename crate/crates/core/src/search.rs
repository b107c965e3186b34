//! Exhaustive search for the minimum size of a rainbow `C_r`-saturated graph.
//!
//! Graph classes are generated level by level: each canonical graph with
//! `k` edges is extended by every nonedge, canonicalised and deduplicated.
//! A graph is kept at level `k` only if it can still reach connectivity and
//! minimum degree 2 within the edge budget, since every saturated graph with
//! `n >= r >= 4` has both properties.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, VertexSet};
use crate::canon::canonical_rows;
use crate::coloring::{ColoredGraph, EdgeColoring};
use crate::graph::{Edge, SimpleGraph};
use crate::paths::{paths_unchecked, CycleIter};
use crate::verifier::check_rainbow_iff;

/// Default ceiling on edges for exhaustive coloring enumeration.
pub const DEFAULT_BELL_GUARD: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("cycle length r = {r} must satisfy 4 <= r <= n = {n}")]
    CycleLength { n: usize, r: usize },
    #[error("n = {n} exceeds the default limit {limit} for this mode")]
    TooLarge { n: usize, limit: usize },
    #[error("{edges} edges need Bell({edges}) colorings, above the guard of {guard} edges")]
    BellGuard { edges: usize, guard: usize },
    #[error("graph has {0} edges; the evaluator handles at most 64")]
    TooManyEdges(usize),
}

/// Bell numbers `B(0..=k)` by the Bell triangle.
pub fn bell_numbers(k: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("non-empty row"));
        for &x in &row {
            let y = *next.last().expect("non-empty") + x;
            next.push(y);
        }
        out.push(next[0]);
        row = next;
    }
    out.truncate(k + 1);
    out
}

pub fn bell(k: usize) -> u128 {
    bell_numbers(k)[k]
}

/// Restricted-growth strings of a fixed length, in lexicographic order.
///
/// String `a` has `a[0] = 0` and `a[i] <= 1 + max(a[..i])`; each encodes one
/// set partition of `0..len`.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    a: Vec<u8>,
    prefix_max: Vec<u8>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(len: usize) -> Self {
        assert!(len <= 64, "at most 64 positions");
        RestrictedGrowth { a: vec![0; len], prefix_max: vec![0; len], started: false, done: false }
    }

    /// Advances and returns the next string.
    pub fn next_string(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.a);
        }
        let len = self.a.len();
        let mut i = len;
        while i > 1 {
            i -= 1;
            if self.a[i] <= self.prefix_max[i - 1] {
                self.a[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.a[i]);
                for j in i + 1..len {
                    self.a[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return Some(&self.a);
            }
        }
        self.done = true;
        None
    }
}

/// One coloring per set partition of `E(g)`, colors numbered by
/// restricted-growth order over the sorted edge list.
pub fn enumerate_colorings(g: &SimpleGraph, guard: usize) -> Result<impl Iterator<Item = EdgeColoring>, SearchError> {
    let edges = g.edges();
    if edges.len() > guard {
        return Err(SearchError::BellGuard { edges: edges.len(), guard });
    }
    let mut rgs = RestrictedGrowth::new(edges.len());
    Ok(core::iter::from_fn(move || {
        let s = rgs.next_string()?;
        let colors: Vec<u32> = s.iter().map(|&c| u32::from(c)).collect();
        Some(EdgeColoring::from_edge_colors(&edges, &colors))
    }))
}

/// Smallest number of additional edges that could make the graph connected
/// with minimum degree 2.
fn repair_cost(rows: &[VertexSet]) -> usize {
    let deficit: usize = rows.iter().map(|r| 2usize.saturating_sub(r.count_ones() as usize)).sum();
    let mut seen: VertexSet = 0;
    let mut components = 0usize;
    for s in 0..rows.len() {
        if seen & bit(s) != 0 {
            continue;
        }
        components += 1;
        let mut frontier = bit(s);
        seen |= frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
    }
    deficit.div_ceil(2).max(components.saturating_sub(1))
}

/// Canonical children of one canonical graph with `level` edges.
pub fn extend_class(rows: &[VertexSet], max_m: usize) -> Vec<Vec<VertexSet>> {
    let n = rows.len();
    let level = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    let mut out = Vec::new();
    let mut g = SimpleGraph::from_rows(rows.to_vec()).expect("canonical rows are valid");
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            g.add_edge(u, v);
            if repair_cost(g.rows()) <= max_m - (level + 1) {
                out.push(canonical_rows(&g));
            }
            g.remove_edge(u, v);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Level-by-level orderly generator for graphs on `n` vertices.
#[derive(Debug, Clone)]
pub struct GraphLevels {
    n: usize,
    max_m: usize,
    level: usize,
    classes: Vec<Vec<VertexSet>>,
}

impl GraphLevels {
    /// Starts at the empty graph; classes that cannot become connected with
    /// minimum degree 2 by `max_m` edges are dropped.
    pub fn new(n: usize, max_m: usize) -> Self {
        let max_m = max_m.min(n * n.saturating_sub(1) / 2);
        let empty = vec![0u64; n];
        let classes = if repair_cost(&empty) <= max_m { vec![empty] } else { Vec::new() };
        GraphLevels { n, max_m, level: 0, classes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Canonical rows of every retained class at the current level, sorted.
    pub fn classes(&self) -> &[Vec<VertexSet>] {
        &self.classes
    }

    /// Replaces the current level with an externally computed next level.
    pub fn install(&mut self, level: usize, classes: Vec<Vec<VertexSet>>) {
        self.level = level;
        self.classes = classes;
    }

    /// Moves to the next level. Returns `false` past `max_m`.
    pub fn advance(&mut self) -> bool {
        if self.level >= self.max_m {
            return false;
        }
        let mut next = BTreeSet::new();
        for c in &self.classes {
            next.extend(extend_class(c, self.max_m));
        }
        self.level += 1;
        self.classes = next.into_iter().collect();
        true
    }

    /// Connected classes with minimum degree 2 at the current level.
    pub fn candidates(&self) -> Vec<SimpleGraph> {
        self.classes
            .iter()
            .filter(|rows| repair_cost(rows) == 0)
            .map(|rows| SimpleGraph::from_rows(rows.clone()).expect("valid rows"))
            .collect()
    }
}

/// Connected graphs with `m` edges and minimum degree 2 on `n` vertices, one
/// per isomorphism class, sorted by canonical form.
pub fn enumerate_graphs(n: usize, m: usize) -> Vec<SimpleGraph> {
    if m > n * n.saturating_sub(1) / 2 {
        return Vec::new();
    }
    let mut levels = GraphLevels::new(n, m);
    while levels.level() < m {
        levels.advance();
    }
    levels.candidates()
}

/// Precomputed cycle and path structure of one graph, for fast evaluation
/// of many colorings.
#[derive(Debug, Clone)]
pub struct ColoringEvaluator {
    edges: Vec<Edge>,
    cycles: Vec<u64>,
    nonedge_paths: Vec<Vec<u64>>,
}

impl ColoringEvaluator {
    pub fn new(g: &SimpleGraph, r: usize) -> Result<Self, SearchError> {
        let edges = g.edges();
        if edges.len() > 64 {
            return Err(SearchError::TooManyEdges(edges.len()));
        }
        let n = g.order();
        let mut id = vec![usize::MAX; n * n];
        for (i, e) in edges.iter().enumerate() {
            id[e.u * n + e.v] = i;
            id[e.v * n + e.u] = i;
        }
        let mask = |p: &[usize], close: bool| {
            let mut m = 0u64;
            for w in p.windows(2) {
                m |= 1u64 << id[w[0] * n + w[1]];
            }
            if close {
                m |= 1u64 << id[p[p.len() - 1] * n + p[0]];
            }
            m
        };
        let mut cycles = Vec::new();
        CycleIter::new(g, r).for_each_slice(|c| {
            cycles.push(mask(c, true));
            true
        });
        let mut nonedge_paths = Vec::new();
        for e in g.nonedges() {
            let mut ps = Vec::new();
            paths_unchecked(g, e.u, e.v, r, &[], 0).for_each_slice(|p| {
                ps.push(mask(p, false));
                true
            });
            nonedge_paths.push(ps);
        }
        Ok(ColoringEvaluator { edges, cycles, nonedge_paths })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Classes used by the edges in `mask`; `None` if some class repeats.
    #[inline]
    fn class_set(classes: &[u8], mut mask: u64) -> Option<u64> {
        let mut seen = 0u64;
        while mask != 0 {
            let b = 1u64 << classes[mask.trailing_zeros() as usize];
            if seen & b != 0 {
                return None;
            }
            seen |= b;
            mask &= mask - 1;
        }
        Some(seen)
    }

    /// Saturation of the coloring giving edge `i` class `classes[i] < 64`.
    pub fn is_saturated(&self, classes: &[u8]) -> bool {
        debug_assert_eq!(classes.len(), self.edges.len());
        if self.cycles.iter().any(|&c| Self::class_set(classes, c).is_some()) {
            return false;
        }
        let all = classes.iter().fold(0u64, |m, &c| m | 1u64 << c);
        for paths in &self.nonedge_paths {
            let mut common = all;
            let mut any = false;
            for &p in paths {
                if let Some(s) = Self::class_set(classes, p) {
                    any = true;
                    common &= s;
                    if common == 0 {
                        break;
                    }
                }
            }
            if !any || common != 0 {
                return false;
            }
        }
        true
    }

    /// Saturation of an arbitrary coloring of the same graph.
    pub fn is_saturated_coloring(&self, coloring: &EdgeColoring) -> bool {
        let normal = coloring.normalized();
        let classes: Vec<u8> = self
            .edges
            .iter()
            .map(|&e| normal.get(e).expect("coloring covers every edge").0 as u8)
            .collect();
        self.is_saturated(&classes)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    AllColorings,
    RainbowOnly,
}

impl SearchMode {
    pub fn default_limit(self) -> usize {
        match self {
            SearchMode::AllColorings => 7,
            SearchMode::RainbowOnly => 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTask {
    pub n: usize,
    pub r: usize,
    pub mode: SearchMode,
    /// First edge count to examine.
    pub min_m: usize,
    /// Last edge count to examine.
    pub max_m: usize,
    /// Largest edge count for which all partitions are enumerated.
    pub bell_guard: usize,
}

impl SearchTask {
    /// A task with the default limits; `allow_large` lifts the order limit.
    pub fn new(n: usize, r: usize, mode: SearchMode, allow_large: bool) -> Result<Self, SearchError> {
        if r < 4 || r > n {
            return Err(SearchError::CycleLength { n, r });
        }
        let limit = mode.default_limit();
        if n > limit && !allow_large {
            return Err(SearchError::TooLarge { n, limit });
        }
        if n > 64 {
            return Err(SearchError::TooLarge { n, limit: 64 });
        }
        Ok(SearchTask { n, r, mode, min_m: n, max_m: n * (n - 1) / 2, bell_guard: DEFAULT_BELL_GUARD })
    }

    pub fn with_max_m(mut self, max_m: usize) -> Self {
        self.max_m = max_m.min(self.n * (self.n - 1) / 2);
        self
    }
}

/// A saturated graph class with the first saturating coloring found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub colored: ColoredGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchValue {
    Exact(usize),
    /// Every edge count up to and including `above` was exhausted without a
    /// certificate; larger counts were not examined.
    Undetermined { above: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub value: SearchValue,
    pub certificates: Vec<Certificate>,
    pub graphs_examined: u64,
    pub colorings_examined: u64,
}

/// Outcome of examining one graph class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOutcome {
    pub certificate: Option<EdgeColoring>,
    pub colorings_examined: u64,
}

/// Looks for a saturating coloring of `g` under the task's mode.
pub fn examine_graph(task: &SearchTask, g: &SimpleGraph) -> Result<GraphOutcome, SearchError> {
    match task.mode {
        SearchMode::RainbowOnly => {
            let ok = check_rainbow_iff(g, task.r)
                .expect("task guarantees 3 <= r <= n")
                .holds;
            let certificate = ok.then(|| crate::coloring::rainbow_color(g));
            Ok(GraphOutcome { certificate, colorings_examined: 1 })
        }
        SearchMode::AllColorings => {
            let e = g.edge_count();
            if e > task.bell_guard {
                return Err(SearchError::BellGuard { edges: e, guard: task.bell_guard });
            }
            let eval = ColoringEvaluator::new(g, task.r)?;
            let mut rgs = RestrictedGrowth::new(e);
            let mut examined = 0;
            while let Some(s) = rgs.next_string() {
                examined += 1;
                if eval.is_saturated(s) {
                    let colors: Vec<u32> = s.iter().map(|&c| u32::from(c)).collect();
                    let coloring = EdgeColoring::from_edge_colors(eval.edges(), &colors);
                    return Ok(GraphOutcome { certificate: Some(coloring), colorings_examined: examined });
                }
            }
            Ok(GraphOutcome { certificate: None, colorings_examined: examined })
        }
    }
}

/// Sequential reference search: the first edge count with a certificate,
/// with every certificate at that count.
pub fn compute_rsat(task: &SearchTask) -> Result<SearchResult, SearchError> {
    let mut levels = GraphLevels::new(task.n, task.max_m);
    let mut result = SearchResult {
        value: SearchValue::Undetermined { above: task.min_m.saturating_sub(1) },
        certificates: Vec::new(),
        graphs_examined: 0,
        colorings_examined: 0,
    };
    while levels.level() < task.min_m {
        if !levels.advance() {
            return Ok(result);
        }
    }
    loop {
        let m = levels.level();
        for g in levels.candidates() {
            let outcome = match examine_graph(task, &g) {
                Ok(o) => o,
                Err(SearchError::BellGuard { .. }) => {
                    result.certificates.clear();
                    result.value = SearchValue::Undetermined { above: m - 1 };
                    return Ok(result);
                }
                Err(e) => return Err(e),
            };
            result.graphs_examined += 1;
            result.colorings_examined += outcome.colorings_examined;
            if let Some(coloring) = outcome.certificate {
                let colored = ColoredGraph::new(g, coloring).expect("coloring covers E(G)");
                result.certificates.push(Certificate { colored });
            }
        }
        if !result.certificates.is_empty() {
            result.value = SearchValue::Exact(m);
            return Ok(result);
        }
        result.value = SearchValue::Undetermined { above: m };
        if !levels.advance() {
            return Ok(result);
        }
    }
}
