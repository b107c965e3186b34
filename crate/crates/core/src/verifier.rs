//! Exact rainbow-saturation decisions for cycle targets.
//!
//! Adding a nonedge `uv` in color `i` creates a rainbow `C_r` exactly when
//! some rainbow `P_r` from `u` to `v` in `G` avoids color `i`. A nonedge is
//! therefore fine iff such paths exist (the fresh-color case) and their
//! color sets have empty common intersection.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, VertexSet};
use crate::coloring::{rainbow_color, Color, ColoredGraph};
use crate::graph::{Edge, SimpleGraph};
use crate::paths::{paths_unchecked, CycleIter, CycleWitness, PathWitness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("cycle length {0} is below 3")]
    CycleLength(usize),
    #[error("graph contains a rainbow cycle {0:?}")]
    ContainsRainbowCycle(CycleWitness),
    #[error("brute-force range is 5 <= t <= 9, got {0}")]
    LemmaRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Saturated,
    ContainsRainbowCopy,
    Unsaturated,
}

/// The color whose addition along the failing nonedge creates no rainbow
/// cycle. `Fresh` means even an unused color fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailingColor {
    Existing(Color),
    Fresh,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub verdict: Verdict,
    pub rainbow_copy: Option<CycleWitness>,
    pub failing_nonedge: Option<Edge>,
    pub failing_color: Option<FailingColor>,
    /// Per nonedge, rainbow cycles through it that together avoid every
    /// color. Each cycle is listed from `u` to `v`, closing along `uv`.
    pub per_nonedge_evidence: BTreeMap<Edge, Vec<CycleWitness>>,
    /// The graph is complete, so the nonedge condition held vacuously.
    pub vacuous: bool,
}

impl SaturationReport {
    pub fn is_saturated(&self) -> bool {
        self.verdict == Verdict::Saturated
    }
}

/// Growable bitset over dense color or edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IdSet(Vec<u64>);

impl IdSet {
    fn empty(size: usize) -> Self {
        IdSet(vec![0; size.div_ceil(64)])
    }

    fn full(size: usize) -> Self {
        let mut s = Self::empty(size);
        for i in 0..size {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1u64 << (i % 64)) != 0
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Intersects in place; returns whether anything was removed.
    fn retain_common(&mut self, other: &IdSet) -> bool {
        let mut changed = false;
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            let next = *a & b;
            changed |= next != *a;
            *a = next;
        }
        changed
    }

    fn is_disjoint(&self, other: &IdSet) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a & b == 0)
    }
}

/// Dense color ids per vertex pair, ascending in the original color order.
struct ColorTable {
    n: usize,
    dense: Vec<u32>,
    palette: Vec<Color>,
}

impl ColorTable {
    const NONE: u32 = u32::MAX;

    fn new(cg: &ColoredGraph) -> Self {
        let n = cg.graph().order();
        let mut palette: Vec<Color> = cg.coloring().iter().map(|(_, c)| c).collect();
        palette.sort_unstable();
        palette.dedup();
        let mut dense = vec![Self::NONE; n * n];
        for (e, c) in cg.coloring().iter() {
            let id = palette.binary_search(&c).expect("color in palette") as u32;
            dense[e.u * n + e.v] = id;
            dense[e.v * n + e.u] = id;
        }
        ColorTable { n, dense, palette }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> usize {
        self.dense[a * self.n + b] as usize
    }

    fn len(&self) -> usize {
        self.palette.len()
    }
}

/// Depth-first search over paths whose edge colors are pairwise distinct.
struct RainbowWalker<'a> {
    rows: &'a [VertexSet],
    colors: &'a ColorTable,
    target: usize,
    len: usize,
    path: Vec<usize>,
    used: IdSet,
    visited: VertexSet,
}

impl<'a> RainbowWalker<'a> {
    /// Calls `f` on each rainbow path from `start` to `target` with `len`
    /// vertices; stops early when `f` returns `false`.
    fn run<F: FnMut(&[usize], &IdSet) -> bool>(
        rows: &'a [VertexSet],
        colors: &'a ColorTable,
        start: usize,
        target: usize,
        len: usize,
        mut f: F,
    ) {
        let mut w = RainbowWalker {
            rows,
            colors,
            target,
            len,
            path: Vec::with_capacity(len),
            used: IdSet::empty(colors.len()),
            visited: bit(start),
        };
        w.path.push(start);
        w.extend(&mut f);
    }

    fn extend<F: FnMut(&[usize], &IdSet) -> bool>(&mut self, f: &mut F) -> bool {
        let here = *self.path.last().expect("non-empty path");
        let last_step = self.path.len() + 1 == self.len;
        let mut cand = self.rows[here] & !self.visited;
        cand &= if last_step { bit(self.target) } else { !bit(self.target) };
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let c = self.colors.get(here, w);
            if self.used.contains(c) {
                continue;
            }
            self.used.insert(c);
            self.path.push(w);
            let go_on = if last_step {
                f(&self.path, &self.used)
            } else {
                self.visited |= bit(w);
                let r = self.extend(f);
                self.visited &= !bit(w);
                r
            };
            self.path.pop();
            self.used.remove(c);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Graphs with fewer than `r` vertices are decided like any other: no
/// `C_r` fits, so a complete one is saturated and any other is not.
fn check_r(r: usize) -> Result<(), VerifyError> {
    if r < 3 {
        return Err(VerifyError::CycleLength(r));
    }
    Ok(())
}

/// First `r`-cycle (root, then path order) with pairwise distinct colors.
///
/// The search prunes on repeated colors, so heavily repeated colorings are
/// cheap even when the graph has many uncolored `r`-cycles.
pub fn find_rainbow_cycle(cg: &ColoredGraph, r: usize) -> Result<Option<CycleWitness>, VerifyError> {
    if r < 3 {
        return Err(VerifyError::CycleLength(r));
    }
    let g = cg.graph();
    if r > g.order() {
        return Ok(None);
    }
    let table = ColorTable::new(cg);
    let mut path = Vec::with_capacity(r);
    let mut used = IdSet::empty(table.len());
    for root in 0..g.order() {
        let above = g.vertex_mask() & !(u64::MAX >> (63 - root));
        path.clear();
        path.push(root);
        if rainbow_cycle_dfs(g.rows(), &table, r, above, &mut path, &mut used) {
            return Ok(Some(CycleWitness(path)));
        }
    }
    Ok(None)
}

fn rainbow_cycle_dfs(
    rows: &[VertexSet],
    table: &ColorTable,
    r: usize,
    free: VertexSet,
    path: &mut Vec<usize>,
    used: &mut IdSet,
) -> bool {
    let here = *path.last().expect("non-empty path");
    if path.len() == r {
        let root = path[0];
        return rows[here] & bit(root) != 0 && path[1] < here && !used.contains(table.get(here, root));
    }
    let mut cand = rows[here] & free;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let c = table.get(here, w);
        if used.contains(c) {
            continue;
        }
        used.insert(c);
        path.push(w);
        if rainbow_cycle_dfs(rows, table, r, free & !bit(w), path, used) {
            return true;
        }
        path.pop();
        used.remove(c);
    }
    false
}

/// Decides rainbow `C_r`-saturation exactly, with evidence.
pub fn is_rainbow_saturated(cg: &ColoredGraph, r: usize) -> Result<SaturationReport, VerifyError> {
    let g = cg.graph();
    check_r(r)?;
    let mut report = SaturationReport {
        verdict: Verdict::Saturated,
        rainbow_copy: None,
        failing_nonedge: None,
        failing_color: None,
        per_nonedge_evidence: BTreeMap::new(),
        vacuous: g.is_complete(),
    };
    if let Some(c) = find_rainbow_cycle(cg, r)? {
        report.verdict = Verdict::ContainsRainbowCopy;
        report.rainbow_copy = Some(c);
        return Ok(report);
    }
    let table = ColorTable::new(cg);
    for e in g.nonedges() {
        let mut common = IdSet::full(table.len());
        let mut evidence: Vec<CycleWitness> = Vec::new();
        RainbowWalker::run(g.rows(), &table, e.u, e.v, r, |path, used| {
            if common.retain_common(used) || evidence.is_empty() {
                evidence.push(CycleWitness(path.to_vec()));
            }
            !common.is_empty()
        });
        if evidence.is_empty() || !common.is_empty() {
            report.verdict = Verdict::Unsaturated;
            report.failing_nonedge = Some(e);
            report.failing_color = Some(match common.first() {
                Some(i) if !evidence.is_empty() => FailingColor::Existing(table.palette[i]),
                _ => FailingColor::Fresh,
            });
            return Ok(report);
        }
        report.per_nonedge_evidence.insert(e, evidence);
    }
    Ok(report)
}

/// Outcome of the edge-disjoint rainbow pair test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SufficiencyReport {
    pub holds: bool,
    /// First nonedge without a qualifying pair.
    pub first_failure: Option<Edge>,
    pub witnesses: BTreeMap<Edge, (PathWitness, PathWitness)>,
}

/// True iff every nonedge has two edge-disjoint `P_r`s with rainbow union.
pub fn check_sufficiency_disjoint_paths(cg: &ColoredGraph, r: usize) -> Result<SufficiencyReport, VerifyError> {
    let g = cg.graph();
    check_r(r)?;
    if let Some(c) = find_rainbow_cycle(cg, r)? {
        return Err(VerifyError::ContainsRainbowCycle(c));
    }
    let table = ColorTable::new(cg);
    let mut out = SufficiencyReport { holds: true, first_failure: None, witnesses: BTreeMap::new() };
    for e in g.nonedges() {
        let mut paths: Vec<(Vec<usize>, IdSet)> = Vec::new();
        let mut pair = None;
        RainbowWalker::run(g.rows(), &table, e.u, e.v, r, |path, used| {
            // Disjoint color sets imply disjoint edge sets.
            if let Some((p, _)) = paths.iter().find(|(_, c)| c.is_disjoint(used)) {
                pair = Some((PathWitness(p.clone()), PathWitness(path.to_vec())));
                return false;
            }
            paths.push((path.to_vec(), used.clone()));
            true
        });
        match pair {
            Some(p) => {
                out.witnesses.insert(e, p);
            }
            None => {
                out.holds = false;
                out.first_failure = Some(e);
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// A nonedge whose `P_r`s cannot all be dodged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NecessityViolation {
    /// No `P_r` joins the endpoints at all.
    NoPath { nonedge: Edge },
    /// Every `P_r` joining the endpoints uses each edge in `unavoidable`.
    Unavoidable { nonedge: Edge, unavoidable: Vec<Edge> },
}

impl NecessityViolation {
    pub fn nonedge(&self) -> Edge {
        match self {
            NecessityViolation::NoPath { nonedge } | NecessityViolation::Unavoidable { nonedge, .. } => *nonedge,
        }
    }

    /// The smallest edge every path uses, if any path exists.
    pub fn edge(&self) -> Option<Edge> {
        match self {
            NecessityViolation::NoPath { .. } => None,
            NecessityViolation::Unavoidable { unavoidable, .. } => unavoidable.first().copied(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessityReport {
    pub holds: bool,
    /// Violations in nonedge order; only the first unless all were requested.
    pub violations: Vec<NecessityViolation>,
}

impl NecessityReport {
    pub fn first_violation(&self) -> Option<&NecessityViolation> {
        self.violations.first()
    }
}

fn nonedge_violation(g: &SimpleGraph, e: Edge, r: usize, edge_ids: &[usize], edges: &[Edge]) -> Option<NecessityViolation> {
    let n = g.order();
    let mut common = IdSet::full(edges.len());
    let mut any = false;
    paths_unchecked(g, e.u, e.v, r, &[], 0).for_each_slice(|p| {
        any = true;
        let mut used = IdSet::empty(edges.len());
        for w in p.windows(2) {
            used.insert(edge_ids[w[0] * n + w[1]]);
        }
        common.retain_common(&used);
        !common.is_empty()
    });
    if !any {
        return Some(NecessityViolation::NoPath { nonedge: e });
    }
    if common.is_empty() {
        return None;
    }
    let unavoidable = (0..edges.len()).filter(|&i| common.contains(i)).map(|i| edges[i]).collect();
    Some(NecessityViolation::Unavoidable { nonedge: e, unavoidable })
}

fn necessity(g: &SimpleGraph, r: usize, all: bool) -> Result<NecessityReport, VerifyError> {
    check_r(r)?;
    let mut report = NecessityReport { holds: true, violations: Vec::new() };
    let n = g.order();
    let edges = g.edges();
    let mut edge_ids = vec![usize::MAX; n * n];
    for (i, e) in edges.iter().enumerate() {
        edge_ids[e.u * n + e.v] = i;
        edge_ids[e.v * n + e.u] = i;
    }
    for e in g.nonedges() {
        if let Some(v) = nonedge_violation(g, e, r, &edge_ids, &edges) {
            report.holds = false;
            report.violations.push(v);
            if !all {
                break;
            }
        }
    }
    Ok(report)
}

/// True iff every nonedge `uv` and every edge `e` admit a `P_r` from `u` to
/// `v` avoiding `e`. Reports the first violation in nonedge order.
pub fn check_necessity_avoidance(g: &SimpleGraph, r: usize) -> Result<NecessityReport, VerifyError> {
    necessity(g, r, false)
}

/// As [`check_necessity_avoidance`], listing every violating nonedge.
pub fn necessity_violations(g: &SimpleGraph, r: usize) -> Result<NecessityReport, VerifyError> {
    necessity(g, r, true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowIffReport {
    pub holds: bool,
    pub cycle: Option<CycleWitness>,
    pub necessity: NecessityReport,
}

/// Rainbow-coloring shortcut: `C_r`-free and the avoidance condition.
pub fn check_rainbow_iff(g: &SimpleGraph, r: usize) -> Result<RainbowIffReport, VerifyError> {
    check_r(r)?;
    let cycle = CycleIter::new(g, r).next();
    let necessity = if cycle.is_some() {
        NecessityReport { holds: true, violations: Vec::new() }
    } else {
        check_necessity_avoidance(g, r)?
    };
    Ok(RainbowIffReport { holds: cycle.is_none() && necessity.holds, cycle, necessity })
}

/// `is_rainbow_saturated` on the rainbow coloring of `g`.
pub fn is_rainbow_saturated_rainbow(g: &SimpleGraph, r: usize) -> Result<SaturationReport, VerifyError> {
    is_rainbow_saturated(&ColoredGraph::rainbow(g.clone()), r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessMode {
    /// Exactly two edge-disjoint paths.
    DisjointRainbowPair,
    /// Every edge of the graph is avoided by some listed path.
    EdgeCover,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessFailure {
    #[error("{0} is an edge, not a nonedge")]
    NotANonedge(Edge),
    #[error("path {path}: endpoints do not match the nonedge")]
    WrongEndpoints { path: usize },
    #[error("path {path}: {found} vertices, expected {expected}")]
    WrongLength { path: usize, expected: usize, found: usize },
    #[error("path {path}: vertex {vertex} out of range")]
    VertexOutOfRange { path: usize, vertex: usize },
    #[error("path {path}, step {step}: {a}-{b} is not an edge")]
    NonEdgeStep { path: usize, step: usize, a: usize, b: usize },
    #[error("path {path}: vertex {vertex} repeats")]
    RepeatedVertex { path: usize, vertex: usize },
    #[error("pair mode needs exactly 2 paths, got {0}")]
    PairCount(usize),
    #[error("paths share edge {0}")]
    SharedEdge(Edge),
    #[error("no listed path avoids edge {0}")]
    Uncovered(Edge),
}

/// Replays one witness-table row. `t` is the required vertex count.
pub fn verify_witness_table(
    g: &SimpleGraph,
    nonedge: Edge,
    paths: &[PathWitness],
    t: usize,
    mode: WitnessMode,
) -> Result<(), WitnessFailure> {
    let n = g.order();
    if nonedge.v >= n {
        return Err(WitnessFailure::WrongEndpoints { path: 0 });
    }
    if g.has_edge(nonedge.u, nonedge.v) {
        return Err(WitnessFailure::NotANonedge(nonedge));
    }
    for (i, p) in paths.iter().enumerate() {
        let vs = p.vertices();
        if vs.len() != t {
            return Err(WitnessFailure::WrongLength { path: i, expected: t, found: vs.len() });
        }
        let mut seen = 0u64;
        for &v in vs {
            if v >= n {
                return Err(WitnessFailure::VertexOutOfRange { path: i, vertex: v });
            }
            if seen & bit(v) != 0 {
                return Err(WitnessFailure::RepeatedVertex { path: i, vertex: v });
            }
            seen |= bit(v);
        }
        let ends = (vs[0], vs[vs.len() - 1]);
        if ends != (nonedge.u, nonedge.v) && ends != (nonedge.v, nonedge.u) {
            return Err(WitnessFailure::WrongEndpoints { path: i });
        }
        for (step, w) in vs.windows(2).enumerate() {
            if !g.has_edge(w[0], w[1]) {
                return Err(WitnessFailure::NonEdgeStep { path: i, step, a: w[0], b: w[1] });
            }
        }
    }
    match mode {
        WitnessMode::DisjointRainbowPair => {
            if paths.len() != 2 {
                return Err(WitnessFailure::PairCount(paths.len()));
            }
            if let Some(e) = paths[0].edges().find(|&e| paths[1].uses_edge(e)) {
                return Err(WitnessFailure::SharedEdge(e));
            }
        }
        WitnessMode::EdgeCover => {
            for e in g.edges() {
                if paths.iter().all(|p| p.uses_edge(e)) {
                    return Err(WitnessFailure::Uncovered(e));
                }
            }
        }
    }
    Ok(())
}

/// A `K_t` configuration with no suitable path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCounterexample {
    pub u: usize,
    pub v: usize,
    pub avoided_edge: Edge,
    pub avoided_vertex: Option<usize>,
    pub path_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub t: usize,
    pub configurations: usize,
    pub counterexample: Option<LemmaCounterexample>,
}

impl LemmaCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Brute force over `K_t`: for all `u != v` and edges `e`, a `P_t` and a
/// `P_{t-1}` joining `u, v` avoid `e`; for `t >= 6` also a `P_{t-1}`
/// avoiding both `e` and any third vertex `w`.
pub fn complete_graph_path_lemma(t: usize) -> Result<LemmaCheck, VerifyError> {
    if !(5..=9).contains(&t) {
        return Err(VerifyError::LemmaRange(t));
    }
    let k = SimpleGraph::complete(t).expect("t <= 9");
    let edges = k.edges();
    let mut configurations = 0;
    let exists = |u: usize, v: usize, len: usize, e: Edge, avoid: VertexSet| {
        paths_unchecked(&k, u, v, len, &[e], avoid).next().is_some()
    };
    for u in 0..t {
        for v in 0..t {
            if u == v {
                continue;
            }
            for &e in &edges {
                for len in [t, t - 1] {
                    configurations += 1;
                    if !exists(u, v, len, e, 0) {
                        let cx = LemmaCounterexample { u, v, avoided_edge: e, avoided_vertex: None, path_len: len };
                        return Ok(LemmaCheck { t, configurations, counterexample: Some(cx) });
                    }
                }
                if t < 6 {
                    continue;
                }
                for w in (0..t).filter(|&w| w != u && w != v) {
                    configurations += 1;
                    if !exists(u, v, t - 1, e, bit(w)) {
                        let cx = LemmaCounterexample { u, v, avoided_edge: e, avoided_vertex: Some(w), path_len: t - 1 };
                        return Ok(LemmaCheck { t, configurations, counterexample: Some(cx) });
                    }
                }
            }
        }
    }
    Ok(LemmaCheck { t, configurations, counterexample: None })
}

/// Convenience for the rainbow coloring used throughout the verifier tests.
pub fn rainbow(g: &SimpleGraph) -> ColoredGraph {
    ColoredGraph::new(g.clone(), rainbow_color(g)).expect("rainbow coloring covers E(G)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::EdgeColoring;
    use crate::families::{build, FamilySpec};

    fn built(spec: FamilySpec) -> ColoredGraph {
        build(&spec).unwrap().colored
    }

    #[test]
    fn rainbow_k5_has_rainbow_c5() {
        let k5 = rainbow(&SimpleGraph::complete(5).unwrap());
        assert_eq!(find_rainbow_cycle(&k5, 5).unwrap(), Some(CycleWitness(vec![0, 1, 2, 3, 4])));
    }

    #[test]
    fn repeated_color_blocks_the_cycle() {
        let c6 = SimpleGraph::cycle(6).unwrap();
        let mut coloring = rainbow_color(&c6);
        coloring.set(Edge::new(0, 1), Color(2));
        let cg = ColoredGraph::new(c6, coloring).unwrap();
        assert_eq!(find_rainbow_cycle(&cg, 6).unwrap(), None);
    }

    #[test]
    fn m6_is_c4_free_and_saturated() {
        let m6 = built(FamilySpec::M { n: 6 });
        assert_eq!(find_rainbow_cycle(&m6, 4).unwrap(), None);
        let report = is_rainbow_saturated(&m6, 4).unwrap();
        assert!(report.is_saturated(), "{report:?}");
        // The rainbow K4 block is not C4-free.
        let rainbow_m6 = rainbow(m6.graph());
        assert_eq!(is_rainbow_saturated(&rainbow_m6, 4).unwrap().verdict, Verdict::ContainsRainbowCopy);
    }

    #[test]
    fn small_w_graphs() {
        let w3 = rainbow(&SimpleGraph::complete(3).unwrap());
        let report = is_rainbow_saturated(&w3, 5).unwrap();
        assert!(report.is_saturated() && report.vacuous);
        let w4 = built(FamilySpec::W { n: 4 });
        let report = is_rainbow_saturated(&w4, 5).unwrap();
        assert_eq!(report.verdict, Verdict::Unsaturated);
        assert_eq!(report.failing_nonedge, Some(Edge::new(2, 3)));
        assert_eq!(report.failing_color, Some(FailingColor::Fresh));
        let w5 = built(FamilySpec::W { n: 5 });
        let report = is_rainbow_saturated(&w5, 5).unwrap();
        assert_eq!(report.verdict, Verdict::Unsaturated);
        assert!(matches!(report.failing_color, Some(FailingColor::Existing(_))));
        assert!(is_rainbow_saturated(&built(FamilySpec::W { n: 6 }), 5).unwrap().is_saturated());
    }

    #[test]
    fn evidence_covers_every_color() {
        let w7 = built(FamilySpec::W { n: 7 });
        let report = is_rainbow_saturated(&w7, 5).unwrap();
        assert!(report.is_saturated());
        for (e, cycles) in &report.per_nonedge_evidence {
            for (_, c) in w7.coloring().iter() {
                let avoided = cycles.iter().any(|cy| {
                    cy.vertices().windows(2).all(|w| w7.color(w[0], w[1]) != Some(c))
                });
                assert!(avoided, "nonedge {e} color {c}");
            }
        }
    }

    #[test]
    fn small_graph_errors() {
        let p3 = rainbow(&SimpleGraph::path(3).unwrap());
        let report = is_rainbow_saturated(&p3, 4).unwrap();
        assert_eq!(report.failing_color, Some(FailingColor::Fresh));
        assert!(!check_necessity_avoidance(p3.graph(), 4).unwrap().holds);
        assert_eq!(is_rainbow_saturated(&p3, 2), Err(VerifyError::CycleLength(2)));
    }

    #[test]
    fn sufficiency() {
        let w6 = built(FamilySpec::W { n: 6 });
        let s = check_sufficiency_disjoint_paths(&w6, 5).unwrap();
        assert!(s.holds);
        assert_eq!(s.witnesses.len(), w6.graph().nonedges().len());
        let w5 = built(FamilySpec::W { n: 5 });
        assert!(!check_sufficiency_disjoint_paths(&w5, 5).unwrap().holds);
        // Saturated, yet some nonedge has no edge-disjoint pair.
        let omega = built(FamilySpec::Omega { n: 15, partition: [6, 3, 3, 3] });
        let s = check_sufficiency_disjoint_paths(&omega, 5).unwrap();
        assert_eq!(s.first_failure, Some(Edge::new(0, 9)));
        assert!(is_rainbow_saturated(&omega, 5).unwrap().is_saturated());
        let k5 = rainbow(&SimpleGraph::complete(5).unwrap());
        assert!(matches!(
            check_sufficiency_disjoint_paths(&k5, 4),
            Err(VerifyError::ContainsRainbowCycle(_))
        ));
    }

    #[test]
    fn necessity_fails_with_a_leaf() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 1), (2, 4), (4, 3)]).unwrap();
        let report = check_necessity_avoidance(&g, 4).unwrap();
        assert!(!report.holds);
        assert!(check_necessity_avoidance(built(FamilySpec::S { n: 7 }).graph(), 6).unwrap().holds);
        assert!(check_necessity_avoidance(built(FamilySpec::Gamma { n: 10, n1: 5, n2: 5 }).graph(), 7).unwrap().holds);
    }

    #[test]
    fn iff_rejects_the_cycle_itself() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let report = check_rainbow_iff(&c5, 5).unwrap();
        assert!(!report.holds && report.cycle.is_some());
    }

    #[test]
    fn witness_failures_are_structured() {
        let w6 = SimpleGraph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (0, 5), (1, 5)]).unwrap();
        let ne = Edge::new(2, 3);
        let good = [PathWitness(vec![2, 0, 4, 1, 3]), PathWitness(vec![2, 1, 5, 0, 3])];
        assert_eq!(verify_witness_table(&w6, ne, &good, 5, WitnessMode::DisjointRainbowPair), Ok(()));
        let repeat = [PathWitness(vec![2, 0, 4, 0, 3]), good[1].clone()];
        assert_eq!(
            verify_witness_table(&w6, ne, &repeat, 5, WitnessMode::DisjointRainbowPair),
            Err(WitnessFailure::RepeatedVertex { path: 0, vertex: 0 })
        );
        let jump = [PathWitness(vec![2, 3, 4, 1, 0])];
        assert!(matches!(
            verify_witness_table(&w6, Edge::new(0, 2), &jump, 5, WitnessMode::EdgeCover),
            Err(WitnessFailure::NotANonedge(_))
        ));
        let step = [PathWitness(vec![2, 4, 0, 1, 3])];
        assert_eq!(
            verify_witness_table(&w6, ne, &step, 5, WitnessMode::EdgeCover),
            Err(WitnessFailure::NonEdgeStep { path: 0, step: 0, a: 2, b: 4 })
        );
        let shared = [good[0].clone(), PathWitness(vec![2, 0, 5, 1, 3])];
        assert!(matches!(
            verify_witness_table(&w6, ne, &shared, 5, WitnessMode::DisjointRainbowPair),
            Err(WitnessFailure::SharedEdge(_))
        ));
    }

    #[test]
    fn lemma_small_cases() {
        assert!(complete_graph_path_lemma(5).unwrap().holds());
        assert!(complete_graph_path_lemma(6).unwrap().holds());
        assert_eq!(complete_graph_path_lemma(4), Err(VerifyError::LemmaRange(4)));
    }

    #[test]
    fn monochromatic_non_complete_is_not_saturated() {
        let g = built(FamilySpec::W { n: 6 });
        let mono = ColoredGraph::new(g.graph().clone(), EdgeColoring::monochromatic(g.graph(), Color(0))).unwrap();
        assert_eq!(is_rainbow_saturated(&mono, 5).unwrap().verdict, Verdict::Unsaturated);
    }
}
