//! Degree-2 taxonomy, lower-bound audits and membership in the `Xi` family.

use alloc::vec::Vec;

use crate::bits::{self, bit, VertexSet};
use crate::canon::isomorphism;
use crate::families::{build, is_allowed_part, FamilySpec};
use crate::graph::SimpleGraph;

/// Roots and suspensions of a graph.
///
/// A degree-2 vertex `u` with `N(u) = {v, w}` is a bad root when
/// `N(v) = {u, w}` and `d(w) >= 3`, i.e. `uvw` is a pendant triangle hanging
/// from `w`. Every other degree-2 vertex is a good root. The `d(w) >= 3`
/// clause keeps isolated triangles out, so partners always pair up.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Degree2Classification {
    pub good_roots: Vec<usize>,
    pub bad_roots: Vec<usize>,
    pub suspensions: Vec<usize>,
    pub bad_root_pairs: Vec<(usize, usize)>,
}

fn two_neighbours(g: &SimpleGraph, u: usize) -> Option<(usize, usize)> {
    let row = g.neighbors(u);
    if row.count_ones() != 2 {
        return None;
    }
    let a = row.trailing_zeros() as usize;
    let b = 63 - row.leading_zeros() as usize;
    Some((a, b))
}

/// Partner and hanging vertex of a bad root.
fn bad_root_partner(g: &SimpleGraph, u: usize) -> Option<(usize, usize)> {
    let (a, b) = two_neighbours(g, u)?;
    for (v, w) in [(a, b), (b, a)] {
        if g.neighbors(v) == bit(u) | bit(w) && g.degree(w) >= 3 {
            return Some((v, w));
        }
    }
    None
}

pub fn classify_degree_two(g: &SimpleGraph) -> Degree2Classification {
    let mut out = Degree2Classification::default();
    let mut suspensions: VertexSet = 0;
    for u in 0..g.order() {
        if g.degree(u) != 2 {
            continue;
        }
        match bad_root_partner(g, u) {
            Some((v, w)) => {
                out.bad_roots.push(u);
                suspensions |= bit(w);
                if u < v {
                    out.bad_root_pairs.push((u, v));
                }
            }
            None => out.good_roots.push(u),
        }
    }
    out.suspensions = bits::iter(suspensions).collect();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuspensionClause {
    /// The neighbourhood holds this many bad roots instead of 2.
    BadRootCount(usize),
    /// Degree below 5.
    LowDegree(usize),
    /// This good root is a neighbour.
    GoodRootNeighbour(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuspensionViolation {
    pub vertex: usize,
    pub clause: SuspensionClause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionAudit {
    pub suspensions: Vec<usize>,
    pub violations: Vec<SuspensionViolation>,
}

impl SuspensionAudit {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every suspension has exactly two bad roots around it, degree at least 5
/// and no good-root neighbour. A theorem only for saturated graphs with
/// `r >= 5`; on anything else the result is informational.
pub fn audit_suspensions(g: &SimpleGraph) -> SuspensionAudit {
    let class = classify_degree_two(g);
    let mask = |vs: &[usize]| vs.iter().fold(0u64, |m, &v| m | bit(v));
    let (bad, good) = (mask(&class.bad_roots), mask(&class.good_roots));
    let mut violations = Vec::new();
    for &w in &class.suspensions {
        let row = g.neighbors(w);
        let count = (row & bad).count_ones() as usize;
        if count != 2 {
            violations.push(SuspensionViolation { vertex: w, clause: SuspensionClause::BadRootCount(count) });
        }
        if g.degree(w) < 5 {
            violations.push(SuspensionViolation { vertex: w, clause: SuspensionClause::LowDegree(g.degree(w)) });
        }
        for x in bits::iter(row & good) {
            violations.push(SuspensionViolation { vertex: w, clause: SuspensionClause::GoodRootNeighbour(x) });
        }
    }
    SuspensionAudit { suspensions: class.suspensions, violations }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub required: usize,
    pub actual: usize,
    pub pass: bool,
}

/// Evaluates every lower bound that applies to a saturated `g` for `C_r`.
pub fn audit_bounds(g: &SimpleGraph, r: usize, rainbow_mode: bool) -> Vec<BoundCheck> {
    let n = g.order();
    let e = g.edge_count();
    let mut out = Vec::new();
    let mut push = |name, required: usize| out.push(BoundCheck { name, required, actual: e, pass: e >= required });
    if r == 5 && n >= 5 {
        push("c5: (3n-5)/2", (3 * n - 5).div_ceil(2));
    }
    if r >= 6 && n >= r {
        push("r>=6: 6n/5", (6 * n).div_ceil(5));
        if rainbow_mode {
            push("rainbow r>=6: 4n/3", (4 * n).div_ceil(3));
        }
    }
    if r >= 5 && n >= r && classify_degree_two(g).good_roots.is_empty() {
        push("no good roots: 3n/2", (3 * n).div_ceil(2));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiMembership {
    pub a: [usize; 4],
    pub partition: [usize; 4],
    /// `labeling[v]` is the vertex of the built `Xi` matched to `v`.
    pub labeling: Vec<usize>,
}

/// Parameter tuples of `Xi_n` with a triangle block, one per core symmetry
/// class: the `(a_i, n_i)` pairs are listed in non-increasing order.
pub fn xi_parameter_classes(n: usize) -> Vec<([usize; 4], [usize; 4])> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..=n / 3 {
        for part in (3..=n).filter(|&x| is_allowed_part(x)) {
            if 3 * a + part <= n {
                pairs.push((a, part));
            }
        }
    }
    pairs.sort_unstable_by(|x, y| y.cmp(x));
    let mut out = Vec::new();
    let k = pairs.len();
    for i in 0..k {
        for j in i..k {
            for l in j..k {
                for m in l..k {
                    let chosen = [pairs[i], pairs[j], pairs[l], pairs[m]];
                    let total: usize = chosen.iter().map(|&(a, p)| 3 * a + p).sum();
                    let attached: usize = chosen.iter().map(|&(a, _)| a).sum();
                    if total != n || n < 3 * attached + 15 || chosen.iter().all(|&(_, p)| p != 3) {
                        continue;
                    }
                    out.push((chosen.map(|(a, _)| a), chosen.map(|(_, p)| p)));
                }
            }
        }
    }
    out
}

/// Recognises `g` as some `Xi_n(a_1..a_4)` with a triangle block.
///
/// Candidates are generated per parameter class and matched by canonical
/// form after an edge-count and degree-sequence filter.
pub fn xi_membership(g: &SimpleGraph) -> Option<XiMembership> {
    let n = g.order();
    if n < 15 || g.edge_count() != 2 * n - 6 || !g.is_connected() {
        return None;
    }
    let degrees = g.degree_sequence();
    for (a, partition) in xi_parameter_classes(n) {
        let Ok(built) = build(&FamilySpec::Xi { n, a, partition }) else {
            continue;
        };
        let h = built.graph();
        if h.degree_sequence() != degrees {
            continue;
        }
        if let Some(labeling) = isomorphism(g, h) {
            return Some(XiMembership { a, partition, labeling });
        }
    }
    None
}
