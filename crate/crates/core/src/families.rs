//! The cycle-saturation constructions and their colorings.
//!
//! Vertex numbering is fixed per family: hubs (or the core) come first, then
//! the blocks in parameter order. Every family is rainbow colored except the
//! even `M_n`, whose unique `K_4` carries a proper 3-coloring shared by its
//! three perfect matchings.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{rainbow_color, Color, ColoredGraph, EdgeColoring};
use crate::graph::{Edge, SimpleGraph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid {family} parameters: {constraint}")]
    Invalid { family: &'static str, constraint: String },
}

fn invalid(family: &'static str, constraint: impl Into<String>) -> FamilyError {
    FamilyError::Invalid { family, constraint: constraint.into() }
}

/// Which friendship-type graph: `F_q^p`, its bar or its tilde variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FriendshipShape {
    Plain,
    Bar,
    Tilde,
}

/// A named construction with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `q` cliques `K_p` sharing one vertex; `Bar` enlarges one block and
    /// `Tilde` two blocks by one vertex.
    FriendshipLike { shape: FriendshipShape, q: usize, p: usize },
    /// `C_4` construction.
    M { n: usize },
    /// `K_2` joined to an independent set of `n - 2` vertices.
    W { n: usize },
    /// Four `W` blocks whose first hubs form a `K_4` core.
    Omega { n: usize, partition: [usize; 4] },
    /// `Omega` over the residual partition plus `a[i]` triangles fully joined
    /// to core vertex `i`.
    Xi { n: usize, a: [usize; 4], partition: [usize; 4] },
    /// `C_6` construction.
    S { n: usize },
    /// `W_{n1}` and `W_{n2}` with their four hubs forming a `K_4`.
    Gamma { n: usize, n1: usize, n2: usize },
    /// `Gamma_{n-r+7}` with an extra `K_{r-7}` joined to its four hubs.
    GammaR { n: usize, r: usize },
    /// `K_r` where every base vertex gains a private triangle.
    KStar { r: usize },
    /// `K*_{r-4}` plus `W_{n-3r+12}` with both hubs joined to the base.
    T { n: usize, r: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(".")
        };
        match self {
            FamilySpec::FriendshipLike { shape, q, p } => {
                let s = match shape {
                    FriendshipShape::Plain => "f",
                    FriendshipShape::Bar => "fbar",
                    FriendshipShape::Tilde => "ftilde",
                };
                write!(f, "{s}-q{q}-p{p}")
            }
            FamilySpec::M { n } => write!(f, "m-{n}"),
            FamilySpec::W { n } => write!(f, "w-{n}"),
            FamilySpec::Omega { n, partition } => write!(f, "omega-{n}-{}", join(partition)),
            FamilySpec::Xi { n, a, partition } => {
                write!(f, "xi-{n}-a{}-{}", join(a), join(partition))
            }
            FamilySpec::S { n } => write!(f, "s-{n}"),
            FamilySpec::Gamma { n, n1, n2 } => write!(f, "gamma-{n}-{n1}.{n2}"),
            FamilySpec::GammaR { n, r } => write!(f, "gammar-{n}-r{r}"),
            FamilySpec::KStar { r } => write!(f, "kstar-{r}"),
            FamilySpec::T { n, r } => write!(f, "t-{n}-r{r}"),
        }
    }
}

/// Named vertex groups of a built family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Designated {
    pub role: &'static str,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltFamily {
    pub spec: FamilySpec,
    pub colored: ColoredGraph,
    pub designated: Vec<Designated>,
}

impl BuiltFamily {
    pub fn graph(&self) -> &SimpleGraph {
        self.colored.graph()
    }

    pub fn coloring(&self) -> &EdgeColoring {
        self.colored.coloring()
    }

    pub fn role(&self, role: &str) -> Option<&[usize]> {
        self.designated.iter().find(|d| d.role == role).map(|d| d.vertices.as_slice())
    }
}

/// Incremental edge-list builder used by every constructor.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    designated: Vec<Designated>,
}

impl Builder {
    fn new() -> Self {
        Builder { n: 0, edges: Vec::new(), designated: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn vertices(&mut self, k: usize) -> Vec<usize> {
        (0..k).map(|_| self.vertex()).collect()
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.edge(a, b);
            }
        }
    }

    fn join(&mut self, a: usize, vs: &[usize]) {
        for &b in vs {
            self.edge(a, b);
        }
    }

    fn designate(&mut self, role: &'static str, vertices: Vec<usize>) {
        self.designated.push(Designated { role, vertices });
    }

    fn finish(self, family: &'static str) -> Result<(SimpleGraph, Vec<Designated>), FamilyError> {
        if self.n == 0 || self.n > MAX_VERTICES {
            return Err(invalid(family, format!("order {} exceeds the 64-vertex cap", self.n)));
        }
        let g = SimpleGraph::from_edges(self.n, self.edges).map_err(|e| invalid(family, format!("{e}")))?;
        Ok((g, self.designated))
    }
}

fn cap(family: &'static str, n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        Err(invalid(family, format!("n = {n} exceeds the 64-vertex cap")))
    } else {
        Ok(())
    }
}

/// Parts allowed in an `Omega`/`Xi` partition: `3` or at least `6`.
pub fn is_allowed_part(x: usize) -> bool {
    x == 3 || x >= 6
}

/// Lexicographically largest non-increasing 4-part partition of `n` with
/// every part in `{3} ∪ [6, ∞)`, for `n >= 15`.
pub fn default_partition(n: usize) -> Result<[usize; 4], FamilyError> {
    if n < 15 {
        return Err(invalid("partition", format!("n = {n} < 15")));
    }
    for a in (3..=n).rev().filter(|&a| is_allowed_part(a)) {
        for b in (3..=a.min(n - a)).rev().filter(|&b| is_allowed_part(b)) {
            for c in (3..=b.min(n - a - b)).rev().filter(|&c| is_allowed_part(c)) {
                let d = n - a - b - c;
                if d <= c && is_allowed_part(d) {
                    return Ok([a, b, c, d]);
                }
            }
        }
    }
    Err(invalid("partition", format!("no valid 4-part partition of {n}")))
}

fn friendship(shape: FriendshipShape, q: usize, p: usize) -> Result<Builder, FamilyError> {
    const F: &str = "friendship";
    if p < 2 {
        return Err(invalid(F, "p >= 2"));
    }
    let enlarged = match shape {
        FriendshipShape::Plain => 0,
        FriendshipShape::Bar => 1,
        FriendshipShape::Tilde => 2,
    };
    if q < enlarged.max(1) {
        return Err(invalid(F, format!("q >= {}", enlarged.max(1))));
    }
    let n = 1 + q * (p - 1) + enlarged;
    cap(F, n)?;
    let mut b = Builder::new();
    let centre = b.vertex();
    b.designate("center", vec![centre]);
    for i in 0..q {
        let size = if i < enlarged { p } else { p - 1 };
        let block = b.vertices(size);
        b.clique(&block);
        b.join(centre, &block);
    }
    Ok(b)
}

fn w_block(b: &mut Builder, hub1: usize, size: usize) -> (usize, Vec<usize>) {
    let hub2 = b.vertex();
    b.edge(hub1, hub2);
    let leaves = b.vertices(size - 2);
    b.join(hub1, &leaves);
    b.join(hub2, &leaves);
    (hub2, leaves)
}

fn check_partition(family: &'static str, partition: &[usize; 4], total: usize) -> Result<(), FamilyError> {
    if let Some(bad) = partition.iter().find(|&&x| !is_allowed_part(x)) {
        return Err(invalid(family, format!("part {bad} not in Z+ \\ {{1,2,4,5}}")));
    }
    let sum: usize = partition.iter().sum();
    if sum != total {
        return Err(invalid(family, format!("partition sums to {sum}, expected {total}")));
    }
    Ok(())
}

fn xi(n: usize, a: [usize; 4], partition: [usize; 4], family: &'static str) -> Result<Builder, FamilyError> {
    let attached: usize = a.iter().sum();
    if n < 3 * attached + 15 {
        return Err(invalid(family, format!("n = {n} < 3*sum(a) + 15 = {}", 3 * attached + 15)));
    }
    cap(family, n)?;
    check_partition(family, &partition, n - 3 * attached)?;
    let mut b = Builder::new();
    let core = b.vertices(4);
    b.clique(&core);
    let mut second = Vec::new();
    for (i, &size) in partition.iter().enumerate() {
        let (hub2, _) = w_block(&mut b, core[i], size);
        second.push(hub2);
    }
    let mut pendant = Vec::new();
    for (i, &count) in a.iter().enumerate() {
        for _ in 0..count {
            let tri = b.vertices(3);
            b.clique(&tri);
            b.join(core[i], &tri);
            pendant.extend_from_slice(&tri);
        }
    }
    b.designate("core", core);
    b.designate("second_hubs", second);
    b.designate("attached", pendant);
    Ok(b)
}

/// The `T_n(r)` recipe for any `r >= 5` and `n >= 3r - 7`.
///
/// Only `r >= 8` gives a saturated graph; smaller `r` is exposed for the
/// negative checks.
pub fn t_style(n: usize, r: usize) -> Result<BuiltFamily, FamilyError> {
    const F: &str = "T";
    if r < 5 {
        return Err(invalid(F, "r >= 5"));
    }
    if n < 3 * r - 7 {
        return Err(invalid(F, format!("n = {n} < 3r - 7 = {}", 3 * r - 7)));
    }
    cap(F, n)?;
    let mut b = Builder::new();
    let hubs = b.vertices(2);
    b.edge(hubs[0], hubs[1]);
    let base = b.vertices(r - 4);
    b.clique(&base);
    for &h in &hubs {
        b.join(h, &base);
    }
    let mut pendant = Vec::new();
    for &w in &base {
        let pair = b.vertices(2);
        b.clique(&[w, pair[0], pair[1]]);
        pendant.extend_from_slice(&pair);
    }
    let leaves = b.vertices(n + 10 - 3 * r);
    b.join(hubs[0], &leaves);
    b.join(hubs[1], &leaves);
    b.designate("hubs", hubs);
    b.designate("base", base);
    b.designate("pendant", pendant);
    b.designate("independent", leaves);
    let (g, designated) = b.finish(F)?;
    Ok(BuiltFamily { spec: FamilySpec::T { n, r }, colored: ColoredGraph::rainbow(g), designated })
}

/// Builds the named family with its coloring.
pub fn build(spec: &FamilySpec) -> Result<BuiltFamily, FamilyError> {
    let mut k4_recolor: Option<[usize; 4]> = None;
    let (builder, family): (Builder, &'static str) = match *spec {
        FamilySpec::FriendshipLike { shape, q, p } => (friendship(shape, q, p)?, "friendship"),
        FamilySpec::M { n } => {
            if n < 5 {
                return Err(invalid("M", "n >= 5"));
            }
            cap("M", n)?;
            let q = (n - 1) / 2;
            if n % 2 == 1 {
                (friendship(FriendshipShape::Plain, q, 3)?, "M")
            } else {
                k4_recolor = Some([0, 1, 2, 3]);
                (friendship(FriendshipShape::Bar, q, 3)?, "M")
            }
        }
        FamilySpec::W { n } => {
            if n < 3 {
                return Err(invalid("W", "n >= 3"));
            }
            cap("W", n)?;
            let mut b = Builder::new();
            let hub1 = b.vertex();
            let (hub2, leaves) = w_block(&mut b, hub1, n);
            b.designate("hubs", vec![hub1, hub2]);
            b.designate("independent", leaves);
            (b, "W")
        }
        FamilySpec::Omega { n, partition } => {
            if n < 15 {
                return Err(invalid("Omega", "n >= 15"));
            }
            (xi(n, [0; 4], partition, "Omega")?, "Omega")
        }
        FamilySpec::Xi { n, a, partition } => (xi(n, a, partition, "Xi")?, "Xi"),
        FamilySpec::S { n } => {
            if n < 7 {
                return Err(invalid("S", "n >= 7"));
            }
            cap("S", n)?;
            let (first, second) = match n % 3 {
                1 => (3, 3),
                2 => (4, 3),
                _ => (4, 4),
            };
            let t = (n - 7) / 3;
            let mut b = Builder::new();
            let centre = b.vertex();
            let mut blocks = vec![first, second];
            blocks.extend(core::iter::repeat(3).take(t));
            let mut xs = Vec::new();
            let mut ys = Vec::new();
            for (i, &size) in blocks.iter().enumerate() {
                let block = b.vertices(size);
                b.clique(&block);
                b.join(centre, &block);
                match i {
                    0 => xs = block[..3].to_vec(),
                    1 => ys = block[..3].to_vec(),
                    _ => {}
                }
            }
            b.designate("center", vec![centre]);
            b.designate("x", xs);
            b.designate("y", ys);
            (b, "S")
        }
        FamilySpec::Gamma { n, n1, n2 } => (gamma(n, n1, n2, 0, "Gamma")?, "Gamma"),
        FamilySpec::GammaR { n, r } => {
            if r < 8 {
                return Err(invalid("GammaR", "r >= 8"));
            }
            if n < r + 3 {
                return Err(invalid("GammaR", format!("n = {n} < r + 3 = {}", r + 3)));
            }
            let m = n - r + 7;
            (gamma(m + r - 7, m - m / 2, m / 2, r - 7, "GammaR")?, "GammaR")
        }
        FamilySpec::KStar { r } => {
            if r < 3 {
                return Err(invalid("KStar", "r >= 3"));
            }
            cap("KStar", 3 * r)?;
            let mut b = Builder::new();
            let base = b.vertices(r);
            b.clique(&base);
            let mut pendant = Vec::new();
            for &w in &base {
                let pair = b.vertices(2);
                b.clique(&[w, pair[0], pair[1]]);
                pendant.extend_from_slice(&pair);
            }
            b.designate("base", base);
            b.designate("pendant", pendant);
            (b, "KStar")
        }
        FamilySpec::T { n, r } => {
            if r < 8 {
                return Err(invalid("T", "r >= 8"));
            }
            return t_style(n, r);
        }
    };
    let (g, designated) = builder.finish(family)?;
    let mut coloring = rainbow_color(&g);
    if let Some([u, x1, x2, x3]) = k4_recolor {
        let c = |a, b| coloring.get(Edge::new(a, b)).expect("K4 edge");
        let (c1, c2, c3) = (c(u, x1), c(u, x2), c(u, x3));
        coloring.set(Edge::new(x2, x3), c1);
        coloring.set(Edge::new(x1, x3), c2);
        coloring.set(Edge::new(x1, x2), c3);
        coloring = coloring.normalized();
    }
    let colored = ColoredGraph::new(g, coloring).expect("builders color every edge");
    Ok(BuiltFamily { spec: spec.clone(), colored, designated })
}

fn gamma(n: usize, n1: usize, n2: usize, extra: usize, family: &'static str) -> Result<Builder, FamilyError> {
    if n1 < 5 || n2 < 5 {
        return Err(invalid(family, format!("n1 = {n1}, n2 = {n2} must both be >= 5")));
    }
    if n1 + n2 + extra != n {
        return Err(invalid(family, format!("n1 + n2 = {} != {}", n1 + n2, n - extra)));
    }
    cap(family, n)?;
    let mut b = Builder::new();
    let hubs = b.vertices(4);
    b.clique(&hubs);
    let clique = b.vertices(extra);
    b.clique(&clique);
    for &h in &hubs {
        b.join(h, &clique);
    }
    let b1 = b.vertices(n1 - 2);
    b.join(hubs[0], &b1);
    b.join(hubs[1], &b1);
    let b2 = b.vertices(n2 - 2);
    b.join(hubs[2], &b2);
    b.join(hubs[3], &b2);
    b.designate("hubs", hubs);
    if extra > 0 {
        b.designate("extra_clique", clique);
    }
    b.designate("b1", b1);
    b.designate("b2", b2);
    Ok(b)
}

/// Rainbow coloring with colors `0..e` in edge order.
pub fn rainbow_coloring(g: &SimpleGraph) -> EdgeColoring {
    rainbow_color(g)
}

impl FamilySpec {
    /// The closed-form edge count claimed for this family.
    pub fn closed_form_edges(&self) -> usize {
        let choose2 = |k: usize| k * k.saturating_sub(1) / 2;
        match *self {
            FamilySpec::FriendshipLike { shape, q, p } => {
                let enlarged = match shape {
                    FriendshipShape::Plain => 0,
                    FriendshipShape::Bar => 1,
                    FriendshipShape::Tilde => 2,
                };
                (q - enlarged) * choose2(p) + enlarged * choose2(p + 1)
            }
            FamilySpec::M { n } => 3 * (n - 1).div_ceil(2),
            FamilySpec::W { n } => 2 * n - 3,
            FamilySpec::Omega { n, .. } | FamilySpec::Xi { n, .. } => 2 * n - 6,
            FamilySpec::S { n } => 2 * n - 2 + 2 * ((n - 1) % 3),
            FamilySpec::Gamma { n, .. } => 2 * n - 2,
            FamilySpec::GammaR { n, r } => quadratic(n, r, 12),
            FamilySpec::KStar { r } => choose2(r) + 3 * r,
            FamilySpec::T { n, r } => quadratic(n, r, 11),
        }
    }

    /// The cycle length this family is built to saturate, if any.
    pub fn target_cycle(&self) -> Option<usize> {
        match *self {
            FamilySpec::M { .. } => Some(4),
            FamilySpec::W { .. } | FamilySpec::Omega { .. } | FamilySpec::Xi { .. } => Some(5),
            FamilySpec::S { .. } => Some(6),
            FamilySpec::Gamma { .. } => Some(7),
            FamilySpec::GammaR { r, .. } | FamilySpec::T { r, .. } => Some(r),
            FamilySpec::FriendshipLike { .. } | FamilySpec::KStar { .. } => None,
        }
    }
}

/// `2n + (r^2 - 11r)/2 + c`; `r^2 - 11r` is always even.
fn quadratic(n: usize, r: usize, c: i64) -> usize {
    let (n, r) = (n as i64, r as i64);
    (2 * n + (r * r - 11 * r) / 2 + c) as usize
}

/// Every valid parameter set whose graph has at most `max_n` vertices.
pub fn valid_specs_up_to(max_n: usize) -> Vec<FamilySpec> {
    let max_n = max_n.min(MAX_VERTICES);
    let mut out = Vec::new();
    for p in 2..=max_n {
        for q in 1..=max_n {
            for shape in [FriendshipShape::Plain, FriendshipShape::Bar, FriendshipShape::Tilde] {
                let enlarged = match shape {
                    FriendshipShape::Plain => 0,
                    FriendshipShape::Bar => 1,
                    FriendshipShape::Tilde => 2,
                };
                if q >= enlarged.max(1) && 1 + q * (p - 1) + enlarged <= max_n {
                    out.push(FamilySpec::FriendshipLike { shape, q, p });
                }
            }
        }
    }
    for n in 5..=max_n {
        out.push(FamilySpec::M { n });
    }
    for n in 3..=max_n {
        out.push(FamilySpec::W { n });
    }
    for n in 15..=max_n {
        for partition in ordered_partitions(n) {
            out.push(FamilySpec::Omega { n, partition });
        }
        for a in small_tuples((n - 15) / 3) {
            let attached: usize = a.iter().sum();
            if attached == 0 {
                continue;
            }
            for partition in ordered_partitions(n - 3 * attached) {
                out.push(FamilySpec::Xi { n, a, partition });
            }
        }
    }
    for n in 7..=max_n {
        out.push(FamilySpec::S { n });
    }
    for n in 10..=max_n {
        for n1 in 5..=n - 5 {
            out.push(FamilySpec::Gamma { n, n1, n2: n - n1 });
        }
    }
    for r in 8..=max_n {
        for n in r + 3..=max_n {
            out.push(FamilySpec::GammaR { n, r });
        }
        for n in (3 * r).saturating_sub(7)..=max_n {
            out.push(FamilySpec::T { n, r });
        }
    }
    for r in 3..=max_n / 3 {
        out.push(FamilySpec::KStar { r });
    }
    out
}

/// Ordered 4-tuples of allowed parts summing to `total`.
pub fn ordered_partitions(total: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let parts: Vec<usize> = (3..=total).filter(|&x| is_allowed_part(x)).collect();
    for &a in &parts {
        for &b in &parts {
            for &c in &parts {
                if a + b + c + 3 > total {
                    continue;
                }
                let d = total - a - b - c;
                if is_allowed_part(d) {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// Non-negative 4-tuples with coordinate sum at most `max_sum`.
pub fn small_tuples(max_sum: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..=max_sum {
        for b in 0..=max_sum - a {
            for c in 0..=max_sum - a - b {
                for d in 0..=max_sum - a - b - c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// The three doubled color classes of an even `M_n`, for inspection.
pub fn doubled_classes(coloring: &EdgeColoring) -> Vec<(Color, Vec<Edge>)> {
    coloring.classes().into_iter().filter(|(_, es)| es.len() > 1).collect()
}
