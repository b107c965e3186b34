//! Edge colorings and colored graphs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, SimpleGraph};

/// A color identifier. Colors need not be contiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u32);

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("edge {0} is colored but is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("edge {0} has no color")]
    Uncolored(Edge),
    #[error("edge {0} is colored twice")]
    Duplicate(Edge),
    #[error("coloring has {found} entries but graph has {expected} edges")]
    SizeMismatch { expected: usize, found: usize },
}

/// Total map from edges to colors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    assignment: BTreeMap<Edge, Color>,
}

impl EdgeColoring {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a coloring, rejecting edges listed twice.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, ColoringError>
    where
        I: IntoIterator<Item = (Edge, Color)>,
    {
        let mut assignment = BTreeMap::new();
        for (e, c) in pairs {
            if assignment.insert(e, c).is_some() {
                return Err(ColoringError::Duplicate(e));
            }
        }
        Ok(EdgeColoring { assignment })
    }

    /// Colors `edges[i]` with `colors[i]`.
    pub fn from_edge_colors(edges: &[Edge], colors: &[u32]) -> Self {
        assert_eq!(edges.len(), colors.len());
        EdgeColoring {
            assignment: edges.iter().copied().zip(colors.iter().map(|&c| Color(c))).collect(),
        }
    }

    /// One color for every edge.
    pub fn monochromatic(g: &SimpleGraph, color: Color) -> Self {
        EdgeColoring {
            assignment: g.edges().into_iter().map(|e| (e, color)).collect(),
        }
    }

    pub fn set(&mut self, e: Edge, c: Color) {
        self.assignment.insert(e, c);
    }

    pub fn get(&self, e: Edge) -> Option<Color> {
        self.assignment.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Entries sorted by edge.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.assignment.iter().map(|(&e, &c)| (e, c))
    }

    /// Color classes keyed by color, each sorted by edge.
    pub fn classes(&self) -> BTreeMap<Color, Vec<Edge>> {
        let mut out: BTreeMap<Color, Vec<Edge>> = BTreeMap::new();
        for (&e, &c) in &self.assignment {
            out.entry(c).or_default().push(e);
        }
        out
    }

    pub fn class_count(&self) -> usize {
        self.classes().len()
    }

    /// Every color class has at most one edge.
    pub fn is_rainbow(&self) -> bool {
        self.classes().values().all(|c| c.len() <= 1)
    }

    /// Renumbers colors `0, 1, ...` in order of first appearance along the
    /// edge order.
    pub fn normalized(&self) -> Self {
        let mut map = BTreeMap::new();
        let mut next = 0u32;
        let assignment = self
            .assignment
            .iter()
            .map(|(&e, &c)| {
                let nc = *map.entry(c).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
                (e, Color(nc))
            })
            .collect();
        EdgeColoring { assignment }
    }

    /// A color id not used by any edge.
    pub fn vacant_color(&self) -> Color {
        let max = self.assignment.values().map(|c| c.0).max();
        match max {
            Some(m) if m < u32::MAX => Color(m + 1),
            Some(_) => {
                let used: alloc::collections::BTreeSet<u32> =
                    self.assignment.values().map(|c| c.0).collect();
                Color((0..).find(|c| !used.contains(c)).expect("u32 space exhausted"))
            }
            None => Color(0),
        }
    }
}

/// A graph together with a coloring of exactly its edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: SimpleGraph,
    coloring: EdgeColoring,
}

impl ColoredGraph {
    pub fn new(graph: SimpleGraph, coloring: EdgeColoring) -> Result<Self, ColoringError> {
        for (e, _) in coloring.iter() {
            if !graph.has_edge(e.u, e.v) {
                return Err(ColoringError::NotAnEdge(e));
            }
        }
        for e in graph.edges() {
            if coloring.get(e).is_none() {
                return Err(ColoringError::Uncolored(e));
            }
        }
        Ok(ColoredGraph { graph, coloring })
    }

    /// Pairs `g` with its rainbow coloring.
    pub fn rainbow(graph: SimpleGraph) -> Self {
        let coloring = rainbow_color(&graph);
        ColoredGraph { graph, coloring }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn into_parts(self) -> (SimpleGraph, EdgeColoring) {
        (self.graph, self.coloring)
    }

    pub fn color(&self, a: usize, b: usize) -> Option<Color> {
        Edge::try_new(a, b).and_then(|e| self.coloring.get(e))
    }
}

/// Colors edge `i` (in sorted edge order) with color `i`.
pub fn rainbow_color(g: &SimpleGraph) -> EdgeColoring {
    let edges = g.edges();
    let colors: Vec<u32> = (0..edges.len() as u32).collect();
    EdgeColoring::from_edge_colors(&edges, &colors)
}
