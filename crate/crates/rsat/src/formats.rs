//! Plain-text coloring and witness files.
//!
//! Coloring files hold one `u v c` line per edge. Witness files hold an
//! optional `cycle r` header followed by entries, each opened by
//! `nonedge u v` and continued by `mode cover|pair` and `path v0 v1 ...`.
//! In both formats blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use rsat_core::verifier::WitnessMode;
use rsat_core::{Color, Edge, EdgeColoring, PathWitness, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {edge} is not an edge of the graph")]
    NotAnEdge { line: usize, edge: Edge },
    #[error("line {line}: edge {edge} is colored twice")]
    Duplicate { line: usize, edge: Edge },
    #[error("edge {0} has no color")]
    Uncolored(Edge),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Numbered lines with comments stripped and blanks dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("{what} `{tok}` is not a non-negative integer")))
}

fn parse_edge(line: usize, a: usize, b: usize, n: usize) -> Result<Edge, FormatError> {
    if a == b {
        return Err(syntax(line, format!("self-loop at {a}")));
    }
    if a >= n || b >= n {
        return Err(syntax(line, format!("vertex {} out of range for {n} vertices", a.max(b))));
    }
    Ok(Edge::new(a, b))
}

/// Parses a coloring of `g`; every edge of `g` must be colored exactly once.
pub fn parse_coloring(text: &str, g: &SimpleGraph) -> Result<EdgeColoring, FormatError> {
    let mut coloring = EdgeColoring::new();
    for (line, body) in content_lines(text) {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [a, b, c] = toks[..] else {
            return Err(syntax(line, "expected `u v c`"));
        };
        let (a, b) = (parse_usize(line, a, "vertex")?, parse_usize(line, b, "vertex")?);
        let c: u32 = c
            .parse()
            .map_err(|_| syntax(line, format!("color `{c}` is not a non-negative 32-bit integer")))?;
        let edge = parse_edge(line, a, b, g.order())?;
        if !g.has_edge(a, b) {
            return Err(FormatError::NotAnEdge { line, edge });
        }
        if coloring.get(edge).is_some() {
            return Err(FormatError::Duplicate { line, edge });
        }
        coloring.set(edge, Color(c));
    }
    if let Some(e) = g.edges().into_iter().find(|&e| coloring.get(e).is_none()) {
        return Err(FormatError::Uncolored(e));
    }
    Ok(coloring)
}

/// Writes a coloring, one line per edge sorted by `(u, v)`.
pub fn write_coloring(coloring: &EdgeColoring) -> String {
    let mut out = String::new();
    for (e, c) in coloring.iter() {
        writeln!(out, "{} {} {}", e.u, e.v, c.0).expect("writing to a String");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessEntry {
    pub line: usize,
    pub nonedge: Edge,
    pub mode: WitnessMode,
    pub paths: Vec<PathWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WitnessFile {
    /// Cycle length from the `cycle` header, if present.
    pub cycle: Option<usize>,
    pub entries: Vec<WitnessEntry>,
}

/// Parses a witness file. Vertex ranges are checked later against the graph.
pub fn parse_witness(text: &str) -> Result<WitnessFile, FormatError> {
    let mut file = WitnessFile::default();
    let mut mode_seen = Vec::new();
    for (line, body) in content_lines(text) {
        let mut toks = body.split_whitespace();
        let keyword = toks.next().expect("non-empty line");
        let rest: Vec<&str> = toks.collect();
        match keyword {
            "cycle" => {
                if !file.entries.is_empty() {
                    return Err(syntax(line, "`cycle` must precede every entry"));
                }
                let [r] = rest[..] else {
                    return Err(syntax(line, "expected `cycle r`"));
                };
                file.cycle = Some(parse_usize(line, r, "cycle length")?);
            }
            "nonedge" => {
                let [a, b] = rest[..] else {
                    return Err(syntax(line, "expected `nonedge u v`"));
                };
                let (a, b) = (parse_usize(line, a, "vertex")?, parse_usize(line, b, "vertex")?);
                let nonedge = parse_edge(line, a, b, usize::MAX)?;
                file.entries.push(WitnessEntry { line, nonedge, mode: WitnessMode::EdgeCover, paths: Vec::new() });
                mode_seen.push(false);
            }
            "mode" => {
                let entry = file.entries.last_mut().ok_or_else(|| syntax(line, "`mode` before any `nonedge`"))?;
                let seen = mode_seen.last_mut().expect("one flag per entry");
                if *seen {
                    return Err(syntax(line, "entry already has a mode"));
                }
                *seen = true;
                entry.mode = match rest[..] {
                    ["cover"] => WitnessMode::EdgeCover,
                    ["pair"] => WitnessMode::DisjointRainbowPair,
                    _ => return Err(syntax(line, "expected `mode cover` or `mode pair`")),
                };
            }
            "path" => {
                let entry = file.entries.last_mut().ok_or_else(|| syntax(line, "`path` before any `nonedge`"))?;
                if rest.len() < 2 {
                    return Err(syntax(line, "a path needs at least two vertices"));
                }
                let vs = rest
                    .iter()
                    .map(|t| parse_usize(line, t, "vertex"))
                    .collect::<Result<Vec<_>, _>>()?;
                entry.paths.push(PathWitness(vs));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }
    if let Some((entry, _)) = file.entries.iter().zip(&mode_seen).find(|(_, seen)| !**seen) {
        return Err(syntax(entry.line, "entry has no `mode` line"));
    }
    Ok(file)
}

pub fn write_witness(file: &WitnessFile) -> String {
    let mut out = String::new();
    if let Some(r) = file.cycle {
        writeln!(out, "cycle {r}").expect("writing to a String");
    }
    for entry in &file.entries {
        let mode = match entry.mode {
            WitnessMode::EdgeCover => "cover",
            WitnessMode::DisjointRainbowPair => "pair",
        };
        writeln!(out, "\nnonedge {} {}\nmode {mode}", entry.nonedge.u, entry.nonedge.v).expect("writing to a String");
        for p in &entry.paths {
            let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
            writeln!(out, "path {}", vs.join(" ")).expect("writing to a String");
        }
    }
    out
}

/// Reads the first graph6 line of a graph file.
pub fn first_graph6_line(text: &str) -> Option<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with(">>graph6<<"))
}
