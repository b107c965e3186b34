//! Parallel exhaustive search with checkpoint and resume.
//!
//! The result matches [`compute_rsat`](rsat_core::compute_rsat) exactly:
//! levels are merged in canonical order and candidates are examined in
//! ordered chunks, so thread count changes only the wall time.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use rsat_core::search::{examine_graph, extend_class, Certificate, GraphLevels, SearchResult, SearchValue};
use rsat_core::{Color, ColoredGraph, Edge, EdgeColoring, SearchError, SearchMode, SearchTask};

use crate::graph6;

pub const CHECKPOINT_SCHEMA: &str = "rsat-checkpoint/1";

#[derive(Debug, thiserror::Error)]
pub enum DriverError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("checkpoint {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },
    #[error("cannot start a worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DriverOptions {
    pub jobs: usize,
    /// Candidates examined between checkpoint writes.
    pub chunk: usize,
    pub checkpoint: Option<PathBuf>,
}

impl Default for DriverOptions {
    fn default() -> Self {
        DriverOptions { jobs: 1, chunk: 256, checkpoint: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub graph6: String,
    pub coloring: Vec<(usize, usize, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointTask {
    pub n: usize,
    pub r: usize,
    pub mode: String,
    pub min_m: usize,
    pub max_m: usize,
    pub bell_guard: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema: String,
    pub task: CheckpointTask,
    /// Edge count being examined.
    pub m: usize,
    /// Candidates at level `m` already examined.
    pub processed: usize,
    /// graph6 of the last examined candidate, used as a consistency check.
    pub last_graph6: Option<String>,
    pub certificates: Vec<CertificateRecord>,
    pub graphs_examined: u64,
    pub colorings_examined: u64,
}

pub fn mode_name(mode: SearchMode) -> &'static str {
    match mode {
        SearchMode::AllColorings => "all",
        SearchMode::RainbowOnly => "rainbow",
    }
}

fn task_record(task: &SearchTask) -> CheckpointTask {
    CheckpointTask {
        n: task.n,
        r: task.r,
        mode: mode_name(task.mode).to_owned(),
        min_m: task.min_m,
        max_m: task.max_m,
        bell_guard: task.bell_guard,
    }
}

fn record(cert: &Certificate) -> CertificateRecord {
    CertificateRecord {
        graph6: graph6::encode(cert.colored.graph()).expect("search graphs are small"),
        coloring: cert.colored.coloring().iter().map(|(e, c)| (e.u, e.v, c.0)).collect(),
    }
}

fn restore(path: &Path, rec: &CertificateRecord) -> Result<Certificate, DriverError> {
    let bad = |message: String| DriverError::Checkpoint { path: path.to_owned(), message };
    let g = graph6::decode_str(&rec.graph6).map_err(|e| bad(e.to_string()))?;
    let pairs = rec.coloring.iter().map(|&(u, v, c)| (Edge::new(u, v), Color(c)));
    let coloring = EdgeColoring::from_pairs(pairs).map_err(|e| bad(e.to_string()))?;
    let colored = ColoredGraph::new(g, coloring).map_err(|e| bad(e.to_string()))?;
    Ok(Certificate { colored })
}

pub fn read_checkpoint(path: &Path) -> Result<Checkpoint, DriverError> {
    let text = fs::read_to_string(path).map_err(|source| DriverError::Io { path: path.to_owned(), source })?;
    let cp: Checkpoint = serde_json::from_str(&text)
        .map_err(|e| DriverError::Checkpoint { path: path.to_owned(), message: e.to_string() })?;
    if cp.schema != CHECKPOINT_SCHEMA {
        return Err(DriverError::Checkpoint {
            path: path.to_owned(),
            message: format!("unknown schema `{}`", cp.schema),
        });
    }
    Ok(cp)
}

fn write_checkpoint(path: &Path, cp: &Checkpoint) -> Result<(), DriverError> {
    let io_err = |source| DriverError::Io { path: path.to_owned(), source };
    let tmp = path.with_extension("tmp");
    let text = serde_json::to_string_pretty(cp).expect("checkpoint is serialisable");
    fs::write(&tmp, text).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

fn next_level(levels: &mut GraphLevels) -> bool {
    if levels.level() >= levels.max_m() {
        return false;
    }
    let max_m = levels.max_m();
    let children: Vec<Vec<Vec<u64>>> = levels.classes().par_iter().map(|c| extend_class(c, max_m)).collect();
    let merged: BTreeSet<Vec<u64>> = children.into_iter().flatten().collect();
    levels.install(levels.level() + 1, merged.into_iter().collect());
    true
}

/// Runs `task`, optionally resuming from `resume` (path and contents).
pub fn run_search(
    task: &SearchTask,
    opts: &DriverOptions,
    resume: Option<(&Path, Checkpoint)>,
) -> Result<SearchResult, DriverError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| DriverError::Pool(e.to_string()))?;
    pool.install(|| search_in_pool(task, opts, resume))
}

fn search_in_pool(
    task: &SearchTask,
    opts: &DriverOptions,
    resume: Option<(&Path, Checkpoint)>,
) -> Result<SearchResult, DriverError> {
    let mut result = SearchResult {
        value: SearchValue::Undetermined { above: task.min_m.saturating_sub(1) },
        certificates: Vec::new(),
        graphs_examined: 0,
        colorings_examined: 0,
    };
    let mut start_m = task.min_m;
    let mut skip = 0usize;
    let mut expect_last = None;
    if let Some((path, cp)) = resume {
        if cp.task != task_record(task) {
            return Err(DriverError::Checkpoint {
                path: path.to_owned(),
                message: "checkpoint was written for a different task".to_owned(),
            });
        }
        start_m = cp.m;
        skip = cp.processed;
        expect_last = cp.last_graph6.clone().map(|g| (path.to_owned(), g));
        result.graphs_examined = cp.graphs_examined;
        result.colorings_examined = cp.colorings_examined;
        for rec in &cp.certificates {
            result.certificates.push(restore(path, rec)?);
        }
        result.value = SearchValue::Undetermined { above: start_m.saturating_sub(1) };
    }

    let mut levels = GraphLevels::new(task.n, task.max_m);
    while levels.level() < start_m {
        if !next_level(&mut levels) {
            return Ok(result);
        }
    }
    let chunk = opts.chunk.max(1);
    loop {
        let m = levels.level();
        let candidates = levels.candidates();
        if let Some((path, want)) = expect_last.take() {
            let found = skip.checked_sub(1).and_then(|i| candidates.get(i)).map(graph6::encode);
            if !matches!(found, Some(Ok(ref s)) if *s == want) {
                return Err(DriverError::Checkpoint {
                    path,
                    message: format!("candidate {skip} at m = {m} does not match the recorded graph"),
                });
            }
        }
        let mut done = skip.min(candidates.len());
        skip = 0;
        while done < candidates.len() {
            let end = (done + chunk).min(candidates.len());
            let outcomes: Vec<_> = candidates[done..end].par_iter().map(|g| examine_graph(task, g)).collect();
            for (g, outcome) in candidates[done..end].iter().zip(outcomes) {
                let outcome = match outcome {
                    Ok(o) => o,
                    Err(SearchError::BellGuard { .. }) => {
                        result.certificates.clear();
                        result.value = SearchValue::Undetermined { above: m - 1 };
                        return Ok(result);
                    }
                    Err(e) => return Err(e.into()),
                };
                result.graphs_examined += 1;
                result.colorings_examined += outcome.colorings_examined;
                if let Some(coloring) = outcome.certificate {
                    let colored = ColoredGraph::new(g.clone(), coloring).expect("coloring covers E(G)");
                    result.certificates.push(Certificate { colored });
                }
            }
            done = end;
            if let Some(path) = &opts.checkpoint {
                let cp = Checkpoint {
                    schema: CHECKPOINT_SCHEMA.to_owned(),
                    task: task_record(task),
                    m,
                    processed: done,
                    last_graph6: Some(graph6::encode(&candidates[done - 1]).expect("search graphs are small")),
                    certificates: result.certificates.iter().map(record).collect(),
                    graphs_examined: result.graphs_examined,
                    colorings_examined: result.colorings_examined,
                };
                write_checkpoint(path, &cp)?;
            }
        }
        if !result.certificates.is_empty() {
            result.value = SearchValue::Exact(m);
            return Ok(result);
        }
        result.value = SearchValue::Undetermined { above: m };
        if !next_level(&mut levels) {
            return Ok(result);
        }
    }
}
