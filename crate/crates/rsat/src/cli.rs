//! The `rsat` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check is decided false,
//! 2 for unusable input and 3 when a search runs out of budget.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rsat_core::families::{build, default_partition, doubled_classes, FamilySpec, FriendshipShape};
use rsat_core::search::SearchValue;
use rsat_core::verifier::{check_rainbow_iff, check_sufficiency_disjoint_paths, complete_graph_path_lemma, verify_witness_table};
use rsat_core::{
    is_rainbow_saturated, ColoredGraph, EdgeColoring, SearchMode, SearchTask, SimpleGraph, DEFAULT_VERTEX_CAP,
};

use crate::driver::{mode_name, read_checkpoint, run_search, DriverOptions};
use crate::formats::{first_graph6_line, parse_coloring, parse_witness, write_coloring};
use crate::graph6;
use crate::report::{self, RunReport};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rsat", version, about = "Rainbow cycle saturation: constructions, verification and exhaustive search")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named construction and write it as graph6 plus a coloring.
    Construct(ConstructArgs),
    /// Decide rainbow C_r-saturation of a colored graph.
    Verify(VerifyArgs),
    /// Replay a witness-path file against a graph.
    Witness(WitnessArgs),
    /// Exhaustive search for the least saturating edge count.
    Search(SearchArgs),
    /// Check the complete-graph path avoidance lemma for one path length.
    Lemma(LemmaArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    F,
    Fbar,
    Ftilde,
    M,
    W,
    Omega,
    Xi,
    S,
    Gamma,
    Gammar,
    Kstar,
    T,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    /// Four block sizes joined by dots, e.g. `6.3.3.3`.
    #[arg(long)]
    pub partition: Option<String>,
    /// Attached triangle counts joined by dots.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub n1: Option<usize>,
    #[arg(long)]
    pub n2: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Directory for the `.g6` and `.col` files.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// File whose first non-comment line is a graph6 string.
    pub graph: PathBuf,
    #[arg(long)]
    pub r: usize,
    /// Coloring file with one `u v c` line per edge.
    #[arg(long, value_name = "FILE", conflicts_with = "rainbow")]
    pub coloring: Option<PathBuf>,
    /// Use the rainbow coloring (the default without `--coloring`).
    #[arg(long)]
    pub rainbow: bool,
    /// Accept graphs above the default vertex cap.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    pub graph: PathBuf,
    pub witness: PathBuf,
    /// Cycle length; overrides the file's `cycle` header.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    All,
    Rainbow,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub mode: Mode,
    #[arg(long)]
    pub max_m: Option<usize>,
    /// Largest edge count for which all colorings are enumerated.
    #[arg(long)]
    pub bell_guard: Option<usize>,
    #[arg(long, env = "RSAT_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_name = "FILE")]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub resume: Option<PathBuf>,
    /// Directory for certificate `.g6` and `.col` files.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(long)]
    pub t: usize,
}

/// An input problem; reported on stderr with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn input_err(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

type Outcome = Result<i32, InputError>;

/// Parses `args` (including the program name) and runs the command. The
/// JSON report goes to `stdout` unless `--report` names a file.
pub fn run<I, T>(args: I, stdout: &mut dyn std::io::Write, stderr: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut rep = RunReport::new(echo);
    let start = Instant::now();
    let result = match &cli.command {
        Command::Construct(a) => construct(a, &mut rep),
        Command::Verify(a) => verify(a, &mut rep),
        Command::Witness(a) => witness(a, &mut rep),
        Command::Search(a) => search(a, &mut rep),
        Command::Lemma(a) => lemma(a, &mut rep),
    };
    let code = match result {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    rep.outcome = match code {
        EXIT_PASS => "pass",
        EXIT_FALSE => "fail",
        _ => "budget-exhausted",
    };
    rep.wall_time_ms = start.elapsed().as_millis() as u64;
    let text = rep.to_json();
    match &cli.report {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    code
}

fn read_input(path: &Path, rep: &mut RunReport) -> Result<Vec<u8>, InputError> {
    let bytes = fs::read(path).map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
    rep.add_input(&path.display().to_string(), &bytes);
    Ok(bytes)
}

fn read_graph(path: &Path, rep: &mut RunReport) -> Result<SimpleGraph, InputError> {
    let bytes = read_input(path, rep)?;
    let text = String::from_utf8(bytes).map_err(|_| input_err(format!("{}: not UTF-8 text", path.display())))?;
    let (line, g6) = first_graph6_line(&text).ok_or_else(|| input_err(format!("{}: no graph6 line", path.display())))?;
    graph6::decode_str(g6).map_err(|e| input_err(format!("{}:{line}: {e}", path.display())))
}

fn dotted(s: &str, what: &str) -> Result<[usize; 4], InputError> {
    let parts = s
        .split('.')
        .map(|p| p.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| input_err(format!("--{what} `{s}` must be four dot-separated integers")))?;
    parts
        .try_into()
        .map_err(|_| input_err(format!("--{what} `{s}` must have exactly four parts")))
}

fn need(v: Option<usize>, flag: &str, family: Family) -> Result<usize, InputError> {
    v.ok_or_else(|| input_err(format!("--{flag} is required for family {family:?}")))
}

fn spec_from(a: &ConstructArgs) -> Result<FamilySpec, InputError> {
    let f = a.family;
    let spec = match f {
        Family::F | Family::Fbar | Family::Ftilde => {
            let shape = match f {
                Family::F => FriendshipShape::Plain,
                Family::Fbar => FriendshipShape::Bar,
                _ => FriendshipShape::Tilde,
            };
            FamilySpec::FriendshipLike { shape, q: need(a.q, "q", f)?, p: need(a.p, "p", f)? }
        }
        Family::M => FamilySpec::M { n: need(a.n, "n", f)? },
        Family::W => FamilySpec::W { n: need(a.n, "n", f)? },
        Family::S => FamilySpec::S { n: need(a.n, "n", f)? },
        Family::Omega => {
            let n = need(a.n, "n", f)?;
            let partition = match &a.partition {
                Some(p) => dotted(p, "partition")?,
                None => default_partition(n)?,
            };
            FamilySpec::Omega { n, partition }
        }
        Family::Xi => {
            let n = need(a.n, "n", f)?;
            let tri = dotted(a.a.as_deref().ok_or_else(|| input_err("--a is required for family Xi"))?, "a")?;
            let partition = match &a.partition {
                Some(p) => dotted(p, "partition")?,
                None => default_partition(n.saturating_sub(3 * tri.iter().sum::<usize>()))?,
            };
            FamilySpec::Xi { n, a: tri, partition }
        }
        Family::Gamma => {
            let n = need(a.n, "n", f)?;
            let n1 = a.n1.unwrap_or_else(|| a.n2.map_or(n.div_ceil(2), |n2| n.saturating_sub(n2)));
            let n2 = a.n2.unwrap_or(n.saturating_sub(n1));
            FamilySpec::Gamma { n, n1, n2 }
        }
        Family::Gammar => FamilySpec::GammaR { n: need(a.n, "n", f)?, r: need(a.r, "r", f)? },
        Family::Kstar => FamilySpec::KStar { r: need(a.r, "r", f)? },
        Family::T => FamilySpec::T { n: need(a.n, "n", f)?, r: need(a.r, "r", f)? },
    };
    Ok(spec)
}

fn write_out(dir: &Path, stem: &str, g: &SimpleGraph, c: &EdgeColoring) -> Result<Vec<String>, InputError> {
    fs::create_dir_all(dir).map_err(|e| input_err(format!("cannot create {}: {e}", dir.display())))?;
    let g6 = dir.join(format!("{stem}.g6"));
    let col = dir.join(format!("{stem}.col"));
    let write = |p: &Path, s: String| fs::write(p, s).map_err(|e| input_err(format!("cannot write {}: {e}", p.display())));
    write(&g6, format!("{}\n", graph6::encode(g)?))?;
    write(&col, write_coloring(c))?;
    Ok(vec![g6.display().to_string(), col.display().to_string()])
}

fn construct(a: &ConstructArgs, rep: &mut RunReport) -> Outcome {
    let spec = spec_from(a)?;
    let built = build(&spec)?;
    let g = built.graph();
    let label = spec.to_string();
    let expected = spec.closed_form_edges();
    let actual = g.edge_count();
    let roles: serde_json::Map<String, Value> =
        built.designated.iter().map(|d| (d.role.to_owned(), json!(d.vertices))).collect();
    let files = match &a.out {
        Some(dir) => write_out(dir, &label, g, built.coloring())?,
        None => Vec::new(),
    };
    rep.step(
        "construct",
        Some(expected == actual),
        json!({
            "family": label,
            "order": g.order(),
            "edges": actual,
            "closed_form_edges": expected,
            "target_cycle": spec.target_cycle(),
            "graph6": graph6::encode(g)?,
            "colors": built.coloring().class_count(),
            "doubled_classes": doubled_classes(built.coloring()).len(),
            "coloring": report::coloring_triples(built.coloring()),
            "designated": roles,
            "files": files,
        }),
    );
    Ok(if expected == actual { EXIT_PASS } else { EXIT_FALSE })
}

fn verify(a: &VerifyArgs, rep: &mut RunReport) -> Outcome {
    let g = read_graph(&a.graph, rep)?;
    if g.order() > DEFAULT_VERTEX_CAP && !a.allow_large {
        return Err(input_err(format!(
            "{} vertices exceeds the default cap of {DEFAULT_VERTEX_CAP}; pass --allow-large",
            g.order()
        )));
    }
    if a.r < 3 {
        return Err(input_err(format!("cycle length {} must be at least 3", a.r)));
    }
    let rainbow_mode = a.coloring.is_none();
    let coloring = match &a.coloring {
        Some(path) => {
            let bytes = read_input(path, rep)?;
            let text = String::from_utf8(bytes).map_err(|_| input_err(format!("{}: not UTF-8 text", path.display())))?;
            parse_coloring(&text, &g).map_err(|e| input_err(format!("{}: {e}", path.display())))?
        }
        None => rsat_core::coloring::rainbow_color(&g),
    };
    let cg = ColoredGraph::new(g.clone(), coloring)?;
    let sat = is_rainbow_saturated(&cg, a.r)?;
    let saturated = sat.is_saturated();
    rep.step(
        "input",
        None,
        json!({
            "order": g.order(),
            "edges": g.edge_count(),
            "r": a.r,
            "coloring": if rainbow_mode { "rainbow" } else { "file" },
            "colors": cg.coloring().class_count(),
        }),
    );
    rep.step("saturation", Some(saturated), report::saturation(&sat));
    let mut ok = saturated;
    if sat.rainbow_copy.is_none() {
        let suff = check_sufficiency_disjoint_paths(&cg, a.r)?;
        rep.step("sufficiency", None, report::sufficiency(&suff));
        if suff.holds && !saturated {
            ok = false;
        }
    }
    if rainbow_mode {
        let iff = check_rainbow_iff(&g, a.r)?;
        let agrees = iff.holds == saturated;
        let mut detail = report::rainbow_iff(&iff);
        detail["agrees_with_saturation"] = json!(agrees);
        rep.step("rainbow_criterion", Some(agrees), detail);
        ok &= agrees;
    }
    let structure = report::structure(&g, a.r, saturated);
    let binding = structure["suspension_audit"]["binding"] == json!(true);
    let audit_pass = structure["suspension_audit"]["pass"] == json!(true);
    rep.step("structure", binding.then_some(audit_pass), structure);
    if binding {
        ok &= audit_pass;
    }
    let (bounds_pass, bounds) = report::bounds(&g, a.r, rainbow_mode);
    rep.step("bounds", saturated.then_some(bounds_pass), bounds);
    if saturated {
        ok &= bounds_pass;
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FALSE })
}

fn witness(a: &WitnessArgs, rep: &mut RunReport) -> Outcome {
    let g = read_graph(&a.graph, rep)?;
    let bytes = read_input(&a.witness, rep)?;
    let text = String::from_utf8(bytes).map_err(|_| input_err(format!("{}: not UTF-8 text", a.witness.display())))?;
    let file = parse_witness(&text).map_err(|e| input_err(format!("{}: {e}", a.witness.display())))?;
    let r = a
        .r
        .or(file.cycle)
        .ok_or_else(|| input_err("cycle length unknown: pass --r or add a `cycle` header"))?;
    if file.entries.is_empty() {
        return Err(input_err(format!("{}: no entries", a.witness.display())));
    }
    let mut all = true;
    for entry in &file.entries {
        let verdict = verify_witness_table(&g, entry.nonedge, &entry.paths, r, entry.mode);
        let mut detail = json!({
            "line": entry.line,
            "nonedge": [entry.nonedge.u, entry.nonedge.v],
            "paths": entry.paths.len(),
        });
        if let Err(f) = &verdict {
            detail["failure"] = json!(f.to_string());
        }
        all &= verdict.is_ok();
        rep.step(&format!("nonedge {}-{}", entry.nonedge.u, entry.nonedge.v), Some(verdict.is_ok()), detail);
    }
    Ok(if all { EXIT_PASS } else { EXIT_FALSE })
}

fn search(a: &SearchArgs, rep: &mut RunReport) -> Outcome {
    let mode = match a.mode {
        Mode::All => SearchMode::AllColorings,
        Mode::Rainbow => SearchMode::RainbowOnly,
    };
    let mut task = SearchTask::new(a.n, a.r, mode, a.allow_large)?;
    if let Some(m) = a.max_m {
        task = task.with_max_m(m);
    }
    if let Some(guard) = a.bell_guard {
        task.bell_guard = guard;
    }
    if a.jobs == 0 {
        return Err(input_err("--jobs must be at least 1"));
    }
    let resume = match &a.resume {
        Some(path) => {
            let bytes = read_input(path, rep)?;
            drop(bytes);
            Some((path.as_path(), read_checkpoint(path)?))
        }
        None => None,
    };
    let opts = DriverOptions { jobs: a.jobs, checkpoint: a.checkpoint.clone(), ..DriverOptions::default() };
    let result = run_search(&task, &opts, resume)?;
    let mut files = Vec::new();
    if let Some(dir) = &a.out {
        for (i, c) in result.certificates.iter().enumerate() {
            files.extend(write_out(dir, &format!("cert-{i}"), c.colored.graph(), c.colored.coloring())?);
        }
    }
    let exact = matches!(result.value, SearchValue::Exact(_));
    let mut detail = report::search(&result);
    detail["task"] = json!({
        "n": task.n,
        "r": task.r,
        "mode": mode_name(task.mode),
        "min_m": task.min_m,
        "max_m": task.max_m,
        "bell_guard": task.bell_guard,
    });
    detail["files"] = json!(files);
    rep.step("search", Some(exact), detail);
    Ok(if exact { EXIT_PASS } else { EXIT_BUDGET })
}

fn lemma(a: &LemmaArgs, rep: &mut RunReport) -> Outcome {
    let check = complete_graph_path_lemma(a.t)?;
    let counterexample = check.counterexample.as_ref().map(|c| {
        json!({
            "u": c.u,
            "v": c.v,
            "avoided_edge": [c.avoided_edge.u, c.avoided_edge.v],
            "avoided_vertex": c.avoided_vertex,
            "path_len": c.path_len,
        })
    });
    rep.step(
        "lemma",
        Some(check.holds()),
        json!({ "t": check.t, "configurations": check.configurations, "counterexample": counterexample }),
    );
    Ok(if check.holds() { EXIT_PASS } else { EXIT_FALSE })
}
