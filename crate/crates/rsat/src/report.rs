//! Versioned JSON run reports.
//!
//! Everything except `wall_time_ms` is a function of the command line and
//! the input bytes, so sequential re-runs produce identical documents once
//! that last field is dropped.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use rsat_core::search::{SearchResult, SearchValue};
use rsat_core::structure::{
    audit_bounds, audit_suspensions, classify_degree_two, xi_membership, SuspensionClause,
};
use rsat_core::verifier::{
    FailingColor, NecessityReport, NecessityViolation, RainbowIffReport, SufficiencyReport,
};
use rsat_core::{Edge, EdgeColoring, SaturationReport, SimpleGraph, Verdict};

use crate::graph6;

pub const SCHEMA: &str = "rsat-report/1";

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Step {
    pub name: String,
    /// `None` for informational steps.
    pub pass: Option<bool>,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub schema: &'static str,
    pub tool: Tool,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub steps: Vec<Step>,
    pub outcome: &'static str,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            schema: SCHEMA,
            tool: Tool { name: "rsat", version: env!("CARGO_PKG_VERSION") },
            command,
            inputs: Vec::new(),
            steps: Vec::new(),
            outcome: "pass",
            wall_time_ms: 0,
        }
    }

    pub fn add_input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.push(InputDigest { path: path.to_owned(), sha256: sha256_hex(bytes) });
    }

    pub fn step(&mut self, name: &str, pass: Option<bool>, detail: Value) {
        self.steps.push(Step { name: name.to_owned(), pass, detail });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serialisable");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn edge(e: Edge) -> Value {
    json!([e.u, e.v])
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Saturated => "saturated",
        Verdict::ContainsRainbowCopy => "contains_rainbow_copy",
        Verdict::Unsaturated => "unsaturated",
    }
}

pub fn saturation(report: &SaturationReport) -> Value {
    let evidence: serde_json::Map<String, Value> = report
        .per_nonedge_evidence
        .iter()
        .map(|(e, cycles)| {
            let cs: Vec<Value> = cycles.iter().map(|c| json!(c.vertices())).collect();
            (format!("{}-{}", e.u, e.v), Value::Array(cs))
        })
        .collect();
    let failing_color = report.failing_color.map(|c| match c {
        FailingColor::Existing(c) => json!(c.0),
        FailingColor::Fresh => json!("fresh"),
    });
    json!({
        "verdict": verdict_name(report.verdict),
        "rainbow_copy": report.rainbow_copy.as_ref().map(|c| c.vertices().to_vec()),
        "failing_nonedge": report.failing_nonedge.map(edge),
        "failing_color": failing_color,
        "complete_graph": report.vacuous,
        "per_nonedge_evidence": evidence,
    })
}

pub fn sufficiency(report: &SufficiencyReport) -> Value {
    let pairs: serde_json::Map<String, Value> = report
        .witnesses
        .iter()
        .map(|(e, (a, b))| (format!("{}-{}", e.u, e.v), json!([a.vertices(), b.vertices()])))
        .collect();
    json!({
        "holds": report.holds,
        "first_failure": report.first_failure.map(edge),
        "pairs": pairs,
    })
}

fn violation(v: &NecessityViolation) -> Value {
    match v {
        NecessityViolation::NoPath { nonedge } => json!({ "nonedge": edge(*nonedge), "no_path": true }),
        NecessityViolation::Unavoidable { nonedge, unavoidable } => json!({
            "nonedge": edge(*nonedge),
            "unavoidable": unavoidable.iter().map(|&e| edge(e)).collect::<Vec<_>>(),
        }),
    }
}

pub fn necessity(report: &NecessityReport) -> Value {
    json!({
        "holds": report.holds,
        "violations": report.violations.iter().map(violation).collect::<Vec<_>>(),
    })
}

pub fn rainbow_iff(report: &RainbowIffReport) -> Value {
    json!({
        "holds": report.holds,
        "cycle": report.cycle.as_ref().map(|c| c.vertices().to_vec()),
        "necessity": necessity(&report.necessity),
    })
}

/// Degree-2 taxonomy, suspension audit and `Xi` membership. The audit is
/// binding only for saturated graphs with `r >= 5`.
pub fn structure(g: &SimpleGraph, r: usize, saturated: bool) -> Value {
    let class = classify_degree_two(g);
    let audit = audit_suspensions(g);
    let violations: Vec<Value> = audit
        .violations
        .iter()
        .map(|v| {
            let clause = match v.clause {
                SuspensionClause::BadRootCount(k) => json!({ "bad_root_count": k }),
                SuspensionClause::LowDegree(d) => json!({ "degree": d }),
                SuspensionClause::GoodRootNeighbour(x) => json!({ "good_root_neighbour": x }),
            };
            json!({ "vertex": v.vertex, "clause": clause })
        })
        .collect();
    let membership = if r == 5 && g.order() <= 32 {
        match xi_membership(g) {
            Some(m) => json!({ "member": true, "a": m.a, "partition": m.partition, "labeling": m.labeling }),
            None => json!({ "member": false }),
        }
    } else {
        Value::Null
    };
    json!({
        "good_roots": class.good_roots,
        "bad_roots": class.bad_roots,
        "bad_root_pairs": class.bad_root_pairs,
        "suspensions": class.suspensions,
        "suspension_audit": {
            "binding": saturated && r >= 5,
            "pass": audit.passes(),
            "violations": violations,
        },
        "xi_membership": membership,
    })
}

pub fn bounds(g: &SimpleGraph, r: usize, rainbow_mode: bool) -> (bool, Value) {
    let checks = audit_bounds(g, r, rainbow_mode);
    let all = checks.iter().all(|c| c.pass);
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "bound": c.name, "required": c.required, "actual": c.actual, "pass": c.pass }))
        .collect();
    (all, Value::Array(list))
}

pub fn coloring_triples(c: &EdgeColoring) -> Value {
    Value::Array(c.iter().map(|(e, col)| json!([e.u, e.v, col.0])).collect())
}

pub fn search(result: &SearchResult) -> Value {
    let value = match result.value {
        SearchValue::Exact(m) => json!({ "exact": m }),
        SearchValue::Undetermined { above } => json!({ "undetermined_above": above }),
    };
    let certs: Vec<Value> = result
        .certificates
        .iter()
        .map(|c| {
            json!({
                "graph6": graph6::encode(c.colored.graph()).expect("search graphs are small"),
                "coloring": coloring_triples(c.colored.coloring()),
            })
        })
        .collect();
    json!({
        "value": value,
        "certificates": certs,
        "graphs_examined": result.graphs_examined,
        "colorings_examined": result.colorings_examined,
    })
}
