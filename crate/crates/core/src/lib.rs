//! Rainbow cycle saturation engine.
//!
//! Small undirected graphs are stored as per-vertex `u64` adjacency rows, so
//! every graph handled here has at most 64 vertices. On top of that sit:
//!
//! * [`families`]: the extremal constructions together with their colorings,
//! * [`verifier`]: exact decision procedures for `C_r`-rainbow saturation,
//! * [`structure`]: degree-2 taxonomy, lower-bound audits and recognition of
//!   the `Xi_n` family,
//! * [`search`]: exhaustive computation of `rsat(n, C_r)` at desk scale.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and the
//! command-line tool live in the `rsat` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bits;
pub mod canon;
pub mod coloring;
pub mod families;
pub mod graph;
pub mod paths;
pub mod search;
pub mod structure;
pub mod verifier;

pub use coloring::{Color, ColoredGraph, ColoringError, EdgeColoring};
pub use families::{build, default_partition, BuiltFamily, FamilyError, FamilySpec, FriendshipShape};
pub use graph::{Edge, GraphError, SimpleGraph, DEFAULT_VERTEX_CAP, MAX_VERTICES};
pub use paths::{enumerate_paths, CycleWitness, PathIter, PathWitness};
pub use canon::{canonical_form, isomorphism, Canonical};
pub use search::{compute_rsat, enumerate_graphs, SearchError, SearchMode, SearchResult, SearchTask, SearchValue};
pub use structure::{audit_bounds, audit_suspensions, classify_degree_two, xi_membership, Degree2Classification};
pub use verifier::{
    check_necessity_avoidance, check_rainbow_iff, check_sufficiency_disjoint_paths, complete_graph_path_lemma,
    find_rainbow_cycle, is_rainbow_saturated, verify_witness_table, FailingColor, SaturationReport, Verdict,
    VerifyError, WitnessFailure, WitnessMode,
};
