//! Input/output, reports and the parallel search driver around `rsat-core`.

pub mod cli;
pub mod driver;
pub mod formats;
pub mod graph6;
pub mod report;
