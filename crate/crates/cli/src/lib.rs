//! Command-line front end for `phicycle-core`.
//!
//! The `run_*` functions are what the binary calls; they are public so the
//! reports can be produced and inspected without spawning a process.

pub mod commands;
pub mod error;
pub mod render;
pub mod report;

pub use commands::{parse_graph_document, parse_steps, run_cycle, run_graph, run_lemma_scan, run_phi, run_remark};
pub use error::CliError;
pub use render::render_text;
pub use report::{AnalysisReport, ReportBody, SCHEMA_VERSION};
