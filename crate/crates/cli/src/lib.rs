//! File-driven front end for the fuzzadapt engines: table loading, jobs,
//! reports and charts.

pub mod chart;
pub mod error;
pub mod format;
pub mod job;
pub mod report;
pub mod table;

pub use error::CliError;
pub use job::{load_registry, run_job, BamSide, FamDirection, JobConfig, JobOutput};
pub use table::{load_table, parse_table, LabeledMatrix, Table};
