//! Experiment harness: generates seeded random graphs, perturbs them,
//! evaluates exact Kirchhoff indices and lower bounds, and emits CSV
//! tables, h-sweeps and SVG plots.

pub mod config;
pub mod error;
pub mod plot;
pub mod record;
pub mod runner;

pub use config::{ExperimentConfig, Mode};
pub use error::{CliError, Result};
pub use record::{parse_csv, write_csv, ExperimentRecord, RecordMode};
pub use runner::{run_sweep, run_table};
