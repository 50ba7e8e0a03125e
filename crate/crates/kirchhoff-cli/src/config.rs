use std::path::PathBuf;

use crate::error::{CliError, Result};

/// What an experiment run produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// One-link addition rows, one per (size, rep).
    TableAdd,
    /// One-link removal rows, one per (size, rep).
    TableRemove,
    /// Cumulative h-sweep, add and remove branches per base graph.
    Sweep,
}

/// Parameters of one experiment invocation.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub sizes: Vec<usize>,
    pub p: f64,
    pub h_max: usize,
    pub reps: u64,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    /// Analyze this edge-list file instead of generating graphs.
    pub graph_in: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.graph_in.is_none() {
            if self.sizes.is_empty() {
                return Err(CliError::BadConfig("sizes must be non-empty".into()));
            }
            if let Some(&n) = self.sizes.iter().find(|&&n| n < 4) {
                return Err(CliError::BadConfig(format!(
                    "size {n} < 4; bound columns need n >= 4"
                )));
            }
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(CliError::BadConfig(format!("p = {} not in (0, 1]", self.p)));
        }
        if self.reps < 1 {
            return Err(CliError::BadConfig("reps must be >= 1".into()));
        }
        if self.mode == Mode::Sweep && self.h_max < 1 {
            return Err(CliError::BadConfig("h-max must be >= 1 for sweeps".into()));
        }
        Ok(())
    }
}
