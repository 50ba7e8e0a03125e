//! Graph robustness via the Kirchhoff index.
//!
//! Computes the Kirchhoff index (effective graph resistance) of simple
//! undirected graphs, evaluates majorization-based lower bounds on the
//! index after adding or removing h links, and provides seeded random
//! graph models with the connectivity-rejection perturbation protocol
//! used by the experiment harness.

pub mod bounds;
pub mod error;
pub mod generators;
pub mod graph;
pub mod majorization;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};
