//! Truncated metric dimension of graphs.
//!
//! `beta_k(G)` is the least number of landmarks such that every vertex is
//! identified by its distances to them, where distances above `k` are
//! clamped to `k + 1`.

pub mod closed_forms;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod trees;
pub mod truncation;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
