//! Exact rational lattice, polytope and fan kernel.
//!
//! Everything here is computed over arbitrary-precision rationals so that the
//! duality and unimodularity statements exercised by the rest of the crate
//! hold exactly, not up to epsilon.

pub mod fan;
pub mod json;
pub mod linalg;
pub mod lp;
pub mod num;
pub mod polytope;

pub use fan::{Cone, Fan};
pub use num::{Int, Rat};
pub use polytope::{Halfspace, Polytope};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty point set")]
    EmptyInput,
    #[error("polytope is degenerate (dimension {dim} < ambient {ambient})")]
    Degenerate { dim: usize, ambient: usize },
    #[error("origin is not an interior point; polar dual would be unbounded")]
    OriginNotInterior,
    #[error("cone is not simplicial")]
    NotSimplicial,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("linear program failed: {0}")]
    Lp(String),
}
