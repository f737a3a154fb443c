//! Exact construction and verification of Lie tori over cyclotomic fields.

pub mod eala;
pub mod error;
pub mod export;
pub mod graded;
pub mod involution;
pub mod jordan;
pub mod laws;
pub mod lattice;
pub mod lie;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod scalar;
pub mod sparse;
pub mod spec;
pub mod tori;

pub use error::{Error, Result};
pub use scalar::Scalar;
