//! Exact quadratic form theory for linked Pfister forms.

pub mod error;
pub mod fields;
pub mod linalg;
pub mod invariant;
pub mod linkage;
pub mod forms;
pub mod oracles;
pub mod sample;

pub use error::{Error, Result};
