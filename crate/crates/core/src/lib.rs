//! Exact representation counting and bounded verification for mixed sums of
//! squares and triangular numbers.

pub mod arith;
pub mod counts;
mod error;
pub mod forms;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
