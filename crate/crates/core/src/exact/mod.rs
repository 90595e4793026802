//! Exact rational arithmetic, sparse linear combinations and kernels.

mod linalg;
mod lincomb;
mod rational;

pub use linalg::{kernel_of_map, rank, solve, Coordinates, SparseMatrix, Subspace};
pub use lincomb::LinComb;
pub use rational::{binomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
