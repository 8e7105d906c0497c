//! Exact arithmetic in the completed max-plus semifield and its matrix dioid.

mod matrix;
mod scalar;

pub use matrix::{MpMatrix, ScaledMatrix};
pub use scalar::ExtScalar;

use crate::precgraph::Circuit;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MaxPlusError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("rows have different lengths")]
    RaggedRows,
    #[error("matrix has a +inf entry")]
    TopEntry,
    #[error("precedence graph has a positive circuit {0}")]
    PositiveCircuit(Circuit),
}
