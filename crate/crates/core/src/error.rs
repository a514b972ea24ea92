use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Diagonal entry `(i, i)` (1-based) is not 1.
    #[error("matrix is not unidiagonal: entry ({0}, {0}) is not 1")]
    NotUnidiagonal(usize),
    /// `a_ij + a_ji` is not an integer for the 1-based pair `(i, j)`.
    #[error("matrix is not triangle-integral: a_{0}{1} + a_{1}{0} is not an integer")]
    NotTriangleIntegral(usize, usize),
    #[error("coefficient does not fit in a 64-bit integer")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("inflation at pair ({0}, {1}) is not defined: no dotted edge")]
    NotDefined(usize, usize),
    #[error("bigraph is disconnected")]
    Disconnected,
    #[error("enumeration of {size} vectors exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("matrix must have at least one row")]
    Empty,
}
