//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the numeric kernel and the domain layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Interval division where the divisor encloses zero.
    #[error("interval division by [{lo}, {hi}] which contains zero")]
    IntervalDivisionByZero { lo: f64, hi: f64 },

    /// Interval square root of a partially negative interval.
    #[error("interval sqrt of [{lo}, {hi}] which extends below zero")]
    IntervalSqrtNegative { lo: f64, hi: f64 },

    /// A symmetric-matrix routine received a non-symmetric input.
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {deviation:e}")]
    NotSymmetric { i: usize, j: usize, deviation: f64 },

    /// The Jacobi eigensolver failed to reach its residual target.
    #[error("Jacobi eigensolver did not converge: off-diagonal residual {residual:e}")]
    EigenNoConvergence { residual: f64 },

    /// More eigenvalues requested than the matrix dimension provides.
    #[error("requested {requested} eigenvalues from a basis of size {available}")]
    TooManyEigenvalues { requested: usize, available: usize },

    /// A parameter or argument violates a documented domain invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Derived constants could not be constructed from the given enclosures.
    #[error("constant derivation failed: {0}")]
    ConstantDerivation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidParameter(msg.into())
    }
}
