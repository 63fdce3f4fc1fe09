//! Exact polynomial and linear algebra underneath the network analyses.
//!
//! - [`fp`]: the prime field `F_p`, `p = 2^61 - 1`.
//! - [`poly`]: sparse multivariate polynomials over the integers.
//! - [`diffop`]: polynomial-coefficient differential operators and their
//!   shape/alternation bookkeeping.
//! - [`linalg`]: dense matrices over `F_p` with rank, kernel, determinant,
//!   and Sylvester matrix construction.

pub mod diffop;
pub mod fp;
pub mod linalg;
pub mod poly;

use core::fmt;

/// Errors from polynomial and operator arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// Two operands were built over different variable registries.
    RegistryMismatch,
    /// A variable index was out of range for the registry.
    VarOutOfRange(usize),
    /// A variable name is not present in the registry.
    UnknownVariable(alloc::string::String),
    /// A registry was declared with a repeated variable name.
    DuplicateVariable(alloc::string::String),
    /// An exponent tuple or evaluation point has the wrong arity.
    ArityMismatch { expected: usize, got: usize },
    /// A differential operator would be identically zero.
    ZeroOperator,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::RegistryMismatch => write!(f, "operands use different variable registries"),
            PolyError::VarOutOfRange(i) => write!(f, "variable index {i} out of range"),
            PolyError::UnknownVariable(name) => write!(f, "unknown variable {name:?}"),
            PolyError::DuplicateVariable(name) => write!(f, "duplicate variable {name:?}"),
            PolyError::ArityMismatch { expected, got } => {
                write!(
                    f,
                    "arity mismatch: expected {expected} variables, got {got}"
                )
            }
            PolyError::ZeroOperator => write!(f, "differential operator is identically zero"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PolyError {}

/// Errors from matrix operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// Determinant of a non-square matrix was requested.
    NonSquare { rows: usize, cols: usize },
    /// Rows of differing lengths were supplied.
    RaggedRows,
    /// Sylvester construction needs both polynomials to have degree >= 1.
    DegreeZeroInput,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NonSquare { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            LinalgError::RaggedRows => write!(f, "rows have differing lengths"),
            LinalgError::DegreeZeroInput => {
                write!(f, "Sylvester matrix needs both degrees >= 1")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LinalgError {}
