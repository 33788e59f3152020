use std::fmt;

/// Errors reported by evaluation and verification routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside a function's domain (wrong range, invalid parameter).
    Domain(String),
    /// A series or quadrature failed to reach the requested tolerance
    /// within its budget.
    Convergence(String),
    /// The operation requires an admissible boundary: a nondecreasing phase
    /// with total rise 2π over one period.
    NotAdmissible(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain(msg) => write!(f, "domain error: {msg}"),
            Self::Convergence(msg) => write!(f, "convergence failure: {msg}"),
            Self::NotAdmissible(msg) => write!(f, "boundary not admissible: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
