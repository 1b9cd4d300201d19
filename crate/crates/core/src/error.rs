//! Crate-wide error type.
//!
//! Domain violations and pole hits are kept separate from I/O and parse
//! failures so that callers (in particular the CLI) can map them to
//! distinct exit codes. Pole errors carry the residue when it is known so
//! that limit machinery can branch without re-deriving it.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the validity domain of a function or constant.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at (or within guard distance of) a simple pole.
    #[error("pole at {location}: {what}")]
    Pole {
        what: String,
        location: f64,
        /// Residue at the pole, when a closed form is available.
        residue: Option<f64>,
    },

    /// Parameter combination the implementation deliberately rejects.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Two configuration points coincide while a singular kernel is evaluated.
    #[error("singular configuration: points {i} and {j} coincide")]
    SingularConfiguration { i: usize, j: usize },

    /// Configuration data violates its invariants (norms, point count, finiteness).
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    /// Line search failed to make progress; the best iterate so far is attached.
    #[error("line search stagnated after {backtracks} backtracks (iteration {iteration})")]
    Stagnation {
        backtracks: u32,
        iteration: u64,
        best: Box<crate::optimize::OptimizationResult>,
    },

    /// Least-squares design matrix is rank deficient.
    #[error("rank-deficient design matrix")]
    RankDeficient,

    /// Malformed input data; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub fn pole(what: impl Into<String>, location: f64, residue: Option<f64>) -> Self {
        Error::Pole {
            what: what.into(),
            location,
            residue,
        }
    }
}
