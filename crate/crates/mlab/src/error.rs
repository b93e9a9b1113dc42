//! Error type shared by every module in the crate.

use std::fmt;

/// Crate-wide error type.
///
/// Numerical routines never return NaN silently; anything that cannot be
/// computed to contract accuracy is reported through one of these variants.
#[derive(Clone, Debug)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    Domain(String),
    /// An iterative scheme exhausted its budget. Carries the best estimate
    /// obtained so far together with the error estimate at that point.
    Convergence {
        what: String,
        best: f64,
        err_estimate: f64,
    },
    /// Expression parse failure, with a byte position into the input.
    Parse { position: usize, message: String },
    /// Identity id not present in the catalog.
    UnknownIdentity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Convergence {
                what,
                best,
                err_estimate,
            } => write!(
                f,
                "{what} did not converge (best estimate {best:e}, error estimate {err_estimate:e})"
            ),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::UnknownIdentity(id) => write!(f, "unknown identity id: {id}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }
}
