use alloc::string::String;
use alloc::vec::Vec;

use crate::scalar::C64;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Zero or constant input where a nontrivial polynomial is required.
    DegenerateInput(String),
    /// Leading coefficient vanishes at the declared formal degree, so the
    /// requested form is not the specialization of the generic one.
    DegreeDrop(String),
    /// Argument outside the operation's domain (e.g. reflecting 0).
    Domain(String),
    /// A stated precondition of the operation does not hold.
    Precondition(String),
    /// Simultaneous iteration failed to settle within the iteration cap.
    /// Carries the best iterate reached.
    NonConvergence { iterations: u32, best: Vec<C64> },
    /// Two independent computations of the same quantity disagree beyond
    /// tolerance; always a bug witness or an ill-conditioned input.
    Inconsistent(String),
    /// Factorization found a unit-circle root of odd multiplicity: the input
    /// is not nonnegative, or tolerances failed.
    NotNonnegative(String),
    /// Root pairing across the unit circle failed; ill-conditioned input.
    Pairing(String),
    /// A floating-point conversion or operation produced a non-finite value.
    NonFinite(String),
}

impl Error {
    /// True for failures of numeric machinery (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence { .. }
                | Error::Inconsistent(_)
                | Error::NotNonnegative(_)
                | Error::Pairing(_)
                | Error::NonFinite(_)
        )
    }
}

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Error::DegenerateInput(d) => write!(f, "degenerate input: {d}"),
            Error::DegreeDrop(d) => write!(f, "degree drop: {d}"),
            Error::Domain(d) => write!(f, "domain error: {d}"),
            Error::Precondition(d) => write!(f, "precondition violated: {d}"),
            Error::NonConvergence { iterations, .. } => {
                write!(f, "no convergence after {iterations} iterations")
            }
            Error::Inconsistent(d) => write!(f, "consistency check failed: {d}"),
            Error::NotNonnegative(d) => write!(f, "not nonnegative: {d}"),
            Error::Pairing(d) => write!(f, "root pairing failed: {d}"),
            Error::NonFinite(d) => write!(f, "non-finite value: {d}"),
        }
    }
}

impl core::error::Error for Error {}
