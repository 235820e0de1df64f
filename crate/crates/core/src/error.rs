//! Crate-wide error type.
//!
//! `EffortExceeded` and `DegreeCapExceeded` are ordinary outcomes, not bugs:
//! callers that can degrade (e.g. monogenicity checks) translate them into an
//! honest `Unknown` verdict instead of guessing.

use num_bigint::BigInt;

use crate::families::FamilyCertificate;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Integer factorization ran out of its iteration budget.
    #[error("factorization effort exceeded on {value} (budget {budget} rho iterations)")]
    EffortExceeded { value: BigInt, budget: u64 },

    /// Factoring over Z was asked for a degree above the configured cap.
    #[error("degree {degree} exceeds the factorization degree cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    /// Malformed input: bad polynomial syntax, m < 2, B = 0, composite p, ...
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A prime search hit its ceiling before finding everything requested.
    /// Carries whatever certificates were found so far.
    #[error("search exhausted at t <= {t_max}: found {} of {requested} certificate(s)", found.len())]
    Exhausted {
        t_max: u64,
        requested: usize,
        found: Vec<FamilyCertificate>,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
