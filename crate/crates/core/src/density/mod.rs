//! Density estimates for sets of primes defined by eigenvalue conditions,
//! and reports comparing them with the bounds.

pub mod estimate;
pub mod report;
pub mod setspec;

pub use estimate::{
    dirichlet_ratio, estimate_density, estimate_membership, DensityEstimate, DirichletPoint,
    EstimateOptions, DEFAULT_SCHEDULE,
};
pub use report::{
    check_applicable, constrained_set, verify_bound, Check, DensityReport, DEFAULT_SLACK,
};
pub use setspec::{classify, model_density, Membership, SetMode, SetSpec};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DensityError {
    #[error("tolerance {0} given for a stream of exact values")]
    ToleranceMisuse(f64),
    #[error("s = {0} is outside (1, 1.25]")]
    BadS(f64),
    #[error("bad schedule: {0}")]
    BadSchedule(String),
    #[error("bad set: {0}")]
    BadSet(String),
    #[error("insufficient data: {what} is {have}, need at least {need}")]
    InsufficientData {
        what: &'static str,
        have: usize,
        need: usize,
    },
    #[error("inapplicable bound: {0}")]
    InapplicableBound(String),
}
