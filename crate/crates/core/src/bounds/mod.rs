//! Density bounds for sets of primes defined by Hecke eigenvalues.

pub mod formulas;
pub mod optimize;
pub mod record;
pub mod theta;

pub use formulas::{
    corollary_bound, corollary_exact, generic_two_moment_bound, propf_bound, propf_exact,
    ramakrishnan_bound, ramakrishnan_exact, serre_bound, thm_c_bound, thm_c_exact, thm_d_bound,
    thm_d_exact, BoundValue, ExactBound,
};
pub use optimize::{
    crossover_gammas, golden_section_max, optimal_c, optimal_c_closed_form,
    quoted_crossover_gammas, CrossingKind, Crossover, CrossoverPoint, OptimalC,
};
pub use record::{BoundArgs, BoundKind, BoundRecord, Real};
pub use theta::theta;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("degenerate denominator: {0} vanishes")]
    DegenerateDenominator(String),
    #[error("{0}")]
    InvalidInput(String),
}
