//! Prime-indexed Hecke eigenvalue and Frobenius trace streams.

pub mod cache;
pub mod chebotarev;
pub mod dirichlet;
pub mod elliptic;
pub mod gfp;
pub mod point_count;
pub mod primes;
pub mod q8;
pub mod spec;
pub mod stream;

pub use cache::StreamCache;
pub use chebotarev::{serre_group_model, ChebotarevModel, ConjugacyClass};
pub use dirichlet::RealCharacter;
pub use elliptic::EllipticCurve;
pub use primes::{first_primes, prime_sieve};
pub use q8::{OrderCounts, Q8Source};
pub use spec::{GenerateOptions, Generated, PoleOrders, SourceInfo, SourceSpec};
pub use stream::{EigenvalueStream, RawValue, StreamEntry};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SourceError {
    #[error("singular curve [{0}]: discriminant is zero")]
    SingularCurve(String),
    #[error("factor degrees {degrees:?} mod {p} are not all equal to 1, 2 or 4; the polynomial does not look Galois with group Q8")]
    NotGaloisConsistent { p: u64, degrees: Vec<usize> },
    #[error("serre models need a prime r, got {0}")]
    UnsupportedR(u64),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("bad Chebotarev model: {0}")]
    BadModel(String),
    #[error("bad source: {0}")]
    BadSpec(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error("{0}")]
    Io(String),
}
