//! Rankin-Selberg pole orders, lacunarity density bounds for Hecke
//! eigenvalues, and the data engine that checks them against prime-indexed
//! eigenvalue streams.
//!
//! ```
//! use lacuna::bounds::thm_c_bound;
//! use lacuna::density::{classify, SetMode, SetSpec};
//! use lacuna::satake::{tensor_power_pole_order, Gl2Type};
//! use lacuna::sources::EllipticCurve;
//!
//! let m = tensor_power_pole_order(Gl2Type::NonSolvablePolyhedral, 2, 2).unwrap();
//! assert_eq!(m, 2);
//! assert_eq!(thm_c_bound(m, 0.0).unwrap().value, 0.5);
//!
//! // y^2 = x^3 - x: a_p vanishes exactly at the primes 3 mod 4
//! let stream = EllipticCurve::new(0, 0, 0, -1, 0).unwrap().eigenvalues(1000);
//! let zero = classify(&stream, &SetSpec::abs(SetMode::AbsEquals, 0.0)).unwrap();
//! assert!(zero.members().all(|p| p % 4 == 3));
//! ```

pub mod bounds;
pub mod cli;
pub mod density;
pub mod satake;
pub mod sources;
