//! Symbolic isobaric calculus for GL(2) and GL(3), with a numeric Satake
//! layer for cross-checking.

pub mod character;
pub mod constituent;
pub mod decompose;
pub mod isobaric;
pub mod numeric;

pub use character::{Character, Generator};
pub use constituent::{Constituent, ConstituentKind, Cuspidality};
pub use decompose::{
    clebsch_gordan, dihedral_tensor, gl3_adjoint_tensor, tensor_power_decompose,
    tensor_power_pole_order, tensor_power_split, DihedralPair, Gl2Type, Quotient,
};
pub use isobaric::{pole_order, self_pairing, IsobaricRep};
pub use numeric::{gl3_adjoint_class, LocalData, SatakeClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SatakeError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("constituent `{0}` has unresolved cuspidality")]
    UnresolvedConstituent(String),
    #[error("Satake classes at places of norm {left} and {right}")]
    PlaceMismatch { left: u64, right: u64 },
    #[error("{0}")]
    InvalidInput(String),
}
