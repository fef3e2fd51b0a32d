//! MV-algebras: carriers, primitive and derived operations, laws, ideals,
//! spectra, quotients and the Boolean center.

mod finite;
mod hom;
mod ideal;
mod laws;
mod ops;
mod quotient;
mod spec;
mod text;
mod unit;

pub use finite::{DerivedOp, FiniteMv, MvElement, MAX_FINITE_SIZE};
pub use hom::{find_isomorphism, MvHom};
pub use ideal::{Ideal, Spectra};
pub use laws::{check_axioms, Law, LawReport, LawResult};
pub use ops::MvOps;
pub use quotient::QuotientAlgebra;
pub use spec::AlgebraSpec;
pub use unit::{UnitInterval, DEFAULT_GRID};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MvError {
    #[error("invalid algebra spec `{0}`: {1}")]
    BadSpec(String, String),
    #[error("algebra has {0} elements, above the supported maximum of {MAX_FINITE_SIZE}")]
    TooLarge(usize),
    #[error("operand belongs to a different algebra")]
    ForeignElement,
    #[error("element index {0} out of range for a carrier of size {1}")]
    OutOfRange(usize, usize),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("value {0} lies outside [0, 1]")]
    OutsideUnitInterval(String),
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("map is not an MV-homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("operation requires a finite algebra")]
    InfiniteCarrier,
    #[error("malformed algebra text at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
