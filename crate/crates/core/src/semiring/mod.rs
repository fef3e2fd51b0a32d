//! Finite idempotent semirings, the semiring reducts of an MV-algebra,
//! MV-semiring recognition, prime spectra and the min-plus semifield bridge.

mod recognize;
mod reduct;
mod rspec;
mod semifield;
mod table;

pub use recognize::{reconstruct_mv, recognize_mv_semiring, Refusal};
pub use reduct::{reducts, Reducts};
pub use rspec::RSpec;
pub use semifield::{GammaLawReport, GammaTruncation, MinPlusSemifield, Tropical};
pub use table::{SemiringHom, SemiringTable};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemiringError {
    #[error("semiring law {law} fails at {witness:?}")]
    LawViolated { law: &'static str, witness: Vec<usize> },
    #[error("table shapes do not match a carrier of {0} elements")]
    Shape(usize),
    #[error("map is not a semiring homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("subset is not a prime ideal")]
    NotPrime,
    #[error("the involution is not an isomorphism between the reducts: {0}")]
    StarNotIsomorphism(String),
    #[error("unit must be a positive integer, got {0}")]
    BadUnit(String),
    #[error("unit {0} is too large to truncate into a finite table")]
    UnitTooLarge(String),
    #[error(transparent)]
    Algebra(#[from] crate::mv::MvError),
}
