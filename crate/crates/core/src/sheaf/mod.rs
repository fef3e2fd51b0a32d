//! Localization of finite commutative semirings at primes and the
//! global sections of the resulting sheaf over the prime spectrum.

mod localize;
mod sections;

pub use localize::{localize, Fraction, Localization};
pub use sections::{global_sections, mv_global_sections, GlobalSections, MvSectionsRecord, StalkReport};

use thiserror::Error;

use crate::semiring::SemiringError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SheafError {
    #[error("subset is not a prime ideal")]
    NotPrime,
    #[error("multiplication is not commutative")]
    NotCommutative,
    #[error("denominator {0} lies in the prime")]
    BadDenominator(usize),
    #[error("fraction relation is not an equivalence: {0}")]
    NotEquivalence(String),
    #[error("fraction operations are not well defined: {0}")]
    NotWellDefined(String),
    #[error("global sections are not closed under {0}")]
    SectionsNotClosed(&'static str),
    #[error(transparent)]
    Semiring(#[from] SemiringError),
}
