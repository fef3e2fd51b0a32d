//! Isomorphism classes of finitely generated projective semimodules, their
//! Grothendieck group, and the maps induced by MV-homomorphisms.

mod functor;
mod group;
mod monoid;

pub use functor::{k0_map, mutual_expressibility, ClassMap, ExpressibilityReport};
pub use group::{K0Element, K0Equality, UniversalCheck};
pub use monoid::{block_sum, enumerate_projectives, pad, ProjClass, ProjectiveMonoid, MATRIX_SCAN_CAP};

use thiserror::Error;

use crate::semimodule::SemimoduleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KTheoryError {
    #[error("scanning {0} matrices exceeds the cap of {MATRIX_SCAN_CAP}")]
    TooLarge(u128),
    #[error("map is not an MV-homomorphism between the given algebras: {0}")]
    NotAHomomorphism(String),
    #[error("image matrix {0} is not idempotent")]
    ImageNotIdempotent(String),
    #[error("image of class {0} has no class in the target within the dimension cap")]
    Unclassified(usize),
    #[error("induced class map is not well defined on class {0}")]
    NotWellDefined(usize),
    #[error(transparent)]
    Semimodule(#[from] SemimoduleError),
}
