//! Finite semimodules over finite semirings: free modules and matrices,
//! homomorphism enumeration, projectivity, strongness, tensor products and
//! restriction of scalars.

mod hom;
mod matrix;
mod module;
mod projective;
mod scalars;
mod strong;
mod tensor;
mod text;

pub(crate) use hom::invariant;
pub use hom::{enumerate_homs, find_isomorphism, hom_from_matrix, matrix_from_hom, SemimoduleHom, HOM_ENUMERATION_CAP};
pub use matrix::{FreeVector, Matrix};
pub use module::FiniteSemimodule;
pub use projective::{
    brute_force_projective, idempotent_matrices, idempotent_retracts, projective_presentation,
    row_space_subsets,
};
pub use scalars::{hom_sets_coincide, restrict_scalars};
pub use strong::{is_strong, StrongWitness};
pub use tensor::{tensor_product, TensorProduct, TENSOR_PAIR_CAP};
pub use text::parse_module;

use thiserror::Error;

use crate::semiring::SemiringError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemimoduleError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("semimodule law {law} fails at {witness:?}")]
    LawViolated { law: &'static str, witness: Vec<usize> },
    #[error("map is not a semimodule homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("matrix is not multiplicatively idempotent")]
    NotIdempotent,
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("{what} needs {size} candidates, above the cap of {cap}")]
    TooLarge { what: &'static str, size: u128, cap: u128 },
    #[error("modules are over different semirings")]
    RingMismatch,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Semiring(#[from] SemiringError),
}
