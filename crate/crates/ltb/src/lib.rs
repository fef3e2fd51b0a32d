//! The Łukasiewicz transform and a block image codec built on it.
//!
//! A block of `a × b` pixels is flattened row-major into a vector of length
//! `m = ab` and sent by `H` to a vector of length `n = cd`; reconstruction is
//! the residual map `Λ`. Both are computed over exact rationals so that
//! `(Λ∘H)∘(Λ∘H) = Λ∘H` holds as an equality, not up to rounding.
//! Quantization to bytes happens only in the `.ltb` container.

mod basis;
mod codec;
mod container;
mod raster;

pub use basis::{basis_matrix, inverse_l, transform_h, BasisMatrix};
pub use codec::{
    compress, compress_padded, decompress, parse_dims, psnr, reconstruct, reconstruct_padded, BlockSpec, Compressed,
    Padding, RoundtripReport,
};
pub use container::{LtbFile, MAGIC};
pub use raster::{Raster, RasterFormat};

use thiserror::Error;

/// Exact values in `[0, 1]`.
pub type Q = num_rational::Ratio<i64>;

#[derive(Debug, Error)]
pub enum LtbError {
    #[error("invalid dimensions: {0}")]
    Dimension(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    Length { expected: usize, found: usize },
    #[error("value {0} outside [0, 1]")]
    OutOfRange(Q),
    #[error("malformed container: {0}")]
    Container(String),
    #[error("malformed image: {0}")]
    Image(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
