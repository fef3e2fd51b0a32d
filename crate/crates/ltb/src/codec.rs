use std::fmt;
use std::str::FromStr;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::basis::{basis_matrix, h_raw, l_raw};
use crate::{LtbError, Raster, Q};

/// Source blocks of `a` rows by `b` columns, compressed to `c × d`
/// coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl BlockSpec {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self, LtbError> {
        let spec = Self { a, b, c, d };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), LtbError> {
        let (m, n) = (self.a.checked_mul(self.b), self.c.checked_mul(self.d));
        match (m, n) {
            (Some(m), Some(n)) if m >= 2 && n >= 2 && n <= m && m <= 1 << 16 => Ok(()),
            _ => Err(LtbError::Dimension(format!(
                "blocks {}x{} -> {}x{}: need ab ≥ 2, cd ≥ 2, cd ≤ ab",
                self.a, self.b, self.c, self.d
            ))),
        }
    }

    pub fn m(&self) -> usize {
        self.a * self.b
    }

    pub fn n(&self) -> usize {
        self.c * self.d
    }

    /// Compression ratio `cd / ab`.
    pub fn rho(&self) -> Q {
        Q::new(self.n() as i64, self.m() as i64)
    }

    /// Number of block rows and block columns covering the image.
    pub fn grid(&self, width: usize, height: usize) -> (usize, usize) {
        (height.div_ceil(self.a), width.div_ceil(self.b))
    }
}

/// Parses `AxB` as a pair.
pub fn parse_dims(s: &str) -> Option<(usize, usize)> {
    let (x, y) = s.split_once(['x', 'X'])?;
    Some((x.trim().parse().ok()?, y.trim().parse().ok()?))
}

impl FromStr for BlockSpec {
    type Err = LtbError;

    /// `AxB:CxD`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LtbError::Dimension(format!("cannot parse block spec `{s}`"));
        let (src, dst) = s.split_once(':').ok_or_else(bad)?;
        let (a, b) = parse_dims(src).ok_or_else(bad)?;
        let (c, d) = parse_dims(dst).ok_or_else(bad)?;
        Self::new(a, b, c, d)
    }
}

impl fmt::Display for BlockSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}:{}x{}", self.a, self.b, self.c, self.d)
    }
}

/// Exact coefficients of a compressed image: per channel, per block in
/// row-major block order, `cd` values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compressed {
    pub width: usize,
    pub height: usize,
    pub spec: BlockSpec,
    pub planes: Vec<Vec<Q>>,
}

impl Compressed {
    pub fn channels(&self) -> usize {
        self.planes.len()
    }

    pub fn block_count(&self) -> usize {
        let (r, c) = self.spec.grid(self.width, self.height);
        r * c
    }

    pub fn block(&self, channel: usize, k: usize) -> &[Q] {
        let n = self.spec.n();
        &self.planes[channel][k * n..(k + 1) * n]
    }
}

/// How edge blocks are filled past the image border.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Padding {
    /// Repeat the last row and column.
    #[default]
    Replicate,
    /// Fill with `1`. Since `Λ∘H` is expansive the fill survives
    /// reconstruction, so the second pass is lossless for every image size.
    White,
}

impl FromStr for Padding {
    type Err = LtbError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "replicate" => Ok(Padding::Replicate),
            "white" => Ok(Padding::White),
            _ => Err(LtbError::Dimension(format!("unknown padding `{s}`"))),
        }
    }
}

/// Row-major flattening of block `(br, bc)`.
fn gather(plane: &[Q], width: usize, height: usize, spec: &BlockSpec, pad: Padding, br: usize, bc: usize) -> Vec<Q> {
    let mut out = Vec::with_capacity(spec.m());
    for h in 0..spec.a {
        let row = br * spec.a + h;
        for k in 0..spec.b {
            let col = bc * spec.b + k;
            out.push(match pad {
                Padding::White if row >= height || col >= width => Q::one(),
                _ => plane[row.min(height - 1) * width + col.min(width - 1)],
            });
        }
    }
    out
}

pub fn compress(r: &Raster, spec: BlockSpec) -> Result<Compressed, LtbError> {
    compress_padded(r, spec, Padding::Replicate)
}

pub fn compress_padded(r: &Raster, spec: BlockSpec, pad: Padding) -> Result<Compressed, LtbError> {
    spec.validate()?;
    let p = basis_matrix(spec.m(), spec.n())?;
    let (w, h) = (r.width(), r.height());
    let (rows, cols) = spec.grid(w, h);
    let planes = r
        .planes()
        .iter()
        .map(|plane| {
            (0..rows * cols)
                .into_par_iter()
                .map(|k| h_raw(&gather(plane, w, h, &spec, pad, k / cols, k % cols), &p))
                .collect::<Vec<_>>()
                .concat()
        })
        .collect();
    Ok(Compressed {
        width: w,
        height: h,
        spec,
        planes,
    })
}

pub fn decompress(c: &Compressed) -> Result<Raster, LtbError> {
    let spec = c.spec;
    spec.validate()?;
    let expected = c.block_count() * spec.n();
    if let Some(bad) = c.planes.iter().find(|pl| pl.len() != expected) {
        return Err(LtbError::Length {
            expected,
            found: bad.len(),
        });
    }
    let p = basis_matrix(spec.m(), spec.n())?;
    let (w, h) = (c.width, c.height);
    let (_, cols) = spec.grid(w, h);
    let planes = (0..c.channels())
        .map(|ch| {
            let blocks: Vec<Vec<Q>> = (0..c.block_count())
                .into_par_iter()
                .map(|k| l_raw(c.block(ch, k), &p))
                .collect();
            let mut plane = vec![Q::zero(); w * h];
            for (k, block) in blocks.iter().enumerate() {
                let (br, bc) = (k / cols, k % cols);
                for hh in 0..spec.a {
                    let row = br * spec.a + hh;
                    if row >= h {
                        break;
                    }
                    for kk in 0..spec.b {
                        let col = bc * spec.b + kk;
                        if col < w {
                            plane[row * w + col] = block[hh * spec.b + kk];
                        }
                    }
                }
            }
            plane
        })
        .collect();
    Raster::new(w, h, planes, 255)
}

/// `decompress ∘ compress` in memory, keeping the source maxval.
pub fn reconstruct(r: &Raster, spec: BlockSpec) -> Result<Raster, LtbError> {
    reconstruct_padded(r, spec, Padding::Replicate)
}

pub fn reconstruct_padded(r: &Raster, spec: BlockSpec, pad: Padding) -> Result<Raster, LtbError> {
    Ok(decompress(&compress_padded(r, spec, pad)?)?.with_maxval(r.maxval()))
}

/// `10 log10(1 / MSE)` on the `[0, 1]` scale; `+∞` for identical rasters.
pub fn psnr(x: &Raster, y: &Raster) -> Result<f64, LtbError> {
    if !x.same_shape(y) {
        return Err(LtbError::Dimension(format!(
            "{}x{}x{} vs {}x{}x{}",
            x.width(),
            x.height(),
            x.channels(),
            y.width(),
            y.height(),
            y.channels()
        )));
    }
    if x.planes() == y.planes() {
        return Ok(f64::INFINITY);
    }
    let mut sum = 0.0;
    let mut count = 0usize;
    for (px, py) in x.planes().iter().zip(y.planes()) {
        for (a, b) in px.iter().zip(py) {
            let d = (*a - *b).to_f64().expect("finite rational");
            sum += d * d;
            count += 1;
        }
    }
    Ok(10.0 * (count as f64 / sum).log10())
}

/// First and second in-memory passes of the codec on one raster.
#[derive(Clone, Debug)]
pub struct RoundtripReport {
    pub rho: Q,
    pub first: Raster,
    pub psnr_first: f64,
    /// Second reconstruction equals the first, exactly.
    pub second_lossless: bool,
}

impl RoundtripReport {
    pub fn run(r: &Raster, spec: BlockSpec, pad: Padding) -> Result<Self, LtbError> {
        let first = reconstruct_padded(r, spec, pad)?;
        let second = reconstruct_padded(&first, spec, pad)?;
        Ok(Self {
            rho: spec.rho(),
            psnr_first: psnr(r, &first)?,
            second_lossless: second == first,
            first,
        })
    }
}
