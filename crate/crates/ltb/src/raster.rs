use std::path::Path;

use num_traits::{One, ToPrimitive, Zero};

use crate::{LtbError, Q};

/// Netpbm flavours read and written here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RasterFormat {
    /// P2 / P3
    Ascii,
    /// P5 / P6
    Binary,
}

/// A grey or RGB image with exact pixel values in `[0, 1]`, `0` black.
///
/// Planes are stored separately, each row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Raster {
    width: usize,
    height: usize,
    planes: Vec<Vec<Q>>,
    maxval: u16,
}

impl Raster {
    pub fn new(width: usize, height: usize, planes: Vec<Vec<Q>>, maxval: u16) -> Result<Self, LtbError> {
        if width == 0 || height == 0 {
            return Err(LtbError::Dimension(format!("{width}x{height} image")));
        }
        if planes.len() != 1 && planes.len() != 3 {
            return Err(LtbError::Dimension(format!("{} channels", planes.len())));
        }
        if maxval == 0 {
            return Err(LtbError::Image("maxval 0".into()));
        }
        for plane in &planes {
            if plane.len() != width * height {
                return Err(LtbError::Length {
                    expected: width * height,
                    found: plane.len(),
                });
            }
            if let Some(v) = plane.iter().find(|v| **v < Q::zero() || **v > Q::one()) {
                return Err(LtbError::OutOfRange(*v));
            }
        }
        Ok(Self {
            width,
            height,
            planes,
            maxval,
        })
    }

    /// Single-channel raster with every pixel equal to `v`.
    pub fn constant(width: usize, height: usize, channels: usize, v: Q) -> Result<Self, LtbError> {
        Self::new(width, height, vec![vec![v; width * height]; channels], 255)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.planes.len()
    }

    pub fn maxval(&self) -> u16 {
        self.maxval
    }

    pub fn plane(&self, c: usize) -> &[Q] {
        &self.planes[c]
    }

    pub fn planes(&self) -> &[Vec<Q>] {
        &self.planes
    }

    pub fn get(&self, c: usize, row: usize, col: usize) -> Q {
        self.planes[c][row * self.width + col]
    }

    pub fn same_shape(&self, other: &Raster) -> bool {
        self.width == other.width && self.height == other.height && self.channels() == other.channels()
    }

    /// Reads P2, P3, P5 or P6. Binary files must have `maxval ≤ 255`.
    pub fn from_pnm(bytes: &[u8]) -> Result<Self, LtbError> {
        let mut cur = Cursor { bytes, pos: 0 };
        let magic = cur.token()?;
        let (channels, binary) = match magic.as_str() {
            "P2" => (1, false),
            "P3" => (3, false),
            "P5" => (1, true),
            "P6" => (3, true),
            other => return Err(LtbError::Image(format!("unsupported magic `{other}`"))),
        };
        let width = cur.number()?;
        let height = cur.number()?;
        let maxval = cur.number()?;
        if maxval == 0 || maxval > u16::MAX as usize {
            return Err(LtbError::Image(format!("maxval {maxval}")));
        }
        if binary && maxval > 255 {
            return Err(LtbError::Image(format!("binary maxval {maxval} above 255")));
        }
        let count = width
            .checked_mul(height)
            .and_then(|p| p.checked_mul(channels))
            .ok_or_else(|| LtbError::Image("dimensions overflow".into()))?;
        let mut samples = Vec::with_capacity(count);
        if binary {
            // exactly one whitespace byte after maxval
            cur.pos += 1;
            let data = bytes
                .get(cur.pos..cur.pos + count)
                .ok_or_else(|| LtbError::Image(format!("expected {count} sample bytes")))?;
            samples.extend(data.iter().map(|&b| b as usize));
        } else {
            for _ in 0..count {
                samples.push(cur.number()?);
            }
        }
        if let Some(s) = samples.iter().find(|&&s| s > maxval) {
            return Err(LtbError::Image(format!("sample {s} above maxval {maxval}")));
        }
        let mut planes = vec![Vec::with_capacity(width * height); channels];
        for (k, s) in samples.into_iter().enumerate() {
            planes[k % channels].push(Q::new(s as i64, maxval as i64));
        }
        Self::new(width, height, planes, maxval as u16)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, LtbError> {
        Self::from_pnm(&std::fs::read(path)?)
    }

    /// Sample `round(maxval · v)`, halves rounded up.
    pub fn sample(&self, c: usize, i: usize) -> u16 {
        let scaled = self.planes[c][i] * Q::from_integer(self.maxval as i64);
        scaled.round().to_integer().to_u16().expect("value in [0, 1]")
    }

    pub fn to_pnm(&self, format: RasterFormat) -> Vec<u8> {
        let magic = match (self.channels(), format) {
            (1, RasterFormat::Ascii) => "P2",
            (_, RasterFormat::Ascii) => "P3",
            (1, RasterFormat::Binary) => "P5",
            (_, RasterFormat::Binary) => "P6",
        };
        let mut out = format!("{magic}\n{} {}\n{}\n", self.width, self.height, self.maxval).into_bytes();
        let n = self.width * self.height;
        match format {
            RasterFormat::Binary => {
                for i in 0..n {
                    for c in 0..self.channels() {
                        // maxval ≤ 255 is enforced on read; larger ones saturate
                        out.push(self.sample(c, i).min(255) as u8);
                    }
                }
            }
            RasterFormat::Ascii => {
                for row in 0..self.height {
                    let line: Vec<String> = (0..self.width)
                        .flat_map(|col| {
                            (0..self.channels()).map(move |c| (c, row * self.width + col))
                        })
                        .map(|(c, i)| self.sample(c, i).to_string())
                        .collect();
                    out.extend_from_slice(line.join(" ").as_bytes());
                    out.push(b'\n');
                }
            }
        }
        out
    }

    pub fn write(&self, path: impl AsRef<Path>, format: RasterFormat) -> Result<(), LtbError> {
        std::fs::write(path, self.to_pnm(format))?;
        Ok(())
    }

    pub(crate) fn with_maxval(mut self, maxval: u16) -> Self {
        self.maxval = maxval;
        self
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_space(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&b| b != b'\n') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Result<String, LtbError> {
        self.skip_space();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(LtbError::Image("unexpected end of header".into()));
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize, LtbError> {
        let t = self.token()?;
        t.parse()
            .map_err(|_| LtbError::Image(format!("expected a number, found `{t}`")))
    }
}
