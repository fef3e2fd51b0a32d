use std::path::Path;

use num_traits::ToPrimitive;

use crate::{BlockSpec, Compressed, LtbError, Q};

pub const MAGIC: &[u8; 4] = b"LTB1";
const HEADER_LEN: usize = 4 + 7 * 4;

/// The on-disk form: header plus one byte `round(255 v)` per coefficient,
/// channel-planar, blocks in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtbFile {
    pub width: u32,
    pub height: u32,
    pub channels: u32,
    pub spec: BlockSpec,
    pub payload: Vec<u8>,
}

fn quantize(v: Q) -> u8 {
    (v * Q::from_integer(255)).round().to_integer().to_u8().expect("coefficient in [0, 1]")
}

fn to_u32(v: usize, what: &str) -> Result<u32, LtbError> {
    u32::try_from(v).map_err(|_| LtbError::Container(format!("{what} {v} does not fit in u32")))
}

impl LtbFile {
    pub fn payload_len(width: usize, height: usize, channels: usize, spec: &BlockSpec) -> usize {
        let (rows, cols) = spec.grid(width, height);
        rows * cols * spec.n() * channels
    }

    pub fn from_compressed(c: &Compressed) -> Result<Self, LtbError> {
        let payload = c.planes.iter().flatten().map(|&v| quantize(v)).collect();
        Ok(Self {
            width: to_u32(c.width, "width")?,
            height: to_u32(c.height, "height")?,
            channels: to_u32(c.channels(), "channels")?,
            spec: c.spec,
            payload,
        })
    }

    /// Dequantized coefficients `q / 255`.
    pub fn to_compressed(&self) -> Compressed {
        let per_channel = self.payload.len() / self.channels.max(1) as usize;
        let planes = self
            .payload
            .chunks(per_channel.max(1))
            .map(|ch| ch.iter().map(|&q| Q::new(q as i64, 255)).collect())
            .collect();
        Compressed {
            width: self.width as usize,
            height: self.height as usize,
            spec: self.spec,
            planes,
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.len());
        out.extend_from_slice(MAGIC);
        let s = &self.spec;
        for v in [self.width, self.height, self.channels, s.a as u32, s.b as u32, s.c as u32, s.d as u32] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, LtbError> {
        if bytes.len() < HEADER_LEN {
            return Err(LtbError::Container(format!("{} bytes is shorter than the header", bytes.len())));
        }
        if &bytes[..4] != MAGIC {
            return Err(LtbError::Container("bad magic".into()));
        }
        let field = |k: usize| {
            let at = 4 + 4 * k;
            u32::from_le_bytes(bytes[at..at + 4].try_into().expect("4 bytes"))
        };
        let (width, height, channels) = (field(0), field(1), field(2));
        if width == 0 || height == 0 {
            return Err(LtbError::Container(format!("{width}x{height} image")));
        }
        if channels != 1 && channels != 3 {
            return Err(LtbError::Container(format!("{channels} channels")));
        }
        let spec = BlockSpec::new(field(3) as usize, field(4) as usize, field(5) as usize, field(6) as usize)
            .map_err(|e| LtbError::Container(e.to_string()))?;
        let expected = Self::payload_len(width as usize, height as usize, channels as usize, &spec);
        let payload = &bytes[HEADER_LEN..];
        if payload.len() != expected {
            return Err(LtbError::Container(format!(
                "payload has {} bytes, header implies {expected}",
                payload.len()
            )));
        }
        Ok(Self {
            width,
            height,
            channels,
            spec,
            payload: payload.to_vec(),
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, LtbError> {
        Self::from_bytes(&std::fs::read(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), LtbError> {
        std::fs::write(path, self.to_bytes())?;
        Ok(())
    }
}
