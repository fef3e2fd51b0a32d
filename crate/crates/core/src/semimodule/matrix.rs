use super::SemimoduleError;
use crate::semiring::SemiringTable;

/// An element of `S^n`, entries as indices into the semiring carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeVector {
    pub entries: Vec<usize>,
}

impl FreeVector {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn zero(ring: &SemiringTable, n: usize) -> Self {
        Self::new(vec![ring.zero(); n])
    }

    /// `χ_x`: 1 at `x`, 0 elsewhere.
    pub fn chi(ring: &SemiringTable, n: usize, x: usize) -> Self {
        let mut v = Self::zero(ring, n);
        v.entries[x] = ring.one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self, ring: &SemiringTable) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.entries[i] != ring.zero()).collect()
    }

    pub fn join(&self, other: &FreeVector, ring: &SemiringTable) -> FreeVector {
        FreeVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| ring.join_ix(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, a: usize, ring: &SemiringTable) -> FreeVector {
        FreeVector::new(self.entries.iter().map(|&x| ring.mul_ix(a, x)).collect())
    }

    pub fn display(&self, ring: &SemiringTable) -> String {
        let parts: Vec<&str> = self.entries.iter().map(|&e| ring.label(e)).collect();
        format!("({})", parts.join(","))
    }
}

/// A row-major `rows × cols` matrix over a semiring carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<usize>) -> Result<Self, SemimoduleError> {
        if entries.len() != rows * cols {
            return Err(SemimoduleError::Dimension(format!(
                "{} entries for a {rows}×{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, SemimoduleError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(SemimoduleError::Dimension("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    /// `ι`
    pub fn identity(ring: &SemiringTable, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|c| if c / n == c % n { ring.one() } else { ring.zero() })
            .collect();
        Self { rows: n, cols: n, entries }
    }

    /// `o`
    pub fn zero(ring: &SemiringTable, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<usize> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vectors(&self) -> Vec<Vec<usize>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// `(a ⋆ b)_{ij} = ⋁_k a_{ik} b_{kj}`
    pub fn star(&self, other: &Matrix, ring: &SemiringTable) -> Result<Matrix, SemimoduleError> {
        if self.cols != other.rows {
            return Err(SemimoduleError::Dimension(format!(
                "{}×{} ⋆ {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                entries.push(ring.join_all((0..self.cols).map(|k| ring.mul_ix(self.get(i, k), other.get(k, j)))));
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn join(&self, other: &Matrix, ring: &SemiringTable) -> Result<Matrix, SemimoduleError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(SemimoduleError::Dimension("join of differently shaped matrices".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| ring.join_ix(a, b))
                .collect(),
        })
    }

    /// Row vector times matrix: `f ↦ ⋁_x f(x) k(x, _)`.
    pub fn apply_row(&self, f: &[usize], ring: &SemiringTable) -> Result<Vec<usize>, SemimoduleError> {
        if f.len() != self.rows {
            return Err(SemimoduleError::Dimension(format!(
                "vector of length {} against {} rows",
                f.len(),
                self.rows
            )));
        }
        Ok((0..self.cols)
            .map(|y| ring.join_all((0..self.rows).map(|x| ring.mul_ix(f[x], self.get(x, y)))))
            .collect())
    }

    pub fn is_idempotent(&self, ring: &SemiringTable) -> bool {
        self.is_square() && self.star(self, ring).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Every `rows × cols` matrix over `ring`, in lexicographic order of
    /// the row-major entry list.
    pub fn all(ring: &SemiringTable, rows: usize, cols: usize) -> impl Iterator<Item = Matrix> + '_ {
        let n = ring.len();
        let len = rows * cols;
        let total = n.checked_pow(len as u32).expect("matrix count fits in usize");
        (0..total).map(move |code| Matrix {
            rows,
            cols,
            entries: crate::util::decode_digits(code, n, len),
        })
    }

    pub fn display(&self, ring: &SemiringTable) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<&str> = self.row(i).iter().map(|&e| ring.label(e)).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}
