use num_traits::{One, Zero};

use crate::{LtbError, Q};

/// The `m × n` matrix `p` defining `H_{m,n}`: column `j` is a hat function
/// peaking at the node `(j-1)/(n-1)` of the grid `(i-1)/(m-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    m: usize,
    n: usize,
    entries: Vec<Q>,
}

/// Values of the rising and falling branches at `(i, j)`, 1-based, when the
/// grid point lies in the branch's interval.
fn branches(m: usize, n: usize, i: usize, j: usize) -> (Option<Q>, Option<Q>) {
    let t = Q::new((i - 1) as i64, (m - 1) as i64);
    let s = Q::from_integer((n - 1) as i64);
    let j = j as i64;
    let node = |k: i64| Q::new(k, (n - 1) as i64);
    let rising = (node(j - 2) <= t && t <= node(j - 1)).then(|| s * t - Q::from_integer(j - 2));
    let falling = (node(j - 1) <= t && t <= node(j)).then(|| -s * t + Q::from_integer(j));
    (rising, falling)
}

/// Builds `p` for `2 ≤ n ≤ m`.
pub fn basis_matrix(m: usize, n: usize) -> Result<BasisMatrix, LtbError> {
    if m < 2 || n < 2 {
        return Err(LtbError::Dimension(format!("m = {m}, n = {n}; both must be at least 2")));
    }
    if n > m {
        return Err(LtbError::Dimension(format!("n = {n} exceeds m = {m}")));
    }
    if m > i32::MAX as usize {
        return Err(LtbError::Dimension(format!("m = {m} is too large")));
    }
    let mut entries = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            let v = match branches(m, n, i, j) {
                (Some(v), _) | (None, Some(v)) => v,
                (None, None) => Q::zero(),
            };
            entries.push(v);
        }
    }
    Ok(BasisMatrix { m, n, entries })
}

impl BasisMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p(i, j)` with 0-based indices.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Q {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Q]> {
        self.entries.chunks(self.n)
    }

    /// Range, agreement of the two branches where both apply, and
    /// partition of unity on rows strictly between nodes. Returns the first
    /// violation as a message.
    pub fn check_invariants(&self) -> Result<(), String> {
        let (m, n) = (self.m, self.n);
        for i in 1..=m {
            let mut nonzero = Vec::new();
            for j in 1..=n {
                let v = self.get(i - 1, j - 1);
                if v < Q::zero() || v > Q::one() {
                    return Err(format!("p({i},{j}) = {v} out of range"));
                }
                if let (Some(r), Some(f)) = branches(m, n, i, j) {
                    if r != f {
                        return Err(format!("branches disagree at ({i},{j}): {r} vs {f}"));
                    }
                }
                if !v.is_zero() {
                    nonzero.push((j, v));
                }
            }
            let on_node = nonzero.len() == 1 && nonzero[0].1.is_one();
            if !on_node {
                let ok = nonzero.len() == 2
                    && nonzero[1].0 == nonzero[0].0 + 1
                    && nonzero[0].1 + nonzero[1].1 == Q::one();
                if !ok {
                    return Err(format!("row {i} is not a split between adjacent columns"));
                }
            }
        }
        Ok(())
    }
}

fn check_vector(v: &[Q], len: usize) -> Result<(), LtbError> {
    if v.len() != len {
        return Err(LtbError::Length {
            expected: len,
            found: v.len(),
        });
    }
    match v.iter().find(|x| **x < Q::zero() || **x > Q::one()) {
        Some(x) => Err(LtbError::OutOfRange(*x)),
        None => Ok(()),
    }
}

pub(crate) fn h_raw(f: &[Q], p: &BasisMatrix) -> Vec<Q> {
    let one = Q::one();
    (0..p.n)
        .map(|j| {
            f.iter()
                .enumerate()
                .map(|(i, &fi)| (fi + p.get(i, j) - one).max(Q::zero()))
                .max()
                .unwrap_or_else(Q::zero)
        })
        .collect()
}

pub(crate) fn l_raw(g: &[Q], p: &BasisMatrix) -> Vec<Q> {
    let one = Q::one();
    (0..p.m)
        .map(|i| {
            g.iter()
                .enumerate()
                .map(|(j, &gj)| (one - p.get(i, j) + gj).min(one))
                .min()
                .unwrap_or(one)
        })
        .collect()
}

/// `H(f)_j = ⋁_i f_i ⊙ p(i, j)`.
pub fn transform_h(f: &[Q], p: &BasisMatrix) -> Result<Vec<Q>, LtbError> {
    check_vector(f, p.m)?;
    Ok(h_raw(f, p))
}

/// `Λ(g)_i = ⋀_j p(i, j) → g_j`.
pub fn inverse_l(g: &[Q], p: &BasisMatrix) -> Result<Vec<Q>, LtbError> {
    check_vector(g, p.n)?;
    Ok(l_raw(g, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn five_by_three_table() {
        let p = basis_matrix(5, 3).unwrap();
        let (z, h, o) = (q(0, 1), q(1, 2), q(1, 1));
        let expected = [[o, z, z], [h, h, z], [z, o, z], [z, h, h], [z, z, o]];
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(p.row(i), row);
        }
        p.check_invariants().unwrap();
    }

    #[test]
    fn square_is_identity() {
        for m in 2..8 {
            let p = basis_matrix(m, m).unwrap();
            for i in 0..m {
                for j in 0..m {
                    assert_eq!(p.get(i, j), if i == j { q(1, 1) } else { q(0, 1) });
                }
            }
        }
    }

    #[test]
    fn rejects_degenerate_shapes() {
        assert!(basis_matrix(1, 1).is_err());
        assert!(basis_matrix(4, 1).is_err());
        assert!(basis_matrix(3, 4).is_err());
    }

    #[test]
    fn vector_examples() {
        let p = basis_matrix(5, 3).unwrap();
        let half = vec![q(1, 2); 5];
        assert_eq!(transform_h(&half, &p).unwrap(), vec![q(1, 2); 3]);
        assert_eq!(transform_h(&[q(1, 1); 5], &p).unwrap(), vec![q(1, 1); 3]);
        assert_eq!(transform_h(&[q(0, 1); 5], &p).unwrap(), vec![q(0, 1); 3]);
        let back = inverse_l(&[q(1, 2); 3], &p).unwrap();
        assert_eq!(back, vec![q(1, 2), q(1, 1), q(1, 2), q(1, 1), q(1, 2)]);
        let again = inverse_l(&transform_h(&back, &p).unwrap(), &p).unwrap();
        assert_eq!(again, back);
        assert_eq!(inverse_l(&[q(1, 1); 3], &p).unwrap(), vec![q(1, 1); 5]);
    }

    #[test]
    fn input_validation() {
        let p = basis_matrix(5, 3).unwrap();
        assert!(matches!(transform_h(&[q(0, 1); 4], &p), Err(LtbError::Length { expected: 5, found: 4 })));
        assert!(matches!(inverse_l(&[q(3, 2), q(0, 1), q(0, 1)], &p), Err(LtbError::OutOfRange(_))));
    }
}
