use std::collections::HashMap;

use super::KTheoryError;
use crate::semimodule::{find_isomorphism, invariant, projective_presentation, FiniteSemimodule, Matrix, SemimoduleError};
use crate::semiring::SemiringTable;

/// Largest total number of square matrices scanned by an enumeration.
pub const MATRIX_SCAN_CAP: u128 = 5_000_000;

/// One isomorphism class of finitely generated projective semimodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjClass {
    pub id: usize,
    /// Least dimension, then lexicographically least idempotent matrix.
    pub representative: Matrix,
    pub dim: usize,
    /// Cardinality of the row semimodule.
    pub size: usize,
}

/// The monoid `⟨P_F(S), ⊕, [{0}]⟩` as far as it is visible from idempotent
/// matrices of dimension `1..=max_dim`.
#[derive(Clone, Debug)]
pub struct ProjectiveMonoid {
    ring: SemiringTable,
    max_dim: usize,
    classes: Vec<ProjClass>,
    modules: Vec<FiniteSemimodule>,
    invariants: Vec<Vec<Vec<usize>>>,
    /// Class of each row space already seen, keyed by its vectors.
    spaces: HashMap<Vec<Vec<usize>>, usize>,
    members: HashMap<Matrix, usize>,
    /// `sum[i * k + j]` is the class of `[i] ⊕ [j]`, `None` when the block
    /// sum matches no enumerated class.
    sum: Vec<Option<usize>>,
}

/// `U ⊕ V` as the block-diagonal matrix with zero off-diagonal blocks.
pub fn block_sum(u: &Matrix, v: &Matrix, ring: &SemiringTable) -> Matrix {
    let (m, n) = (u.rows(), v.rows());
    let d = m + n;
    let entries = (0..d * d)
        .map(|c| {
            let (i, j) = (c / d, c % d);
            if i < m && j < m {
                u.get(i, j)
            } else if i >= m && j >= m {
                v.get(i - m, j - m)
            } else {
                ring.zero()
            }
        })
        .collect();
    Matrix::new(d, d, entries).expect("square block sum")
}

/// `U` extended by zero rows and columns to dimension `dim`.
pub fn pad(u: &Matrix, dim: usize, ring: &SemiringTable) -> Matrix {
    let extra = dim.saturating_sub(u.rows());
    block_sum(u, &Matrix::zero(ring, extra, extra), ring)
}

/// Classifies every idempotent matrix up to `max_dim` by the isomorphism
/// type of its row semimodule.
pub fn enumerate_projectives(ring: &SemiringTable, max_dim: usize) -> Result<ProjectiveMonoid, KTheoryError> {
    let s = ring.len() as u128;
    let total: u128 = (1..=max_dim)
        .map(|d| s.checked_pow((d * d) as u32).unwrap_or(u128::MAX))
        .fold(0u128, |a, b| a.saturating_add(b));
    if total > MATRIX_SCAN_CAP {
        return Err(KTheoryError::TooLarge(total));
    }
    let mut monoid = ProjectiveMonoid {
        ring: ring.clone(),
        max_dim,
        classes: Vec::new(),
        modules: Vec::new(),
        invariants: Vec::new(),
        spaces: HashMap::new(),
        members: HashMap::new(),
        sum: Vec::new(),
    };
    for d in 1..=max_dim {
        for u in Matrix::all(ring, d, d) {
            if !u.is_idempotent(ring) {
                continue;
            }
            let module = projective_presentation(ring, &u)?;
            let key = module.vectors().expect("row space has coordinates").to_vec();
            if let Some(&c) = monoid.spaces.get(&key) {
                monoid.members.insert(u, c);
                continue;
            }
            let class = match monoid.find_class(&module) {
                Some(c) => c,
                None => {
                    let id = monoid.classes.len();
                    monoid.classes.push(ProjClass {
                        id,
                        representative: u.clone(),
                        dim: d,
                        size: module.len(),
                    });
                    monoid.invariants.push(invariant(&module));
                    monoid.modules.push(module);
                    id
                }
            };
            monoid.spaces.insert(key, class);
            monoid.members.insert(u, class);
        }
    }
    let k = monoid.classes.len();
    let mut sum = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let w = block_sum(&monoid.classes[i].representative, &monoid.classes[j].representative, ring);
            sum.push(monoid.class_of_matrix(&w)?);
        }
    }
    monoid.sum = sum;
    Ok(monoid)
}

impl ProjectiveMonoid {
    fn find_class(&self, module: &FiniteSemimodule) -> Option<usize> {
        if self.classes.iter().all(|c| c.size != module.len()) {
            return None;
        }
        let inv = invariant(module);
        self.modules
            .iter()
            .zip(&self.invariants)
            .position(|(m, i)| *i == inv && find_isomorphism(m, module).is_some())
    }

    /// Class of an idempotent matrix of any dimension; `None` when its row
    /// semimodule matches no enumerated class.
    pub fn class_of_matrix(&self, u: &Matrix) -> Result<Option<usize>, SemimoduleError> {
        if let Some(&c) = self.members.get(u) {
            return Ok(Some(c));
        }
        if !u.is_idempotent(&self.ring) {
            return Err(SemimoduleError::NotIdempotent);
        }
        let vectors = FiniteSemimodule::span_vectors(&self.ring, u.cols(), &u.row_vectors())?;
        if let Some(&c) = self.spaces.get(&vectors) {
            return Ok(Some(c));
        }
        if self.classes.iter().all(|c| c.size != vectors.len()) {
            return Ok(None);
        }
        let module = projective_presentation(&self.ring, u)?;
        Ok(self.find_class(&module))
    }

    pub fn ring(&self) -> &SemiringTable {
        &self.ring
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn classes(&self) -> &[ProjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn module(&self, class: usize) -> &FiniteSemimodule {
        &self.modules[class]
    }

    /// Every enumerated idempotent matrix with its class.
    pub fn members(&self) -> impl Iterator<Item = (&Matrix, usize)> {
        self.members.iter().map(|(m, &c)| (m, c))
    }

    /// `[{0}]`
    pub fn zero_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.size == 1)
            .expect("the zero matrix is enumerated")
    }

    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sum[i * self.len() + j]
    }

    /// Whether every pairwise sum landed in an enumerated class.
    pub fn is_closed(&self) -> bool {
        self.sum.iter().all(Option::is_some)
    }

    /// Sum of a list of classes, `None` if an intermediate sum is missing.
    pub fn sum_all(&self, classes: &[usize]) -> Option<usize> {
        classes
            .iter()
            .try_fold(self.zero_class(), |acc, &c| self.sum(acc, c))
    }

    /// One line per class: id, dimension, representative, and the row of the
    /// sum table (`?` for sums outside the cap).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("class_id,dim,size,representative,sum_table\n");
        for c in &self.classes {
            let row: Vec<String> = (0..self.len())
                .map(|j| self.sum(c.id, j).map_or("?".into(), |v| v.to_string()))
                .collect();
            out.push_str(&format!(
                "{},{},{},\"{}\",\"{}\"\n",
                c.id,
                c.dim,
                c.size,
                c.representative.display(&self.ring),
                row.join(";")
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::FiniteMv;
    use crate::semiring::reducts;

    #[test]
    fn boolean_dim1_has_two_classes() {
        let b = SemiringTable::boolean();
        let m = enumerate_projectives(&b, 1).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.zero_class(), 0);
        assert_eq!(m.classes()[1].representative, Matrix::identity(&b, 1));
    }

    #[test]
    fn chain2_dim1_has_two_classes() {
        let s = reducts(&FiniteMv::chain(2)).unwrap().join_odot;
        let m = enumerate_projectives(&s, 1).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.members().count(), 2);
    }

    #[test]
    fn block_sums_and_padding() {
        let b = SemiringTable::boolean();
        let one = Matrix::identity(&b, 1);
        assert_eq!(block_sum(&one, &one, &b), Matrix::identity(&b, 2));
        let empty = Matrix::zero(&b, 0, 0);
        assert_eq!(block_sum(&one, &empty, &b), one);
        assert_eq!(pad(&one, 3, &b).rows(), 3);
        let m = enumerate_projectives(&b, 2).unwrap();
        let c = m.class_of_matrix(&one).unwrap();
        assert_eq!(m.class_of_matrix(&pad(&one, 2, &b)).unwrap(), c);
    }

    #[test]
    fn sum_matches_direct_sum_of_modules() {
        let b = SemiringTable::boolean();
        let m = enumerate_projectives(&b, 2).unwrap();
        for i in 0..m.len() {
            for j in 0..m.len() {
                let direct = m.module(i).direct_sum(m.module(j)).unwrap();
                let blocks = block_sum(&m.classes()[i].representative, &m.classes()[j].representative, &b);
                let rows = projective_presentation(&b, &blocks).unwrap();
                assert!(find_isomorphism(&direct, &rows).is_some());
                assert_eq!(m.sum(i, j), m.sum(j, i));
            }
        }
        assert!(m.to_csv().starts_with("class_id,dim"));
    }
}
