use std::collections::BTreeSet;

use super::hom::{enumerate_homs, SemimoduleHom, HOM_ENUMERATION_CAP};
use super::{FiniteSemimodule, Matrix, SemimoduleError};
use crate::semiring::SemiringTable;
use crate::util::decode_digits;

/// The row semimodule `S · {u_i}` of an idempotent matrix.
pub fn projective_presentation(ring: &SemiringTable, u: &Matrix) -> Result<FiniteSemimodule, SemimoduleError> {
    if !u.is_idempotent(ring) {
        return Err(SemimoduleError::NotIdempotent);
    }
    FiniteSemimodule::row_space(ring, u.cols(), &u.row_vectors())
}

/// Decides whether `M` is a retract of `S^n` by enumerating all maps
/// `i : M → S^n` and `p : S^n → M` and looking for `p ∘ i = id`.
pub fn brute_force_projective(m: &FiniteSemimodule, n: usize) -> Result<bool, SemimoduleError> {
    let ring = m.ring();
    let free = FiniteSemimodule::free(ring, n)?;
    let p_count = (m.len() as u128).saturating_pow(n as u32);
    if p_count > HOM_ENUMERATION_CAP as u128 {
        return Err(SemimoduleError::TooLarge {
            what: "maps S^n → M",
            size: p_count,
            cap: HOM_ENUMERATION_CAP as u128,
        });
    }
    let sections = enumerate_homs(m, &free, HOM_ENUMERATION_CAP)?;
    let total = p_count * sections.len() as u128;
    if total > HOM_ENUMERATION_CAP as u128 {
        return Err(SemimoduleError::TooLarge {
            what: "retraction pairs",
            size: total,
            cap: HOM_ENUMERATION_CAP as u128,
        });
    }
    let vectors = free.vectors().expect("free module has coordinates");
    for code in 0..p_count as usize {
        // a map out of S^n is fixed by the images of χ_1, …, χ_n
        let images = decode_digits(code, m.len(), n);
        let p: Vec<usize> = vectors
            .iter()
            .map(|f| m.join_all(f.iter().zip(&images).map(|(&c, &g)| m.act(c, g))))
            .collect();
        if sections
            .iter()
            .any(|i| m.elements().all(|x| p[i.apply(x)] == x))
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All multiplicatively idempotent `n × n` matrices.
pub fn idempotent_matrices(ring: &SemiringTable, n: usize) -> Vec<Matrix> {
    Matrix::all(ring, n, n).filter(|u| u.is_idempotent(ring)).collect()
}

/// Row spaces of idempotent matrices, as subsets of `S^n` by index.
pub fn row_space_subsets(ring: &SemiringTable, n: usize) -> Result<BTreeSet<Vec<usize>>, SemimoduleError> {
    let free = FiniteSemimodule::free(ring, n)?;
    idempotent_matrices(ring, n)
        .iter()
        .map(|u| {
            let rs = projective_presentation(ring, u)?;
            Ok(rs
                .vectors()
                .expect("row space has coordinates")
                .iter()
                .map(|v| free.free_index(v))
                .collect())
        })
        .collect()
}

/// Images of idempotent endomorphisms of `S^n`, found without matrices by
/// enumerating the endomorphism set directly.
pub fn idempotent_retracts(ring: &SemiringTable, n: usize) -> Result<BTreeSet<Vec<usize>>, SemimoduleError> {
    let free = FiniteSemimodule::free(ring, n)?;
    let endos = enumerate_homs(&free, &free, HOM_ENUMERATION_CAP)?;
    Ok(endos
        .iter()
        .filter(|e| e.then(e) == **e)
        .map(SemimoduleHom::image)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::FiniteMv;
    use crate::semiring::reducts;

    #[test]
    fn presentations() {
        let b = SemiringTable::boolean();
        assert_eq!(projective_presentation(&b, &Matrix::identity(&b, 2)).unwrap().len(), 4);
        assert_eq!(projective_presentation(&b, &Matrix::zero(&b, 2, 2)).unwrap().len(), 1);
        let u = Matrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let m = projective_presentation(&b, &u).unwrap();
        assert_eq!(m.len(), 3);
        assert!(brute_force_projective(&m, 2).unwrap());
        let s = reducts(&FiniteMv::chain(2)).unwrap().join_odot;
        let half = Matrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(projective_presentation(&s, &half), Err(SemimoduleError::NotIdempotent));
    }

    #[test]
    fn free_is_projective() {
        let b = SemiringTable::boolean();
        let f2 = FiniteSemimodule::free(&b, 2).unwrap();
        assert!(brute_force_projective(&f2, 2).unwrap());
        // S^2 is not a retract of S^1
        assert!(!brute_force_projective(&f2, 1).unwrap());
    }

    #[test]
    fn boolean_criteria_agree() {
        let b = SemiringTable::boolean();
        for n in 1..=2 {
            assert_eq!(row_space_subsets(&b, n).unwrap(), idempotent_retracts(&b, n).unwrap());
        }
    }
}
