use std::collections::BTreeSet;

use super::hom::{enumerate_homs, HOM_ENUMERATION_CAP};
use super::{FiniteSemimodule, SemimoduleError};
use crate::semiring::{SemiringHom, SemiringTable};

/// `N_h`: the `T`-semimodule `N` seen over `S` through `(a, x) ↦ h(a) · x`.
/// `map` is checked to be a semiring homomorphism `source → N.ring()`.
pub fn restrict_scalars(
    source: &SemiringTable,
    map: &[usize],
    n: &FiniteSemimodule,
) -> Result<FiniteSemimodule, SemimoduleError> {
    let h = SemiringHom::new(source, n.ring(), map.to_vec())?;
    let mut action = Vec::with_capacity(source.len() * n.len());
    for a in source.elements() {
        for x in n.elements() {
            action.push(n.act(h.apply(a), x));
        }
    }
    n.with_ring(source.clone(), action)
}

/// Compares `hom_T(M, N)` with `hom_S(M_h, N_h)` as sets of maps.
pub fn hom_sets_coincide(
    source: &SemiringTable,
    map: &[usize],
    m: &FiniteSemimodule,
    n: &FiniteSemimodule,
) -> Result<bool, SemimoduleError> {
    let over_t: BTreeSet<_> = enumerate_homs(m, n, HOM_ENUMERATION_CAP)?.into_iter().collect();
    let mh = restrict_scalars(source, map, m)?;
    let nh = restrict_scalars(source, map, n)?;
    let over_s: BTreeSet<_> = enumerate_homs(&mh, &nh, HOM_ENUMERATION_CAP)?.into_iter().collect();
    Ok(over_t == over_s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::FiniteMv;
    use crate::semiring::reducts;

    #[test]
    fn identity_restriction_is_trivial() {
        let s = reducts(&FiniteMv::chain(2)).unwrap().join_odot;
        let m = FiniteSemimodule::free(&s, 1).unwrap();
        let same = restrict_scalars(&s, &[0, 1, 2], &m).unwrap();
        assert_eq!(same, m);
    }

    #[test]
    fn projection_action_and_fullness() {
        let a = FiniteMv::chain(2);
        let p = FiniteMv::product(&[a.clone(), a.clone()]).unwrap();
        let sp = reducts(&p).unwrap().join_odot;
        let sa = reducts(&a).unwrap().join_odot;
        // first coordinate
        let h: Vec<usize> = p.elements().map(|i| i / 3).collect();
        let n = FiniteSemimodule::regular(&sa);
        let nh = restrict_scalars(&sp, &h, &n).unwrap();
        for s in p.elements() {
            for x in n.elements() {
                assert_eq!(nh.act(s, x), sa.mul_ix(s / 3, x));
            }
        }
        assert!(hom_sets_coincide(&sp, &h, &n, &n).unwrap());
    }

    #[test]
    fn non_homomorphism_rejected() {
        let s = reducts(&FiniteMv::chain(2)).unwrap().join_odot;
        let m = FiniteSemimodule::regular(&s);
        assert!(restrict_scalars(&s, &[0, 2, 2], &m).is_err());
    }
}
