use super::{SemiringError, SemiringHom, SemiringTable};
use crate::mv::{DerivedOp, FiniteMv};

/// The two semiring reducts of a finite MV-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reducts {
    /// `⟨A, ∨, ⊙, 0, 1⟩`
    pub join_odot: SemiringTable,
    /// `⟨A, ∧, ⊕, 1, 0⟩`
    pub meet_oplus: SemiringTable,
    /// `∗`, checked to be an isomorphism `join_odot → meet_oplus`.
    pub star: SemiringHom,
}

fn table(a: &FiniteMv, op: DerivedOp) -> Vec<usize> {
    let n = a.len();
    (0..n * n).map(|c| a.derived_ix(op, c / n, c % n)).collect()
}

/// Extracts both reducts and verifies that `∗` maps one onto the other.
pub fn reducts(a: &FiniteMv) -> Result<Reducts, SemiringError> {
    let labels = a.labels().to_vec();
    let join_odot = SemiringTable::new(
        labels.clone(),
        table(a, DerivedOp::Join),
        table(a, DerivedOp::Odot),
        a.zero_ix(),
        a.one_ix(),
    )?;
    let meet_oplus = SemiringTable::new(
        labels,
        table(a, DerivedOp::Meet),
        a.oplus_table().to_vec(),
        a.one_ix(),
        a.zero_ix(),
    )?;
    let star = SemiringHom::new(&join_odot, &meet_oplus, a.star_table().to_vec())
        .map_err(|e| SemiringError::StarNotIsomorphism(e.to_string()))?;
    if !star.is_onto() {
        return Err(SemiringError::StarNotIsomorphism("∗ is not onto".into()));
    }
    Ok(Reducts {
        join_odot,
        meet_oplus,
        star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain2_odot_table() {
        let c2 = FiniteMv::chain(2);
        let r = reducts(&c2).unwrap();
        // max(x + y - 1, 0) over 0, 1/2, 1
        assert_eq!(r.join_odot.mul_table(), &[0, 0, 0, 0, 0, 1, 0, 1, 2]);
        assert_eq!(r.join_odot.join_table(), &[0, 1, 2, 1, 1, 2, 2, 2, 2]);
        assert_eq!(r.meet_oplus.zero(), 2);
        assert_eq!(r.meet_oplus.one(), 0);
    }

    #[test]
    fn boolean_reducts_are_boolean_semiring() {
        let r = reducts(&FiniteMv::chain(1)).unwrap();
        let b = SemiringTable::boolean();
        assert_eq!(r.join_odot, b);
        // the dual reduct is the Boolean semiring with 0 and 1 swapped
        let swapped = SemiringHom::new(&r.meet_oplus, &b, vec![1, 0]).unwrap();
        assert!(swapped.is_onto());
    }

    #[test]
    fn star_transports_tables_on_chain4() {
        let c4 = FiniteMv::chain(4);
        let r = reducts(&c4).unwrap();
        for x in c4.elements() {
            for y in c4.elements() {
                let s = |v| c4.star_ix(v);
                assert_eq!(s(r.join_odot.join_ix(x, y)), r.meet_oplus.join_ix(s(x), s(y)));
                assert_eq!(s(r.join_odot.mul_ix(x, y)), r.meet_oplus.mul_ix(s(x), s(y)));
            }
        }
    }

    #[test]
    fn broken_star_is_reported() {
        let c2 = FiniteMv::chain(2);
        let bad = FiniteMv::from_tables(
            c2.labels().to_vec(),
            c2.oplus_table().to_vec(),
            vec![2, 0, 0],
            0,
        )
        .unwrap();
        assert!(reducts(&bad).is_err());
    }
}
