use std::fmt;

use super::MvOps;

/// Equational laws checked by [`check_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `x ⊕ (y ⊕ z) = (x ⊕ y) ⊕ z`
    Mv1,
    /// `x ⊕ y = y ⊕ x`
    Mv2,
    /// `x ⊕ 0 = x`
    Mv3,
    /// `x∗∗ = x`
    Mv4,
    /// `x ⊕ 0∗ = 0∗`
    Mv5,
    /// `(x∗ ⊕ y)∗ ⊕ y = (y∗ ⊕ x)∗ ⊕ x`
    Mv6,
    /// `1∗ = 0`
    Mv7,
    /// `x ⊕ y = (x∗ ⊙ y∗)∗`
    Mv8,
    /// `x ⊕ x∗ = 1`
    Mv9,
    /// `x ⊕ 1 = 1`
    Mv5Alt,
    /// `(x ⊖ y) ⊕ y = (y ⊖ x) ⊕ x`
    Mv6Alt,
    /// `(x ∨ y)∗ = x∗ ∧ y∗`
    DeMorganJoin,
    /// `(x ∧ y)∗ = x∗ ∨ y∗`
    DeMorganMeet,
    /// `(x ⊕ y)∗ = x∗ ⊙ y∗`
    DeMorganOplus,
    /// `(x ⊙ y)∗ = x∗ ⊕ y∗`
    DeMorganOdot,
}

impl Law {
    pub const ALL: [Law; 15] = [
        Law::Mv1,
        Law::Mv2,
        Law::Mv3,
        Law::Mv4,
        Law::Mv5,
        Law::Mv6,
        Law::Mv7,
        Law::Mv8,
        Law::Mv9,
        Law::Mv5Alt,
        Law::Mv6Alt,
        Law::DeMorganJoin,
        Law::DeMorganMeet,
        Law::DeMorganOplus,
        Law::DeMorganOdot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Mv1 => "MV1",
            Law::Mv2 => "MV2",
            Law::Mv3 => "MV3",
            Law::Mv4 => "MV4",
            Law::Mv5 => "MV5",
            Law::Mv6 => "MV6",
            Law::Mv7 => "MV7",
            Law::Mv8 => "MV8",
            Law::Mv9 => "MV9",
            Law::Mv5Alt => "MV5'",
            Law::Mv6Alt => "MV6'",
            Law::DeMorganJoin => "DM-join",
            Law::DeMorganMeet => "DM-meet",
            Law::DeMorganOplus => "DM-oplus",
            Law::DeMorganOdot => "DM-odot",
        }
    }

    fn arity(self) -> usize {
        match self {
            Law::Mv7 => 0,
            Law::Mv3 | Law::Mv4 | Law::Mv5 | Law::Mv9 | Law::Mv5Alt => 1,
            Law::Mv1 => 3,
            _ => 2,
        }
    }

    fn holds<A: MvOps>(self, alg: &A, v: &[A::Elem]) -> bool {
        let zero = alg.zero();
        let one = alg.one();
        match self {
            Law::Mv7 => alg.star(&one) == zero,
            Law::Mv1 => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                alg.oplus(x, &alg.oplus(y, z)) == alg.oplus(&alg.oplus(x, y), z)
            }
            Law::Mv2 => alg.oplus(&v[0], &v[1]) == alg.oplus(&v[1], &v[0]),
            Law::Mv3 => alg.oplus(&v[0], &zero) == v[0],
            Law::Mv4 => alg.star(&alg.star(&v[0])) == v[0],
            Law::Mv5 => {
                let top = alg.star(&zero);
                alg.oplus(&v[0], &top) == top
            }
            Law::Mv6 => {
                let (x, y) = (&v[0], &v[1]);
                let l = alg.oplus(&alg.star(&alg.oplus(&alg.star(x), y)), y);
                let r = alg.oplus(&alg.star(&alg.oplus(&alg.star(y), x)), x);
                l == r
            }
            Law::Mv8 => {
                let (x, y) = (&v[0], &v[1]);
                alg.oplus(x, y) == alg.star(&alg.odot(&alg.star(x), &alg.star(y)))
            }
            Law::Mv9 => alg.oplus(&v[0], &alg.star(&v[0])) == one,
            Law::Mv5Alt => alg.oplus(&v[0], &one) == one,
            Law::Mv6Alt => {
                let (x, y) = (&v[0], &v[1]);
                alg.oplus(&alg.ominus(x, y), y) == alg.oplus(&alg.ominus(y, x), x)
            }
            Law::DeMorganJoin => {
                let (x, y) = (&v[0], &v[1]);
                alg.star(&alg.join(x, y)) == alg.meet(&alg.star(x), &alg.star(y))
            }
            Law::DeMorganMeet => {
                let (x, y) = (&v[0], &v[1]);
                alg.star(&alg.meet(x, y)) == alg.join(&alg.star(x), &alg.star(y))
            }
            Law::DeMorganOplus => {
                let (x, y) = (&v[0], &v[1]);
                alg.star(&alg.oplus(x, y)) == alg.odot(&alg.star(x), &alg.star(y))
            }
            Law::DeMorganOdot => {
                let (x, y) = (&v[0], &v[1]);
                alg.star(&alg.odot(x, y)) == alg.oplus(&alg.star(x), &alg.star(y))
            }
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawResult<E> {
    pub law: Law,
    /// First failing assignment in canonical order, `None` when the law holds.
    pub witness: Option<Vec<E>>,
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawReport<E> {
    pub results: Vec<LawResult<E>>,
}

impl<E> LawReport<E> {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.witness.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult<E>> {
        self.results.iter().filter(|r| r.witness.is_some())
    }

    pub fn result(&self, law: Law) -> Option<&LawResult<E>> {
        self.results.iter().find(|r| r.law == law)
    }
}

/// Checks every [`Law`] on all assignments drawn from `sample`.
///
/// For a finite algebra pass the whole carrier; for `[0, 1]` a grid, which
/// makes the check an under-approximation.
pub fn check_axioms<A: MvOps>(alg: &A, sample: &[A::Elem]) -> LawReport<A::Elem> {
    let results = Law::ALL
        .iter()
        .map(|&law| check_law(alg, sample, law))
        .collect();
    LawReport { results }
}

fn check_law<A: MvOps>(alg: &A, sample: &[A::Elem], law: Law) -> LawResult<A::Elem> {
    let arity = law.arity();
    let n = sample.len();
    let total = n.pow(arity as u32);
    let mut idx = vec![0usize; arity];
    for step in 0..total {
        let mut c = step;
        for slot in idx.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        let vals: Vec<A::Elem> = idx.iter().map(|&i| sample[i].clone()).collect();
        if !law.holds(alg, &vals) {
            return LawResult {
                law,
                witness: Some(vals),
                checked: step + 1,
            };
        }
    }
    LawResult {
        law,
        witness: None,
        checked: total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::{FiniteMv, UnitInterval};
    use num_bigint::BigInt;

    #[test]
    fn chain4_passes_everything() {
        let c4 = FiniteMv::chain(4);
        let all: Vec<usize> = c4.elements().collect();
        let report = check_axioms(&c4, &all);
        assert!(report.all_pass());
        assert_eq!(report.results.len(), 15);
        assert_eq!(report.result(Law::Mv1).unwrap().checked, 125);
    }

    #[test]
    fn product_passes_everything() {
        let p = FiniteMv::from_spec(&"product:chain:2,chain:2".parse().unwrap()).unwrap();
        let all: Vec<usize> = p.elements().collect();
        assert!(check_axioms(&p, &all).all_pass());
    }

    #[test]
    fn corrupted_table_is_caught_with_witness() {
        let c2 = FiniteMv::chain(2);
        let bad = c2.with_swapped_oplus((0, 1), (1, 1));
        let all: Vec<usize> = bad.elements().collect();
        let report = check_axioms(&bad, &all);
        assert!(!report.all_pass());
        let mv1 = report.result(Law::Mv1).unwrap();
        let mv2 = report.result(Law::Mv2).unwrap();
        assert!(mv1.witness.is_some() || mv2.witness.is_some());
        let w = mv2.witness.as_ref().unwrap();
        assert_ne!(bad.oplus_ix(w[0], w[1]), bad.oplus_ix(w[1], w[0]));
    }

    #[test]
    fn unit_interval_grid_passes() {
        let u = UnitInterval::<BigInt>::new();
        let grid = u.grid(10);
        assert!(check_axioms(&u, &grid).all_pass());
    }
}
