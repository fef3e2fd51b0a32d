use std::collections::BTreeSet;

use super::{FiniteMv, Ideal, MvError, MvOps};
use crate::util::UnionFind;

/// `A/I` together with the class map.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    ideal: Ideal,
    class_of: Vec<usize>,
    representatives: Vec<usize>,
    algebra: FiniteMv,
}

impl QuotientAlgebra {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Class index of each element of the parent.
    pub fn class_map(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Least parent element of each class.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn algebra(&self) -> &FiniteMv {
        &self.algebra
    }

    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.class_of.len())
            .filter(|&a| self.class_of[a] == class)
            .collect()
    }
}

impl FiniteMv {
    /// The quotient by `ideal`: `a ∼ b` iff `d(a, b) ∈ I`.
    pub fn quotient(&self, ideal: &[usize]) -> Result<QuotientAlgebra, MvError> {
        let ideal = self.ideal(ideal)?;
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut representatives = Vec::new();
        for a in self.elements() {
            if class_of[a] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(a);
            for b in self.elements() {
                if ideal.contains(self.distance(&a, &b)) {
                    class_of[b] = c;
                }
            }
        }
        let m = representatives.len();
        let mut oplus = vec![usize::MAX; m * m];
        for a in self.elements() {
            for b in self.elements() {
                let cell = &mut oplus[class_of[a] * m + class_of[b]];
                let v = class_of[self.oplus_ix(a, b)];
                if *cell == usize::MAX {
                    *cell = v;
                } else if *cell != v {
                    return Err(MvError::NotAnIdeal("induced relation is not a congruence".into()));
                }
            }
        }
        let star = representatives
            .iter()
            .map(|&r| class_of[self.star_ix(r)])
            .collect();
        let labels = representatives
            .iter()
            .map(|&r| format!("[{}]", self.label(r)))
            .collect();
        let algebra = FiniteMv::from_tables(labels, oplus, star, class_of[self.zero_ix()])?;
        Ok(QuotientAlgebra {
            ideal,
            class_of,
            representatives,
            algebra,
        })
    }

    /// Checks that every class `a/I` equals `{(a ⊕ b) ⊙ c∗ | b, c ∈ I}`.
    pub fn classes_match_ideal_translates(&self, q: &QuotientAlgebra) -> bool {
        self.elements().all(|a| {
            let class: BTreeSet<usize> = q.class_members(q.class_of(a)).into_iter().collect();
            let mut translates = BTreeSet::new();
            for &b in q.ideal().elements() {
                for &c in q.ideal().elements() {
                    translates.insert(self.odot(&self.oplus_ix(a, b), &self.star_ix(c)));
                }
            }
            class == translates
        })
    }

    /// All congruences of the algebra, each as a class labelling in
    /// first-occurrence order. Found by closing pairs under `⊕` and `∗`, with
    /// no reference to ideals.
    pub fn congruences(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut stack = vec![identity];
        while let Some(cong) = stack.pop() {
            for a in 0..n {
                for b in (a + 1)..n {
                    if cong[a] == cong[b] {
                        continue;
                    }
                    let next = self.congruence_closure(&cong, (a, b));
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    fn congruence_closure(&self, base: &[usize], extra: (usize, usize)) -> Vec<usize> {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        let mut first = vec![usize::MAX; n];
        for (x, &c) in base.iter().enumerate() {
            if first[c] == usize::MAX {
                first[c] = x;
            } else {
                uf.union(first[c], x);
            }
        }
        uf.union(extra.0, extra.1);
        loop {
            let mut changed = false;
            for x in 0..n {
                let r = uf.find(x);
                if r == x {
                    continue;
                }
                changed |= uf.union(self.star_ix(x), self.star_ix(r));
                for c in 0..n {
                    changed |= uf.union(self.oplus_ix(x, c), self.oplus_ix(r, c));
                }
            }
            if !changed {
                break;
            }
        }
        uf.labels()
    }
}
