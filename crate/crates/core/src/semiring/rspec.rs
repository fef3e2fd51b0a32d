use super::{SemiringError, SemiringTable};
use std::collections::BTreeSet;

/// Semiring ideals of a finite semiring with the prime ones flagged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSpec {
    /// Every ideal, as a sorted element list, ordered by size then content.
    pub ideals: Vec<Vec<usize>>,
    /// Indices into `ideals` of the proper prime ideals.
    pub prime: Vec<usize>,
    /// Indices into `ideals` of the maximal proper ideals.
    pub maximal: Vec<usize>,
    /// `basis[a]` lists the indices into `prime` of the primes not containing `a`.
    pub basis: Vec<Vec<usize>>,
}

impl RSpec {
    pub fn prime_ideals(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.prime.iter().map(|&i| &self.ideals[i])
    }

    pub fn maximal_ideals(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.maximal.iter().map(|&i| &self.ideals[i])
    }
}

impl SemiringTable {
    /// Nonempty, closed under `∨`, and `ab ∈ I` whenever `a ∈ I`.
    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        if subset.is_empty() {
            return false;
        }
        let mut member = vec![false; self.len()];
        for &a in subset {
            if a >= self.len() {
                return false;
            }
            member[a] = true;
        }
        subset.iter().all(|&a| {
            subset.iter().all(|&b| member[self.join_ix(a, b)])
                && self.elements().all(|b| member[self.mul_ix(a, b)] && member[self.mul_ix(b, a)])
        })
    }

    /// Smallest ideal containing `seed`; `{0}` for an empty seed.
    pub fn ideal_generated(&self, seed: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.zero()]);
        for &s in seed {
            for b in self.elements() {
                set.insert(self.mul_ix(s, b));
                set.insert(self.mul_ix(b, s));
            }
        }
        loop {
            let current: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &a in &current {
                for &b in &current {
                    set.insert(self.join_ix(a, b));
                }
            }
            if set.len() == before {
                return current;
            }
        }
    }

    /// All ideals, found by adding one generator at a time.
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier = vec![self.ideal_generated(&[])];
        seen.insert(frontier[0].clone());
        while let Some(ideal) = frontier.pop() {
            for a in self.elements() {
                if ideal.binary_search(&a).is_ok() {
                    continue;
                }
                let mut seed = ideal.clone();
                seed.push(a);
                let next = self.ideal_generated(&seed);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut all: Vec<Vec<usize>> = seen.into_iter().collect();
        all.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        all
    }

    /// Proper, and `ab ∈ P` forces `a ∈ P` or `b ∈ P`.
    pub fn is_prime_ideal(&self, ideal: &[usize]) -> bool {
        if !self.is_ideal(ideal) || ideal.contains(&self.one()) {
            return false;
        }
        let member = |x: usize| ideal.contains(&x);
        self.elements().all(|a| {
            self.elements()
                .all(|b| !member(self.mul_ix(a, b)) || member(a) || member(b))
        })
    }

    pub fn prime_ideal(&self, subset: &[usize]) -> Result<Vec<usize>, SemiringError> {
        let mut v = subset.to_vec();
        v.sort_unstable();
        v.dedup();
        if self.is_prime_ideal(&v) {
            Ok(v)
        } else {
            Err(SemiringError::NotPrime)
        }
    }

    pub fn r_spec(&self) -> RSpec {
        let ideals = self.ideals();
        let one = self.one();
        let proper: Vec<usize> = (0..ideals.len())
            .filter(|&i| !ideals[i].contains(&one))
            .collect();
        let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
        let maximal = proper
            .iter()
            .copied()
            .filter(|&i| {
                !proper
                    .iter()
                    .any(|&j| j != i && ideals[j].len() > ideals[i].len() && subset(&ideals[i], &ideals[j]))
            })
            .collect();
        let prime: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&i| self.is_prime_ideal(&ideals[i]))
            .collect();
        let basis = self
            .elements()
            .map(|a| {
                (0..prime.len())
                    .filter(|&p| ideals[prime[p]].binary_search(&a).is_err())
                    .collect()
            })
            .collect();
        RSpec {
            ideals,
            prime,
            maximal,
            basis,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::FiniteMv;
    use crate::semiring::reducts;

    #[test]
    fn chain2_spectrum() {
        let c2 = FiniteMv::chain(2);
        let s = reducts(&c2).unwrap().join_odot;
        let spec = s.r_spec();
        assert_eq!(spec.ideals, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
        let primes: Vec<_> = spec.prime_ideals().cloned().collect();
        assert_eq!(primes, vec![vec![0, 1]]);
        assert!(!s.is_prime_ideal(&[0]));
        // U(1/2) is empty, U(1) is the whole spectrum
        assert!(spec.basis[1].is_empty());
        assert_eq!(spec.basis[2], vec![0]);

        // the MV spectrum of the same algebra is {{0}}
        let mv: Vec<Vec<usize>> = c2
            .spectra()
            .prime_ideals()
            .map(|i| i.elements().to_vec())
            .collect();
        assert_eq!(mv, vec![vec![0]]);
        assert_ne!(mv, primes);
    }

    #[test]
    fn boolean_spectrum() {
        let spec = SemiringTable::boolean().r_spec();
        assert_eq!(spec.prime_ideals().cloned().collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(spec.maximal_ideals().cloned().collect::<Vec<_>>(), vec![vec![0]]);
    }

    #[test]
    fn every_enumerated_set_is_an_ideal() {
        let p = FiniteMv::product(&[FiniteMv::chain(2), FiniteMv::chain(1)]).unwrap();
        let s = reducts(&p).unwrap().join_odot;
        for i in s.ideals() {
            assert!(s.is_ideal(&i));
            assert_eq!(s.ideal_generated(&i), i);
        }
        assert!(!s.is_ideal(&[]));
    }
}
