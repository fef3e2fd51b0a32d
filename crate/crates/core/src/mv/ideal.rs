use std::collections::BTreeSet;

use super::{FiniteMv, MvError, MvOps};
use crate::util::mask_to_vec;

/// An ideal of a finite MV-algebra: contains 0, downward closed, `⊕`-closed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    elements: Vec<usize>,
    proper: bool,
}

impl Ideal {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// `1 ∉ I`
    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }
}

/// Ideal lattice data of a finite algebra.
#[derive(Clone, Debug)]
pub struct Spectra {
    /// Every ideal, ordered by size then elements.
    pub ideals: Vec<Ideal>,
    /// Indices into `ideals`.
    pub maximal: Vec<usize>,
    /// Indices into `ideals`: the prime MV-ideals.
    pub prime: Vec<usize>,
    /// `Rad A`, the intersection of the maximal ideals.
    pub radical: Ideal,
    /// `U(a)` for each element `a`: indices into `prime` of the primes missing `a`.
    pub basis: Vec<Vec<usize>>,
}

impl Spectra {
    pub fn is_semisimple(&self) -> bool {
        self.radical.len() == 1
    }

    pub fn prime_ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.prime.iter().map(|&i| &self.ideals[i])
    }

    pub fn maximal_ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.maximal.iter().map(|&i| &self.ideals[i])
    }
}

impl FiniteMv {
    fn ideal_from_mask(&self, mask: &[bool]) -> Ideal {
        Ideal {
            proper: !mask[self.one_ix()],
            elements: mask_to_vec(mask),
        }
    }

    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        let mut mask = vec![false; self.len()];
        for &a in subset {
            if a >= self.len() {
                return false;
            }
            mask[a] = true;
        }
        self.mask_is_ideal(&mask)
    }

    fn mask_is_ideal(&self, mask: &[bool]) -> bool {
        if !mask[self.zero_ix()] {
            return false;
        }
        for a in self.elements().filter(|&a| mask[a]) {
            for b in self.elements() {
                if self.leq(&b, &a) && !mask[b] {
                    return false;
                }
                if mask[b] && !mask[self.oplus_ix(a, b)] {
                    return false;
                }
            }
        }
        true
    }

    /// Ideal as a checked value; errors when `subset` is not an ideal.
    pub fn ideal(&self, subset: &[usize]) -> Result<Ideal, MvError> {
        if !self.is_ideal(subset) {
            return Err(MvError::NotAnIdeal(format!("{subset:?}")));
        }
        let mut mask = vec![false; self.len()];
        for &a in subset {
            mask[a] = true;
        }
        Ok(self.ideal_from_mask(&mask))
    }

    /// `(S]`: everything below some finite `⊕`-sum of seed elements.
    pub fn ideal_generated(&self, seed: &[usize]) -> Ideal {
        let n = self.len();
        let mut sums = vec![false; n];
        sums[self.zero_ix()] = true;
        let mut frontier = vec![self.zero_ix()];
        while let Some(t) = frontier.pop() {
            for &s in seed {
                let u = self.oplus_ix(t, s);
                if !sums[u] {
                    sums[u] = true;
                    frontier.push(u);
                }
            }
        }
        let mut mask = vec![false; n];
        for t in self.elements().filter(|&t| sums[t]) {
            for a in self.elements() {
                if !mask[a] && self.leq(&a, &t) {
                    mask[a] = true;
                }
            }
        }
        self.ideal_from_mask(&mask)
    }

    /// All ideals, found by growing from `{0}` one generator at a time.
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let zero = self.ideal_generated(&[]);
        seen.insert(zero.elements.clone());
        let mut stack = vec![zero];
        let mut out = Vec::new();
        while let Some(ideal) = stack.pop() {
            for a in self.elements().filter(|&a| !ideal.contains(a)) {
                let mut seed = ideal.elements.clone();
                seed.push(a);
                let bigger = self.ideal_generated(&seed);
                if seen.insert(bigger.elements.clone()) {
                    stack.push(bigger);
                }
            }
            out.push(ideal);
        }
        out.sort_by(|a, b| (a.len(), &a.elements).cmp(&(b.len(), &b.elements)));
        out
    }

    pub fn is_prime_ideal(&self, ideal: &Ideal) -> bool {
        ideal.is_proper()
            && self.elements().all(|a| {
                self.elements().all(|b| {
                    !ideal.contains(self.meet(&a, &b)) || ideal.contains(a) || ideal.contains(b)
                })
            })
    }

    /// Maximal ideals, prime ideals, radical and the Zariski basis `U(a)`.
    pub fn spectra(&self) -> Spectra {
        let ideals = self.ideals();
        let proper: Vec<usize> = (0..ideals.len()).filter(|&i| ideals[i].is_proper()).collect();
        let maximal: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&i| {
                !proper
                    .iter()
                    .any(|&j| j != i && ideals[i].is_subset_of(&ideals[j]) && ideals[j].len() > ideals[i].len())
            })
            .collect();
        let prime: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&i| self.is_prime_ideal(&ideals[i]))
            .collect();
        let mut rad = vec![true; self.len()];
        for &m in &maximal {
            for (a, slot) in rad.iter_mut().enumerate() {
                *slot &= ideals[m].contains(a);
            }
        }
        let radical = self.ideal_from_mask(&rad);
        let basis = self
            .elements()
            .map(|a| {
                prime
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| !ideals[p].contains(a))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Spectra {
            ideals,
            maximal,
            prime,
            radical,
            basis,
        }
    }
}
