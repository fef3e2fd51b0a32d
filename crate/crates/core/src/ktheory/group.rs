use std::fmt;

use super::ProjectiveMonoid;

/// A formal difference `Σ[P_i] − Σ[Q_j]` of enumerated classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct K0Element {
    /// Sorted class ids.
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

/// Outcome of the bounded group-completion equality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K0Equality {
    /// `P ⊕ Q′ ⊕ R ≅ P′ ⊕ Q ⊕ R` for the given `R`.
    Equal { witness: usize },
    /// No enumerated `R` works.
    NotFoundWithinCap,
    /// A needed sum fell outside the enumerated classes.
    Unresolved,
}

impl K0Element {
    pub fn zero() -> Self {
        Self {
            pos: Vec::new(),
            neg: Vec::new(),
        }
    }

    /// `k_S([P]) = [P] − 0`.
    pub fn class(c: usize) -> Self {
        Self {
            pos: vec![c],
            neg: Vec::new(),
        }
    }

    pub fn difference(pos: usize, neg: usize) -> Self {
        Self {
            pos: vec![pos],
            neg: vec![neg],
        }
    }

    pub fn add(&self, other: &K0Element) -> K0Element {
        let mut pos = [self.pos.as_slice(), other.pos.as_slice()].concat();
        let mut neg = [self.neg.as_slice(), other.neg.as_slice()].concat();
        pos.sort_unstable();
        neg.sort_unstable();
        K0Element { pos, neg }
    }

    pub fn negate(&self) -> K0Element {
        K0Element {
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    /// Collapses each side to a single class when the sums are enumerated.
    pub fn reduce(&self, monoid: &ProjectiveMonoid) -> Option<(usize, usize)> {
        Some((monoid.sum_all(&self.pos)?, monoid.sum_all(&self.neg)?))
    }

    /// `[P] − [Q] = [P′] − [Q′]` iff `P ⊕ Q′ ⊕ R ≅ P′ ⊕ Q ⊕ R` for some `R`,
    /// searched among the enumerated classes in id order.
    pub fn equals(&self, other: &K0Element, monoid: &ProjectiveMonoid) -> K0Equality {
        let (Some((p, q)), Some((p2, q2))) = (self.reduce(monoid), other.reduce(monoid)) else {
            return K0Equality::Unresolved;
        };
        let (Some(left), Some(right)) = (monoid.sum(p, q2), monoid.sum(p2, q)) else {
            return K0Equality::Unresolved;
        };
        let mut unresolved = false;
        for r in 0..monoid.len() {
            match (monoid.sum(left, r), monoid.sum(right, r)) {
                (Some(a), Some(b)) if a == b => return K0Equality::Equal { witness: r },
                (Some(_), Some(_)) => {}
                _ => unresolved = true,
            }
        }
        if unresolved {
            K0Equality::Unresolved
        } else {
            K0Equality::NotFoundWithinCap
        }
    }
}

impl fmt::Display for K0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[usize]| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.iter().map(|c| format!("[{c}]")).collect::<Vec<_>>().join(" + ")
            }
        };
        if self.neg.is_empty() {
            f.write_str(&side(&self.pos))
        } else {
            write!(f, "{} − ({})", side(&self.pos), side(&self.neg))
        }
    }
}

/// Result of testing the universal property against `ℤ/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalCheck {
    pub modulus: u32,
    /// Monoid morphisms `P_F(S) → ℤ/m` found.
    pub morphisms: usize,
    /// Those whose induced map on `K0` respected every proven equality.
    pub factored: usize,
}

impl ProjectiveMonoid {
    /// Enumerates monoid morphisms `φ` into `ℤ/m` (values on classes with
    /// `φ([{0}]) = 0` and `φ(i ⊕ j) = φ(i) + φ(j)` on enumerated sums) and
    /// checks that `Σφ(pos) − Σφ(neg)` is constant on every pair of
    /// differences the bounded equality test proves equal.
    pub fn check_universal_property(&self, modulus: u32, cap: u128) -> Option<UniversalCheck> {
        let k = self.len();
        let m = modulus as usize;
        if (m as u128).checked_pow(k as u32).is_none_or(|t| t > cap) {
            return None;
        }
        let diffs: Vec<K0Element> = (0..k)
            .flat_map(|p| (0..k).map(move |q| K0Element::difference(p, q)))
            .collect();
        let mut equal_pairs = Vec::new();
        for (i, a) in diffs.iter().enumerate() {
            for b in &diffs[i + 1..] {
                if matches!(a.equals(b, self), K0Equality::Equal { .. }) {
                    equal_pairs.push((a.clone(), b.clone()));
                }
            }
        }
        let total = m.pow(k as u32);
        let mut morphisms = 0;
        let mut factored = 0;
        for code in 0..total {
            let phi = crate::util::decode_digits(code, m, k);
            if phi[self.zero_class()] != 0 {
                continue;
            }
            let additive = (0..k).all(|i| {
                (0..k).all(|j| self.sum(i, j).is_none_or(|s| phi[s] == (phi[i] + phi[j]) % m))
            });
            if !additive {
                continue;
            }
            morphisms += 1;
            let psi = |e: &K0Element| {
                let p: usize = e.pos.iter().map(|&c| phi[c]).sum();
                let n: usize = e.neg.iter().map(|&c| phi[c]).sum();
                (p + m * k - n % m) % m
            };
            if equal_pairs.iter().all(|(a, b)| psi(a) == psi(b)) {
                factored += 1;
            }
        }
        Some(UniversalCheck {
            modulus,
            morphisms,
            factored,
        })
    }
}
