use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::SemiringError;
use crate::mv::{FiniteMv, MAX_FINITE_SIZE};

/// An element of `ℤ ∪ {⊤}`; `⊤` is a tag, never a large integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tropical {
    Fin(BigInt),
    Top,
}

impl Tropical {
    pub fn int(v: i64) -> Self {
        Tropical::Fin(BigInt::from(v))
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Tropical::Top)
    }
}

impl PartialOrd for Tropical {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `⊤` above every integer.
impl Ord for Tropical {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tropical::Top, Tropical::Top) => Ordering::Equal,
            (Tropical::Top, _) => Ordering::Greater,
            (_, Tropical::Top) => Ordering::Less,
            (Tropical::Fin(a), Tropical::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::Fin(v) => write!(f, "{v}"),
            Tropical::Top => f.write_str("top"),
        }
    }
}

impl FromStr for Tropical {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("top") || s == "⊤" {
            return Ok(Tropical::Top);
        }
        s.parse::<BigInt>()
            .map(Tropical::Fin)
            .map_err(|_| format!("expected an integer or `top`, got `{s}`"))
    }
}

/// The idempotent semifield `⟨ℤ ∪ {⊤}, ∧, +, −, ⊤, 0, u⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPlusSemifield {
    unit: BigInt,
}

impl MinPlusSemifield {
    pub fn new(unit: BigInt) -> Result<Self, SemiringError> {
        if !unit.is_positive() {
            return Err(SemiringError::BadUnit(unit.to_string()));
        }
        Ok(Self { unit })
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    /// Semiring addition: the minimum, with identity `⊤`.
    pub fn add(&self, a: &Tropical, b: &Tropical) -> Tropical {
        a.min(b).clone()
    }

    /// Semiring multiplication: integer sum, absorbed by `⊤`.
    pub fn mul(&self, a: &Tropical, b: &Tropical) -> Tropical {
        match (a, b) {
            (Tropical::Fin(x), Tropical::Fin(y)) => Tropical::Fin(x + y),
            _ => Tropical::Top,
        }
    }

    /// Multiplicative inverse, defined off `⊤`.
    pub fn inv(&self, a: &Tropical) -> Option<Tropical> {
        match a {
            Tropical::Fin(x) => Some(Tropical::Fin(-x)),
            Tropical::Top => None,
        }
    }

    pub fn join(&self, a: &Tropical, b: &Tropical) -> Tropical {
        a.max(b).clone()
    }

    pub fn zero(&self) -> Tropical {
        Tropical::Top
    }

    pub fn one(&self) -> Tropical {
        Tropical::Fin(BigInt::zero())
    }

    /// Checks the semifield laws on every triple from `sample` and returns
    /// a description of each failure.
    pub fn check_laws(&self, sample: &[Tropical]) -> Vec<String> {
        let mut failures = Vec::new();
        let mut fail = |law: &str, items: &[&Tropical]| {
            let shown: Vec<String> = items.iter().map(|t| t.to_string()).collect();
            failures.push(format!("{law} at ({})", shown.join(", ")));
        };
        for a in sample {
            if self.add(a, a) != *a {
                fail("idempotent ∧", &[a]);
            }
            if self.add(a, &self.zero()) != *a {
                fail("⊤ is the additive identity", &[a]);
            }
            if self.mul(a, &self.one()) != *a {
                fail("0 is the multiplicative identity", &[a]);
            }
            if self.mul(a, &self.zero()) != self.zero() || self.mul(&self.zero(), a) != self.zero() {
                fail("⊤ absorbs", &[a]);
            }
            if let Some(inv) = self.inv(a) {
                if self.mul(a, &inv) != self.one() {
                    fail("group inverse", &[a]);
                }
            }
            for b in sample {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    fail("commutativity", &[a, b]);
                }
                for c in sample {
                    if self.add(a, &self.add(b, c)) != self.add(&self.add(a, b), c) {
                        fail("∧ associative", &[a, b, c]);
                    }
                    if self.mul(a, &self.mul(b, c)) != self.mul(&self.mul(a, b), c) {
                        fail("+ associative", &[a, b, c]);
                    }
                    if self.mul(a, &self.add(b, c)) != self.add(&self.mul(a, b), &self.mul(a, c)) {
                        fail("distributivity", &[a, b, c]);
                    }
                }
            }
        }
        failures
    }

    /// `γ(a) = (a ∨ 0) ∧ u`, with `γ(⊤) = u`.
    pub fn gamma(&self, a: &Tropical) -> BigInt {
        match a {
            Tropical::Top => self.unit.clone(),
            Tropical::Fin(x) => {
                if x.is_negative() {
                    BigInt::zero()
                } else if *x > self.unit {
                    self.unit.clone()
                } else {
                    x.clone()
                }
            }
        }
    }

    /// `Γ(F)`: the interval `[0, u]` with `x ⊕ y = (x + y) ∧ u` and `x∗ = u − x`.
    pub fn gamma_truncate(&self) -> Result<GammaTruncation, SemiringError> {
        let u = self
            .unit
            .to_usize()
            .filter(|&u| u < MAX_FINITE_SIZE)
            .ok_or_else(|| SemiringError::UnitTooLarge(self.unit.to_string()))?;
        let n = u + 1;
        let oplus = (0..n * n).map(|c| (c / n + c % n).min(u)).collect();
        let star = (0..n).map(|x| u - x).collect();
        let labels = (0..n).map(|x| x.to_string()).collect();
        let algebra = FiniteMv::from_tables(labels, oplus, star, 0)?;
        Ok(GammaTruncation {
            field: self.clone(),
            unit: u,
            algebra,
        })
    }
}

/// `Γ(F)` together with the truncation map `γ : F → Γ(F)`.
#[derive(Clone, Debug)]
pub struct GammaTruncation {
    field: MinPlusSemifield,
    unit: usize,
    algebra: FiniteMv,
}

/// Outcome of checking `γ` against the two operations of `Γ(F)^{∧⊕}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaLawReport {
    pub pairs_checked: usize,
    /// `γ(a ∧ b) ≠ γ(a) ∧ γ(b)` anywhere.
    pub meet_failures: Vec<(Tropical, Tropical)>,
    /// `γ(a + b) ≠ γ(a) ⊕ γ(b)` with both arguments nonnegative or `⊤`.
    pub cone_failures: Vec<(Tropical, Tropical)>,
    /// `γ(a + b) ≠ γ(a) ⊕ γ(b)` with a negative argument.
    pub negative_failures: Vec<(Tropical, Tropical)>,
}

impl GammaLawReport {
    pub fn holds_on_cone(&self) -> bool {
        self.meet_failures.is_empty() && self.cone_failures.is_empty()
    }
}

impl GammaTruncation {
    pub fn algebra(&self) -> &FiniteMv {
        &self.algebra
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// `γ(a)` as an index into the truncated chain.
    pub fn gamma(&self, a: &Tropical) -> usize {
        self.field
            .gamma(a)
            .to_usize()
            .expect("γ lands in [0, u]")
    }

    pub fn check_gamma_laws(&self, sample: &[Tropical]) -> GammaLawReport {
        let f = &self.field;
        let alg = &self.algebra;
        let nonneg = |t: &Tropical| match t {
            Tropical::Top => true,
            Tropical::Fin(x) => !x.is_negative(),
        };
        let mut report = GammaLawReport::default();
        for a in sample {
            for b in sample {
                report.pairs_checked += 1;
                let (ga, gb) = (self.gamma(a), self.gamma(b));
                if self.gamma(&f.add(a, b)) != ga.min(gb) {
                    report.meet_failures.push((a.clone(), b.clone()));
                }
                if self.gamma(&f.mul(a, b)) != alg.oplus_ix(ga, gb) {
                    let pair = (a.clone(), b.clone());
                    if nonneg(a) && nonneg(b) {
                        report.cone_failures.push(pair);
                    } else {
                        report.negative_failures.push(pair);
                    }
                }
            }
        }
        report
    }
}
