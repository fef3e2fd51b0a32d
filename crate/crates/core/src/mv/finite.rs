use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{AlgebraSpec, MvError, MvOps};

/// Largest carrier accepted for table-backed algebras.
pub const MAX_FINITE_SIZE: usize = 4096;

/// A finite MV-algebra held as explicit `⊕` and `∗` tables over the carrier
/// `0..len()`. Derived operations are computed from the two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMv {
    spec: Option<AlgebraSpec>,
    labels: Vec<String>,
    oplus: Vec<usize>,
    star: Vec<usize>,
    zero: usize,
    fingerprint: u64,
}

/// An element tagged with the algebra it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MvElement {
    algebra: u64,
    index: usize,
}

impl MvElement {
    pub fn index(self) -> usize {
        self.index
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedOp {
    Odot,
    Ominus,
    Arrow,
    Join,
    Meet,
}

impl FiniteMv {
    pub fn chain(k: u32) -> Self {
        Self::from_spec(&AlgebraSpec::Chain(k)).expect("chain within size bound")
    }

    /// The two-element Boolean algebra.
    pub fn boolean() -> Self {
        Self::chain(1)
    }

    pub fn product(factors: &[FiniteMv]) -> Result<Self, MvError> {
        let specs = factors
            .iter()
            .map(|f| f.spec.clone())
            .collect::<Option<Vec<_>>>();
        let size = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.len()))
            .filter(|&n| n <= MAX_FINITE_SIZE)
            .ok_or(MvError::TooLarge(usize::MAX))?;
        let sizes: Vec<usize> = factors.iter().map(FiniteMv::len).collect();
        let split = |mut idx: usize| {
            let mut digits = vec![0; sizes.len()];
            for (slot, &s) in digits.iter_mut().zip(&sizes).rev() {
                *slot = idx % s;
                idx /= s;
            }
            digits
        };
        let join = |digits: &[usize]| digits.iter().zip(&sizes).fold(0, |acc, (&d, &s)| acc * s + d);
        let mut oplus = vec![0; size * size];
        let mut star = vec![0; size];
        let mut labels = Vec::with_capacity(size);
        for a in 0..size {
            let da = split(a);
            let sd: Vec<usize> = da.iter().zip(factors).map(|(&x, f)| f.star_ix(x)).collect();
            star[a] = join(&sd);
            let parts: Vec<&str> = da.iter().zip(factors).map(|(&x, f)| f.label(x)).collect();
            labels.push(format!("({})", parts.join(",")));
            for b in 0..size {
                let db = split(b);
                let sum: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .zip(factors)
                    .map(|((&x, &y), f)| f.oplus_ix(x, y))
                    .collect();
                oplus[a * size + b] = join(&sum);
            }
        }
        let spec = specs.map(AlgebraSpec::Product);
        Ok(Self::assemble(spec, labels, oplus, star, 0))
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self, MvError> {
        match spec {
            AlgebraSpec::UnitInterval => Err(MvError::InfiniteCarrier),
            AlgebraSpec::Chain(k) => {
                let n = *k as usize + 1;
                if n > MAX_FINITE_SIZE {
                    return Err(MvError::TooLarge(n));
                }
                let k = *k as usize;
                let oplus = (0..n * n).map(|c| ((c / n) + (c % n)).min(k)).collect();
                let star = (0..n).map(|i| k - i).collect();
                let labels = (0..n).map(|i| spec.label(i)).collect();
                Ok(Self::assemble(Some(spec.clone()), labels, oplus, star, 0))
            }
            AlgebraSpec::Product(fs) => {
                let size = spec.size().ok_or(MvError::TooLarge(usize::MAX))?;
                if size > MAX_FINITE_SIZE {
                    return Err(MvError::TooLarge(size));
                }
                let factors = fs
                    .iter()
                    .map(FiniteMv::from_spec)
                    .collect::<Result<Vec<_>, _>>()?;
                let mut alg = Self::product(&factors)?;
                alg.spec = Some(spec.clone());
                alg.labels = (0..size).map(|i| spec.label(i)).collect();
                Ok(alg)
            }
        }
    }

    /// Builds an algebra from raw tables without checking any law. Used for
    /// derived structures (quotients, reconstructions) and for mutation tests.
    pub fn from_tables(
        labels: Vec<String>,
        oplus: Vec<usize>,
        star: Vec<usize>,
        zero: usize,
    ) -> Result<Self, MvError> {
        let n = labels.len();
        if n == 0 {
            return Err(MvError::Parse {
                line: 0,
                msg: "empty carrier".into(),
            });
        }
        if n > MAX_FINITE_SIZE {
            return Err(MvError::TooLarge(n));
        }
        if oplus.len() != n * n || star.len() != n {
            return Err(MvError::Parse {
                line: 0,
                msg: format!("table sizes do not match a carrier of {n} elements"),
            });
        }
        if let Some(&bad) = oplus.iter().chain(&star).chain([&zero]).find(|&&v| v >= n) {
            return Err(MvError::OutOfRange(bad, n));
        }
        Ok(Self::assemble(None, labels, oplus, star, zero))
    }

    fn assemble(
        spec: Option<AlgebraSpec>,
        labels: Vec<String>,
        oplus: Vec<usize>,
        star: Vec<usize>,
        zero: usize,
    ) -> Self {
        let mut h = DefaultHasher::new();
        oplus.hash(&mut h);
        star.hash(&mut h);
        zero.hash(&mut h);
        let fingerprint = h.finish();
        Self {
            spec,
            labels,
            oplus,
            star,
            zero,
            fingerprint,
        }
    }

    /// Same carrier with the `⊕` entries at `(a, b)` and `(c, d)` exchanged.
    /// Only the named cells change, so the result is usually not commutative.
    pub fn with_swapped_oplus(&self, (a, b): (usize, usize), (c, d): (usize, usize)) -> Self {
        let n = self.len();
        let mut oplus = self.oplus.clone();
        oplus.swap(a * n + b, c * n + d);
        Self::assemble(None, self.labels.clone(), oplus, self.star.clone(), self.zero)
    }

    pub fn spec(&self) -> Option<&AlgebraSpec> {
        self.spec.as_ref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Decimal rendering when the carrier comes from a spec, otherwise the
    /// stored label.
    pub fn decimal_label(&self, i: usize) -> String {
        match &self.spec {
            Some(spec) => spec.decimal_label(i),
            None => self.labels[i].clone(),
        }
    }

    pub fn index_of(&self, label: &str) -> Result<usize, MvError> {
        let wanted = label.trim();
        self.labels
            .iter()
            .position(|l| l == wanted)
            .ok_or_else(|| MvError::UnknownLabel(wanted.to_string()))
    }

    pub fn oplus_table(&self) -> &[usize] {
        &self.oplus
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn zero_ix(&self) -> usize {
        self.zero
    }

    pub fn one_ix(&self) -> usize {
        self.star[self.zero]
    }

    #[inline]
    pub fn oplus_ix(&self, a: usize, b: usize) -> usize {
        self.oplus[a * self.len() + b]
    }

    #[inline]
    pub fn star_ix(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn derived_ix(&self, op: DerivedOp, a: usize, b: usize) -> usize {
        match op {
            DerivedOp::Odot => self.odot(&a, &b),
            DerivedOp::Ominus => self.ominus(&a, &b),
            DerivedOp::Arrow => self.arrow(&a, &b),
            DerivedOp::Join => self.join(&a, &b),
            DerivedOp::Meet => self.meet(&a, &b),
        }
    }

    /// Tagged handle for element `i`.
    pub fn element(&self, i: usize) -> Result<MvElement, MvError> {
        if i >= self.len() {
            return Err(MvError::OutOfRange(i, self.len()));
        }
        Ok(MvElement {
            algebra: self.fingerprint,
            index: i,
        })
    }

    pub fn element_by_label(&self, label: &str) -> Result<MvElement, MvError> {
        self.element(self.index_of(label)?)
    }

    fn own(&self, e: MvElement) -> Result<usize, MvError> {
        if e.algebra != self.fingerprint || e.index >= self.len() {
            return Err(MvError::ForeignElement);
        }
        Ok(e.index)
    }

    fn wrap(&self, index: usize) -> MvElement {
        MvElement {
            algebra: self.fingerprint,
            index,
        }
    }

    pub fn try_oplus(&self, a: MvElement, b: MvElement) -> Result<MvElement, MvError> {
        Ok(self.wrap(self.oplus_ix(self.own(a)?, self.own(b)?)))
    }

    pub fn try_star(&self, a: MvElement) -> Result<MvElement, MvError> {
        Ok(self.wrap(self.star_ix(self.own(a)?)))
    }

    pub fn try_derived(&self, op: DerivedOp, a: MvElement, b: MvElement) -> Result<MvElement, MvError> {
        Ok(self.wrap(self.derived_ix(op, self.own(a)?, self.own(b)?)))
    }

    pub fn try_leq(&self, a: MvElement, b: MvElement) -> Result<bool, MvError> {
        Ok(self.leq(&self.own(a)?, &self.own(b)?))
    }

    /// Full `⊙` table, row-major.
    pub fn odot_table(&self) -> Vec<usize> {
        let n = self.len();
        (0..n * n).map(|c| self.odot(&(c / n), &(c % n))).collect()
    }

    /// `B(A) = {a | a ⊕ a = a}`.
    pub fn boolean_center(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.oplus_ix(a, a) == a).collect()
    }

    /// The MV-subalgebra on a subset closed under `⊕` and `∗`, relabelled in
    /// the order of `members`.
    pub fn subalgebra(&self, members: &[usize]) -> Result<Self, MvError> {
        let pos = |x: usize| members.iter().position(|&m| m == x);
        let mut oplus = Vec::with_capacity(members.len() * members.len());
        for &a in members {
            for &b in members {
                oplus.push(pos(self.oplus_ix(a, b)).ok_or_else(|| {
                    MvError::NotAnIdeal(format!("{} ⊕ {} leaves the subset", self.label(a), self.label(b)))
                })?);
            }
        }
        let star = members
            .iter()
            .map(|&a| pos(self.star_ix(a)).ok_or_else(|| MvError::NotAnIdeal("not ∗-closed".into())))
            .collect::<Result<Vec<_>, _>>()?;
        let zero = pos(self.zero).ok_or_else(|| MvError::NotAnIdeal("missing 0".into()))?;
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        Self::from_tables(labels, oplus, star, zero)
    }
}

impl MvOps for FiniteMv {
    type Elem = usize;

    fn zero(&self) -> usize {
        self.zero
    }

    fn oplus(&self, a: &usize, b: &usize) -> usize {
        self.oplus_ix(*a, *b)
    }

    fn star(&self, a: &usize) -> usize {
        self.star_ix(*a)
    }

    fn one(&self) -> usize {
        self.one_ix()
    }
}
