use std::collections::{BTreeMap, BTreeSet};

use super::SemimoduleError;
use crate::mv::{DerivedOp, FiniteMv, QuotientAlgebra};
use crate::semiring::SemiringTable;
use crate::util::{decode_digits, encode_digits};

/// A finite semimodule `⟨M, ∨, 0⟩` over an explicit semiring, held as a
/// join table and an action table. The constructor checks the semilattice
/// laws and (SM1)–(SM5).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemimodule {
    ring: SemiringTable,
    labels: Vec<String>,
    join: Vec<usize>,
    zero: usize,
    /// `action[a * len + x] = a · x`
    action: Vec<usize>,
    /// Coordinates in `S^n` when the module is a subsemimodule of a free one.
    vectors: Option<Vec<Vec<usize>>>,
}

impl FiniteSemimodule {
    pub fn new(
        ring: SemiringTable,
        labels: Vec<String>,
        join: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
    ) -> Result<Self, SemimoduleError> {
        let m = Self::unchecked(ring, labels, join, zero, action)?;
        m.check_laws()?;
        Ok(m)
    }

    fn unchecked(
        ring: SemiringTable,
        labels: Vec<String>,
        join: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
    ) -> Result<Self, SemimoduleError> {
        let n = labels.len();
        if n == 0 || join.len() != n * n || action.len() != ring.len() * n || zero >= n {
            return Err(SemimoduleError::Dimension(format!(
                "tables do not fit a carrier of {n} elements"
            )));
        }
        if join.iter().chain(&action).any(|&v| v >= n) {
            return Err(SemimoduleError::Dimension("table entry outside the carrier".into()));
        }
        Ok(Self {
            ring,
            labels,
            join,
            zero,
            action,
            vectors: None,
        })
    }

    fn check_laws(&self) -> Result<(), SemimoduleError> {
        let fail = |law, witness: Vec<usize>| Err(SemimoduleError::LawViolated { law, witness });
        let s = &self.ring;
        for x in self.elements() {
            if self.join_ix(x, x) != x {
                return fail("idempotent join", vec![x]);
            }
            if self.join_ix(x, self.zero) != x {
                return fail("join identity", vec![x]);
            }
            if self.act(s.one(), x) != x {
                return fail("SM5", vec![x]);
            }
            if self.act(s.zero(), x) != self.zero {
                return fail("SM4", vec![x]);
            }
            for y in self.elements() {
                if self.join_ix(x, y) != self.join_ix(y, x) {
                    return fail("join commutative", vec![x, y]);
                }
                for z in self.elements() {
                    if self.join_ix(x, self.join_ix(y, z)) != self.join_ix(self.join_ix(x, y), z) {
                        return fail("join associative", vec![x, y, z]);
                    }
                }
            }
        }
        for a in s.elements() {
            if self.act(a, self.zero) != self.zero {
                return fail("SM4", vec![a]);
            }
            for x in self.elements() {
                for b in s.elements() {
                    if self.act(s.mul_ix(a, b), x) != self.act(a, self.act(b, x)) {
                        return fail("SM1", vec![a, b, x]);
                    }
                    if self.act(s.join_ix(a, b), x) != self.join_ix(self.act(a, x), self.act(b, x)) {
                        return fail("SM3", vec![a, b, x]);
                    }
                }
                for y in self.elements() {
                    if self.act(a, self.join_ix(x, y)) != self.join_ix(self.act(a, x), self.act(a, y)) {
                        return fail("SM2", vec![a, x, y]);
                    }
                }
            }
        }
        Ok(())
    }

    /// `S^n`, coordinates in lexicographic order with the first most significant.
    pub fn free(ring: &SemiringTable, n: usize) -> Result<Self, SemimoduleError> {
        let s = ring.len();
        let size = s
            .checked_pow(n as u32)
            .filter(|&v| v <= 1 << 20)
            .ok_or(SemimoduleError::TooLarge {
                what: "free semimodule",
                size: (s as u128).saturating_pow(n as u32),
                cap: 1 << 20,
            })?;
        let vectors: Vec<Vec<usize>> = (0..size).map(|c| decode_digits(c, s, n)).collect();
        Ok(Self::from_vectors(ring, vectors))
    }

    /// Builds the module on a set of vectors of `S^n` assumed closed under
    /// coordinatewise join and scaling.
    fn from_vectors(ring: &SemiringTable, mut vectors: Vec<Vec<usize>>) -> Self {
        vectors.sort();
        vectors.dedup();
        let index: BTreeMap<&Vec<usize>, usize> = vectors.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let m = vectors.len();
        let mut join = Vec::with_capacity(m * m);
        for x in &vectors {
            for y in &vectors {
                let j: Vec<usize> = x.iter().zip(y).map(|(&a, &b)| ring.join_ix(a, b)).collect();
                join.push(index[&j]);
            }
        }
        let mut action = Vec::with_capacity(ring.len() * m);
        for a in ring.elements() {
            for x in &vectors {
                let ax: Vec<usize> = x.iter().map(|&e| ring.mul_ix(a, e)).collect();
                action.push(index[&ax]);
            }
        }
        let zero_vec = vec![ring.zero(); vectors.first().map_or(0, Vec::len)];
        let zero = index[&zero_vec];
        let labels = vectors
            .iter()
            .map(|v| {
                let parts: Vec<&str> = v.iter().map(|&e| ring.label(e)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        Self {
            ring: ring.clone(),
            labels,
            join,
            zero,
            action,
            vectors: Some(vectors),
        }
    }

    /// The subsemimodule `S · {u_i}` of `S^n` spanned by `rows`.
    pub fn row_space(ring: &SemiringTable, n: usize, rows: &[Vec<usize>]) -> Result<Self, SemimoduleError> {
        Ok(Self::from_vectors(ring, Self::span_vectors(ring, n, rows)?))
    }

    /// Carrier of the row space, sorted: every `⋁ a_i · u_i`, built one row
    /// at a time since `a · u ∨ b · u = (a ∨ b) · u`.
    pub(crate) fn span_vectors(
        ring: &SemiringTable,
        n: usize,
        rows: &[Vec<usize>],
    ) -> Result<Vec<Vec<usize>>, SemimoduleError> {
        if rows.iter().any(|r| r.len() != n || r.iter().any(|&e| e >= ring.len())) {
            return Err(SemimoduleError::Dimension(format!("rows must be vectors of S^{n}")));
        }
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::from([vec![ring.zero(); n]]);
        for r in rows {
            let multiples: BTreeSet<Vec<usize>> = ring
                .elements()
                .map(|a| r.iter().map(|&e| ring.mul_ix(a, e)).collect())
                .collect();
            let mut next = BTreeSet::new();
            for x in &set {
                for m in &multiples {
                    next.insert(x.iter().zip(m).map(|(&a, &b)| ring.join_ix(a, b)).collect::<Vec<usize>>());
                }
            }
            set = next;
        }
        Ok(set.into_iter().collect())
    }

    /// The semiring acting on itself by left multiplication.
    pub fn regular(ring: &SemiringTable) -> Self {
        let n = ring.len();
        let action = (0..ring.len() * n).map(|c| ring.mul_ix(c / n, c % n)).collect();
        Self::new(ring.clone(), ring.labels().to_vec(), ring.join_table().to_vec(), ring.zero(), action)
            .expect("a semiring is a semimodule over itself")
    }

    /// `⟨A, ∨, 0⟩` over `A∨⊙` with `⊙` as scalar multiplication.
    pub fn mv_join(a: &FiniteMv, ring: &SemiringTable) -> Result<Self, SemimoduleError> {
        Self::mv_reduct(a, ring, DerivedOp::Join, DerivedOp::Odot, a.zero_ix())
    }

    /// `⟨A, ∧, 1⟩` over `A∧⊕` with `⊕` as scalar multiplication.
    pub fn mv_meet(a: &FiniteMv, ring: &SemiringTable) -> Result<Self, SemimoduleError> {
        let n = a.len();
        let join = (0..n * n).map(|c| a.derived_ix(DerivedOp::Meet, c / n, c % n)).collect();
        let action = (0..n * n).map(|c| a.oplus_ix(c / n, c % n)).collect();
        Self::new(ring.clone(), a.labels().to_vec(), join, a.one_ix(), action)
    }

    fn mv_reduct(
        a: &FiniteMv,
        ring: &SemiringTable,
        join: DerivedOp,
        act: DerivedOp,
        zero: usize,
    ) -> Result<Self, SemimoduleError> {
        let n = a.len();
        let join = (0..n * n).map(|c| a.derived_ix(join, c / n, c % n)).collect();
        let action = (0..n * n).map(|c| a.derived_ix(act, c / n, c % n)).collect();
        Self::new(ring.clone(), a.labels().to_vec(), join, zero, action)
    }

    /// Semilattice reduct of `A/I` with `(a, x/I) ↦ (a ⊙ x)/I`.
    pub fn mv_quotient(a: &FiniteMv, q: &QuotientAlgebra, ring: &SemiringTable) -> Result<Self, SemimoduleError> {
        let qa = q.algebra();
        let m = qa.len();
        let join = (0..m * m).map(|c| qa.derived_ix(DerivedOp::Join, c / m, c % m)).collect();
        let mut action = Vec::with_capacity(a.len() * m);
        for s in a.elements() {
            for &rep in q.representatives() {
                action.push(q.class_of(a.derived_ix(DerivedOp::Odot, s, rep)));
            }
        }
        Self::new(ring.clone(), qa.labels().to_vec(), join, qa.zero_ix(), action)
    }

    /// The subsemimodule on `members`, which must contain 0 and be closed.
    pub fn submodule(&self, members: &[usize]) -> Result<Self, SemimoduleError> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let pos = |x: usize| members.binary_search(&x).ok();
        if pos(self.zero).is_none() {
            return Err(SemimoduleError::NotClosed("missing 0".into()));
        }
        let mut join = Vec::with_capacity(members.len() * members.len());
        for &x in &members {
            for &y in &members {
                join.push(pos(self.join_ix(x, y)).ok_or_else(|| {
                    SemimoduleError::NotClosed(format!("{} ∨ {}", self.label(x), self.label(y)))
                })?);
            }
        }
        let mut action = Vec::with_capacity(self.ring.len() * members.len());
        for a in self.ring.elements() {
            for &x in &members {
                action.push(pos(self.act(a, x)).ok_or_else(|| {
                    SemimoduleError::NotClosed(format!("{} · {}", self.ring.label(a), self.label(x)))
                })?);
            }
        }
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        let zero = pos(self.zero).expect("checked above");
        let mut sub = Self::unchecked(self.ring.clone(), labels, join, zero, action)?;
        sub.vectors = self
            .vectors
            .as_ref()
            .map(|vs| members.iter().map(|&x| vs[x].clone()).collect());
        Ok(sub)
    }

    /// `M ⊕ N`, carrier pairs in lexicographic order.
    pub fn direct_sum(&self, other: &FiniteSemimodule) -> Result<Self, SemimoduleError> {
        if self.ring != other.ring {
            return Err(SemimoduleError::RingMismatch);
        }
        let (n, m) = (self.len(), other.len());
        let size = n * m;
        let mut join = Vec::with_capacity(size * size);
        for p in 0..size {
            for q in 0..size {
                join.push(self.join_ix(p / m, q / m) * m + other.join_ix(p % m, q % m));
            }
        }
        let mut action = Vec::with_capacity(self.ring.len() * size);
        for a in self.ring.elements() {
            for p in 0..size {
                action.push(self.act(a, p / m) * m + other.act(a, p % m));
            }
        }
        let labels = (0..size)
            .map(|p| format!("({};{})", self.label(p / m), other.label(p % m)))
            .collect();
        let mut sum = Self::unchecked(self.ring.clone(), labels, join, self.zero * m + other.zero, action)?;
        if let (Some(a), Some(b)) = (&self.vectors, &other.vectors) {
            sum.vectors = Some((0..size).map(|p| [a[p / m].clone(), b[p % m].clone()].concat()).collect());
        }
        Ok(sum)
    }

    /// Same tables with the scalars replaced through `action(a, x)`.
    pub(crate) fn with_ring(&self, ring: SemiringTable, action: Vec<usize>) -> Result<Self, SemimoduleError> {
        let mut m = Self::new(ring, self.labels.clone(), self.join.clone(), self.zero, action)?;
        m.vectors = self.vectors.clone();
        Ok(m)
    }

    pub fn ring(&self) -> &SemiringTable {
        &self.ring
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

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        let label = label.trim();
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn join_ix(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    /// `a · x`
    #[inline]
    pub fn act(&self, a: usize, x: usize) -> usize {
        self.action[a * self.len() + x]
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.join_ix(acc, x))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join_ix(x, y) == y
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    pub fn vectors(&self) -> Option<&[Vec<usize>]> {
        self.vectors.as_deref()
    }

    /// Index of a coordinate vector in a module that carries coordinates.
    pub fn index_of_vector(&self, v: &[usize]) -> Option<usize> {
        let vs = self.vectors.as_ref()?;
        vs.binary_search_by(|w| w.as_slice().cmp(v)).ok()
    }

    /// Coordinate length of a submodule of a free module.
    pub fn rank(&self) -> Option<usize> {
        self.vectors.as_ref().and_then(|v| v.first()).map(Vec::len)
    }

    /// Index of `χ_x` in a free module.
    pub fn chi(&self, x: usize) -> Option<usize> {
        let n = self.rank()?;
        let mut v = vec![self.ring.zero(); n];
        v[x] = self.ring.one();
        self.index_of_vector(&v)
    }

    /// Smallest subset containing 0 and `seed`, closed under join and action.
    pub fn span(&self, seed: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.zero]);
        for &x in seed {
            for a in self.ring.elements() {
                set.insert(self.act(a, x));
            }
        }
        loop {
            let current: Vec<usize> = set.iter().copied().collect();
            let before = set.len();
            for &x in &current {
                for &y in &current {
                    set.insert(self.join_ix(x, y));
                }
            }
            if set.len() == before {
                return current;
            }
        }
    }

    /// Index of a vector built by `encode_digits` order in a free module.
    pub(crate) fn free_index(&self, v: &[usize]) -> usize {
        encode_digits(v, self.ring.len())
    }
}
