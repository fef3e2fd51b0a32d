use super::SemiringError;

/// An explicit finite semiring `⟨S, ∨, ·, 0, 1⟩` with idempotent `∨`.
///
/// The constructor checks (S1)–(S4) exhaustively, so every value of this type
/// is a semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringTable {
    labels: Vec<String>,
    join: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl SemiringTable {
    pub fn new(
        labels: Vec<String>,
        join: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self, SemiringError> {
        let n = labels.len();
        if n == 0 || join.len() != n * n || mul.len() != n * n || zero >= n || one >= n {
            return Err(SemiringError::Shape(n));
        }
        if join.iter().chain(&mul).any(|&v| v >= n) {
            return Err(SemiringError::Shape(n));
        }
        let s = Self {
            labels,
            join,
            mul,
            zero,
            one,
        };
        s.check_laws()?;
        Ok(s)
    }

    fn check_laws(&self) -> Result<(), SemiringError> {
        let n = self.len();
        let fail = |law, witness: Vec<usize>| Err(SemiringError::LawViolated { law, witness });
        for a in 0..n {
            if self.join_ix(a, a) != a {
                return fail("S1 (idempotent join)", vec![a]);
            }
            if self.join_ix(a, self.zero) != a {
                return fail("S1 (join identity)", vec![a]);
            }
            if self.mul_ix(a, self.one) != a || self.mul_ix(self.one, a) != a {
                return fail("S2 (unit)", vec![a]);
            }
            if self.mul_ix(a, self.zero) != self.zero || self.mul_ix(self.zero, a) != self.zero {
                return fail("S4 (zero absorbs)", vec![a]);
            }
            for b in 0..n {
                if self.join_ix(a, b) != self.join_ix(b, a) {
                    return fail("S1 (join commutative)", vec![a, b]);
                }
                for c in 0..n {
                    if self.join_ix(a, self.join_ix(b, c)) != self.join_ix(self.join_ix(a, b), c) {
                        return fail("S1 (join associative)", vec![a, b, c]);
                    }
                    if self.mul_ix(a, self.mul_ix(b, c)) != self.mul_ix(self.mul_ix(a, b), c) {
                        return fail("S2 (associative)", vec![a, b, c]);
                    }
                    if self.mul_ix(a, self.join_ix(b, c)) != self.join_ix(self.mul_ix(a, b), self.mul_ix(a, c)) {
                        return fail("S3 (left distributive)", vec![a, b, c]);
                    }
                    if self.mul_ix(self.join_ix(b, c), a) != self.join_ix(self.mul_ix(b, a), self.mul_ix(c, a)) {
                        return fail("S3 (right distributive)", vec![a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }

    /// The two-element Boolean semiring `{0, 1}`.
    pub fn boolean() -> Self {
        Self::new(
            vec!["0".into(), "1".into()],
            vec![0, 1, 1, 1],
            vec![0, 0, 0, 1],
            0,
            1,
        )
        .expect("Boolean semiring")
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

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label.trim())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn join_ix(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    #[inline]
    pub fn mul_ix(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    /// Natural order: `a ≤ b` iff `a ∨ b = b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join_ix(a, b) == b
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul_ix(a, b) == self.mul_ix(b, a)))
    }

    /// Join of a sequence, `0` for the empty one.
    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |acc, x| self.join_ix(acc, x))
    }

    /// Direct product semiring, carrier in lexicographic order.
    pub fn product(&self, other: &SemiringTable) -> SemiringTable {
        let (n, m) = (self.len(), other.len());
        let size = n * m;
        let split = |i: usize| (i / m, i % m);
        let mut join = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            let (a1, a2) = split(a);
            for b in 0..size {
                let (b1, b2) = split(b);
                join[a * size + b] = self.join_ix(a1, b1) * m + other.join_ix(a2, b2);
                mul[a * size + b] = self.mul_ix(a1, b1) * m + other.mul_ix(a2, b2);
            }
        }
        let labels = (0..size)
            .map(|i| {
                let (x, y) = split(i);
                format!("({},{})", self.label(x), other.label(y))
            })
            .collect();
        SemiringTable::new(
            labels,
            join,
            mul,
            self.zero * m + other.zero,
            self.one * m + other.one,
        )
        .expect("product of semirings is a semiring")
    }
}

/// A verified semiring homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringHom {
    map: Vec<usize>,
    target_len: usize,
}

impl SemiringHom {
    pub fn new(source: &SemiringTable, target: &SemiringTable, map: Vec<usize>) -> Result<Self, SemiringError> {
        let bad = |msg: String| Err(SemiringError::NotAHomomorphism(msg));
        if map.len() != source.len() || map.iter().any(|&v| v >= target.len()) {
            return bad("map does not fit the carriers".into());
        }
        if map[source.zero()] != target.zero() {
            return bad("0 is not preserved".into());
        }
        if map[source.one()] != target.one() {
            return bad("1 is not preserved".into());
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.join_ix(a, b)] != target.join_ix(map[a], map[b]) {
                    return bad(format!("∨ fails at ({}, {})", source.label(a), source.label(b)));
                }
                if map[source.mul_ix(a, b)] != target.mul_ix(map[a], map[b]) {
                    return bad(format!("· fails at ({}, {})", source.label(a), source.label(b)));
                }
            }
        }
        Ok(Self {
            map,
            target_len: target.len(),
        })
    }

    pub fn identity(s: &SemiringTable) -> Self {
        Self {
            map: s.elements().collect(),
            target_len: s.len(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.target_len];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}
