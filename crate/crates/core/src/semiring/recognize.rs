use std::fmt;

use super::{SemiringError, SemiringTable};
use crate::mv::{check_axioms, FiniteMv};

/// Why a semiring was refused as an MV-semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refusal {
    NotCommutative,
    /// No candidate value for `a∗` satisfies `ab = 0 ⟺ b ≤ a∗`.
    NoNegation { element: usize },
    /// Every map passing the annihilator test breaks `a ∨ b = (a∗ · (a∗ · b)∗)∗`; the pair is
    /// the first failure of the last candidate, in row-major order.
    JoinLawFails { star: Vec<usize>, a: usize, b: usize },
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::NotCommutative => f.write_str("multiplication is not commutative"),
            Refusal::NoNegation { element } => {
                write!(f, "no value for the negation of element {element} satisfies `ab = 0 ⟺ b ≤ a∗`")
            }
            Refusal::JoinLawFails { a, b, .. } => {
                write!(f, "the annihilator test allows a negation but the join law fails at ({a}, {b})")
            }
        }
    }
}

fn join_law_witness(s: &SemiringTable, star: &[usize]) -> Option<(usize, usize)> {
    for a in s.elements() {
        for b in s.elements() {
            let inner = star[s.mul_ix(star[a], b)];
            if s.join_ix(a, b) != star[s.mul_ix(star[a], inner)] {
                return Some((a, b));
            }
        }
    }
    None
}

/// Searches for a negation `∗` making `s` an MV-semiring.
///
/// The annihilator test `ab = 0 ⟺ b ≤ a∗` pins each `a∗` down to the largest
/// `c` whose product with `a` vanishes, so the candidate sets are filtered
/// first and the product of the survivors is scanned for the join law. The first map found in lexicographic
/// order is returned.
pub fn recognize_mv_semiring(s: &SemiringTable) -> Result<Vec<usize>, Refusal> {
    if !s.is_commutative() {
        return Err(Refusal::NotCommutative);
    }
    let zero = s.zero();
    let mut candidates = Vec::with_capacity(s.len());
    for a in s.elements() {
        let options: Vec<usize> = s
            .elements()
            .filter(|&c| s.elements().all(|b| (s.mul_ix(a, b) == zero) == s.leq(b, c)))
            .collect();
        if options.is_empty() {
            return Err(Refusal::NoNegation { element: a });
        }
        candidates.push(options);
    }
    let mut choice = vec![0usize; s.len()];
    loop {
        let star: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        let Some((a, b)) = join_law_witness(s, &star) else {
            return Ok(star);
        };
        let mut pos = s.len();
        loop {
            if pos == 0 {
                return Err(Refusal::JoinLawFails { star, a, b });
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// `⟨S, ⊕, ∗, 0⟩` with `a ⊕ b = (a∗ · b∗)∗`, checked against the MV axioms.
pub fn reconstruct_mv(s: &SemiringTable, star: &[usize]) -> Result<FiniteMv, SemiringError> {
    let n = s.len();
    if star.len() != n || star.iter().any(|&v| v >= n) {
        return Err(SemiringError::Shape(n));
    }
    let oplus = (0..n * n)
        .map(|c| star[s.mul_ix(star[c / n], star[c % n])])
        .collect();
    let alg = FiniteMv::from_tables(s.labels().to_vec(), oplus, star.to_vec(), s.zero())?;
    let elems: Vec<usize> = alg.elements().collect();
    let report = check_axioms(&alg, &elems);
    if let Some(fail) = report.failures().next() {
        return Err(SemiringError::LawViolated {
            law: fail.law.name(),
            witness: fail.witness.clone().unwrap_or_default(),
        });
    }
    Ok(alg)
}
