use super::{KTheoryError, ProjectiveMonoid};
use crate::mv::MvHom;
use crate::semimodule::{find_isomorphism, projective_presentation, FiniteSemimodule, Matrix};

/// The map `[A · (u_ij)] ↦ [B · (f(u_ij))]` on enumerated classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMap {
    pub map: Vec<usize>,
}

impl ClassMap {
    pub fn identity(monoid: &ProjectiveMonoid) -> Self {
        Self {
            map: (0..monoid.len()).collect(),
        }
    }

    pub fn apply(&self, class: usize) -> usize {
        self.map[class]
    }

    /// `then ∘ self`
    pub fn then(&self, then: &ClassMap) -> ClassMap {
        ClassMap {
            map: self.map.iter().map(|&c| then.map[c]).collect(),
        }
    }

    pub fn apply_k0(&self, e: &super::K0Element) -> super::K0Element {
        let mut pos: Vec<usize> = e.pos.iter().map(|&c| self.map[c]).collect();
        let mut neg: Vec<usize> = e.neg.iter().map(|&c| self.map[c]).collect();
        pos.sort_unstable();
        neg.sort_unstable();
        super::K0Element { pos, neg }
    }

    /// `f̂([{0}]) = [{0}]` and `f̂(i ⊕ j) = f̂(i) ⊕ f̂(j)` wherever both sums
    /// are enumerated.
    pub fn is_monoid_morphism(&self, source: &ProjectiveMonoid, target: &ProjectiveMonoid) -> bool {
        if self.map[source.zero_class()] != target.zero_class() {
            return false;
        }
        (0..source.len()).all(|i| {
            (0..source.len()).all(|j| match source.sum(i, j) {
                Some(s) => target
                    .sum(self.map[i], self.map[j])
                    .is_none_or(|t| t == self.map[s]),
                None => true,
            })
        })
    }
}

fn image_matrix(f: &MvHom, u: &Matrix) -> Matrix {
    let entries = u.entries().iter().map(|&e| f.apply(e)).collect();
    Matrix::new(u.rows(), u.cols(), entries).expect("same shape")
}

/// The class map induced by `f : A → B`, with `source` and `target` the
/// enumerated monoids of the reducts `A∨⊙` and `B∨⊙`. Every enumerated
/// idempotent matrix is pushed forward, so image idempotency and
/// well-definedness are checked on all of them.
pub fn k0_map(f: &MvHom, source: &ProjectiveMonoid, target: &ProjectiveMonoid) -> Result<ClassMap, KTheoryError> {
    if f.source_len() != source.ring().len() || f.target_len() != target.ring().len() {
        return Err(KTheoryError::NotAHomomorphism("carrier sizes differ".into()));
    }
    let mut map: Vec<Option<usize>> = vec![None; source.len()];
    let mut members: Vec<(&Matrix, usize)> = source.members().collect();
    members.sort();
    for (u, class) in members {
        let image = image_matrix(f, u);
        if !image.is_idempotent(target.ring()) {
            return Err(KTheoryError::ImageNotIdempotent(image.display(target.ring())));
        }
        let t = target.class_of_matrix(&image)?.ok_or(KTheoryError::Unclassified(class))?;
        match map[class] {
            None => map[class] = Some(t),
            Some(prev) if prev != t => return Err(KTheoryError::NotWellDefined(class)),
            Some(_) => {}
        }
    }
    Ok(ClassMap {
        map: map.into_iter().map(|c| c.expect("every class has a member")).collect(),
    })
}

/// Comparison of mutual linear expressibility of generator rows with the
/// semimodule isomorphism oracle, over pairs of equal-dimension matrices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExpressibilityReport {
    pub pairs: usize,
    pub expressible: usize,
    pub isomorphic: usize,
    /// Expressible yet not isomorphic; a nonzero count is a soundness failure.
    pub expressible_not_isomorphic: usize,
    /// Isomorphic without being expressible.
    pub isomorphic_not_expressible: usize,
}

/// Rows of `u` and `v` generate each other iff their row spaces coincide
/// as subsets of `S^n`.
pub fn mutual_expressibility(monoid: &ProjectiveMonoid) -> ExpressibilityReport {
    let ring = monoid.ring();
    let mut members: Vec<(&Matrix, usize)> = monoid.members().collect();
    members.sort();
    let spaces: Vec<FiniteSemimodule> = members
        .iter()
        .map(|(u, _)| projective_presentation(ring, u).expect("enumerated matrices are idempotent"))
        .collect();
    let mut report = ExpressibilityReport::default();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if members[i].0.rows() != members[j].0.rows() {
                continue;
            }
            report.pairs += 1;
            let expressible = spaces[i].vectors() == spaces[j].vectors();
            let iso = members[i].1 == members[j].1;
            debug_assert_eq!(iso, find_isomorphism(&spaces[i], &spaces[j]).is_some());
            report.expressible += usize::from(expressible);
            report.isomorphic += usize::from(iso);
            if expressible && !iso {
                report.expressible_not_isomorphic += 1;
            }
            if iso && !expressible {
                report.isomorphic_not_expressible += 1;
            }
        }
    }
    report
}
