use super::{FiniteSemimodule, Matrix, SemimoduleError};

/// Upper bound on the number of homomorphisms an enumeration may return.
pub const HOM_ENUMERATION_CAP: usize = 1_000_000;

const UNSET: usize = usize::MAX;

/// A verified semimodule homomorphism between two finite semimodules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemimoduleHom {
    map: Vec<usize>,
}

impl SemimoduleHom {
    pub fn new(source: &FiniteSemimodule, target: &FiniteSemimodule, map: Vec<usize>) -> Result<Self, SemimoduleError> {
        if source.ring() != target.ring() {
            return Err(SemimoduleError::RingMismatch);
        }
        let bad = |msg: String| Err(SemimoduleError::NotAHomomorphism(msg));
        if map.len() != source.len() || map.iter().any(|&v| v >= target.len()) {
            return bad("map does not fit the carriers".into());
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.join_ix(x, y)] != target.join_ix(map[x], map[y]) {
                    return bad(format!("join fails at ({}, {})", source.label(x), source.label(y)));
                }
            }
            for a in source.ring().elements() {
                if map[source.act(a, x)] != target.act(a, map[x]) {
                    return bad(format!(
                        "scalar {} fails at {}",
                        source.ring().label(a),
                        source.label(x)
                    ));
                }
            }
        }
        Ok(Self { map })
    }

    pub(crate) fn unchecked(map: Vec<usize>) -> Self {
        Self { map }
    }

    pub fn identity(m: &FiniteSemimodule) -> Self {
        Self {
            map: m.elements().collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `then ∘ self`
    pub fn then(&self, then: &SemimoduleHom) -> SemimoduleHom {
        SemimoduleHom {
            map: self.map.iter().map(|&x| then.map[x]).collect(),
        }
    }

    /// Pointwise join of two maps into `target`.
    pub fn join(&self, other: &SemimoduleHom, target: &FiniteSemimodule) -> SemimoduleHom {
        SemimoduleHom {
            map: self
                .map
                .iter()
                .zip(&other.map)
                .map(|(&x, &y)| target.join_ix(x, y))
                .collect(),
        }
    }

    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }
}

/// Isomorphism-invariant data of `x`: sizes of its down- and up-set and
/// which scalars fix it or kill it.
pub(crate) fn signature(m: &FiniteSemimodule, x: usize) -> Vec<usize> {
    let ring = m.ring();
    let mut sig = vec![
        m.elements().filter(|&y| m.leq(y, x)).count(),
        m.elements().filter(|&y| m.leq(x, y)).count(),
    ];
    sig.extend(ring.elements().map(|a| usize::from(m.act(a, x) == x)));
    sig.extend(ring.elements().map(|a| usize::from(m.act(a, x) == m.zero())));
    sig
}

/// Sorted signatures of all elements; equal for isomorphic modules.
pub(crate) fn invariant(m: &FiniteSemimodule) -> Vec<Vec<usize>> {
    let mut sigs: Vec<Vec<usize>> = m.elements().map(|x| signature(m, x)).collect();
    sigs.sort();
    sigs
}

struct Search<'a> {
    m: &'a FiniteSemimodule,
    n: &'a FiniteSemimodule,
    assign: Vec<usize>,
    used: Vec<bool>,
    injective: bool,
    /// Signature class per element, only filled for isomorphism searches.
    class_m: Vec<usize>,
    class_n: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl Search<'_> {
    fn set(&mut self, x: usize, v: usize) -> bool {
        let cur = self.assign[x];
        if cur != UNSET {
            return cur == v;
        }
        if self.injective && (self.used[v] || self.class_m[x] != self.class_n[v]) {
            return false;
        }
        self.assign[x] = v;
        self.used[v] = true;
        self.trail.push(x);
        self.queue.push(x);
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail entry");
            self.used[self.assign[x]] = false;
            self.assign[x] = UNSET;
        }
    }

    /// Forces every value implied by join and scalar preservation.
    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            let hx = self.assign[x];
            for a in self.m.ring().elements() {
                if !self.set(self.m.act(a, x), self.n.act(a, hx)) {
                    self.queue.clear();
                    return false;
                }
            }
            for y in self.m.elements() {
                let hy = self.assign[y];
                if hy == UNSET {
                    continue;
                }
                if !self.set(self.m.join_ix(x, y), self.n.join_ix(hx, hy)) {
                    self.queue.clear();
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, out: &mut Vec<SemimoduleHom>, limit: usize) -> Result<bool, SemimoduleError> {
        let Some(x) = (0..self.m.len()).find(|&x| self.assign[x] == UNSET) else {
            if out.len() >= limit {
                return Err(SemimoduleError::TooLarge {
                    what: "homomorphism enumeration",
                    size: limit as u128 + 1,
                    cap: limit as u128,
                });
            }
            out.push(SemimoduleHom::unchecked(self.assign.clone()));
            return Ok(true);
        };
        for v in self.n.elements() {
            let mark = self.trail.len();
            if self.set(x, v) && self.propagate() {
                let found = self.run(out, limit)?;
                if found && self.injective {
                    return Ok(true);
                }
            }
            self.undo(mark);
        }
        Ok(false)
    }
}

fn search(
    m: &FiniteSemimodule,
    n: &FiniteSemimodule,
    injective: bool,
    limit: usize,
) -> Result<Vec<SemimoduleHom>, SemimoduleError> {
    if m.ring() != n.ring() {
        return Err(SemimoduleError::RingMismatch);
    }
    let (mut class_m, mut class_n) = (Vec::new(), Vec::new());
    if injective {
        let mut ids = std::collections::HashMap::new();
        let mut id_of = |sig: Vec<usize>| {
            let next = ids.len();
            *ids.entry(sig).or_insert(next)
        };
        class_m = m.elements().map(|x| id_of(signature(m, x))).collect();
        class_n = n.elements().map(|x| id_of(signature(n, x))).collect();
        let (mut a, mut b) = (class_m.clone(), class_n.clone());
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(Vec::new());
        }
    }
    let mut s = Search {
        m,
        n,
        assign: vec![UNSET; m.len()],
        used: vec![false; n.len()],
        injective,
        class_m,
        class_n,
        trail: Vec::new(),
        queue: Vec::new(),
    };
    let mut out = Vec::new();
    if s.set(m.zero(), n.zero()) && s.propagate() {
        s.run(&mut out, limit)?;
    }
    Ok(out)
}

/// Every homomorphism `M → N` in lexicographic order of the value tables,
/// by backtracking with join and scalar propagation.
pub fn enumerate_homs(
    m: &FiniteSemimodule,
    n: &FiniteSemimodule,
    cap: usize,
) -> Result<Vec<SemimoduleHom>, SemimoduleError> {
    search(m, n, false, cap)
}

/// A semimodule isomorphism `M → N`, if one exists.
pub fn find_isomorphism(m: &FiniteSemimodule, n: &FiniteSemimodule) -> Option<SemimoduleHom> {
    if m.len() != n.len() {
        return None;
    }
    search(m, n, true, 1).ok()?.into_iter().next()
}

fn free_rank(m: &FiniteSemimodule) -> Result<usize, SemimoduleError> {
    let n = m.rank().unwrap_or(0);
    if m.vectors().is_none() || m.len() != m.ring().len().pow(n as u32) {
        return Err(SemimoduleError::Dimension("expected a free semimodule S^n".into()));
    }
    Ok(n)
}

/// `h_k(f) = ⋁_x f(x) k(x, _)` as a map `S^m → S^n`.
pub fn hom_from_matrix(
    source: &FiniteSemimodule,
    target: &FiniteSemimodule,
    k: &Matrix,
) -> Result<SemimoduleHom, SemimoduleError> {
    let (m, n) = (free_rank(source)?, free_rank(target)?);
    if (k.rows(), k.cols()) != (m, n) {
        return Err(SemimoduleError::Dimension(format!(
            "a {}×{} matrix cannot act S^{m} → S^{n}",
            k.rows(),
            k.cols()
        )));
    }
    let ring = source.ring();
    let vectors = source.vectors().expect("free module has coordinates");
    let map = vectors
        .iter()
        .map(|f| {
            let y = k.apply_row(f, ring)?;
            Ok(target.free_index(&y))
        })
        .collect::<Result<Vec<_>, SemimoduleError>>()?;
    Ok(SemimoduleHom::unchecked(map))
}

/// `k(x, y) = h(χ_x)(y)`.
pub fn matrix_from_hom(
    source: &FiniteSemimodule,
    target: &FiniteSemimodule,
    h: &SemimoduleHom,
) -> Result<Matrix, SemimoduleError> {
    let (m, n) = (free_rank(source)?, free_rank(target)?);
    let tv = target.vectors().expect("free module has coordinates");
    let mut entries = Vec::with_capacity(m * n);
    for x in 0..m {
        let chi = source.chi(x).expect("χ_x lies in S^m");
        entries.extend_from_slice(&tv[h.apply(chi)]);
    }
    Matrix::new(m, n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::FiniteMv;
    use crate::semiring::{reducts, SemiringTable};

    #[test]
    fn boolean_endomorphisms_of_square() {
        let b = SemiringTable::boolean();
        let f2 = FiniteSemimodule::free(&b, 2).unwrap();
        let homs = enumerate_homs(&f2, &f2, HOM_ENUMERATION_CAP).unwrap();
        assert_eq!(homs.len(), 16);
        for h in &homs {
            assert!(SemimoduleHom::new(&f2, &f2, h.map().to_vec()).is_ok());
            let k = matrix_from_hom(&f2, &f2, h).unwrap();
            assert_eq!(&hom_from_matrix(&f2, &f2, &k).unwrap(), h);
        }
    }

    #[test]
    fn identity_matrix_gives_identity() {
        let s = reducts(&FiniteMv::chain(2)).unwrap().join_odot;
        let f2 = FiniteSemimodule::free(&s, 2).unwrap();
        let id = hom_from_matrix(&f2, &f2, &Matrix::identity(&s, 2)).unwrap();
        assert_eq!(id, SemimoduleHom::identity(&f2));
        let k = Matrix::from_rows(&[vec![2, 0], vec![2, 0]]).unwrap();
        let h = hom_from_matrix(&f2, &f2, &k).unwrap();
        let x = f2.index_of_vector(&[1, 2]).unwrap();
        assert_eq!(f2.vectors().unwrap()[h.apply(x)], vec![2, 0]);
    }

    #[test]
    fn isomorphism_search() {
        let b = SemiringTable::boolean();
        let f2 = FiniteSemimodule::free(&b, 2).unwrap();
        let f1 = FiniteSemimodule::free(&b, 1).unwrap();
        let sum = f1.direct_sum(&f1).unwrap();
        assert!(find_isomorphism(&f2, &sum).is_some());
        let chain3 = FiniteSemimodule::row_space(&b, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let other = FiniteSemimodule::row_space(&b, 2, &[vec![1, 0], vec![1, 1]]).unwrap();
        assert!(find_isomorphism(&chain3, &other).is_some());
        assert!(find_isomorphism(&chain3, &f2).is_none());
    }

    #[test]
    fn non_hom_rejected() {
        let b = SemiringTable::boolean();
        let f1 = FiniteSemimodule::free(&b, 1).unwrap();
        assert!(SemimoduleHom::new(&f1, &f1, vec![1, 1]).is_err());
        assert!(SemimoduleHom::new(&f1, &f1, vec![0, 0]).is_ok());
    }
}
