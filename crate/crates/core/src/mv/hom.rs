use super::{FiniteMv, MvError, MvOps};

/// A verified MV-homomorphism between finite algebras: preserves `⊕`, `∗`
/// and `0` on every input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvHom {
    map: Vec<usize>,
    source_len: usize,
    target_len: usize,
}

impl MvHom {
    pub fn new(source: &FiniteMv, target: &FiniteMv, map: Vec<usize>) -> Result<Self, MvError> {
        if map.len() != source.len() {
            return Err(MvError::NotAHomomorphism(format!(
                "map has {} entries for a carrier of {}",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.len()) {
            return Err(MvError::OutOfRange(bad, target.len()));
        }
        if map[source.zero_ix()] != target.zero_ix() {
            return Err(MvError::NotAHomomorphism("0 is not preserved".into()));
        }
        for a in source.elements() {
            if map[source.star_ix(a)] != target.star_ix(map[a]) {
                return Err(MvError::NotAHomomorphism(format!(
                    "∗ fails at {}",
                    source.label(a)
                )));
            }
            for b in source.elements() {
                if map[source.oplus_ix(a, b)] != target.oplus_ix(map[a], map[b]) {
                    return Err(MvError::NotAHomomorphism(format!(
                        "⊕ fails at ({}, {})",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        Ok(Self {
            map,
            source_len: source.len(),
            target_len: target.len(),
        })
    }

    pub fn identity(alg: &FiniteMv) -> Self {
        Self {
            map: alg.elements().collect(),
            source_len: alg.len(),
            target_len: alg.len(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    /// `then ∘ self`
    pub fn then(&self, then: &MvHom) -> Result<MvHom, MvError> {
        if self.target_len != then.source_len {
            return Err(MvError::NotAHomomorphism("composition domains differ".into()));
        }
        Ok(MvHom {
            map: self.map.iter().map(|&a| then.map[a]).collect(),
            source_len: self.source_len,
            target_len: then.target_len,
        })
    }
}

/// Brute-force search for an MV-isomorphism `a → b`, first in canonical order.
pub fn find_isomorphism(a: &FiniteMv, b: &FiniteMv) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero_ix()] = b.zero_ix();
    used[b.zero_ix()] = true;
    if !consistent(a, b, &map) {
        return None;
    }
    search(a, b, &mut map, &mut used).then_some(map)
}

fn search(a: &FiniteMv, b: &FiniteMv, map: &mut [usize], used: &mut [bool]) -> bool {
    let Some(x) = map.iter().position(|&v| v == usize::MAX) else {
        return true;
    };
    for y in 0..b.len() {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map) && search(a, b, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

fn consistent(a: &FiniteMv, b: &FiniteMv, map: &[usize]) -> bool {
    let assigned = |x: usize| map[x] != usize::MAX;
    for x in a.elements().filter(|&x| assigned(x)) {
        let sx = a.star_ix(x);
        if assigned(sx) && map[sx] != b.star_ix(map[x]) {
            return false;
        }
        for y in a.elements().filter(|&y| assigned(y)) {
            let s = a.oplus(&x, &y);
            if assigned(s) && map[s] != b.oplus_ix(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}
