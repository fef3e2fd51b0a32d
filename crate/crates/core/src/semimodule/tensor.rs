use std::collections::{BTreeSet, HashMap};

use super::{FiniteSemimodule, SemimoduleError};

/// Largest `|M × N|` accepted; subsets of `M × N` are held as `u64` masks.
pub const TENSOR_PAIR_CAP: usize = 64;

/// Bimorphism and hom enumerations into the two-element semilattice are
/// exhaustive over `2^k` maps and are refused above this `k`.
const UNIVERSAL_CHECK_CAP: usize = 20;

/// `M ⊗_S N` with the canonical map `(x, y) ↦ x ⊗ y`.
///
/// Each element is a class of finite subsets of `M × N`, represented by the
/// largest subset in its class. These are exactly the subsets closed under
/// the implications `A ⊆ X ⟹ B ⊆ X` and `B ⊆ X ⟹ A ⊆ X` for each generating
/// pair `(A, B)`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    module: FiniteSemimodule,
    left_len: usize,
    right_len: usize,
    /// `canonical[x * |N| + y]` is the index of `x ⊗ y`.
    canonical: Vec<usize>,
    masks: Vec<u64>,
}

struct Closure {
    rules: Vec<(u64, u64)>,
}

impl Closure {
    fn close(&self, mut x: u64) -> u64 {
        loop {
            let before = x;
            for &(a, b) in &self.rules {
                if a & x == a {
                    x |= b;
                }
                if b & x == b {
                    x |= a;
                }
            }
            if x == before {
                return x;
            }
        }
    }
}

/// Builds `M ⊗ N` as a quotient of the free semilattice on `M × N`.
pub fn tensor_product(m: &FiniteSemimodule, n: &FiniteSemimodule) -> Result<TensorProduct, SemimoduleError> {
    if m.ring() != n.ring() {
        return Err(SemimoduleError::RingMismatch);
    }
    let ring = m.ring();
    let (lm, ln) = (m.len(), n.len());
    let pairs = lm * ln;
    if pairs > TENSOR_PAIR_CAP {
        return Err(SemimoduleError::TooLarge {
            what: "tensor product pairs",
            size: pairs as u128,
            cap: TENSOR_PAIR_CAP as u128,
        });
    }
    let bit = |x: usize, y: usize| 1u64 << (x * ln + y);
    let mut rules = Vec::new();
    for y in n.elements() {
        rules.push((0, bit(m.zero(), y)));
        for x1 in m.elements() {
            for x2 in m.elements() {
                rules.push((bit(m.join_ix(x1, x2), y), bit(x1, y) | bit(x2, y)));
            }
        }
    }
    for x in m.elements() {
        rules.push((0, bit(x, n.zero())));
        for y1 in n.elements() {
            for y2 in n.elements() {
                rules.push((bit(x, n.join_ix(y1, y2)), bit(x, y1) | bit(x, y2)));
            }
        }
    }
    for a in ring.elements() {
        for x in m.elements() {
            for y in n.elements() {
                rules.push((bit(m.act(a, x), y), bit(x, n.act(a, y))));
            }
        }
    }
    let closure = Closure { rules };

    let generators: Vec<u64> = (0..pairs).map(|z| closure.close(1u64 << z)).collect();
    let bottom = closure.close(0);
    let mut found: BTreeSet<u64> = BTreeSet::from([bottom]);
    let mut frontier = vec![bottom];
    while let Some(e) = frontier.pop() {
        for &g in &generators {
            let next = closure.close(e | g);
            if found.insert(next) {
                frontier.push(next);
            }
        }
    }
    let mut masks: Vec<u64> = found.into_iter().collect();
    masks.sort_by_key(|&mk| (mk.count_ones(), mk));
    let index: HashMap<u64, usize> = masks.iter().enumerate().map(|(i, &mk)| (mk, i)).collect();

    let size = masks.len();
    let mut join = Vec::with_capacity(size * size);
    for &p in &masks {
        for &q in &masks {
            join.push(index[&closure.close(p | q)]);
        }
    }
    let mut action = Vec::with_capacity(ring.len() * size);
    for a in ring.elements() {
        for &p in &masks {
            let mut image = 0u64;
            for z in 0..pairs {
                if p >> z & 1 == 1 {
                    image |= bit(m.act(a, z / ln), z % ln);
                }
            }
            action.push(index[&closure.close(image)]);
        }
    }
    let canonical: Vec<usize> = generators.iter().map(|g| index[g]).collect();
    let labels = masks
        .iter()
        .map(|&mk| label_for(mk, &generators, m, n))
        .collect();
    let module = FiniteSemimodule::new(ring.clone(), labels, join, index[&bottom], action)?;
    Ok(TensorProduct {
        module,
        left_len: lm,
        right_len: ln,
        canonical,
        masks,
    })
}

/// Joins of the pure tensors that are maximal inside the class.
fn label_for(mask: u64, generators: &[u64], m: &FiniteSemimodule, n: &FiniteSemimodule) -> String {
    let ln = n.len();
    let inside: Vec<usize> = (0..generators.len())
        .filter(|&z| mask >> z & 1 == 1 && generators[z].count_ones() > 0)
        .collect();
    let mut picked: Vec<usize> = Vec::new();
    for &z in &inside {
        let g = generators[z];
        let dominated = inside.iter().any(|&w| {
            let h = generators[w];
            h != g && h & g == g
        });
        if !dominated && !picked.iter().any(|&p| generators[p] == g) {
            picked.push(z);
        }
    }
    let parts: Vec<String> = picked
        .iter()
        .filter(|&&z| z / ln != m.zero() && z % ln != n.zero())
        .map(|&z| format!("{}⊗{}", m.label(z / ln), n.label(z % ln)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ∨ ")
    }
}

/// Counts from the two-element universal property check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniversalCount {
    pub bimorphisms: usize,
    pub homs: usize,
}

impl TensorProduct {
    pub fn module(&self) -> &FiniteSemimodule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.module.len()
    }

    pub fn is_empty(&self) -> bool {
        self.module.is_empty()
    }

    /// `x ⊗ y`
    pub fn tensor(&self, x: usize, y: usize) -> usize {
        self.canonical[x * self.right_len + y]
    }

    /// Checks that `(x, y) ↦ x ⊗ y` is an S-bimorphism.
    pub fn canonical_is_bimorphism(&self, m: &FiniteSemimodule, n: &FiniteSemimodule) -> bool {
        let t = &self.module;
        is_bimorphism(m, n, |x, y| self.tensor(x, y), |p, q| t.join_ix(p, q), t.zero())
    }

    /// Every bimorphism `M × N → {0, 1}` factors through exactly one
    /// bounded-join homomorphism `M ⊗ N → {0, 1}`, and every such
    /// homomorphism arises this way.
    pub fn check_universal_two(
        &self,
        m: &FiniteSemimodule,
        n: &FiniteSemimodule,
    ) -> Result<UniversalCount, String> {
        let pairs = self.left_len * self.right_len;
        if pairs > UNIVERSAL_CHECK_CAP || self.len() > UNIVERSAL_CHECK_CAP {
            return Err(format!("universal check limited to {UNIVERSAL_CHECK_CAP} pairs and elements"));
        }
        let t = &self.module;
        let join2 = |p: usize, q: usize| p | q;
        let mut bimorphisms = 0;
        let mut induced = BTreeSet::new();
        for f in 0u64..1 << pairs {
            let value = |x: usize, y: usize| (f >> (x * self.right_len + y) & 1) as usize;
            if !is_bimorphism(m, n, value, join2, 0) {
                continue;
            }
            bimorphisms += 1;
            // g(C) = 1 iff some pair of the class maps to 1
            let g: Vec<usize> = self.masks.iter().map(|&mk| usize::from(mk & f != 0)).collect();
            for x in m.elements() {
                for y in n.elements() {
                    if g[self.tensor(x, y)] != value(x, y) {
                        return Err(format!("bimorphism {f:#b} does not factor at ({x}, {y})"));
                    }
                }
            }
            if !is_join_hom(t, &g) {
                return Err(format!("induced map for {f:#b} is not a homomorphism"));
            }
            induced.insert(g);
        }
        let mut homs = 0;
        for code in 0u64..1 << t.len() {
            let g: Vec<usize> = t.elements().map(|i| (code >> i & 1) as usize).collect();
            if !is_join_hom(t, &g) {
                continue;
            }
            homs += 1;
            if !induced.contains(&g) {
                return Err(format!("homomorphism {code:#b} is not induced by a bimorphism"));
            }
        }
        if homs != bimorphisms || induced.len() != bimorphisms {
            return Err(format!("{bimorphisms} bimorphisms against {homs} homomorphisms"));
        }
        Ok(UniversalCount { bimorphisms, homs })
    }
}

fn is_join_hom(t: &FiniteSemimodule, g: &[usize]) -> bool {
    g[t.zero()] == 0
        && t.elements()
            .all(|p| t.elements().all(|q| g[t.join_ix(p, q)] == g[p] | g[q]))
}

/// Biadditivity, balance `f(a·x, y) = f(x, a·y)`, and `f(0, y) = f(x, 0) = 0`
/// (the empty-join case of the generating relations).
fn is_bimorphism(
    m: &FiniteSemimodule,
    n: &FiniteSemimodule,
    f: impl Fn(usize, usize) -> usize,
    join: impl Fn(usize, usize) -> usize,
    zero: usize,
) -> bool {
    for x in m.elements() {
        for y in n.elements() {
            if f(m.zero(), y) != zero || f(x, n.zero()) != zero {
                return false;
            }
            for x2 in m.elements() {
                if f(m.join_ix(x, x2), y) != join(f(x, y), f(x2, y)) {
                    return false;
                }
            }
            for y2 in n.elements() {
                if f(x, n.join_ix(y, y2)) != join(f(x, y), f(x, y2)) {
                    return false;
                }
            }
            for a in m.ring().elements() {
                if f(m.act(a, x), y) != f(x, n.act(a, y)) {
                    return false;
                }
            }
        }
    }
    true
}
