use super::SheafError;
use crate::semiring::SemiringTable;
use crate::util::UnionFind;

/// A pair `a/b` with `b` outside the prime; compare through a `Localization`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub num: usize,
    pub den: usize,
}

/// `S_P` for `D = S ∖ P`, with fractions identified by `(a, b) ∼ (c, d)`
/// iff `adk = bck` for some `k ∈ D`.
#[derive(Clone, Debug)]
pub struct Localization {
    prime: Vec<usize>,
    denominators: Vec<usize>,
    /// Class of the pair `(a, denominators[j])` at `a * |D| + j`.
    class_of_pair: Vec<usize>,
    table: SemiringTable,
}

fn related(s: &SemiringTable, d: &[usize], (a, b): (usize, usize), (c, e): (usize, usize)) -> bool {
    let lhs = s.mul_ix(a, e);
    let rhs = s.mul_ix(b, c);
    d.iter().any(|&k| s.mul_ix(lhs, k) == s.mul_ix(rhs, k))
}

/// Localizes `s` at the prime `prime`, checking that `∼` is an equivalence
/// and that `∨` and `·` on fractions are well defined.
pub fn localize(s: &SemiringTable, prime: &[usize]) -> Result<Localization, SheafError> {
    if !s.is_commutative() {
        return Err(SheafError::NotCommutative);
    }
    if !s.is_prime_ideal(prime) {
        return Err(SheafError::NotPrime);
    }
    let denominators: Vec<usize> = s.elements().filter(|x| !prime.contains(x)).collect();
    let nd = denominators.len();
    let pairs: Vec<(usize, usize)> = s
        .elements()
        .flat_map(|a| denominators.iter().map(move |&b| (a, b)))
        .collect();
    let np = pairs.len();
    let rel: Vec<bool> = (0..np * np)
        .map(|c| related(s, &denominators, pairs[c / np], pairs[c % np]))
        .collect();
    let r = |i: usize, j: usize| rel[i * np + j];
    for i in 0..np {
        if !r(i, i) {
            return Err(SheafError::NotEquivalence(format!("not reflexive at {:?}", pairs[i])));
        }
        for j in 0..np {
            if r(i, j) != r(j, i) {
                return Err(SheafError::NotEquivalence(format!("not symmetric at {:?}, {:?}", pairs[i], pairs[j])));
            }
            if !r(i, j) {
                continue;
            }
            for k in 0..np {
                if r(j, k) && !r(i, k) {
                    return Err(SheafError::NotEquivalence(format!(
                        "not transitive at {:?}, {:?}, {:?}",
                        pairs[i], pairs[j], pairs[k]
                    )));
                }
            }
        }
    }
    let mut uf = UnionFind::new(np);
    for i in 0..np {
        for j in i + 1..np {
            if r(i, j) {
                uf.union(i, j);
            }
        }
    }
    let class_of_pair = uf.labels();
    let classes = class_of_pair.iter().copied().max().map_or(0, |m| m + 1);
    let pos_of = |b: usize| denominators.binary_search(&b).expect("denominator");
    let pair_index = |a: usize, b: usize| a * nd + pos_of(b);

    // one representative pair per class, the first in pair order
    let mut rep = vec![usize::MAX; classes];
    for (i, &c) in class_of_pair.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = i;
        }
    }
    let join_pair = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        (s.join_ix(s.mul_ix(a, d), s.mul_ix(b, c)), s.mul_ix(b, d))
    };
    let mul_pair = |(a, b): (usize, usize), (c, d): (usize, usize)| (s.mul_ix(a, c), s.mul_ix(b, d));
    let mut join = vec![usize::MAX; classes * classes];
    let mut mul = vec![usize::MAX; classes * classes];
    for i in 0..np {
        for j in 0..np {
            let (ci, cj) = (class_of_pair[i], class_of_pair[j]);
            let (jn, jd) = join_pair(pairs[i], pairs[j]);
            let (mn, md) = mul_pair(pairs[i], pairs[j]);
            for (tbl, (num, den), what) in [(&mut join, (jn, jd), "∨"), (&mut mul, (mn, md), "·")] {
                let c = class_of_pair[pair_index(num, den)];
                let slot = &mut tbl[ci * classes + cj];
                if *slot == usize::MAX {
                    *slot = c;
                } else if *slot != c {
                    return Err(SheafError::NotWellDefined(format!(
                        "{what} at {:?}, {:?}",
                        pairs[i], pairs[j]
                    )));
                }
            }
        }
    }
    let labels = (0..classes)
        .map(|c| {
            let one_pos = pos_of(s.one());
            match s.elements().find(|&a| class_of_pair[a * nd + one_pos] == c) {
                Some(a) => s.label(a).to_string(),
                None => {
                    let (a, b) = pairs[rep[c]];
                    format!("({})/({})", s.label(a), s.label(b))
                }
            }
        })
        .collect();
    let zero = class_of_pair[pair_index(s.zero(), s.one())];
    let one = class_of_pair[pair_index(s.one(), s.one())];
    let table = SemiringTable::new(labels, join, mul, zero, one)?;
    Ok(Localization {
        prime: prime.to_vec(),
        denominators,
        class_of_pair,
        table,
    })
}

impl Localization {
    pub fn prime(&self) -> &[usize] {
        &self.prime
    }

    pub fn denominators(&self) -> &[usize] {
        &self.denominators
    }

    pub fn table(&self) -> &SemiringTable {
        &self.table
    }

    /// Class of `a/b`.
    pub fn class(&self, f: Fraction) -> Result<usize, SheafError> {
        let pos = self
            .denominators
            .binary_search(&f.den)
            .map_err(|_| SheafError::BadDenominator(f.den))?;
        Ok(self.class_of_pair[f.num * self.denominators.len() + pos])
    }

    /// `[s/1]`
    pub fn canonical(&self, s: usize, one: usize) -> usize {
        self.class(Fraction { num: s, den: one }).expect("1 is a denominator")
    }

    /// Exactly one maximal ideal.
    pub fn is_local(&self) -> bool {
        self.table.r_spec().maximal.len() == 1
    }
}
