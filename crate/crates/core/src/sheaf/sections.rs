use std::collections::HashMap;

use super::{localize, Localization, SheafError};
use crate::mv::FiniteMv;
use crate::semiring::{recognize_mv_semiring, reconstruct_mv, reducts, SemiringHom, SemiringTable};

/// The sheaf over `RSpec S` and its semiring of canonical sections.
#[derive(Clone, Debug)]
pub struct GlobalSections {
    /// Primes in the order produced by `r_spec`.
    pub primes: Vec<Vec<usize>>,
    pub stalks: Vec<Localization>,
    /// `sections[i]` holds `ŝ(P)` for each prime, as stalk class indices.
    pub sections: Vec<Vec<usize>>,
    /// `Ŝ` with pointwise operations.
    pub table: SemiringTable,
    /// `φ(s)` as an index into `table`.
    pub phi: Vec<usize>,
    /// `φ` preserves the operations and constants.
    pub phi_is_hom: bool,
    pub phi_is_bijective: bool,
}

impl GlobalSections {
    pub fn phi_is_isomorphism(&self) -> bool {
        self.phi_is_hom && self.phi_is_bijective
    }
}

/// Builds every canonical section `ŝ : P ↦ [s/1]_P` and the semiring they
/// form under pointwise `∨` and `·`.
pub fn global_sections(s: &SemiringTable) -> Result<GlobalSections, SheafError> {
    let spec = s.r_spec();
    let primes: Vec<Vec<usize>> = spec.prime_ideals().cloned().collect();
    let stalks = primes
        .iter()
        .map(|p| localize(s, p))
        .collect::<Result<Vec<_>, _>>()?;
    let section_of = |x: usize| -> Vec<usize> { stalks.iter().map(|st| st.canonical(x, s.one())).collect() };

    let mut sections: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut phi = Vec::with_capacity(s.len());
    for x in s.elements() {
        let sec = section_of(x);
        let id = *index.entry(sec.clone()).or_insert_with(|| {
            sections.push(sec);
            sections.len() - 1
        });
        phi.push(id);
    }
    let k = sections.len();
    let pointwise = |a: &[usize], b: &[usize], mul: bool| -> Vec<usize> {
        stalks
            .iter()
            .enumerate()
            .map(|(i, st)| {
                let t = st.table();
                if mul {
                    t.mul_ix(a[i], b[i])
                } else {
                    t.join_ix(a[i], b[i])
                }
            })
            .collect()
    };
    let mut join = Vec::with_capacity(k * k);
    let mut mul = Vec::with_capacity(k * k);
    for a in &sections {
        for b in &sections {
            join.push(*index.get(&pointwise(a, b, false)).ok_or(SheafError::SectionsNotClosed("∨"))?);
            mul.push(*index.get(&pointwise(a, b, true)).ok_or(SheafError::SectionsNotClosed("·"))?);
        }
    }
    let mut labels = vec![String::new(); k];
    for x in s.elements().rev() {
        labels[phi[x]] = format!("^{}", s.label(x));
    }
    let table = SemiringTable::new(labels, join, mul, phi[s.zero()], phi[s.one()])?;
    let phi_is_hom = SemiringHom::new(s, &table, phi.clone()).is_ok();
    let phi_is_bijective = k == s.len();
    Ok(GlobalSections {
        primes,
        stalks,
        sections,
        table,
        phi,
        phi_is_hom,
        phi_is_bijective,
    })
}

/// Per-prime findings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkReport {
    pub prime: Vec<usize>,
    pub size: usize,
    pub local: bool,
    /// Whether the stalk admits a negation making it an MV-semiring.
    pub mv: bool,
}

/// Verification that `A` is recovered from the global sections of its
/// `∨⊙` reduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvSectionsRecord {
    pub stalks: Vec<StalkReport>,
    pub phi_isomorphism: bool,
    /// `Ŝ` passes MV-semiring recognition.
    pub sections_mv: bool,
    /// `⊕` and `∗` transported back along `φ⁻¹` equal those of `A`.
    pub tables_match: bool,
}

impl MvSectionsRecord {
    pub fn passed(&self) -> bool {
        self.phi_isomorphism && self.sections_mv && self.tables_match && self.stalks.iter().all(|s| s.local)
    }
}

pub fn mv_global_sections(a: &FiniteMv) -> Result<MvSectionsRecord, SheafError> {
    let s = reducts(a)?.join_odot;
    let g = global_sections(&s)?;
    let stalks = g
        .stalks
        .iter()
        .map(|st| StalkReport {
            prime: st.prime().to_vec(),
            size: st.table().len(),
            local: st.is_local(),
            mv: recognize_mv_semiring(st.table()).is_ok(),
        })
        .collect();
    let (sections_mv, tables_match) = match recognize_mv_semiring(&g.table) {
        Ok(star) if g.phi_is_isomorphism() => {
            let hat = reconstruct_mv(&g.table, &star)?;
            let mut inverse = vec![0; a.len()];
            for x in a.elements() {
                inverse[g.phi[x]] = x;
            }
            let n = a.len();
            let oplus: Vec<usize> = (0..n * n)
                .map(|c| inverse[hat.oplus_ix(g.phi[c / n], g.phi[c % n])])
                .collect();
            let star_back: Vec<usize> = a.elements().map(|x| inverse[hat.star_ix(g.phi[x])]).collect();
            (true, oplus == a.oplus_table() && star_back == a.star_table())
        }
        Ok(_) => (true, false),
        Err(_) => (false, false),
    };
    Ok(MvSectionsRecord {
        stalks,
        phi_isomorphism: g.phi_is_isomorphism(),
        sections_mv,
        tables_match,
    })
}
