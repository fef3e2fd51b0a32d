mod common;

use std::collections::BTreeSet;

use common::{algebra, test_algebras};
use luka_core::mv::{FiniteMv, MvHom};
use luka_core::semimodule::{
    brute_force_projective, enumerate_homs, find_isomorphism, hom_from_matrix, idempotent_matrices,
    is_strong, matrix_from_hom, projective_presentation, restrict_scalars, row_space_subsets, tensor_product,
    FiniteSemimodule, Matrix, SemimoduleHom, HOM_ENUMERATION_CAP,
};
use luka_core::semiring::{reducts, SemiringTable};

fn scalar_rings() -> Vec<(&'static str, SemiringTable)> {
    vec![
        ("boolean", SemiringTable::boolean()),
        ("chain:2", reducts(&FiniteMv::chain(2)).unwrap().join_odot),
    ]
}

#[test]
fn matrices_and_endomorphisms_form_isomorphic_semirings() {
    for (name, s) in scalar_rings() {
        let f2 = FiniteSemimodule::free(&s, 2).unwrap();
        let all: Vec<Matrix> = Matrix::all(&s, 2, 2).collect();
        assert_eq!(all.len(), s.len().pow(4));
        let homs: Vec<SemimoduleHom> = all.iter().map(|k| hom_from_matrix(&f2, &f2, k).unwrap()).collect();
        let distinct: BTreeSet<_> = homs.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len(), "{name}: injective");
        let endos: BTreeSet<_> = enumerate_homs(&f2, &f2, HOM_ENUMERATION_CAP).unwrap().into_iter().collect();
        assert_eq!(distinct, endos, "{name}: onto");
        for (k, h) in all.iter().zip(&homs) {
            assert_eq!(&matrix_from_hom(&f2, &f2, h).unwrap(), k);
        }
        let id = hom_from_matrix(&f2, &f2, &Matrix::identity(&s, 2)).unwrap();
        assert_eq!(id, SemimoduleHom::identity(&f2));
        for (i, (k, hk)) in all.iter().zip(&homs).enumerate() {
            for (l, hl) in all.iter().zip(&homs).skip(i % 7).step_by(7) {
                let product = hom_from_matrix(&f2, &f2, &k.star(l, &s).unwrap()).unwrap();
                assert_eq!(product, hk.then(hl), "{name}: kl is l after k");
                let sum = hom_from_matrix(&f2, &f2, &k.join(l, &s).unwrap()).unwrap();
                assert_eq!(sum, hk.join(hl, &f2), "{name}: joins");
            }
        }
    }
}

/// Retracts of `S^n` found without matrices: closed subsets `R` admitting an
/// endomorphism onto `R` that fixes `R`, the endomorphism fixed by where it
/// sends the unit vectors.
fn retract_oracle(s: &SemiringTable, n: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let free = FiniteSemimodule::free(s, n).unwrap();
    let vectors = free.vectors().unwrap().to_vec();
    let join = |x: &[usize], y: &[usize]| -> Vec<usize> { x.iter().zip(y).map(|(&a, &b)| s.join_ix(a, b)).collect() };
    let scale = |a: usize, x: &[usize]| -> Vec<usize> { x.iter().map(|&e| s.mul_ix(a, e)).collect() };
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << vectors.len() {
        let r: Vec<Vec<usize>> = (0..vectors.len()).filter(|i| mask >> i & 1 == 1).map(|i| vectors[i].clone()).collect();
        let set: BTreeSet<&Vec<usize>> = r.iter().collect();
        if !set.contains(&vec![s.zero(); n]) {
            continue;
        }
        let closed = r.iter().all(|x| {
            r.iter().all(|y| set.contains(&join(x, y))) && s.elements().all(|a| set.contains(&scale(a, x)))
        });
        if !closed {
            continue;
        }
        let choices = r.len().pow(n as u32);
        let found = (0..choices).any(|mut code| {
            let images: Vec<&Vec<usize>> = (0..n)
                .map(|_| {
                    let v = &r[code % r.len()];
                    code /= r.len();
                    v
                })
                .collect();
            r.iter().all(|x| {
                let px = x
                    .iter()
                    .zip(&images)
                    .fold(vec![s.zero(); n], |acc, (&c, img)| join(&acc, &scale(c, img)));
                &px == x
            })
        });
        if found {
            out.insert(r);
        }
    }
    out
}

#[test]
fn idempotent_row_spaces_are_exactly_the_retracts() {
    for (name, s) in scalar_rings() {
        for n in 1..=2 {
            let free = FiniteSemimodule::free(&s, n).unwrap();
            let vectors = free.vectors().unwrap();
            let from_matrices: BTreeSet<Vec<Vec<usize>>> = row_space_subsets(&s, n)
                .unwrap()
                .into_iter()
                .map(|ix| ix.into_iter().map(|i| vectors[i].clone()).collect())
                .collect();
            assert_eq!(from_matrices, retract_oracle(&s, n), "{name}, n = {n}");
        }
    }
}

#[test]
fn categorical_projectivity_agrees_with_idempotents() {
    for (name, s) in scalar_rings() {
        for u in idempotent_matrices(&s, 2) {
            let m = projective_presentation(&s, &u).unwrap();
            assert!(brute_force_projective(&m, 2).unwrap(), "{name}");
        }
    }
    // {0, 1/2} over Chain(2) is a closed submodule but not a retract of S or S^2
    let a = FiniteMv::chain(2);
    let s = reducts(&a).unwrap().join_odot;
    let m = FiniteSemimodule::mv_join(&a, &s).unwrap().submodule(&[0, 1]).unwrap();
    let by_matrices = row_space_subsets(&s, 2).unwrap().iter().any(|r| {
        let free = FiniteSemimodule::free(&s, 2).unwrap();
        let rs = free.submodule(r).unwrap();
        find_isomorphism(&rs, &m).is_some()
    });
    assert_eq!(brute_force_projective(&m, 2).unwrap(), by_matrices);
}

fn mv_homs(a: &FiniteMv, b: &FiniteMv) -> Vec<MvHom> {
    let (n, m) = (a.len(), b.len());
    (0..m.pow(n as u32))
        .filter_map(|mut code| {
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let v = code % m;
                    code /= m;
                    v
                })
                .collect();
            MvHom::new(a, b, map).ok()
        })
        .collect()
}

fn strong_modules_over(b: &FiniteMv) -> Vec<FiniteSemimodule> {
    let s = reducts(b).unwrap().join_odot;
    let mut out = vec![FiniteSemimodule::regular(&s), FiniteSemimodule::mv_join(b, &s).unwrap()];
    if b.len() <= 3 {
        out.push(FiniteSemimodule::free(&s, 2).unwrap());
    }
    for ideal in b.ideals() {
        let q = b.quotient(ideal.elements()).unwrap();
        out.push(FiniteSemimodule::mv_quotient(b, &q, &s).unwrap());
    }
    out.retain(|m| is_strong(m, b.star_table()).is_ok());
    out
}

#[test]
fn restriction_along_mv_homomorphisms_keeps_strongness() {
    let algebras = [
        FiniteMv::chain(1),
        FiniteMv::chain(2),
        FiniteMv::chain(4),
        algebra("product:chain:1,chain:1"),
        algebra("product:chain:2,chain:1"),
        algebra("product:chain:2,chain:2"),
    ];
    let mut checked = 0;
    // maps out of the 9-element product are too many to scan blindly
    for a in &algebras[..5] {
        let sa = reducts(a).unwrap().join_odot;
        for b in &algebras {
            let modules = strong_modules_over(b);
            for h in mv_homs(a, b) {
                for n in &modules {
                    let nh = restrict_scalars(&sa, h.map(), n).unwrap();
                    assert_eq!(is_strong(&nh, a.star_table()), Ok(()));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50, "{checked} restrictions");
}

#[test]
fn free_modules_are_strong() {
    for (name, a) in test_algebras().into_iter().filter(|(_, a)| a.len() <= 3) {
        let s = reducts(&a).unwrap().join_odot;
        for n in 1..=2 {
            let f = FiniteSemimodule::free(&s, n).unwrap();
            assert_eq!(is_strong(&f, a.star_table()), Ok(()), "{name}^{n}");
        }
    }
}

#[test]
fn quotient_modules_are_strong() {
    for (name, a) in test_algebras() {
        let s = reducts(&a).unwrap().join_odot;
        for ideal in a.ideals() {
            let q = a.quotient(ideal.elements()).unwrap();
            let m = FiniteSemimodule::mv_quotient(&a, &q, &s).unwrap();
            assert_eq!(is_strong(&m, a.star_table()), Ok(()), "{name}");
        }
    }
}

#[test]
fn tensor_is_symmetric() {
    let c2 = FiniteMv::chain(2);
    let s = reducts(&c2).unwrap().join_odot;
    let b = SemiringTable::boolean();
    let cases = [
        (FiniteSemimodule::regular(&s), FiniteSemimodule::mv_join(&c2, &s).unwrap().submodule(&[0, 1]).unwrap()),
        (FiniteSemimodule::regular(&s), FiniteSemimodule::regular(&s)),
        (FiniteSemimodule::free(&b, 2).unwrap(), FiniteSemimodule::regular(&b)),
        (FiniteSemimodule::free(&b, 2).unwrap(), FiniteSemimodule::free(&b, 2).unwrap().submodule(&[0, 1, 3]).unwrap()),
    ];
    for (m, n) in &cases {
        let mn = tensor_product(m, n).unwrap();
        let nm = tensor_product(n, m).unwrap();
        assert!(mn.canonical_is_bimorphism(m, n));
        let iso = find_isomorphism(mn.module(), nm.module()).expect("M⊗N ≅ N⊗M");
        // the swap x⊗y ↦ y⊗x is one such isomorphism
        let swap: Vec<usize> = mn
            .module()
            .elements()
            .map(|t| {
                let gens: Vec<(usize, usize)> = m
                    .elements()
                    .flat_map(|x| n.elements().map(move |y| (x, y)))
                    .filter(|&(x, y)| mn.module().leq(mn.tensor(x, y), t))
                    .collect();
                nm.module().join_all(gens.into_iter().map(|(x, y)| nm.tensor(y, x)))
            })
            .collect();
        assert!(SemimoduleHom::new(mn.module(), nm.module(), swap).is_ok());
        assert_eq!(iso.map().len(), mn.len());
    }
}
