mod common;

use common::algebra;
use luka_core::ktheory::{
    block_sum, enumerate_projectives, k0_map, mutual_expressibility, pad, ClassMap, K0Element, K0Equality,
    ProjectiveMonoid,
};
use luka_core::mv::{FiniteMv, MvHom};
use luka_core::semimodule::{find_isomorphism, projective_presentation, FiniteSemimodule};
use luka_core::semiring::{reducts, SemiringTable};

fn monoid(a: &FiniteMv, dim: usize) -> ProjectiveMonoid {
    enumerate_projectives(&reducts(a).unwrap().join_odot, dim).unwrap()
}

fn small_monoids() -> Vec<(&'static str, ProjectiveMonoid)> {
    vec![
        ("boolean", enumerate_projectives(&SemiringTable::boolean(), 3).unwrap()),
        ("chain:2", monoid(&FiniteMv::chain(2), 2)),
        ("chain:3", monoid(&FiniteMv::chain(3), 2)),
    ]
}

#[test]
fn padding_keeps_the_class() {
    for (name, m) in small_monoids() {
        let ring = m.ring().clone();
        for (u, class) in m.members() {
            for extra in 1..=2 {
                let padded = pad(u, u.rows() + extra, &ring);
                assert!(padded.is_idempotent(&ring));
                let a = projective_presentation(&ring, u).unwrap();
                let b = projective_presentation(&ring, &padded).unwrap();
                assert!(find_isomorphism(&a, &b).is_some(), "{name}");
                if padded.rows() <= m.max_dim() {
                    assert_eq!(m.class_of_matrix(&padded).unwrap(), Some(class), "{name}");
                }
            }
        }
    }
}

#[test]
fn block_sums_are_direct_sums() {
    let b = SemiringTable::boolean();
    let m = enumerate_projectives(&b, 2).unwrap();
    let reps: Vec<_> = m.classes().iter().map(|c| c.representative.clone()).collect();
    for u in &reps {
        for v in &reps {
            let s = block_sum(u, v, &b);
            assert!(s.is_idempotent(&b));
            let direct = projective_presentation(&b, u)
                .unwrap()
                .direct_sum(&projective_presentation(&b, v).unwrap())
                .unwrap();
            assert!(find_isomorphism(&projective_presentation(&b, &s).unwrap(), &direct).is_some());
            let swapped = projective_presentation(&b, &block_sum(v, u, &b)).unwrap();
            assert!(find_isomorphism(&swapped, &direct).is_some());
        }
    }
}

#[test]
fn k_is_a_monoid_morphism() {
    for (name, m) in small_monoids() {
        let z = m.zero_class();
        assert!(matches!(K0Element::class(z).equals(&K0Element::zero(), &m), K0Equality::Equal { .. }));
        for i in 0..m.len() {
            for j in 0..m.len() {
                let Some(s) = m.sum(i, j) else { continue };
                let lhs = K0Element::class(i).add(&K0Element::class(j));
                assert!(
                    matches!(lhs.equals(&K0Element::class(s), &m), K0Equality::Equal { .. }),
                    "{name}: [{i}] + [{j}]"
                );
                let cancel = K0Element::difference(i, i);
                assert!(matches!(cancel.equals(&K0Element::difference(j, j), &m), K0Equality::Equal { .. }));
            }
        }
    }
}

#[test]
fn images_of_idempotents_stay_idempotent() {
    let a = algebra("product:chain:2,chain:1");
    let b = FiniteMv::chain(2);
    let sa = reducts(&a).unwrap().join_odot;
    let sb = reducts(&b).unwrap().join_odot;
    // first projection
    let proj = MvHom::new(&a, &b, a.elements().map(|i| i / 2).collect()).unwrap();
    let ma = enumerate_projectives(&sa, 2).unwrap();
    for (u, _) in ma.members() {
        let image = luka_core::semimodule::Matrix::new(
            u.rows(),
            u.cols(),
            u.entries().iter().map(|&e| proj.apply(e)).collect(),
        )
        .unwrap();
        assert!(image.is_idempotent(&sb));
    }
}

#[test]
fn functor_laws_on_a_diagonal_and_projection() {
    let c2 = FiniteMv::chain(2);
    let p = algebra("product:chain:2,chain:2");
    let diag = MvHom::new(&c2, &p, c2.elements().map(|i| i * 3 + i).collect()).unwrap();
    let proj = MvHom::new(&p, &c2, p.elements().map(|i| i / 3).collect()).unwrap();
    let mc = monoid(&c2, 2);
    let mp = monoid(&p, 2);

    let id_c = k0_map(&MvHom::identity(&c2), &mc, &mc).unwrap();
    assert_eq!(id_c, ClassMap::identity(&mc));
    let id_p = k0_map(&MvHom::identity(&p), &mp, &mp).unwrap();
    assert_eq!(id_p, ClassMap::identity(&mp));

    let f = k0_map(&diag, &mc, &mp).unwrap();
    let g = k0_map(&proj, &mp, &mc).unwrap();
    let gf = k0_map(&diag.then(&proj).unwrap(), &mc, &mc).unwrap();
    assert_eq!(gf, f.then(&g));
    assert!(f.is_monoid_morphism(&mc, &mp));
    assert!(g.is_monoid_morphism(&mp, &mc));
    // projection after diagonal is the identity
    assert_eq!(gf, ClassMap::identity(&mc));
    let e = K0Element::difference(mc.len() - 1, mc.zero_class());
    assert_eq!(gf.apply_k0(&e), e);
}

#[test]
fn shared_row_spaces_imply_isomorphism() {
    for (name, m) in small_monoids() {
        let report = mutual_expressibility(&m);
        assert!(report.pairs > 0);
        assert_eq!(report.expressible_not_isomorphic, 0, "{name}");
    }
}

#[test]
fn zero_module_is_the_unit() {
    for (_, m) in small_monoids() {
        let z = m.zero_class();
        assert_eq!(m.module(z).len(), 1);
        for i in 0..m.len() {
            assert_eq!(m.sum(i, z), Some(i));
            assert_eq!(m.sum(z, i), Some(i));
        }
        let free1 = FiniteSemimodule::free(m.ring(), 1).unwrap();
        assert!((0..m.len()).any(|c| find_isomorphism(m.module(c), &free1).is_some()));
    }
}
