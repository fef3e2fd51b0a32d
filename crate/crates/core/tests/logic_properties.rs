use luka_core::logic::{is_tautology_on_chain, parse_formula, Formula};
use proptest::prelude::*;

fn formula(vars: u32) -> impl Strategy<Value = Formula> {
    let leaf = (1..=vars).prop_map(Formula::var);
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::negate),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

fn axiom_instance() -> impl Strategy<Value = Formula> {
    (0..4usize, formula(3), formula(3), formula(3)).prop_map(|(which, a, b, c)| match which {
        0 => Formula::axiom_l1(a, b),
        1 => Formula::axiom_l2(a, b, c),
        2 => Formula::axiom_l3(a, b),
        _ => Formula::axiom_l4(a, b),
    })
}

fn valid(f: &Formula, k: u32) -> bool {
    is_tautology_on_chain(f, k).unwrap().is_tautology()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn printing_then_parsing_is_identity(f in formula(6)) {
        let text = f.to_string();
        prop_assert_eq!(parse_formula(&text).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn axiom_instances_hold_on_small_chains(f in axiom_instance(), k in 1u32..=6) {
        prop_assert!(valid(&f, k));
    }

    #[test]
    fn modus_ponens_preserves_validity(a in axiom_instance(), b in formula(3), k in 1u32..=5) {
        // a and a -> (b -> a) are valid, so b -> a must be
        let psi = Formula::implies(b, a.clone());
        let premise = Formula::implies(a.clone(), psi.clone());
        prop_assert!(valid(&a, k));
        prop_assert!(valid(&premise, k));
        prop_assert!(valid(&psi, k));
    }

    #[test]
    fn modus_ponens_on_arbitrary_triples(phi in formula(3), psi in formula(3), k in 1u32..=4) {
        let imp = Formula::implies(phi.clone(), psi.clone());
        if valid(&phi, k) && valid(&imp, k) {
            prop_assert!(valid(&psi, k));
        }
    }

    #[test]
    fn counterexamples_survive_refinement(f in formula(3), k in 1u32..=4, m in 2u32..=3) {
        // Chain(k) embeds in Chain(k·m)
        if !valid(&f, k) {
            prop_assert!(!valid(&f, k * m));
        }
        if valid(&f, k * m) {
            prop_assert!(valid(&f, k));
        }
    }
}

#[test]
fn excluded_middle_fails_above_two_elements() {
    // (a -> b) -> b is a join
    let lem = parse_formula("(x1 -> ~x1) -> ~x1").unwrap();
    assert!(valid(&lem, 1));
    assert!(!valid(&lem, 2));
    let contraction = parse_formula("(x1 -> (x1 -> x2)) -> (x1 -> x2)").unwrap();
    assert!(valid(&contraction, 1));
    assert!(!valid(&contraction, 2));
}
