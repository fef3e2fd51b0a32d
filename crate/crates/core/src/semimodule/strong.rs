use super::FiniteSemimodule;

/// Scalars `a, b` acting identically on `M` while `a∗ · x ≠ b∗ · x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrongWitness {
    pub a: usize,
    pub b: usize,
    pub x: usize,
}

/// Checks `(∀x. a · x = b · x) ⟹ (∀x. a∗ · x = b∗ · x)` for every pair
/// `a > b` of scalars, in index order.
/// `star` is the negation of the scalar MV-semiring.
pub fn is_strong(m: &FiniteSemimodule, star: &[usize]) -> Result<(), StrongWitness> {
    let ring = m.ring();
    for a in ring.elements() {
        for b in 0..a {
            if m.elements().any(|x| m.act(a, x) != m.act(b, x)) {
                continue;
            }
            if let Some(x) = m
                .elements()
                .find(|&x| m.act(star[a], x) != m.act(star[b], x))
            {
                return Err(StrongWitness { a, b, x });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::FiniteMv;
    use crate::semiring::reducts;

    #[test]
    fn algebra_over_itself_is_strong() {
        let a = FiniteMv::chain(4);
        let r = reducts(&a).unwrap();
        let m = FiniteSemimodule::mv_join(&a, &r.join_odot).unwrap();
        assert_eq!(is_strong(&m, a.star_table()), Ok(()));
        let dual = FiniteSemimodule::mv_meet(&a, &r.meet_oplus).unwrap();
        assert_eq!(is_strong(&dual, a.star_table()), Ok(()));
    }

    #[test]
    fn lower_half_is_not_strong() {
        let a = FiniteMv::chain(2);
        let r = reducts(&a).unwrap();
        let m = FiniteSemimodule::mv_join(&a, &r.join_odot).unwrap().submodule(&[0, 1]).unwrap();
        let w = is_strong(&m, a.star_table()).unwrap_err();
        assert_eq!((a.label(w.a), a.label(w.b), m.label(w.x)), ("1/2", "0", "1/2"));
    }
}
