use std::fmt::Debug;

/// The signature `⟨A, ⊕, ∗, 0⟩` of an MV-algebra.
///
/// Implementors supply the three primitives; everything else is derived with
/// the usual term definitions, so a corrupted primitive shows up in every
/// derived operation as well.
pub trait MvOps {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn oplus(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.star(&self.zero())
    }

    /// `a ⊙ b = (a∗ ⊕ b∗)∗`
    fn odot(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.star(&self.oplus(&self.star(a), &self.star(b)))
    }

    /// `a ⊖ b = a ⊙ b∗`
    fn ominus(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.odot(a, &self.star(b))
    }

    /// `a → b = a∗ ⊕ b`
    fn arrow(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.oplus(&self.star(a), b)
    }

    /// `a ∨ b = (a ⊙ b∗) ⊕ b`
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.oplus(&self.odot(a, &self.star(b)), b)
    }

    /// `a ∧ b = (a∗ ∨ b∗)∗`
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.star(&self.join(&self.star(a), &self.star(b)))
    }

    /// `a ≤ b` iff `a∗ ⊕ b = 1`
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.arrow(a, b) == self.one()
    }

    /// Chang distance `d(a, b) = (a ⊙ b∗) ⊕ (b ⊙ a∗)`.
    fn distance(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.oplus(&self.ominus(a, b), &self.ominus(b, a))
    }
}
