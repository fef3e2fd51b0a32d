use std::fmt;

/// Formulas built from variables `x1, x2, …` with `¬` and `→`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `x_i`, `i ≥ 1`
    Var(u32),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(i: u32) -> Self {
        Formula::Var(i)
    }

    pub fn negate(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Largest variable index, 0 for none.
    pub fn max_var(&self) -> u32 {
        match self {
            Formula::Var(i) => *i,
            Formula::Not(f) => f.max_var(),
            Formula::Implies(a, b) => a.max_var().max(b.max_var()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::Implies(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// `φ → (ψ → φ)`
    pub fn axiom_l1(phi: Formula, psi: Formula) -> Self {
        Formula::implies(phi.clone(), Formula::implies(psi, phi))
    }

    /// `(φ → ψ) → ((ψ → χ) → (φ → χ))`
    pub fn axiom_l2(phi: Formula, psi: Formula, chi: Formula) -> Self {
        Formula::implies(
            Formula::implies(phi.clone(), psi.clone()),
            Formula::implies(Formula::implies(psi, chi.clone()), Formula::implies(phi, chi)),
        )
    }

    /// `((φ → ψ) → ψ) → ((ψ → φ) → φ)`
    pub fn axiom_l3(phi: Formula, psi: Formula) -> Self {
        Formula::implies(
            Formula::implies(Formula::implies(phi.clone(), psi.clone()), psi.clone()),
            Formula::implies(Formula::implies(psi, phi.clone()), phi),
        )
    }

    /// `(¬φ → ¬ψ) → (ψ → φ)`
    pub fn axiom_l4(phi: Formula, psi: Formula) -> Self {
        Formula::implies(
            Formula::implies(Formula::negate(phi.clone()), Formula::negate(psi.clone())),
            Formula::implies(psi, phi),
        )
    }
}

/// Prints with the minimal parentheses for a right-associative `->` and a
/// prefix `~` that binds tighter.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "x{i}"),
            Formula::Not(inner) => match **inner {
                Formula::Implies(..) => write!(f, "~({inner})"),
                _ => write!(f, "~{inner}"),
            },
            Formula::Implies(a, b) => {
                match **a {
                    Formula::Implies(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                write!(f, " -> {b}")
            }
        }
    }
}
