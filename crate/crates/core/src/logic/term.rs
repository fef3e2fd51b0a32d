use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::Formula;
use crate::mv::MvOps;

/// MV terms over `∗` and `⊕`, the image of the `τ` translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MvTerm {
    Var(u32),
    Star(Box<MvTerm>),
    Oplus(Box<MvTerm>, Box<MvTerm>),
}

impl MvTerm {
    pub fn star(t: MvTerm) -> Self {
        MvTerm::Star(Box::new(t))
    }

    pub fn oplus(a: MvTerm, b: MvTerm) -> Self {
        MvTerm::Oplus(Box::new(a), Box::new(b))
    }

    pub fn size(&self) -> usize {
        match self {
            MvTerm::Var(_) => 1,
            MvTerm::Star(t) => 1 + t.size(),
            MvTerm::Oplus(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<u32>) {
        match self {
            MvTerm::Var(i) => out.push(*i),
            MvTerm::Star(t) => t.collect_vars(out),
            MvTerm::Oplus(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

impl fmt::Display for MvTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MvTerm::Var(i) => write!(f, "x{i}"),
            MvTerm::Star(t) => match **t {
                MvTerm::Oplus(..) => write!(f, "({t})*"),
                _ => write!(f, "{t}*"),
            },
            MvTerm::Oplus(a, b) => write!(f, "({a} + {b})"),
        }
    }
}

/// `τ(x) = x`, `τ(¬ψ) = τ(ψ)∗`, `τ(ψ → ξ) = τ(ψ)∗ ⊕ τ(ξ)`.
pub fn translate_tau(f: &Formula) -> MvTerm {
    match f {
        Formula::Var(i) => MvTerm::Var(*i),
        Formula::Not(g) => MvTerm::star(translate_tau(g)),
        Formula::Implies(a, b) => MvTerm::oplus(MvTerm::star(translate_tau(a)), translate_tau(b)),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable x{0} has no value")]
    Unassigned(u32),
}

/// Bottom-up evaluation of `t` in `alg`.
pub fn evaluate<A: MvOps>(
    t: &MvTerm,
    assignment: &BTreeMap<u32, A::Elem>,
    alg: &A,
) -> Result<A::Elem, EvalError> {
    match t {
        MvTerm::Var(i) => assignment.get(i).cloned().ok_or(EvalError::Unassigned(*i)),
        MvTerm::Star(s) => Ok(alg.star(&evaluate(s, assignment, alg)?)),
        MvTerm::Oplus(a, b) => {
            let x = evaluate(a, assignment, alg)?;
            let y = evaluate(b, assignment, alg)?;
            Ok(alg.oplus(&x, &y))
        }
    }
}
