use thiserror::Error;

use super::{translate_tau, Formula, MvTerm};
use crate::mv::{FiniteMv, MvError};

/// Upper bound on `(k + 1)^v` for an exhaustive scan.
pub const MAX_ASSIGNMENTS: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TautologyError {
    #[error("chain length must be at least 1")]
    EmptyChain,
    #[error("{0} assignments exceed the scan cap of {MAX_ASSIGNMENTS}")]
    TooManyAssignments(u128),
    #[error(transparent)]
    Algebra(#[from] MvError),
}

/// Values of the variables of a formula, as numerators over the chain length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub chain: u32,
    /// `(variable index, numerator)` pairs in variable order.
    pub values: Vec<(u32, u32)>,
}

impl std::fmt::Display for Assignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let alg = crate::mv::AlgebraSpec::Chain(self.chain);
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|&(v, n)| format!("x{v}={}", alg.label(n as usize)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TautologyVerdict {
    Tautology { assignments: u64 },
    /// First falsifying assignment in canonical order (`x1` most significant).
    Falsified(Assignment),
}

impl TautologyVerdict {
    pub fn is_tautology(&self) -> bool {
        matches!(self, TautologyVerdict::Tautology { .. })
    }
}

#[derive(Clone, Copy)]
enum Op {
    Load(usize),
    Star,
    Oplus,
}

fn compile(t: &MvTerm, vars: &[u32], out: &mut Vec<Op>) {
    match t {
        MvTerm::Var(i) => out.push(Op::Load(vars.binary_search(i).expect("collected variable"))),
        MvTerm::Star(s) => {
            compile(s, vars, out);
            out.push(Op::Star);
        }
        MvTerm::Oplus(a, b) => {
            compile(a, vars, out);
            compile(b, vars, out);
            out.push(Op::Oplus);
        }
    }
}

/// Decides whether `τ(f) = 1` under every assignment into `Chain(k)`.
///
/// This is validity in one finite chain only; it says nothing about
/// provability in the full calculus.
pub fn is_tautology_on_chain(f: &Formula, k: u32) -> Result<TautologyVerdict, TautologyError> {
    if k == 0 {
        return Err(TautologyError::EmptyChain);
    }
    let term = translate_tau(f);
    let vars = term.variables();
    let base = k as u128 + 1;
    let total = base
        .checked_pow(vars.len() as u32)
        .unwrap_or(u128::MAX);
    if total > MAX_ASSIGNMENTS as u128 {
        return Err(TautologyError::TooManyAssignments(total));
    }
    let chain = FiniteMv::chain(k);
    let mut program = Vec::new();
    compile(&term, &vars, &mut program);

    let one = chain.one_ix();
    let mut values = vec![0usize; vars.len()];
    let mut stack = Vec::with_capacity(program.len());
    for _ in 0..total as u64 {
        stack.clear();
        for op in &program {
            match *op {
                Op::Load(i) => stack.push(values[i]),
                Op::Star => {
                    let a = stack.pop().expect("operand");
                    stack.push(chain.star_ix(a));
                }
                Op::Oplus => {
                    let b = stack.pop().expect("operand");
                    let a = stack.pop().expect("operand");
                    stack.push(chain.oplus_ix(a, b));
                }
            }
        }
        if stack[0] != one {
            return Ok(TautologyVerdict::Falsified(Assignment {
                chain: k,
                values: vars.iter().zip(&values).map(|(&v, &x)| (v, x as u32)).collect(),
            }));
        }
        // odometer, last variable fastest
        for slot in values.iter_mut().rev() {
            *slot += 1;
            if *slot <= k as usize {
                break;
            }
            *slot = 0;
        }
    }
    Ok(TautologyVerdict::Tautology {
        assignments: total as u64,
    })
}
