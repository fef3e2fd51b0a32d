//! Łukasiewicz propositional formulas, their translation into MV terms and
//! validity over finite chains.

mod formula;
mod parse;
mod taut;
mod term;

pub use formula::Formula;
pub use parse::{parse_formula, ParseError};
pub use taut::{is_tautology_on_chain, Assignment, TautologyError, TautologyVerdict, MAX_ASSIGNMENTS};
pub use term::{evaluate, translate_tau, EvalError, MvTerm};
