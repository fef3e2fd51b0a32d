use clap::Args;
use luka_core::logic::{is_tautology_on_chain, parse_formula, translate_tau, TautologyError, TautologyVerdict};

use crate::{CliError, Context, Entry, Registry, Status};

pub fn register(r: &mut Registry) {
    r.register(Entry::new("logic", "taut", "Decide validity of a formula on the chain Chain(K)", taut))
        .register(Entry::new("logic", "tau", "Translate a formula into an MV term", tau));
}

#[derive(Args, Debug)]
struct TautArgs {
    /// Chain length K: values 0, 1/K, ..., 1
    #[arg(long, value_name = "K")]
    chain: u32,
    /// Formula over x1, x2, ... with `~` and `->`
    formula: String,
}

fn taut(args: &TautArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let f = parse_formula(&args.formula).map_err(CliError::usage)?;
    match is_tautology_on_chain(&f, args.chain) {
        Ok(TautologyVerdict::Tautology { assignments }) => {
            ctx.line(format!("tautology on Chain({}) ({assignments} assignments)", args.chain));
            Ok(Status::Pass)
        }
        Ok(TautologyVerdict::Falsified(w)) => {
            ctx.line(format!("falsified on Chain({}) at {w}", args.chain));
            Ok(Status::Fail)
        }
        Err(e @ TautologyError::EmptyChain) => Err(CliError::usage(e)),
        Err(e) => Err(CliError::failed(e)),
    }
}

#[derive(Args, Debug)]
struct TauArgs {
    formula: String,
}

fn tau(args: &TauArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let f = parse_formula(&args.formula).map_err(CliError::usage)?;
    ctx.line(translate_tau(&f).to_string());
    Ok(Status::Pass)
}
