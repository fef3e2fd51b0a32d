use clap::{Args, ValueEnum};
use luka_core::ktheory::enumerate_projectives;
use luka_core::semiring::reducts;

use super::{label, AlgebraArgs};
use crate::commands::mv::yes;
use crate::{CliError, Context, Entry, Registry, Status};

pub fn register(r: &mut Registry) {
    r.register(Entry::new(
        "k0",
        "enumerate",
        "Classify idempotent matrices over the join-odot reduct into projective classes",
        enumerate,
    ));
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Report {
    Text,
    Csv,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Largest matrix dimension scanned
    #[arg(long, value_name = "N")]
    max_dim: usize,
    #[arg(long, value_enum, default_value_t = Report::Text)]
    report: Report,
}

fn enumerate(args: &EnumerateArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    if args.max_dim == 0 {
        return Err(CliError::Usage("--max-dim must be positive".into()));
    }
    let a = args.algebra.finite()?;
    let ring = reducts(&a).map_err(CliError::failed)?.join_odot;
    let monoid = enumerate_projectives(&ring, args.max_dim).map_err(CliError::failed)?;
    match args.report {
        Report::Csv => {
            let csv = monoid.to_csv();
            ctx.out.extend_from_slice(csv.as_bytes());
        }
        Report::Text => {
            ctx.line(format!("{} classes up to dimension {}", monoid.len(), args.max_dim));
            for c in monoid.classes() {
                let rows: Vec<String> = (0..c.dim)
                    .map(|i| {
                        let r: Vec<String> =
                            c.representative.row(i).iter().map(|&e| label(ctx, &a, e)).collect();
                        format!("[{}]", r.join(","))
                    })
                    .collect();
                ctx.line(format!(
                    "  class {}: dim {}, {} elements, representative [{}]",
                    c.id,
                    c.dim,
                    c.size,
                    rows.join(",")
                ));
            }
            ctx.line(format!("sums closed within the scan: {}", yes(monoid.is_closed())));
        }
    }
    Ok(Status::Pass)
}
