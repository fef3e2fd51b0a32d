use clap::Args;
use luka_core::sheaf::mv_global_sections;

use super::{set_label, AlgebraArgs};
use crate::commands::mv::yes;
use crate::{CliError, Context, Entry, Registry, Status};

pub fn register(r: &mut Registry) {
    r.register(Entry::new(
        "sheaf",
        "sections",
        "Stalks at the prime ideals of the join-odot reduct and the global-section isomorphism",
        sections,
    ));
}

#[derive(Args, Debug)]
struct SectionsArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
}

fn sections(args: &SectionsArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    let rec = mv_global_sections(&a).map_err(CliError::failed)?;
    ctx.line(format!("{} prime ideals", rec.stalks.len()));
    for s in &rec.stalks {
        ctx.line(format!(
            "  prime {}: stalk of {} elements, local {}, MV-semiring {}",
            set_label(ctx, &a, &s.prime),
            s.size,
            yes(s.local),
            yes(s.mv)
        ));
    }
    ctx.line(format!("phi isomorphism: {}", yes(rec.phi_isomorphism)));
    ctx.line(format!("sections form an MV-semiring: {}", yes(rec.sections_mv)));
    ctx.line(format!("transported tables match: {}", yes(rec.tables_match)));
    Ok(Status::from_bool(rec.passed()))
}
