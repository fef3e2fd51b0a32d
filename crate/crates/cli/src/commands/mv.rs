use std::path::PathBuf;

use clap::{Args, ValueEnum};
use luka_core::ktheory::MATRIX_SCAN_CAP;
use luka_core::mv::{check_axioms, DerivedOp, FiniteMv, UnitInterval, DEFAULT_GRID};
use luka_core::semimodule::{idempotent_matrices, is_strong, parse_module, FiniteSemimodule};
use luka_core::semiring::{recognize_mv_semiring, reconstruct_mv, reducts, MinPlusSemifield, Tropical};
use num_bigint::BigInt;

use super::{label, parse_labels, read_text, set_label, table, AlgebraArgs, Loaded};
use crate::{CliError, Context, Entry, Registry, Status};

pub fn register(r: &mut Registry) {
    r.register(Entry::new("mv", "axioms", "Check MV1-MV9, the alternative MV5/MV6 and De Morgan laws", axioms))
        .register(Entry::new("mv", "center", "Boolean center (idempotent elements)", center))
        .register(Entry::new("mv", "ideal", "List ideals, or the ideal generated by some elements", ideal))
        .register(Entry::new("mv", "spec", "Prime and maximal ideals, of the algebra or of its semiring reduct", spec))
        .register(Entry::new("mv", "quotient", "Quotient by an ideal", quotient))
        .register(Entry::new("mv", "reduct", "Semiring reducts, MV-semiring recognition and reconstruction", reduct))
        .register(Entry::new("mv", "gamma", "Truncation map of the min-plus semifield with unit U", gamma))
        .register(Entry::new("mv", "matrix", "Idempotent square matrices over the join-odot reduct", matrix))
        .register(Entry::new("mv", "strong", "Decide whether a semimodule of the algebra is strong", strong));
}

#[derive(Args, Debug)]
struct AxiomsArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Grid denominator used to sample the unit interval
    #[arg(long, value_name = "Q", default_value_t = DEFAULT_GRID)]
    grid: u32,
}

fn axioms(args: &AxiomsArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let (rows, ok) = match args.algebra.load()? {
        Loaded::Finite(a) => {
            let all: Vec<usize> = a.elements().collect();
            let report = check_axioms(&a, &all);
            let rows: Vec<(String, usize, Option<String>)> = report
                .results
                .iter()
                .map(|r| {
                    let w = r.witness.as_ref().map(|w| {
                        w.iter().map(|&x| label(ctx, &a, x)).collect::<Vec<_>>().join(", ")
                    });
                    (r.law.name().to_string(), r.checked, w)
                })
                .collect();
            (rows, report.all_pass())
        }
        Loaded::Unit => {
            if args.grid == 0 {
                return Err(CliError::Usage("--grid must be positive".into()));
            }
            let u = UnitInterval::<BigInt>::new();
            let sample = u.grid(args.grid);
            ctx.line(format!("sampling [0, 1] on the grid of denominator {}", args.grid));
            let report = check_axioms(&u, &sample);
            let rows = report
                .results
                .iter()
                .map(|r| {
                    let w = r
                        .witness
                        .as_ref()
                        .map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
                    (r.law.name().to_string(), r.checked, w)
                })
                .collect();
            (rows, report.all_pass())
        }
    };
    for (name, checked, witness) in rows {
        match witness {
            None => ctx.line(format!("{name:<9} pass  ({checked} assignments)")),
            Some(w) => ctx.line(format!("{name:<9} FAIL  at ({w})")),
        }
    }
    ctx.line(if ok { "all laws pass" } else { "some laws fail" });
    Ok(Status::from_bool(ok))
}

#[derive(Args, Debug)]
struct FiniteArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
}

fn center(args: &FiniteArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    let b = a.boolean_center();
    ctx.line(format!("boolean center: {} ({} elements)", set_label(ctx, &a, &b), b.len()));
    Ok(Status::Pass)
}

#[derive(Args, Debug)]
struct IdealArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Comma-separated elements; print the ideal they generate
    #[arg(long, value_name = "LABELS")]
    generated_by: Option<String>,
}

fn ideal(args: &IdealArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    if let Some(seed) = &args.generated_by {
        let seed = parse_labels(&a, seed)?;
        let i = a.ideal_generated(&seed);
        ctx.line(format!("generated ideal: {}", set_label(ctx, &a, i.elements())));
        return Ok(Status::Pass);
    }
    let ideals = a.ideals();
    ctx.line(format!("{} ideals", ideals.len()));
    for i in &ideals {
        let tag = if !i.is_proper() {
            " (improper)"
        } else if a.is_prime_ideal(i) {
            " (prime)"
        } else {
            ""
        };
        ctx.line(format!("{}{tag}", set_label(ctx, &a, i.elements())));
    }
    Ok(Status::Pass)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Mv,
    Semiring,
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// MV-ideals of the algebra, or ideals of its join-odot semiring reduct
    #[arg(long, value_enum, default_value_t = Which::Mv)]
    which: Which,
}

fn spec(args: &SpecArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    match args.which {
        Which::Mv => {
            let s = a.spectra();
            ctx.line(format!("prime ideals: {}", s.prime.len()));
            for p in s.prime_ideals() {
                ctx.line(format!("  {}", set_label(ctx, &a, p.elements())));
            }
            ctx.line(format!("maximal ideals: {}", s.maximal.len()));
            for m in s.maximal_ideals() {
                ctx.line(format!("  {}", set_label(ctx, &a, m.elements())));
            }
            ctx.line(format!("radical: {}", set_label(ctx, &a, s.radical.elements())));
        }
        Which::Semiring => {
            let s = reducts(&a).map_err(CliError::failed)?.join_odot;
            let r = s.r_spec();
            ctx.line(format!("semiring ideals: {}", r.ideals.len()));
            ctx.line(format!("prime ideals: {}", r.prime.len()));
            for p in r.prime_ideals() {
                ctx.line(format!("  {}", set_label(ctx, &a, p)));
            }
            ctx.line(format!("maximal ideals: {}", r.maximal.len()));
            for m in r.maximal_ideals() {
                ctx.line(format!("  {}", set_label(ctx, &a, m)));
            }
        }
    }
    Ok(Status::Pass)
}

#[derive(Args, Debug)]
struct QuotientArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Comma-separated elements of the ideal
    #[arg(long, value_name = "LABELS")]
    ideal: String,
}

fn quotient(args: &QuotientArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    let members = parse_labels(&a, &args.ideal)?;
    let q = a.quotient(&members).map_err(CliError::usage)?;
    let b = q.algebra();
    ctx.line(format!("{} classes", b.len()));
    for c in b.elements() {
        ctx.line(format!("  {} = {}", label(ctx, b, c), set_label(ctx, &a, &q.class_members(c))));
    }
    for l in table(ctx, b, "⊕", |x, y| b.oplus_ix(x, y)) {
        ctx.line(l);
    }
    Ok(Status::Pass)
}

fn reduct(args: &FiniteArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    let r = reducts(&a).map_err(CliError::failed)?;
    ctx.line("join-odot reduct:");
    for l in table(ctx, &a, "∨", |x, y| a.derived_ix(DerivedOp::Join, x, y)) {
        ctx.line(l);
    }
    for l in table(ctx, &a, "⊙", |x, y| a.derived_ix(DerivedOp::Odot, x, y)) {
        ctx.line(l);
    }
    ctx.line("meet-oplus reduct:");
    for l in table(ctx, &a, "∧", |x, y| a.derived_ix(DerivedOp::Meet, x, y)) {
        ctx.line(l);
    }
    for l in table(ctx, &a, "⊕", |x, y| a.oplus_ix(x, y)) {
        ctx.line(l);
    }
    ctx.line(format!("star is an isomorphism of the reducts: {}", yes(r.star.is_onto())));
    let star = match recognize_mv_semiring(&r.join_odot) {
        Ok(s) => s,
        Err(refusal) => {
            ctx.line(format!("recognition refused: {refusal}"));
            return Ok(Status::Fail);
        }
    };
    let rebuilt = reconstruct_mv(&r.join_odot, &star).map_err(CliError::failed)?;
    let same = rebuilt.oplus_table() == a.oplus_table() && rebuilt.star_table() == a.star_table();
    ctx.line(format!("recognized negation: {}", fmt_map(ctx, &a, &star)));
    ctx.line(format!("reconstructed tables match: {}", yes(same)));
    Ok(Status::from_bool(same))
}

fn fmt_map(ctx: &Context<'_>, a: &FiniteMv, map: &[usize]) -> String {
    map.iter()
        .enumerate()
        .map(|(x, &y)| format!("{}->{}", label(ctx, a, x), label(ctx, a, y)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Args, Debug)]
struct GammaArgs {
    /// Strong unit u > 0
    #[arg(long, value_name = "U")]
    unit: BigInt,
    /// Integer or `top`
    #[arg(long, value_name = "VALUE", allow_hyphen_values = true)]
    eval: Vec<Tropical>,
    /// Check preservation of min and of + on the sample -u..2u and top
    #[arg(long)]
    check_laws: bool,
}

fn gamma(args: &GammaArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let f = MinPlusSemifield::new(args.unit.clone()).map_err(CliError::usage)?;
    for v in &args.eval {
        ctx.line(format!("gamma({v}) = {}", f.gamma(v)));
    }
    if !args.check_laws {
        return Ok(Status::Pass);
    }
    let t = f.gamma_truncate().map_err(CliError::failed)?;
    let u = t.unit() as i64;
    let mut sample: Vec<Tropical> = (-u..=2 * u).map(Tropical::int).collect();
    sample.push(Tropical::Top);
    let report = t.check_gamma_laws(&sample);
    ctx.line(format!("truncation is Chain({u}): {}", yes(t.algebra().oplus_table() == FiniteMv::chain(u as u32).oplus_table())));
    ctx.line(format!("pairs checked: {}", report.pairs_checked));
    ctx.line(format!("min preserved: {}", yes(report.meet_failures.is_empty())));
    ctx.line(format!("+ to ⊕ on the nonnegative cone: {}", yes(report.cone_failures.is_empty())));
    if let Some((a, b)) = report.negative_failures.first() {
        ctx.line(format!(
            "+ to ⊕ off the cone: fails on {} pairs, first ({a}, {b})",
            report.negative_failures.len()
        ));
    }
    Ok(Status::from_bool(report.holds_on_cone()))
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// List every idempotent N×N matrix
    #[arg(long, value_name = "N")]
    idempotent_scan: usize,
}

fn matrix(args: &MatrixArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    let ring = reducts(&a).map_err(CliError::failed)?.join_odot;
    let n = args.idempotent_scan;
    if n == 0 {
        return Err(CliError::Usage("--idempotent-scan must be positive".into()));
    }
    let total = (ring.len() as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX);
    if total > MATRIX_SCAN_CAP {
        return Err(CliError::Failed(format!("{total} matrices exceed the scan cap of {MATRIX_SCAN_CAP}")));
    }
    let found = idempotent_matrices(&ring, n);
    for u in &found {
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let r: Vec<String> = u.row(i).iter().map(|&e| label(ctx, &a, e)).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        ctx.line(format!("[{}]", rows.join(",")));
    }
    ctx.line(format!("{} idempotent of {total} matrices", found.len()));
    Ok(Status::Pass)
}

#[derive(Args, Debug)]
struct StrongArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Semimodule description (a `subset` line, or explicit tables)
    #[arg(long, value_name = "FILE")]
    module: PathBuf,
}

fn strong(args: &StrongArgs, ctx: &mut Context<'_>) -> Result<Status, CliError> {
    let a = args.algebra.finite()?;
    let ring = reducts(&a).map_err(CliError::failed)?.join_odot;
    let ambient = FiniteSemimodule::mv_join(&a, &ring).map_err(CliError::failed)?;
    let m = parse_module(&read_text(&args.module)?, &ambient).map_err(CliError::usage)?;
    ctx.line(format!("semimodule with {} elements", m.len()));
    match is_strong(&m, a.star_table()) {
        Ok(()) => {
            ctx.line("strong");
            Ok(Status::Pass)
        }
        Err(w) => {
            ctx.line(format!(
                "not strong: a = {}, b = {}, x = {}",
                label(ctx, &a, w.a),
                label(ctx, &a, w.b),
                m.label(w.x)
            ));
            Ok(Status::Fail)
        }
    }
}
