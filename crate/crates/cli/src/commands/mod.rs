mod k0;
mod logic;
mod ltb;
mod mv;
mod sheaf;

use std::path::{Path, PathBuf};

use clap::Args;
use luka_core::mv::{AlgebraSpec, FiniteMv};

use crate::{CliError, Context, Registry};

pub fn register_all(r: &mut Registry) {
    mv::register(r);
    logic::register(r);
    k0::register(r);
    sheaf::register(r);
    ltb::register(r);
}

// `--algebra chain:K | product:<spec>,<spec> | unit`, or a table file.
#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    /// Algebra spec: chain:K, product:<spec>,<spec>, or unit
    #[arg(long, value_name = "SPEC", required_unless_present = "file", conflicts_with = "file")]
    pub algebra: Option<String>,
    /// Algebra in the plain-text table format
    #[arg(long, value_name = "FILE")]
    pub file: Option<PathBuf>,
}

pub enum Loaded {
    Finite(FiniteMv),
    Unit,
}

impl AlgebraArgs {
    pub fn load(&self) -> Result<Loaded, CliError> {
        if let Some(path) = &self.file {
            let text = read_text(path)?;
            return FiniteMv::from_text(&text).map(Loaded::Finite).map_err(CliError::usage);
        }
        let text = self.algebra.as_deref().expect("clap enforces one source");
        let spec: AlgebraSpec = text.parse().map_err(CliError::usage)?;
        if spec.is_finite() {
            FiniteMv::from_spec(&spec).map(Loaded::Finite).map_err(CliError::usage)
        } else {
            Ok(Loaded::Unit)
        }
    }

    pub fn finite(&self) -> Result<FiniteMv, CliError> {
        match self.load()? {
            Loaded::Finite(a) => Ok(a),
            Loaded::Unit => Err(CliError::Usage("this command needs a finite algebra".into())),
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

pub fn label(ctx: &Context<'_>, a: &FiniteMv, i: usize) -> String {
    if ctx.decimal {
        a.decimal_label(i)
    } else {
        a.label(i).to_string()
    }
}

pub fn set_label(ctx: &Context<'_>, a: &FiniteMv, items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(|&i| label(ctx, a, i)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Comma-separated element labels, e.g. `0,1/2`.
pub fn parse_labels(a: &FiniteMv, text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for part in split_top_level(text) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(a.index_of(part).map_err(CliError::usage)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Splits on commas outside parentheses, so product labels like `(0,1)` survive.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

/// Square operation table with a header row.
pub fn table(ctx: &Context<'_>, a: &FiniteMv, op: &str, f: impl Fn(usize, usize) -> usize) -> Vec<String> {
    let labels: Vec<String> = a.elements().map(|i| label(ctx, a, i)).collect();
    let w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1).max(op.chars().count());
    let pad = |s: &str| format!("{s:>w$}");
    let mut lines = vec![format!("{} | {}", pad(op), labels.iter().map(|l| pad(l)).collect::<Vec<_>>().join(" "))];
    for x in a.elements() {
        let row: Vec<String> = a.elements().map(|y| pad(&labels[f(x, y)])).collect();
        lines.push(format!("{} | {}", pad(&labels[x]), row.join(" ")));
    }
    lines
}
