//! The `luka` command line: one binary, five command families.
//!
//! Commands are registered as trait objects in a [`Registry`]; the root
//! parser is assembled from whatever is registered.

mod commands;
mod registry;

use std::io::Write;

use clap::{Arg, ArgAction, ArgMatches};
use thiserror::Error;

pub use registry::{Command, Entry, Registry};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed inputs. Exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The computation itself could not be carried out. Exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn failed(e: impl std::fmt::Display) -> Self {
        CliError::Failed(e.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

/// Verdict of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Per-invocation state handed to every command.
pub struct Context<'a> {
    pub out: &'a mut Vec<u8>,
    pub decimal: bool,
    pub seed: u64,
}

impl Context<'_> {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.out.extend_from_slice(s.as_ref().as_bytes());
        self.out.push(b'\n');
    }

    /// Exact `p/q` by default, a decimal under `--decimal`, marked `≈`
    /// when it does not terminate.
    pub fn ratio(&self, num: i64, den: i64) -> String {
        let r = num_rational::Ratio::new(num, den);
        if !self.decimal {
            return format!("= {r}");
        }
        let mut d = *r.denom();
        for p in [2, 5] {
            while d % p == 0 {
                d /= p;
            }
        }
        let sign = if d == 1 { "=" } else { "≈" };
        format!("{sign} {}", *r.numer() as f64 / *r.denom() as f64)
    }
}

/// Every command shipped with the binary.
pub fn registry() -> Registry {
    let mut r = Registry::default();
    commands::register_all(&mut r);
    r
}

fn root(reg: &Registry) -> clap::Command {
    let base = clap::Command::new("luka")
        .about("MV-algebras, their semiring reducts, semimodules, K0, sheaves and the ŁTB image codec")
        .subcommand_required(true)
        .arg(
            Arg::new("decimal")
                .long("decimal")
                .global(true)
                .action(ArgAction::SetTrue)
                .help("Print approximate decimals instead of exact fractions"),
        )
        .arg(
            Arg::new("threads")
                .long("threads")
                .global(true)
                .value_name("N")
                .value_parser(clap::value_parser!(usize))
                .help("Worker threads for block-parallel work (output does not depend on it)"),
        )
        .arg(
            Arg::new("seed")
                .long("seed")
                .global(true)
                .value_name("SEED")
                .value_parser(clap::value_parser!(u64))
                .default_value("0")
                .help("Seed for random trials"),
        );
    reg.clap(base)
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code: 0 pass, 1 domain-level failure, 2 usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let reg = registry();
    let matches = match root(&reg).try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let (family, fam_matches) = matches.subcommand().expect("subcommand required");
    let (name, sub_matches) = fam_matches.subcommand().expect("subcommand required");
    let cmd = reg.find(family, name).expect("parser only accepts registered commands");

    let mut buf = Vec::new();
    let result = match matches.get_one::<usize>("threads") {
        Some(&n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cmd, &matches, sub_matches, &mut buf)),
            Err(e) => Err(CliError::usage(format!("cannot start {n} threads: {e}"))),
        },
        None => execute(cmd, &matches, sub_matches, &mut buf),
    };
    let _ = out.write_all(&buf);
    match result {
        Ok(Status::Pass) => 0,
        Ok(Status::Fail) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: &dyn Command, root: &ArgMatches, sub: &ArgMatches, buf: &mut Vec<u8>) -> Result<Status, CliError> {
    let mut ctx = Context {
        out: buf,
        decimal: root.get_flag("decimal"),
        seed: *root.get_one::<u64>("seed").expect("defaulted"),
    };
    cmd.run(sub, &mut ctx)
}
