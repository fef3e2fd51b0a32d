use std::marker::PhantomData;

use clap::{ArgMatches, Args, FromArgMatches};

use crate::{CliError, Context, Status};

/// A subcommand `<family> <name>` that can be mounted into the root parser.
pub trait Command: Send + Sync {
    fn family(&self) -> &'static str;
    fn name(&self) -> &'static str;
    fn clap(&self) -> clap::Command;
    fn run(&self, matches: &ArgMatches, ctx: &mut Context<'_>) -> Result<Status, CliError>;
}

type Handler<A> = fn(&A, &mut Context<'_>) -> Result<Status, CliError>;

/// Adapts a typed argument struct and a handler to [`Command`].
pub struct Entry<A> {
    family: &'static str,
    name: &'static str,
    about: &'static str,
    handler: Handler<A>,
    _args: PhantomData<fn() -> A>,
}

impl<A> Entry<A> {
    pub fn new(family: &'static str, name: &'static str, about: &'static str, handler: Handler<A>) -> Self {
        Self {
            family,
            name,
            about,
            handler,
            _args: PhantomData,
        }
    }
}

impl<A: Args + FromArgMatches> Command for Entry<A> {
    fn family(&self) -> &'static str {
        self.family
    }

    fn name(&self) -> &'static str {
        self.name
    }

    fn clap(&self) -> clap::Command {
        A::augment_args(clap::Command::new(self.name)).about(self.about)
    }

    fn run(&self, matches: &ArgMatches, ctx: &mut Context<'_>) -> Result<Status, CliError> {
        let args = A::from_arg_matches(matches).map_err(|e| CliError::Usage(e.to_string()))?;
        (self.handler)(&args, ctx)
    }
}

#[derive(Default)]
pub struct Registry {
    commands: Vec<Box<dyn Command>>,
}

impl Registry {
    pub fn register(&mut self, cmd: impl Command + 'static) -> &mut Self {
        self.commands.push(Box::new(cmd));
        self
    }

    pub fn families(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for c in &self.commands {
            if !out.contains(&c.family()) {
                out.push(c.family());
            }
        }
        out
    }

    pub fn find(&self, family: &str, name: &str) -> Option<&dyn Command> {
        self.commands
            .iter()
            .find(|c| c.family() == family && c.name() == name)
            .map(|c| c.as_ref())
    }

    /// Root parser: one subcommand per family, each holding its commands.
    pub fn clap(&self, root: clap::Command) -> clap::Command {
        self.families().into_iter().fold(root, |root, fam| {
            let group = self
                .commands
                .iter()
                .filter(|c| c.family() == fam)
                .fold(
                    clap::Command::new(fam).about(family_about(fam)).subcommand_required(true),
                    |g, c| g.subcommand(c.clap()),
                );
            root.subcommand(group)
        })
    }
}

fn family_about(family: &str) -> &'static str {
    match family {
        "mv" => "Finite MV-algebras, their reducts and semimodules",
        "logic" => "Propositional formulas evaluated on finite chains",
        "k0" => "Projective classes and the K0 presentation",
        "sheaf" => "Stalks and global sections over the prime spectrum",
        "ltb" => "Fuzzy-transform image codec",
        _ => "",
    }
}
