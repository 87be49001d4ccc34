use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use birestr::{Alphabet, ClosureBudget, Variety};
use birestr_cli::commands::{self, Model, Outcome, EXIT_ERROR};
use birestr_cli::{CliConfig, Format};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "birestr", version, about = "Word problems for free F-birestriction monoids")]
struct Cli {
    /// Generators, comma separated.
    #[arg(long, global = true, default_value = "x,y")]
    alphabet: String,
    #[arg(long, global = true, value_enum, default_value_t = VarietyArg::Free)]
    variety: VarietyArg,
    /// Maximum number of closure events.
    #[arg(long, global = true, default_value_t = ClosureBudget::DEFAULT_EVENTS)]
    budget: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write a Graphviz rendering of the result here.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Write the closure trace here.
    #[arg(long, global = true)]
    trace: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether two terms are equal in the chosen variety.
    Decide { left: String, right: String },
    /// Close the linear automaton of a word over X ∪ X̄⁺.
    Closure { word: String },
    /// Decide whether a word is idempotent in the universal inverse monoid.
    Idempotent { word: String },
    /// Evaluate a term to its coordinates.
    Eval {
        term: String,
        #[arg(long, value_enum, default_value_t = ModelArg::Coords)]
        model: ModelArg,
    },
    /// Print the Munn tree of a word over X ∪ X⁻¹.
    Munn { word: String },
    /// Run a seeded invariant suite.
    Suite {
        /// identities, dmap, oracle, confluence, eunitary or perfect-crosscheck
        name: String,
    },
    /// Compare the two perfect models on a pair, or on seeded random pairs.
    Crosscheck { left: Option<String>, right: Option<String> },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VarietyArg {
    Free,
    Ls,
    Rs,
    S,
    P,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModelArg {
    Coords,
    Cayley,
    Fbr,
}

impl Cli {
    fn config(&self) -> Result<CliConfig> {
        let variety = match self.variety {
            VarietyArg::Free => Variety::Free,
            VarietyArg::Ls => Variety::Ls,
            VarietyArg::Rs => Variety::Rs,
            VarietyArg::S => Variety::S,
            VarietyArg::P => Variety::P,
        };
        let mut config = CliConfig::new(Alphabet::parse(&self.alphabet)?, variety);
        config.budget = ClosureBudget::new(self.budget)?;
        config.seed = self.seed;
        config.format = match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        };
        config.dot = self.dot.clone();
        config.trace = self.trace.clone();
        Ok(config)
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let config = cli.config()?;
    match &cli.command {
        Command::Decide { left, right } => commands::cmd_decide(left, right, &config),
        Command::Closure { word } => commands::cmd_closure(word, &config),
        Command::Idempotent { word } => commands::cmd_idempotent(word, &config),
        Command::Eval { term, model } => {
            let model = match model {
                ModelArg::Coords => Model::Coords,
                ModelArg::Cayley => Model::Cayley,
                ModelArg::Fbr => Model::Fbr,
            };
            commands::cmd_eval(term, model, &config)
        }
        Command::Munn { word } => commands::cmd_munn(word, &config),
        Command::Suite { name } => commands::cmd_suite(name, &config),
        Command::Crosscheck { left, right } => match (left, right) {
            (Some(l), Some(r)) => commands::cmd_crosscheck(Some((l, r)), &config),
            (None, None) => commands::cmd_crosscheck(None, &config),
            _ => anyhow::bail!("crosscheck takes two terms or none"),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
