//! `hpa`: verify structure-constant bundles and run globalization and duality
//! pipelines on them or on the built-in examples.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hpa_core::exactlin::Field;

#[derive(Parser, Debug)]
#[command(name = "hpa", version, about = "Exact partial Hopf (co)action computations")]
pub struct Cli {
    /// Base field for built-in fixtures: `q` or `fp:<p>`.
    #[arg(long, global = true, default_value = "q")]
    pub field: Field,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Human,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// JSON bundle of structure constants.
    pub bundle: Option<PathBuf>,
    /// Use a fixture instead of a bundle file (see `examples list`).
    #[arg(long, conflicts_with = "bundle")]
    pub fixture: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Action,
    Coaction,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every structure present in a bundle.
    Verify {
        #[command(flatten)]
        input: Input,
    },
    /// Build the enveloping (co)action of a partial one.
    Globalize {
        #[arg(long, value_enum)]
        mode: Mode,
        #[command(flatten)]
        input: Input,
        /// Also write the globalization as a fresh bundle.
        #[arg(long)]
        emit_bundle: Option<PathBuf>,
    },
    /// Smash product of a partial or global action.
    Smash {
        #[arg(long, conflicts_with = "global", required_unless_present = "global")]
        partial: bool,
        #[arg(long)]
        global: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Duality isomorphisms for a globalized partial action.
    Duality {
        #[command(subcommand)]
        which: Duality,
    },
    /// Turn an `H`-coaction into an `H*`-action or back.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        emit_bundle: Option<PathBuf>,
    },
    /// The built-in worked examples.
    Examples {
        #[command(subcommand)]
        which: Examples,
    },
}

#[derive(Subcommand, Debug)]
pub enum Duality {
    /// `(B # H) # H* ≅ B ⊗ End(H)` with the idempotent decomposition.
    Bm {
        #[command(flatten)]
        input: Input,
    },
    /// The matrix form `(B # kG) # kG* ≅ M_n(B)` for group algebras.
    Cm {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand, Debug)]
pub enum Examples {
    List,
    Run {
        #[arg(long)]
        id: String,
    },
    /// Print a fixture as a bundle.
    Export {
        #[arg(long)]
        id: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Human => report.to_human(),
            };
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).map_err(anyhow::Error::from),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let verification = e.downcast_ref::<hpa_core::Error>().is_some_and(|e| e.is_verification_failure());
            ExitCode::from(if verification { 1 } else { 2 })
        }
    }
}
