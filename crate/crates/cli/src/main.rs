use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

/// Rough-set approximations and the matroids induced by them.
#[derive(Debug, Parser)]
#[command(name = "roughmat", version)]
pub struct Cli {
    /// Instance file (TOML with `universe` and `blocks`).
    #[arg(short, long, global = true)]
    pub instance: Option<PathBuf>,

    /// Emit JSON on stdout; `verify` also writes its text report to stderr.
    #[arg(long, global = true)]
    pub json: bool,

    /// Override every verification size cap.
    #[arg(long, global = true, value_name = "N")]
    pub cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lower or upper approximation of a set.
    Approx {
        which: Approximation,
        /// Element names of the set.
        elements: Vec<String>,
    },
    /// List a family of the induced matroid or its dual.
    Matroid { side: SideArg, family: FamilyArg },
    /// Rank of a set in the induced matroid or its dual.
    Rank {
        side: SideArg,
        elements: Vec<String>,
    },
    /// List a family of the dual contracted by a point or by its class.
    Contract {
        element: String,
        mode: ContractMode,
        family: FamilyArg,
    },
    /// Run every check on the instance.
    Verify,
    /// Print a random instance.
    Gen {
        /// Number of elements.
        #[arg(short, long)]
        n: usize,
        /// Number of blocks.
        #[arg(short, long)]
        blocks: usize,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Approximation {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Primal,
    Dual,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    Independents,
    Bases,
    Circuits,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ContractMode {
    Point,
    Class,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            eprint!("{}", outcome.stderr);
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.status)
        }
        Err(err) => {
            eprintln!("roughmat: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
