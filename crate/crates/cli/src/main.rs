mod commands;
mod group;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use spinor_core::Error;

#[derive(Parser, Debug)]
#[command(name = "spinor", version, about = "Decide whether orthogonal representations lift to the spin group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    ClosedForm,
    LOracle,
}

#[derive(clap::Args, Debug)]
pub struct Common {
    /// Catalog name (SL8/4, PGL2, Sp16/2, SO7, G+16, E7ad, …) or a JSON group file.
    #[arg(long)]
    group: String,
    /// Weight in ambient coordinates, e.g. `1,0,-1` or `1/2,1/2`; prefix `S:` for a hyperbolic block.
    #[arg(long = "weight", allow_hyphen_values = true)]
    weights: Vec<String>,
    /// Read weights as Dynkin labels instead of ambient coordinates.
    #[arg(long)]
    labels: bool,
    /// Freudenthal dimension guard (defaults to SPINOR_GUARD, else 10^6).
    #[arg(long)]
    guard: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verdict and parity certificate for each weight (or their sum with --sum).
    Check {
        #[command(flatten)]
        common: Common,
        /// Treat all weights as summands of one representation.
        #[arg(long)]
        sum: bool,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: MethodArg,
    },
    /// p(ν̲) and dimension/Casimir rows; for type D with n even, compared with the tabulated formulas.
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Compare L mod 2, the weight-sum q, the closed form and the Weyl sum over a box.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box", default_value_t = 2)]
        box_bound: u64,
    },
    /// Periodicity scan: violations of the 2^k shift rule inside a box.
    Atlas {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box", default_value_t = 16)]
        box_bound: u64,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Write the verdict grid as CSV.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Check the known all-spinorial prediction for a catalog group.
    Summary {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box", default_value_t = 2)]
        box_bound: u64,
    },
}

/// 2 = bad input, 3 = integrality violation, 4 = guard exceeded.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Integrality(_) => 3,
        Error::GuardExceeded { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { common, sum, method } => commands::check(&common, sum, method),
        Command::Table { common } => commands::table(&common),
        Command::Oracle { common, box_bound } => commands::oracle(&common, box_bound),
        Command::Atlas { common, box_bound, k, plot } => commands::atlas(&common, box_bound, k, plot.as_deref()),
        Command::Summary { common, box_bound } => commands::summary(&common, box_bound),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Integrality("q = 1/2".into())), 3);
        assert_eq!(exit_code(&Error::GuardExceeded { dim: "10".into(), guard: 5 }), 4);
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
    }
}
