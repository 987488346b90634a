//! Command-line front end.
//!
//! Exit codes: 0 when every non-report-only check passes, 1 on a check
//! failure, 2 on usage or input-parse errors.

mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use commands::FieldChoice;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "palatini",
    version,
    about = "Exact verification of Palatini quartic invariants"
)]
struct Cli {
    /// Emit the report as a single JSON document
    #[arg(long, global = true)]
    json: bool,
    /// Omit per-check wall-clock timings (reports become byte-reproducible)
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the classical degenerate-example suite over Q
    Fixture,
    /// Draw seeded random systems and verify the generic profile
    Random {
        /// Seed of the first system; system i uses seed + i
        #[arg(long)]
        seed: u64,
        /// Prime modulus for F_p arithmetic
        #[arg(long, default_value_t = 32003, value_parser = parse_prime)]
        prime: u64,
        /// Number of systems to draw
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Coefficient field of the drawn systems
        #[arg(long, value_enum, default_value_t = FieldArg::Fp)]
        field: FieldArg,
    },
    /// Verify a skew system read from a JSON file
    Verify { path: PathBuf },
    /// Check the enumerative invariant table
    Enumerative {
        /// Also evaluate the resolution chi at this degree
        #[arg(long)]
        degree: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FieldArg {
    Fp,
    Q,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|e| format!("{e}"))?;
    palatini::Field::prime(p).map_err(|e| e.to_string())?;
    Ok(p)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let timings = !cli.no_timings;
    let report = match cli.command {
        Command::Fixture => commands::cmd_fixture(timings),
        Command::Random {
            seed,
            prime,
            count,
            field,
        } => {
            let choice = match field {
                FieldArg::Fp => FieldChoice::Fp,
                FieldArg::Q => FieldChoice::Q,
            };
            commands::cmd_random(seed, prime, count, choice, timings)
        }
        Command::Verify { path } => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            };
            match commands::cmd_verify(&text, timings) {
                Ok(rep) => rep,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            }
        }
        Command::Enumerative { degree } => commands::cmd_enumerative(degree, timings),
    };
    print!("{}", report.render(cli.json));
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
