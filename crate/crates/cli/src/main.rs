use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use clifperm::SignedPermGate;
use clifperm_cli::{
    analyze, anf_report, decompose, read_circuit, search6, verify_paper, CliError, Mode,
    PaperFixtures, THREADS_ENV,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "clifperm",
    version,
    about = "Clifford hierarchy tools for permutation gates"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomials, hierarchy flags and semi-Clifford verdict of a circuit.
    Analyze {
        file: PathBuf,
        /// Also test membership in level k.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Algebraic normal form of every output coordinate.
    Anf {
        file: PathBuf,
        /// Use the inverse gate.
        #[arg(long)]
        inverse: bool,
    },
    /// Split a permutation as phi1 . mu . phi2 with affine phis.
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "staircase")]
        mode: Mode,
    },
    /// Re-check the published results on the bundled circuits.
    VerifyPaper {
        /// Include the exhaustive six-qubit search.
        #[arg(long)]
        full: bool,
        #[arg(long, env = THREADS_ENV)]
        threads: Option<usize>,
        /// Replacement circuit for G.
        #[arg(long)]
        g: Option<PathBuf>,
        /// Replacement circuit for F.
        #[arg(long)]
        f: Option<PathBuf>,
        /// Replacement circuit for R.
        #[arg(long)]
        r: Option<PathBuf>,
    },
    /// Exhaustive search over six-qubit staircase circuits.
    Search6 {
        #[arg(long, env = THREADS_ENV)]
        threads: Option<usize>,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare against the general semi-Clifford test on K sampled masks.
        #[arg(long, value_name = "K")]
        cross_check_sample: Option<usize>,
    },
}

fn emit<T: Serialize + std::fmt::Display>(json: bool, value: &T) -> Result<(), CliError> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{value}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let json = cli.json;
    match cli.command {
        Command::Analyze { file, level } => emit(json, &analyze(&read_circuit(&file)?, level)?),
        Command::Anf { file, inverse } => {
            let mut u = SignedPermGate::from_circuit(&read_circuit(&file)?)?;
            if inverse {
                u = u.inverse();
            }
            emit(json, &anf_report(&u))
        }
        Command::Decompose { file, mode } => {
            let report = decompose(&read_circuit(&file)?, mode)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.text);
            }
            Ok(())
        }
        Command::VerifyPaper {
            full,
            threads,
            g,
            f,
            r,
        } => {
            let mut fx = PaperFixtures::default();
            for (slot, path) in [(&mut fx.g, g), (&mut fx.f, f), (&mut fx.r, r)] {
                if let Some(p) = path {
                    *slot = read_circuit(&p)?;
                }
            }
            let threads = threads.unwrap_or_else(clifperm_cli::default_threads);
            let checklist = verify_paper(&fx, full.then_some(threads));
            emit(json, &checklist)?;
            if checklist.passed() {
                Ok(())
            } else {
                Err(CliError::ChecksFailed {
                    failed: checklist.failed(),
                    total: checklist.checks.len(),
                })
            }
        }
        Command::Search6 {
            threads,
            out,
            cross_check_sample,
        } => {
            let threads = threads.unwrap_or_else(clifperm_cli::default_threads);
            let output = search6(threads, cross_check_sample)?;
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&output)?;
                std::fs::write(&path, text).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            emit(json, &output)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
