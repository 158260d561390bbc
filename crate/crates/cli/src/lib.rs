//! Library side of the `clifperm` command-line tool. Each command returns a
//! serializable report; `main` only parses arguments and prints.

mod analyze;
mod error;
mod paper;
mod search;

pub use analyze::{
    analyze, anf_report, decompose, AnalysisReport, AnfReport, Certificate, Coordinate,
    DecompositionReport, LevelFlag, Mode, Witness,
};
pub use error::CliError;
pub use paper::{commutation_check, verify_paper, Check, Checklist, PaperFixtures};
pub use search::{search6, Search6Output, SubgroupCount, CROSS_CHECK_SEED};

use clifperm::Circuit;

/// Environment variable giving the default search thread count.
pub const THREADS_ENV: &str = "CLIFPERM_THREADS";

pub fn read_circuit(path: &std::path::Path) -> Result<Circuit, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(Circuit::parse(&text)?)
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
