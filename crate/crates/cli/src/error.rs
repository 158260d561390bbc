use clifperm::decomp::DecompError;
use clifperm::search6::SearchError;
use clifperm::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    /// 0 success, 1 other failure, 2 parse or unsupported input, 3 not C₃,
    /// 4 not semi-Clifford, 5 internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) | CliError::Decomp(DecompError::Core(e)) => core_code(e),
            CliError::Decomp(DecompError::NotC3(_)) => 3,
            CliError::Decomp(DecompError::NotSemiClifford) => 4,
            CliError::Search(SearchError::CertificationFailure { .. }) => 5,
            _ => 1,
        }
    }
}

fn core_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnsupportedGate(_) => 2,
        Error::InternalInvariant(_) | Error::IntegerOverflow => 5,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes() {
        let parse = Error::Parse {
            line: 1,
            message: "x".into(),
        };
        assert_eq!(CliError::from(parse).exit_code(), 2);
        assert_eq!(CliError::from(DecompError::NotSemiClifford).exit_code(), 4);
        let inv = DecompError::Core(Error::InternalInvariant("x".into()));
        assert_eq!(CliError::from(inv).exit_code(), 5);
        assert_eq!(
            CliError::ChecksFailed {
                failed: 1,
                total: 2
            }
            .exit_code(),
            1
        );
    }
}
