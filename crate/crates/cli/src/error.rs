use thiserror::Error;

/// Everything that makes an invocation fail. All variants are input or
/// guard problems; mathematical outcomes are never errors.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] phicycle_core::Error),

    #[error("invalid graph document: {0}")]
    Schema(String),

    #[error("{0}")]
    Input(String),

    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}
