use std::path::PathBuf;

use kampen_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for anything wrong with the input, 3 when a size guard trips.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::ResourceCap { .. }) => 3,
            _ => 2,
        }
    }
}
