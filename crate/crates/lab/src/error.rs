use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid config: {0}")]
    Config(String),
    #[error("cannot read config {path}: {source}")]
    ConfigFile { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Core(#[from] hardy_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl LabError {
    /// Errors a user fixes by editing the config or its function specs.
    pub fn is_config_error(&self) -> bool {
        matches!(self, Self::Parse { .. } | Self::Config(_) | Self::ConfigFile { .. } | Self::Toml(_) | Self::Core(_))
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
