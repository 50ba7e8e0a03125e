use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    BadConfig(String),
    #[error("generation failed: {0}")]
    Generation(#[from] kirchhoff::Error),
    #[error("io failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("records mix series or are empty; plot needs one mode and one base graph")]
    MixedSeries,
    #[error("csv parse error at line {line}: {message}")]
    CsvParse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, CliError>;
