use crate::expr::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("in {what}: {err}")]
    Parse { what: String, err: ParseError },
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] nonint_core::Error),
    #[error("{path}: {err}")]
    Io { path: String, err: std::io::Error },
}

impl CliError {
    pub fn parse(what: &str, err: ParseError) -> Self {
        CliError::Parse { what: what.to_string(), err }
    }
}
