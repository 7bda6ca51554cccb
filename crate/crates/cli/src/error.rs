use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_INPUT_FORMAT: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Format(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Format(_) => EXIT_INPUT_FORMAT,
        }
    }

    pub fn io(path: impl std::fmt::Display, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_string(),
            source,
        }
    }
}

impl From<emergent_algebra::Error> for CliError {
    fn from(e: emergent_algebra::Error) -> Self {
        use emergent_algebra::Error as E;
        match e {
            E::UnknownModel(_) | E::EnumerationRange(_) | E::InvalidSchedule(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Format(e.to_string()),
        }
    }
}
