use std::fmt;

/// Exit code 1 for I/O problems, 2 for anything wrong with the inputs.
#[derive(Debug)]
pub enum CliError {
    Io(std::io::Error),
    Parse { line: usize, message: String },
    Invalid(modsel::Error),
    BadArgs(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            CliError::Invalid(e) => write!(f, "invalid input: {e}"),
            CliError::BadArgs(m) => write!(f, "{m}"),
        }
    }
}

impl From<modsel::Error> for CliError {
    fn from(e: modsel::Error) -> Self {
        CliError::Invalid(e)
    }
}
