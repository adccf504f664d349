//! Library half of the `gpmyc` command-line tool: verification suites,
//! instance parsing, record schema, and report rendering. The binary in
//! `main.rs` is a thin argument layer over this crate.

pub mod instance;
pub mod records;
pub mod report;
pub mod suites;

/// Failure modes of the command-line tool, each with a distinct exit code:
/// verification failures themselves are not errors (the binary reports them
/// and exits 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed arguments or instance specs (exit 2).
    Usage(String),
    /// An instance exceeded a solver's order cap (exit 3).
    Cap(String),
    /// Reading or writing files failed (exit 4).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Cap(msg) => write!(f, "cap exceeded: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

// ===========================================================================
// tests
// ===========================================================================
