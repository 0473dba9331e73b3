//! Error taxonomy of the command-line front end.
//!
//! Every failure is reported as one machine-readable JSON object on
//! stderr and mapped to a process exit code:
//!
//! * `schema` (exit 2) — malformed or empty input files, header or
//!   schema-version mismatches, and invalid argument values;
//! * `tolerance` (exit 1) — well-formed inputs whose numbers violate a
//!   requested tolerance or a mathematical precondition (e.g. a window
//!   whose spectrum exceeds the declared band limit);
//! * `internal` (exit 1) — I/O failures on output paths and library
//!   errors that do not trace back to user data.
//!
//! Exit code 0 means every requested computation ran and every
//! requested tolerance was met.

use std::fmt;

/// Failure class; decides both the JSON `kind` field and the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Schema,
    Tolerance,
    Internal,
}

impl Kind {
    fn as_str(self) -> &'static str {
        match self {
            Kind::Schema => "schema",
            Kind::Tolerance => "tolerance",
            Kind::Internal => "internal",
        }
    }
}

/// A failure carrying its class and a human-oriented message. The
/// message is free text; the class and exit code are the contract.
#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn schema(message: impl Into<String>) -> Self {
        Self { kind: Kind::Schema, message: message.into() }
    }

    pub fn tolerance(message: impl Into<String>) -> Self {
        Self { kind: Kind::Tolerance, message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self { kind: Kind::Internal, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            Kind::Schema => 2,
            Kind::Tolerance | Kind::Internal => 1,
        }
    }

    /// Prints the error as one JSON object on stderr.
    pub fn emit(&self) {
        let payload = serde_json::json!({
            "schema": 1,
            "error": { "kind": self.kind.as_str(), "message": self.message },
        });
        eprintln!("{payload}");
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.as_str(), self.message)
    }
}

impl std::error::Error for CliError {}

pub type Result<T> = std::result::Result<T, CliError>;

/// Prints a non-fatal warning as one JSON object on stderr (the
/// command still runs to completion and can still exit 0).
pub fn warn(kind: &str, message: &str) {
    let payload = serde_json::json!({
        "schema": 1,
        "warning": { "kind": kind, "message": message },
    });
    eprintln!("{payload}");
}

/// Wraps a library error raised while *computing* on already-validated
/// inputs (as opposed to while validating them).
pub fn from_library(context: &str, err: radial_mra::error::Error) -> CliError {
    CliError::internal(format!("{context}: {err}"))
}

/// Wraps a library error raised by feeding user data into a
/// constructor: the file parsed, but its numbers violate the
/// documented preconditions.
pub fn data_violation(context: &str, err: radial_mra::error::Error) -> CliError {
    CliError::tolerance(format!("{context}: {err}"))
}

/// Wraps an I/O error on an input path.
pub fn read_failure(path: &std::path::Path, err: impl fmt::Display) -> CliError {
    CliError::schema(format!("cannot read {}: {err}", path.display()))
}

/// Wraps an I/O error on an output path.
pub fn write_failure(path: &std::path::Path, err: impl fmt::Display) -> CliError {
    CliError::internal(format!("cannot write {}: {err}", path.display()))
}
