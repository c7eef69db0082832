//! Command reports, exit codes and terminal styling.

use std::io::IsTerminal;
use std::time::Duration;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MATRIX: i32 = 3;
pub const EXIT_PROPERTY: i32 = 4;

/// Hex SHA-256 of the input bytes.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Exit code for a library error.
pub fn exit_code(err: &twostab::Error) -> i32 {
    use twostab::Error::*;
    match err {
        Io(_) | Json(_) | Parse { .. } | Rational(_) => EXIT_IO,
        Matrix { .. } | Placement { .. } => EXIT_MATRIX,
        _ => EXIT_INVALID,
    }
}

/// What a command did. Human text goes to stdout; this goes to stderr as one
/// JSON line whenever the exit code is nonzero, and to `--report` if given.
#[derive(Debug)]
pub struct CommandReport {
    pub command: &'static str,
    pub input_digest: Option<String>,
    pub results: Value,
    pub exit_code: i32,
    pub elapsed: Duration,
    pub error: Option<String>,
}

impl CommandReport {
    pub fn new(command: &'static str) -> Self {
        CommandReport {
            command,
            input_digest: None,
            results: json!({}),
            exit_code: EXIT_OK,
            elapsed: Duration::ZERO,
            error: None,
        }
    }

    pub fn fail(&mut self, code: i32, msg: impl Into<String>) {
        self.exit_code = code;
        self.error = Some(msg.into());
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.results[key] = value;
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "exit_code": self.exit_code,
            "elapsed_ms": self.elapsed.as_secs_f64() * 1000.0,
            "error": self.error,
        })
    }
}

/// ANSI styling for verdict words, off when `TWOSTAB_NO_COLOR` is set or
/// stdout is not a terminal.
pub struct Style {
    on: bool,
}

impl Style {
    pub fn detect() -> Self {
        Style { on: std::env::var_os("TWOSTAB_NO_COLOR").is_none() && std::io::stdout().is_terminal() }
    }

    fn paint(&self, s: &str, code: &str) -> String {
        if self.on {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn ok(&self, s: &str) -> String {
        self.paint(s, "32")
    }

    pub fn bad(&self, s: &str) -> String {
        self.paint(s, "31")
    }
}
