//! File formats and command front end for the `csdc` unitary compiler.
//!
//! * [`matrix_file`]: dense complex matrices as text.
//! * [`seo_file`]: SEO programs, one instruction per line.
//! * [`run`]: the `compile`, `decompile` and `verify` workflows.

pub mod matrix_file;
pub mod run;
pub mod seo_file;

use std::fmt;

/// A malformed input line; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}
