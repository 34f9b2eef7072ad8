use std::fmt;
use std::path::Path;

use hierseg::{Error, FormatError, FormatErrorKind};

/// A failed command. `class` is a stable dotted identifier meant for scripts;
/// `message` is for people.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub class: String,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            class: "usage".into(),
            message: message.into(),
            exit_code: 2,
        }
    }

    pub fn io(op: &str, path: &Path, err: std::io::Error) -> Self {
        Self {
            class: format!("io.{op}"),
            message: format!("{}: {err}", path.display()),
            exit_code: 3,
        }
    }

    pub fn format(path: &Path, err: FormatError) -> Self {
        let kind = match err.kind {
            FormatErrorKind::BadMagic => "bad_magic",
            FormatErrorKind::MalformedHeader => "malformed_header",
            FormatErrorKind::UnsupportedMaxval(_) => "unsupported_maxval",
            FormatErrorKind::Truncated => "truncated",
            FormatErrorKind::SampleOutOfRange => "sample_out_of_range",
            FormatErrorKind::BadDimensions => "bad_dimensions",
            FormatErrorKind::Syntax(_) => "syntax",
        };
        Self {
            class: format!("format.{kind}"),
            message: format!("{}: {err}", path.display()),
            exit_code: 4,
        }
    }

    pub fn input(err: Error) -> Self {
        let kind = match err {
            Error::InvalidInput(_) => "invalid",
            Error::SelfLoop { .. } => "self_loop",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::DuplicateEdge { .. } => "duplicate_edge",
            Error::NoPath(..) => "no_path",
            Error::UnsupportedTopology => "unsupported_topology",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::TooLarge(_) => "too_large",
        };
        Self {
            class: format!("input.{kind}"),
            message: err.to_string(),
            exit_code: 5,
        }
    }

    pub fn violation(property: &str, message: impl Into<String>) -> Self {
        Self {
            class: format!("property.{property}"),
            message: message.into(),
            exit_code: 1,
        }
    }
}

impl fmt::Display for CliError {
    /// Single line: `error class=<class> message="<text>"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = self.message.replace(['\n', '\r'], " ").replace('"', "'");
        write!(f, "error class={} message=\"{}\"", self.class, msg)
    }
}

impl std::error::Error for CliError {}
