use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Where in the input a parse error was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Position {
    /// 1-based line and column in a text input.
    Text { line: usize, column: usize },
    /// A path into a structured (JSON) document, e.g. `cycles[2][0]`.
    Path(String),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Text { line, column } => write!(f, "line {line}, column {column}"),
            Position::Path(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{position}: {message}")]
pub struct ParseError {
    pub position: Position,
    pub message: String,
}

impl ParseError {
    pub fn at_path(path: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            position: Position::Path(path.into()),
            message: message.into(),
        }
    }

    pub fn at_text(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            position: Position::Text { line, column },
            message: message.into(),
        }
    }

    /// Locate a byte offset of `text` as a 1-based line/column pair.
    pub fn at_offset(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let offset = offset.min(text.len());
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Self::at_text(line, column, message)
    }
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; the position is kept separately
        let msg = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let msg = msg.strip_suffix(&suffix).map(str::to_owned).unwrap_or(msg);
        ParseError::at_text(e.line(), e.column(), msg)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("curves live on pages with {left} and {right} holes")]
    PageMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("form is not negative definite")]
    NotNegativeDefinite,
    #[error("coefficient vector is not null-homologous on the page")]
    NotInKernel,
    #[error("the zero class carries no genus")]
    TrivialClass,
    #[error("vertex {vertex} has weight {weight}; expected a negative weight")]
    NonNegativeWeight { vertex: usize, weight: i64 },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid ADE type {0:?}")]
    InvalidAdeType(String),
    #[error("rational {0} is outside the open interval (0, 1)")]
    RationalOutOfRange(String),
    #[error("presentation has badness {0}; reduce it first")]
    NonzeroBadness(u64),
    #[error("embedding search bound {requested} is below the complete bound {minimum}")]
    BoundTooSmall { requested: usize, minimum: usize },
    #[error("{0}")]
    Invalid(String),
}
