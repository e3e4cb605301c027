use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UndeclaredSymbol,
    DimensionMismatch,
}

impl ParseErrorKind {
    pub fn code(&self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "SYNTAX_ERROR",
            ParseErrorKind::UndeclaredSymbol => "UNDECLARED_SYMBOL",
            ParseErrorKind::DimensionMismatch => "DIMENSION_MISMATCH",
        }
    }
}

/// First error of a parse, with 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, (line, col): (usize, usize), message: impl Into<String>) -> Self {
        ParseError { kind, line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}:{}: {}", self.kind.code(), self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}
