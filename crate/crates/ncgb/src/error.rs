//! Crate-wide error type.

use std::fmt;

use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid ordering: {0}")]
    InvalidOrder(String),
    #[error("the empty word is not a valid pattern here")]
    EmptyWord,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("zero polynomial is not allowed as a generator or divisor")]
    ZeroGenerator,
    #[error("generator at position {index} is not homogeneous")]
    NonHomogeneous { index: usize },
    #[error("truncation degree {given} is below the smallest generator degree {smallest}")]
    TruncationDegreeTooLow { given: u64, smallest: u64 },
    #[error("overlap shape does not match the leading monomials")]
    InvalidOverlapShape,
    #[error("degree {degree} exceeds the computed bound {bound}")]
    DegreeExceedsBound { degree: u64, bound: u64 },
    #[error("degree {degree} needs {words} basis words, above the cap of {cap}")]
    WordCountExceeded { degree: u64, words: usize, cap: usize },
    #[error("{0}")]
    Parse(ParseError),
}

/// A syntax or validation error in problem input, with source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Token kinds that would have been accepted at this position.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
