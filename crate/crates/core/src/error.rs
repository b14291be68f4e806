use std::fmt;

/// Errors from parsing the text formats and from operation preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word failed to parse, or contained the reserved letter 0.
    InvalidWord(String),
    /// A partition failed to parse or its parts were not weakly decreasing positives.
    InvalidPartition(String),
    /// Filling rows do not stack into a partition shape, or an entry is invalid.
    InvalidFilling(String),
    /// The elevator requires a basement at least as long as the word.
    BasementTooShort { basement: usize, word: usize },
    /// Column index outside the bottom row of the shape.
    ColumnOutOfRange { column: usize, width: usize },
    /// Row index outside the shape.
    RowOutOfRange { row: usize, rows: usize },
    /// Orbit computation requested beyond the configured cap.
    OrbitCapExceeded { n: usize, cap: usize },
    /// The operation requires a permutation word (distinct letters 1..n).
    NotAPermutation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidWord(msg) => write!(f, "invalid word: {msg}"),
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::InvalidFilling(msg) => write!(f, "invalid filling: {msg}"),
            Error::BasementTooShort { basement, word } => write!(
                f,
                "basement of length {basement} is shorter than the word of length {word}"
            ),
            Error::ColumnOutOfRange { column, width } => {
                write!(f, "column {column} outside shape of width {width}")
            }
            Error::RowOutOfRange { row, rows } => {
                write!(f, "row {row} outside shape with {rows} rows")
            }
            Error::OrbitCapExceeded { n, cap } => {
                write!(f, "n = {n} exceeds the orbit cap {cap}")
            }
            Error::NotAPermutation(msg) => write!(f, "not a permutation: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
