use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row mismatch: cannot column-concatenate {left_rows} rows with {right_rows} rows")]
    RowMismatch { left_rows: usize, right_rows: usize },

    #[error(
        "column mismatch: cannot row-concatenate {left_cols} columns with {right_cols} columns"
    )]
    ColumnMismatch { left_cols: usize, right_cols: usize },

    #[error(
        "sub-array ({i1}..={i2}, {j1}..={j2}) out of range for a word of size ({rows},{cols})"
    )]
    OutOfRange {
        i1: usize,
        i2: usize,
        j1: usize,
        j2: usize,
        rows: usize,
        cols: usize,
    },

    #[error("operation `{0}` is undefined on the empty word")]
    EmptyWord(&'static str),

    #[error("grid must be rectangular: {0}")]
    NotRectangular(String),

    #[error("word is not an HV-palindrome")]
    NotHvPalindrome,

    #[error("word is neither a 2D palindrome nor an HV-palindrome")]
    NotPalindrome,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("removing {k} row(s) and {r} column(s) from each side of a ({rows},{cols}) word leaves nothing")]
    Degenerate {
        k: usize,
        r: usize,
        rows: usize,
        cols: usize,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("budget exceeded: {required} words required, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
