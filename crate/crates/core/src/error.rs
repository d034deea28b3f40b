use thiserror::Error;

use crate::generators::MMatrixKind;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions must be positive")]
    EmptyMatrix,

    #[error("expected at least one operand")]
    NoOperands,

    #[error("invalid entry {value} at row {row}, column {col}: entries must be -1, 0, or +1")]
    InvalidEntry { row: usize, col: usize, value: i64 },

    #[error("entry count {found} does not match {rows}x{cols}")]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },

    #[error("operand {index} has {found} rows, expected {expected}")]
    RowCountMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("operand orders differ: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    OrderMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("block table of order {table_order} does not fit a family of {family_len} members")]
    SizeMismatch {
        table_order: usize,
        family_len: usize,
    },

    #[error("block index {value} at row {row}, column {col} is outside 1..={order}")]
    InvalidBlockIndex {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("{}", primality_message(.kind, .n))]
    PrimalityViolation { kind: MMatrixKind, n: usize },

    #[error("order {n} exceeds the configured maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
}

fn primality_message(kind: &MMatrixKind, n: &usize) -> String {
    match kind {
        MMatrixKind::TypeI => format!("Type I requires that n must be prime (n = {n})"),
        MMatrixKind::TypeII => {
            format!("Type II requires that n+1 must be prime (n = {n}, n+1 = {})", n + 1)
        }
        MMatrixKind::TypeIII => format!("Type III requires n >= 1 (n = {n})"),
    }
}
