use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("non-finite coordinate in input")]
    NonFinite,

    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index ({i}, {j}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    #[error("epsilon must lie in (0, 1], got {0}")]
    EpsilonOutOfRange(f64),

    #[error("grid coordinate ({x}, {y}) outside [1, {u}]")]
    CoordinateOutOfRange { x: i64, y: i64, u: i64 },

    #[error("oracle budget exceeded: {what} = {got} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
