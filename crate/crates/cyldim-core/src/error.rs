use thiserror::Error;

/// Errors reported by the library. Internal invariant violations (broken
/// bijections, inconsistent expansions) panic instead: they indicate a bug in
/// a combinatorial rule, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid box: need n >= 3 and 0 <= k <= n, got k={k}, n={n}")]
    InvalidBox { k: usize, n: usize },

    #[error("part {part} exceeds box width {width} (box k={k}, n={n})")]
    PartOutOfBox {
        part: usize,
        width: usize,
        k: usize,
        n: usize,
    },

    #[error("partition has {len} parts but box height is {k}")]
    TooManyParts { len: usize, k: usize },

    #[error("parts must be weakly decreasing, found {prev} before {next}")]
    NotWeaklyDecreasing { prev: usize, next: usize },

    #[error("binary string has weight {actual}, expected {expected}")]
    WrongWeight { expected: usize, actual: usize },

    #[error("composition has {len} parts, box requires exactly {k}")]
    WrongLength { len: usize, k: usize },

    #[error("operands live in different boxes: ({k1},{n1}) vs ({k2},{n2})")]
    BoxMismatch {
        k1: usize,
        n1: usize,
        k2: usize,
        n2: usize,
    },

    #[error("row dimer count {r} out of range 0..={max}")]
    RowSizeOutOfRange { r: usize, max: usize },

    #[error("budget exceeded: task needs about {needed} units, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
