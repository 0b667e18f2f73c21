use thiserror::Error;

pub type Result<T> = std::result::Result<T, MineError>;

#[derive(Debug, Error)]
pub enum MineError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("no transactions")]
    NoTransactions,

    #[error("item {item} out of range for a universe of {universe} items")]
    ItemOutOfRange { item: u64, universe: usize },

    #[error("invalid parameter: {0}")]
    Params(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot peel empty itemset")]
    EmptyPeel,

    #[error("candidate pool exceeded cap of {cap} at level {level}")]
    PoolLimit { level: usize, cap: usize },

    #[error("stale support for {itemset}: given {given}, actual {actual}")]
    Consistency {
        itemset: String,
        given: u64,
        actual: u64,
    },

    #[error("brute-force oracle limited to {max} items, database has {universe}")]
    OracleGuard { universe: usize, max: usize },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl MineError {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        MineError::Format {
            line,
            message: message.into(),
        }
    }

    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            MineError::Format { .. }
            | MineError::NoTransactions
            | MineError::ItemOutOfRange { .. }
            | MineError::Io { .. } => 2,
            MineError::PoolLimit { .. } => 4,
            MineError::Params(_)
            | MineError::Precondition(_)
            | MineError::EmptyPeel
            | MineError::Consistency { .. }
            | MineError::OracleGuard { .. } => 3,
        }
    }
}
