use thiserror::Error;

/// Errors raised by the curling-number and graph-construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurlError {
    #[error("empty string has no curling number")]
    EmptyString,

    #[error("max_steps must be at least 1")]
    ZeroMaxSteps,

    #[error("identity string is empty")]
    EmptyIdentityString,

    #[error("run for value {value} has zero multiplicity")]
    ZeroMultiplicity { value: u64 },

    #[error("curling index overflow")]
    CurlingIndexOverflow,

    #[error("compound curling number overflow")]
    ProductOverflow,

    #[error("cannot merge an empty list of identity strings")]
    EmptyUnion,

    #[error("union compound precondition violated: {0}")]
    UnionPrecondition(String),

    #[error("edge deletion precondition violated: {0}")]
    DeletionPrecondition(String),

    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),

    #[error("set-graph too large (n = {0}, maximum is 20)")]
    SetGraphTooLarge(u32),

    #[error("no valid split for {0}")]
    NoValidSplit(u64),

    #[error("invalid summand set: {0}")]
    InvalidSummandSet(String),

    #[error("no 2-term summand set for {0}")]
    NoTwoTermSummandSet(u64),

    #[error("step budget of {0} exhausted")]
    BudgetExhausted(u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, CurlError>;
