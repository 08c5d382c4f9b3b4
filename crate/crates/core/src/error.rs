use thiserror::Error;

/// Errors raised while validating or constructing categorical data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composable pair ({g}, {f}) has no entry in the composition table")]
    MissingComposite { g: String, f: String },

    #[error("law violation: {0}")]
    LawViolation(String),

    #[error("dangling endpoint: {0}")]
    DanglingEndpoint(String),

    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),

    #[error("unmapped item `{0}`")]
    UnmappedItem(String),

    #[error("functors do not share a target category")]
    TargetMismatch,

    #[error("functors are not parallel: {0}")]
    ParallelismMismatch(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("no cartesian lift of `{arrow}` into `{object}`")]
    NoLift { object: String, arrow: String },

    #[error("functor is not a Grothendieck fibration: no cartesian lift of `{arrow}` into `{object}`")]
    NotCloven { object: String, arrow: String },

    #[error("instance too large: {what} is {size}, cap is {cap}")]
    InstanceTooLarge { what: String, size: usize, cap: usize },

    #[error("quotient not certified finite within list length {max_len} (class counts {trace:?})")]
    NonTermination { max_len: usize, trace: Vec<usize> },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
