use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("degree mismatch: {0} != {1}")]
    DegreeMismatch(usize, usize),
    #[error("parse error at `{0}`")]
    Parse(String),
    #[error("not a standard row-increasing tableau: {0}")]
    NotStandard(String),
    #[error("tableau {tableau} is not in class {class}")]
    WrongClass { class: String, tableau: String },
    #[error("generator index {0} out of range 1..={1}")]
    GeneratorRange(usize, usize),
    #[error("subset not invariant: pi_{gen} maps {tableau} outside")]
    NotInvariant { gen: usize, tableau: String },
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("need at least {need} variables, got {got}")]
    WindowTooSmall { need: usize, got: usize },
    #[error("straightening stalled at {0}")]
    StraighteningStalled(String),
    #[error("not in the module basis: {0}")]
    NotInBasis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
