use thiserror::Error;

/// Errors surfaced by the algebra engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {value} is not divisible by {divisor} in {ring}")]
    NonIntegral {
        value: String,
        divisor: String,
        ring: String,
    },
    #[error("variable `{0}` has no assigned value")]
    UnassignedVariable(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("{0} is not a binomial ring")]
    NotBinomialRing(String),
    #[error("{0} carries no lambda-ring structure")]
    NoLambdaStructure(String),
    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("internal integrality failure: {0}")]
    InternalIntegrality(String),
    #[error("{needed} variables needed, only {given} given")]
    TooFewVariables { needed: usize, given: usize },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("concrete set of size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("cohomology in degree {0} is not supported")]
    UnsupportedDegree(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no integral solution: {0}")]
    NoIntegralSolution(String),
    #[error("derivation does not vanish on the lattice: {0}")]
    DerivationNotFactoring(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("no admissible prime up to {0}")]
    NotFound(u64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
