use thiserror::Error;

/// Errors raised by the library. The CLI maps these onto exit codes via
/// [`Error::exit_code`].
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("letter {letter} is outside an alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: usize, alphabet_size: usize },
    #[error("sublength {sublength} exceeds word length {length}")]
    SublengthTooLarge { sublength: usize, length: usize },
    #[error("subwords at positions {p} and {q} are not identical sequences")]
    NotPeriodic { p: usize, q: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("horizon must be at least 1")]
    HorizonZero,
    #[error("presentation has no generators")]
    NoGenerators,
    #[error("parts have different generator counts ({0} vs {1})")]
    GeneratorCountMismatch(usize, usize),
    #[error("growth hypothesis violated: {0}")]
    GrowthHypothesisViolated(String),
    #[error("word has length {found}, expected ell*(n+1) = {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("reduction step budget of {0} exhausted")]
    StepBudgetExceeded(usize),
    #[error("invalid bound: c = {0} (must be at least 1)")]
    InvalidBound(i64),
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Exit code contract: 2 for bad input, 3 for exhausted budgets, 1 when an
    /// internal mathematical check fails.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded(_) | Error::StepBudgetExceeded(_) => 3,
            Error::InvariantViolated(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
