use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported extension degree {0} (expected 1..=16)")]
    UnsupportedDegree(u32),
    #[error("built-in modulus for GF(2^{0}) failed verification")]
    InternalModulusError(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix is not square ({0}x{1})")]
    NonSquareMatrix(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("group closure exceeds the cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("element is not in the group")]
    NotASubgroupElement,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("zero module has no composition factors to split")]
    ZeroModule,
    #[error("input module is not simple")]
    NotSimpleInput,
    #[error("no invariant symplectic form exists on this module")]
    NoSymplecticForm,
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is not invariant under the group")]
    NotInvariant,
    #[error("module is not hyperbolic")]
    NotHyperbolic,
    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
    #[error("forms live over different groups or fields")]
    MismatchedContext,
    #[error("code length {0} is too large for enumeration (max 12)")]
    LengthTooLarge(usize),
    #[error("code length {0} is odd")]
    OddLength(usize),
    #[error("isotropy search space too large ({0} points)")]
    SearchTooLarge(u64),
    #[error("criteria disagree: {0}")]
    CriteriaDisagree(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
