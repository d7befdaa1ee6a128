use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Each variant maps to a stable machine-readable [`Error::code`] and to an
/// [`ErrorKind`], which the command line uses to pick its exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the prime 2 is not supported; use an odd prime")]
    EvenPrime,
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("precision exponent must be at least 1")]
    ZeroPrecision,
    #[error("element is not a unit (divisible by p)")]
    NonUnit,
    #[error("operands belong to different rings")]
    ParentMismatch,
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("valuation of zero is undefined")]
    ZeroInput,
    #[error("argument {0} is out of the supported range")]
    OutOfRange(u64),
    #[error("degree bound {0} is too small (need at least 2)")]
    DegreeTooSmall(usize),
    #[error("Frobenius orbit did not close or left the prime field")]
    OrbitNotClosed,
    #[error("polynomial is not irreducible over F_{0}")]
    Reducible(u64),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("random splitting failed after {0} attempts")]
    RandomnessExhausted(usize),
    #[error("polynomial does not divide X^{0} - 1 modulo p")]
    NotAFactor(u64),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("expanded factor has a coefficient outside the base ring")]
    CoefficientNotRational,
    #[error("Bezout identity af + bg = 1 fails modulo p")]
    BezoutFailure,
    #[error("factor and cofactor are not coprime modulo p")]
    NotCoprimeFactors,
    #[error("root is not a primitive {0}-th root of unity")]
    RootNotPrimitive(u64),
    #[error("lift precision {have} is below the requested {want}")]
    PrecisionTooLow { have: u32, want: u32 },
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("product degree {degree} does not fit transform length {s}")]
    DegreeOverflow { degree: usize, s: u64 },
    #[error("cannot factor {0} at desk scale")]
    FactoringFailure(String),
    #[error("transform output is not a base-ring constant")]
    NonConstant,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller asked for something mathematically invalid.
    Precondition,
    /// A self-check inside the library failed.
    Internal,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::EvenPrime => "EvenPrime",
            Error::EvenCharacteristic => "EvenCharacteristic",
            Error::ZeroPrecision => "ZeroPrecision",
            Error::NonUnit => "NonUnit",
            Error::ParentMismatch => "ParentMismatch",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::ZeroInput => "ZeroInput",
            Error::OutOfRange(_) => "OutOfRange",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::OrbitNotClosed => "OrbitNotClosed",
            Error::Reducible(_) => "Reducible",
            Error::BadInput(_) => "BadInput",
            Error::RandomnessExhausted(_) => "RandomnessExhausted",
            Error::NotAFactor(_) => "NotAFactor",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::CoefficientNotRational => "CoefficientNotRational",
            Error::BezoutFailure => "BezoutFailure",
            Error::NotCoprimeFactors => "NotCoprimeFactors",
            Error::RootNotPrimitive(_) => "RootNotPrimitive",
            Error::PrecisionTooLow { .. } => "PrecisionTooLow",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DegreeOverflow { .. } => "DegreeOverflow",
            Error::FactoringFailure(_) => "FactoringFailure",
            Error::NonConstant => "NonConstant",
            Error::Internal(_) => "Internal",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OrbitNotClosed
            | Error::RandomnessExhausted(_)
            | Error::CoefficientNotRational
            | Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
