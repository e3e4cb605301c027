use thiserror::Error;

/// Errors raised by the algebra, resultant and BC pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModoError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operator has order {found}, expected {expected}")]
    WrongOrder { expected: usize, found: usize },
    #[error("leading coefficient matrix is not invertible")]
    SingularLeadingCoefficient,
    #[error("operators do not commute")]
    NoncommutingPair,
    #[error("ring elements do not commute")]
    NoncommutingArguments,
    #[error("spectral polynomial coefficient is not a differential constant: {0}")]
    NonconstantCoefficients(String),
    #[error("factorization not supported for {0}; supply a user factorization")]
    UnsupportedFactorization(String),
    #[error("user factorization does not reconstruct the polynomial: {0}")]
    InvalidUserFactorization(String),
    #[error("joint product of minimal powers is not a BC polynomial")]
    JointMinimalityFailure,
    #[error("f(L,B) is not the zero operator: {operator}")]
    ConjectureViolation { operator: String },
    #[error("entry M[0][1] of the spectral matrix is zero")]
    ZeroDenominatorEntry,
    #[error("operator L is not of AKNS shape i*[[D,u],[v,-D]]")]
    NotAknsShape,
    #[error("{0}")]
    Parse(#[from] crate::parser::ParseError),
}

impl ModoError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ModoError::DivisionByZero => "DIVISION_BY_ZERO",
            ModoError::ZeroPolynomial => "ZERO_POLYNOMIAL",
            ModoError::BothZero => "BOTH_ZERO",
            ModoError::SingularMatrix => "SINGULAR_MATRIX",
            ModoError::DimensionMismatch(_) => "DIMENSION_MISMATCH",
            ModoError::WrongOrder { .. } => "WRONG_ORDER",
            ModoError::SingularLeadingCoefficient => "SINGULAR_LEADING_COEFFICIENT",
            ModoError::NoncommutingPair => "NONCOMMUTING_PAIR",
            ModoError::NoncommutingArguments => "NONCOMMUTING_ARGUMENTS",
            ModoError::NonconstantCoefficients(_) => "NONCONSTANT_COEFFICIENTS",
            ModoError::UnsupportedFactorization(_) => "UNSUPPORTED_FACTORIZATION",
            ModoError::InvalidUserFactorization(_) => "INVALID_USER_FACTORIZATION",
            ModoError::JointMinimalityFailure => "JOINT_MINIMALITY_FAILURE",
            ModoError::ConjectureViolation { .. } => "CONJECTURE_VIOLATION",
            ModoError::ZeroDenominatorEntry => "ZERO_DENOMINATOR_ENTRY",
            ModoError::NotAknsShape => "NOT_AKNS_SHAPE",
            ModoError::Parse(e) => e.kind.code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, ModoError>;
