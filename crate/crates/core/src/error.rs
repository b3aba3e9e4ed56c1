use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero ideal has no multiplier ideal, Weil function or Newton polyhedron")]
    ZeroIdeal,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {0} is outside the supported range 1..=6")]
    UnsupportedDimension(usize),
    #[error("scaling factor must be positive")]
    NonPositiveScale,
    #[error("coefficient must be nonnegative")]
    NegativeCoefficient,
    #[error("vector has a negative entry")]
    NegativeEntry,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the place set must contain the archimedean place")]
    MissingArchimedean,
    #[error("point lies in the zero locus of the ideal")]
    PointInZeroLocus,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curve image lies in the zero locus of the ideal")]
    CurveInZeroLocus,
    #[error("invalid radius grid: {0}")]
    InvalidGrid(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroIdeal => "zero_ideal",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::UnsupportedDimension(_) => "unsupported_dimension",
            Error::NonPositiveScale => "non_positive_scale",
            Error::NegativeCoefficient => "negative_coefficient",
            Error::NegativeEntry => "negative_entry",
            Error::InvalidPoint(_) => "invalid_point",
            Error::NotPrime(_) => "not_prime",
            Error::MissingArchimedean => "missing_archimedean",
            Error::PointInZeroLocus => "point_in_zero_locus",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::CurveInZeroLocus => "curve_in_zero_locus",
            Error::InvalidGrid(_) => "invalid_grid",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }

    /// Parse errors are input-format problems; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
