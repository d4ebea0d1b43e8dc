use thiserror::Error;

/// Errors raised by geometric constructors and measurements.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 2, found {0}")]
    DimensionTooSmall(usize),

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("not on sheet: {0}")]
    NotOnSheet(String),

    #[error("not a spacelike normal: <n,n> = {0}")]
    NotSpacelike(f64),

    #[error("not a tangent vector at the base point: {0}")]
    NotTangent(String),

    #[error("ideal or ultra-ideal point (|y| = {0})")]
    IdealPoint(f64),

    #[error("hyperplanes are not ultraparallel (|<n1,n2>| = {0})")]
    NotUltraparallel(f64),

    #[error("hyperplane cuts body (signed distance {0})")]
    HyperplaneCutsBody(f64),

    #[error("hyperplane does not support the body (closest vertex at {0})")]
    NotSupporting(f64),

    #[error("pencil base is not an interior point of the body")]
    BaseNotInterior,

    #[error("degenerate body: {0}")]
    Degenerate(String),

    #[error("empty or lower-dimensional ball intersection")]
    EmptyIntersection,

    #[error("angle condition violated: angle bac = {0:.6} < pi/2")]
    AngleCondition(f64),

    #[error("set diameter {diameter} exceeds target {target}")]
    DiameterTooLarge { diameter: f64, target: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
