//! Error types shared across the crate.

use thiserror::Error;

/// Coarse classification used by callers (e.g. the CLI exit-code contract).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Invalid input: bad parameters, violated preconditions, schema errors.
    Input,
    /// A resource budget was exceeded (node count, shell count, ...).
    Resource,
    /// Numerical failure that is not the caller's fault.
    Numerical,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),

    #[error("degenerate construction: {0}")]
    Degenerate(String),

    #[error("invalid warped profile: {0}")]
    InvalidProfile(String),

    #[error("smoothing infeasible for requested radius {delta}: {reason}; try a larger radius")]
    InfeasibleSmoothing { delta: f64, reason: String },

    #[error("profile tail does not settle: {0}")]
    TailDivergence(String),

    #[error("glued edges differ in length: ({0}.{1}) has {2}, ({3}.{4}) has {5}")]
    GluedLengthMismatch(usize, usize, f64, usize, usize, f64),

    #[error("edge ({0}.{1}) is not glued to anything")]
    DanglingEdge(usize, usize),

    #[error("edge ({0}.{1}) appears in more than one gluing")]
    DuplicateGluing(usize, usize),

    #[error("edge ({0}.{1}) glued to itself")]
    SelfGluing(usize, usize),

    #[error("complex is not a sphere: Euler characteristic {0}, expected 2")]
    EulerCharacteristic(i64),

    #[error("complex is not connected")]
    Disconnected,

    #[error("document error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("unsupported document version {found} (expected {expected})")]
    Version { found: u64, expected: u64 },

    #[error("unknown label '{0}'")]
    UnknownLabel(String),

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("radius {radius} too large for vertex '{vertex}' (limit {limit})")]
    RadiusTooLarge {
        vertex: String,
        radius: f64,
        limit: f64,
    },

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("cap placement failed: {0}")]
    Placement(String),

    #[error("metric cannot be evaluated at excluded point ({0}, {1})")]
    ExcludedPoint(f64, f64),

    #[error("bump placement collision: {0}")]
    BumpCollision(String),

    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),

    #[error("depth sequence must be strictly increasing")]
    NonMonotoneDepths,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Resource(_) => ErrorClass::Resource,
            Error::InfeasibleSmoothing { .. }
            | Error::TailDivergence(_)
            | Error::QuadratureFailure(_) => ErrorClass::Numerical,
            _ => ErrorClass::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
