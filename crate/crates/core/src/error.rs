//! Error types shared across the crate.

use thiserror::Error;

/// Errors from model and deformation construction or evaluation.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("negative distance {0} passed to a covariance function")]
    NegativeDistance(f64),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("deformation construction failed at z = {point}: {reason}")]
    Construction { point: String, reason: String },
    #[error("degenerate range: {0}")]
    DegenerateRange(String),
    #[error("numerical differentiation failed: {0}")]
    Differentiation(String),
}

/// Errors from grid construction and field sampling.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("covariance matrix not positive definite after maximal jitter (pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },
    #[error("point count {n} exceeds the dense-factorization cap {cap}; use the fast sampler")]
    CapExceeded { n: usize, cap: usize },
    #[error("circulant embedding failed: {0}")]
    EmbeddingFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Errors from increment and smoothed-variation evaluation.
#[derive(Debug, Error)]
pub enum QvarError {
    #[error("increment stencil leaves the sampled grid at lattice point ({0}, {1})")]
    OutOfGrid(i64, i64),
    #[error(
        "kernel support of half-width {half_width} at t = ({tx}, {ty}) exceeds the sampled grid"
    )]
    SupportClipped { tx: f64, ty: f64, half_width: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Errors from the ellipse algebra and dilatation estimation.
#[derive(Debug, Error)]
pub enum DilatationError {
    #[error("negative variation value {0}")]
    NegativeVariation(f64),
    #[error("directional scales must be positive, got ({0}, {1}, {2})")]
    NonPositiveScale(f64, f64, f64),
    #[error("degenerate ellipse: 4ac - b^2 = {0} <= 0 (noise too large or bandwidth too small)")]
    DegenerateEllipse(f64),
    #[error("{masked} of {total} points degenerate (> {percent}%): increase the bandwidth")]
    TooManyDegenerate { masked: usize, total: usize, percent: u8 },
    #[error(transparent)]
    Qvar(#[from] QvarError),
}

/// Errors from the quasiconformal map construction.
#[derive(Debug, Error)]
pub enum QcError {
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("coefficient bound must satisfy sup |mu| < 1, got {0}")]
    CoefficientBound(f64),
    #[error("Neumann iteration did not converge: residual {residual} after {iterations} iterations (k = {k})")]
    NoConvergence { residual: f64, iterations: usize, k: f64 },
    #[error("spectral derivative convention self-test failed: deviation {0}")]
    ConventionSelfTest(f64),
    #[error("Riemann map boundary tolerance unmet: max | |rho| - 1 | = {0}")]
    RiemannMapInaccurate(f64),
    #[error("Gram matrix ill-conditioned at degree {degree}")]
    GramIllConditioned { degree: usize },
    #[error("Newton inversion failed at w = {0}")]
    InversionFailure(String),
}

/// Errors from Bergman-space operations.
#[derive(Debug, Error)]
pub enum BergmanError {
    #[error("non-finite input value at quadrature node {0}")]
    NonFiniteInput(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A pipeline-stage failure, carrying the stage name for diagnostics.
#[derive(Debug, Error)]
#[error("stage '{stage}' failed: {message}")]
pub struct StageError {
    pub stage: &'static str,
    pub message: String,
}

impl StageError {
    pub fn new(stage: &'static str, err: impl std::fmt::Display) -> Self {
        Self { stage, message: err.to_string() }
    }
}

/// Errors from configuration parsing and validation.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("validation failed: {0}")]
    Validation(String),
}
