//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("evaluation point is a pole (|den| = {0:.3e})")]
    PoleAtEvaluationPoint(f64),
    #[error("similarity transform is singular")]
    SingularTransform,
    #[error("wrong state dimension: found {found}, expected {expected}")]
    WrongStateDimension { expected: usize, found: usize },
    #[error("nonzero pass-through (D0, D1 must be zero here)")]
    NonzeroPassthrough,
    #[error("graph is disconnected (algebraic connectivity {0:.3e})")]
    DisconnectedGraph(f64),
    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),
    #[error("invalid Laplacian: {0}")]
    InvalidLaplacian(String),
    #[error("gradients at x* do not sum to zero (norm {0:.3e})")]
    GradientsNotBalanced(f64),
    #[error("T2 violated: {0}")]
    T2Violated(String),
    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
    #[error("stepsize alpha must be nonzero")]
    ZeroStepsize,
    #[error("algorithm '{0}' requires beta")]
    BetaRequired(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("closed-loop simulation requires D0 = D1 = 0")]
    PassthroughInClosedLoop,
    #[error("curvatures must be positive")]
    NonpositiveCurvature,
    #[error("canonicalization of '{algorithm}' failed: {detail}")]
    CanonicalizationFailed { algorithm: String, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
