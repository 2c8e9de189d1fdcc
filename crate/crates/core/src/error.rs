use thiserror::Error;

/// Errors raised by the algebraic and group-theoretic routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("logarithm undefined at u = -1")]
    LogUndefined,

    #[error("conjugacy class undefined for rotation part u = -1")]
    ClassUndefined,

    #[error("exponential chart singular: |p| = {norm} is within {tol} of 0 or 2π")]
    ChartSingular { norm: f64, tol: f64 },

    #[error("orbit O(0,{s}) is a sphere of radius |s|; sampled on the sphere")]
    OrbitSphere { s: f64 },

    #[error("solved holonomy lies in class ({mu}, {s}), not the requested ({want_mu}, {want_s})")]
    ClassMismatch {
        mu: f64,
        s: f64,
        want_mu: f64,
        want_s: f64,
    },

    #[error("projection onto the truncated carrier space lost {residual:e} (limit {limit:e})")]
    TruncationLoss { residual: f64, limit: f64 },

    #[error("κ·M = {product} leaves the injectivity ball (must be < 2π)")]
    KappaDomain { product: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
