use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("quadrature did not converge: value {value}, error estimate {error}")]
    NoConvergence { value: f64, error: f64 },
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("R = {r} exceeds M = {m}; use most_locally_repulsive")]
    RangeAboveM { r: f64, m: f64 },
    #[error("R/(2 alpha) = {a} is within 1e-9 of a zero of J_{nu}")]
    BesselZeroCollision { a: f64, nu: f64 },
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("sampler: {0}")]
    Sampler(String),
}

pub type Result<T> = std::result::Result<T, Error>;
