//! Stationary determinantal point process kernels and their repulsiveness.
//!
//! Kernels are radial: `C(x) = c(|x|)` with Fourier transform `F(C)(t) = f(|t|)`
//! under the convention `F(h)(t) = ∫ h(x) exp(2iπ x·t) dx`.

pub mod compact;
pub mod conv;
pub mod error;
pub mod kernel;
pub mod metrics;
pub mod quadrature;
pub mod sampler;
pub mod specfun;
pub mod stats;

pub use error::{Error, Result};
