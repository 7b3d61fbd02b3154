//! Pair correlation, global and local repulsiveness, count variance.

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{Imp, RadialKernel};
use crate::quadrature::{integrate_mapped, integrate_oscillatory, integrate_pts, integrate_radial, sphere_area, Extent, QuadOpts, RadialIntegrand};
use crate::sampler::Window;

/// Relative agreement required between the direct and Parseval routes.
pub const PARSEVAL_TOL: f64 = 1e-6;

/// g(r) = 1 - C(r)²/ρ².
pub fn pcf(kernel: &RadialKernel, r: f64) -> Result<f64> {
    if kernel.is_poisson() {
        return Ok(1.0);
    }
    let c = kernel.eval(r);
    if c.abs() > kernel.rho * (1.0 + 1e-9) {
        return Err(Error::Consistency(format!("|C({r})| = {} exceeds rho = {}", c.abs(), kernel.rho)));
    }
    let q = c / kernel.rho;
    Ok(1.0 - q * q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Theoretical,
    Empirical,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PcfCurve {
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
    pub kind: CurveKind,
}

/// Format with 17 significant digits.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.16e}")
}

impl PcfCurve {
    pub fn theoretical(kernel: &RadialKernel, radii: &[f64]) -> Result<PcfCurve> {
        if radii.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidParameter("radii must be strictly ascending".into()));
        }
        let values = radii.iter().map(|&r| pcf(kernel, r)).collect::<Result<Vec<_>>>()?;
        Ok(PcfCurve { radii: radii.to_vec(), values, kind: CurveKind::Theoretical })
    }

    /// n equispaced radii on [0, r_max].
    pub fn on_grid(kernel: &RadialKernel, r_max: f64, n: usize) -> Result<PcfCurve> {
        if !(r_max > 0.0) || n < 2 {
            return Err(Error::InvalidParameter("need r_max > 0 and n >= 2".into()));
        }
        let radii: Vec<f64> = (0..n).map(|i| r_max * i as f64 / (n - 1) as f64).collect();
        PcfCurve::theoretical(kernel, &radii)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("r,g\n");
        for (r, g) in self.radii.iter().zip(&self.values) {
            let _ = writeln!(s, "{},{}", fmt17(*r), fmt17(*g));
        }
        s
    }
}

fn tail_value(t: crate::quadrature::TailQuad) -> Result<f64> {
    if t.converged {
        Ok(t.value)
    } else {
        Err(Error::NoConvergence { value: t.value, error: t.error })
    }
}

/// ∫ over R^d of a radial profile with the given far-end behaviour.
fn radial(f: &(dyn Fn(f64) -> f64 + Sync), d: usize, extent: Extent, rel_tol: f64) -> Result<f64> {
    integrate_radial(&RadialIntegrand { f, d, extent }, rel_tol)
}

/// (1/ρ²) ∫ C², by direct radial quadrature.
pub fn global_direct(kernel: &RadialKernel) -> Result<f64> {
    if kernel.is_poisson() {
        return Ok(0.0);
    }
    let rho2 = kernel.rho * kernel.rho;
    let ext = kernel.extent();
    let v = match ext {
        // C² is non-negative and decays like r^{-(d+1)}; no oscillation worth tapering
        Extent::Oscillatory { scale } => {
            let d = kernel.d;
            let w = |r: f64| r.powi(d as i32 - 1) * kernel.eval(r).powi(2);
            sphere_area(d) * tail_value(integrate_oscillatory(w, scale, 0.0, QuadOpts::tol(1e-15, 1e-11)))?
        }
        e => radial(&|r| kernel.eval(r).powi(2), kernel.d, e, 1e-11)?,
    };
    Ok(v / rho2)
}

/// (1/ρ²) ∫ F(C)², by radial quadrature in frequency.
pub fn global_parseval(kernel: &RadialKernel) -> Result<f64> {
    if kernel.is_poisson() {
        return Ok(0.0);
    }
    let rho2 = kernel.rho * kernel.rho;
    let rel = if kernel.fourier_numeric { 1e-8 } else { 1e-11 };
    let v = radial(&|t| kernel.fourier(t).powi(2), kernel.d, kernel.fourier_extent(), rel)?;
    Ok(v / rho2)
}

/// ∫(1-g) = (1/ρ²)∫C²: Parseval value, cross-checked against the direct route.
pub fn global_repulsiveness(kernel: &RadialKernel) -> Result<f64> {
    let p = global_parseval(kernel)?;
    let q = global_direct(kernel)?;
    if (p - q).abs() > PARSEVAL_TOL * p.abs().max(q.abs()) {
        return Err(Error::Consistency(format!("Parseval route {p} disagrees with direct route {q}")));
    }
    Ok(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalFlag {
    NotTwiceDifferentiable,
    G0Positive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Local {
    Finite(f64),
    Flag(LocalFlag),
}

impl Local {
    pub fn value(&self) -> Option<f64> {
        match self {
            Local::Finite(v) => Some(*v),
            Local::Flag(_) => None,
        }
    }
}

/// ∫ |t|² F(C)(t) dt over R^d, or None when the moment diverges.
fn spectral_moment(kernel: &RadialKernel) -> Result<Option<f64>> {
    let d = kernel.d;
    let w = |t: f64| t.powi(d as i32 + 1) * kernel.fourier(t);
    let v = match kernel.fourier_extent() {
        Extent::Finite(b) => integrate_pts(w, &[0.0, 0.5 * b, b], QuadOpts::tol(1e-15, 1e-12))?.value,
        Extent::Infinite { scale } => integrate_mapped(w, scale, QuadOpts::tol(1e-15, 1e-12))?.value,
        Extent::Oscillatory { scale } => {
            let t = integrate_oscillatory(w, scale, 0.0, QuadOpts::tol(1e-15, 1e-10));
            if t.diverging {
                return Ok(None);
            }
            tail_value(t)?
        }
    };
    Ok(Some(sphere_area(d) * v))
}

/// Δg(0) = (8π²/ρ) ∫ |t|² F(C)(t) dt.
pub fn local_repulsiveness(kernel: &RadialKernel) -> Result<Local> {
    match &kernel.imp {
        Imp::Poisson => Ok(Local::Flag(LocalFlag::G0Positive)),
        Imp::Smoothed { base, r, trunc } => {
            // C_r = H(2x/r) C with ΔH(0) = -∫|∇h|²/∫h², and ∇C(0) = 0
            Ok(match local_repulsiveness(base)? {
                Local::Finite(v) => Local::Finite(v + 8.0 * trunc.grad_ratio() / (r * r)),
                f => f,
            })
        }
        _ => Ok(match spectral_moment(kernel)? {
            Some(m) => Local::Finite(8.0 * PI * PI / kernel.rho * m),
            None => Local::Flag(LocalFlag::NotTwiceDifferentiable),
        }),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepulsivenessSummary {
    pub global: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_flag: Option<LocalFlag>,
    pub rho: f64,
    pub d: usize,
}

pub fn summary(kernel: &RadialKernel) -> Result<RepulsivenessSummary> {
    let global = global_repulsiveness(kernel)?;
    let (local, local_flag) = match local_repulsiveness(kernel)? {
        Local::Finite(v) => (Some(v), None),
        Local::Flag(f) => (None, Some(f)),
    };
    Ok(RepulsivenessSummary { global, local, local_flag, rho: kernel.rho, d: kernel.d })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Order {
    /// the first kernel is more repulsive
    First,
    Second,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub global_order: Order,
    pub local_order: Order,
}

fn ties(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs())
}

/// Order two kernels of the same (d, ρ) by both repulsiveness measures.
pub fn compare(x: &RadialKernel, y: &RadialKernel) -> Result<Comparison> {
    if x.d != y.d || x.rho != y.rho {
        return Err(Error::InvalidParameter(format!("need the same d and rho, got ({}, {}) and ({}, {})", x.d, x.rho, y.d, y.rho)));
    }
    let (gx, gy) = (global_repulsiveness(x)?, global_repulsiveness(y)?);
    let global_order = if ties(gx, gy) {
        Order::Equal
    } else if gx > gy {
        Order::First
    } else {
        Order::Second
    };
    let local_order = match (local_repulsiveness(x)?, local_repulsiveness(y)?) {
        (Local::Finite(a), Local::Finite(b)) => {
            if ties(a, b) {
                Order::Equal
            } else if a < b {
                Order::First
            } else {
                Order::Second
            }
        }
        (Local::Finite(_), Local::Flag(_)) => Order::First,
        (Local::Flag(_), Local::Finite(_)) => Order::Second,
        (Local::Flag(_), Local::Flag(_)) => Order::Incomparable,
    };
    Ok(Comparison { global_order, local_order })
}

/// Var X(D) = ρ|D| - ∫ C(z)² γ_D(z) dz for a rectangle D.
pub fn count_variance(kernel: &RadialKernel, window: &Window) -> Result<f64> {
    if window.dim() != kernel.d {
        return Err(Error::InvalidParameter("window dimension differs from kernel dimension".into()));
    }
    let mean = kernel.rho * window.volume();
    if kernel.is_poisson() {
        return Ok(mean);
    }
    let sides = window.sides();
    let reach = kernel.support_radius.unwrap_or(f64::INFINITY);
    let c2 = |r2: f64| kernel.eval(r2.sqrt()).powi(2);
    // 2^d ∫_{[0,L]^d} C(|z|)² Π(L_i - z_i) dz, nested over coordinates;
    // a failed inner integral poisons the total with NaN
    fn nest(k: usize, acc: f64, sides: &[f64], reach: f64, c2: &dyn Fn(f64) -> f64) -> f64 {
        if k == sides.len() {
            return c2(acc);
        }
        let room = reach * reach - acc;
        if room <= 0.0 {
            return 0.0;
        }
        let hi = sides[k].min(room.sqrt());
        let pts: Vec<f64> = (0..=8).map(|i| hi * i as f64 / 8.0).collect();
        integrate_pts(|z| (sides[k] - z) * nest(k + 1, acc + z * z, sides, reach, c2), &pts, QuadOpts::tol(1e-13, 1e-10))
            .map(|q| q.value)
            .unwrap_or(f64::NAN)
    }
    let v = nest(0, 0.0, &sides, reach, &c2);
    if !v.is_finite() {
        return Err(Error::NoConvergence { value: v, error: f64::INFINITY });
    }
    Ok(mean - 2f64.powi(kernel.d as i32) * v)
}
