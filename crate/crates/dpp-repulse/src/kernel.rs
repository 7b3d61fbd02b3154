//! Kernel catalog: specs, radial evaluation, radial Fourier transforms,
//! closed-form α_max and the existence check 0 ≤ F(C) ≤ 1.

use std::f64::consts::PI;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::compact::{self, ConvKernel};
use crate::error::{Error, Result};
use crate::quadrature::{self, Extent};
use crate::specfun::{bessel_lambda, binom_shifted, gamma, gamma_ratio, laguerre_weighted, ln_gamma};

/// A kernel as written in JSON. Field names are part of the file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", deny_unknown_fields)]
pub enum KernelSpec {
    #[serde(rename = "MostRepulsive_CB")]
    MostRepulsiveCB { d: usize, rho: f64 },
    BesselType { d: usize, rho: f64, sigma: f64, alpha: f64 },
    LaguerreGauss { d: usize, rho: f64, m: u64, alpha: f64 },
    CompactU {
        d: usize,
        rho: f64,
        #[serde(rename = "R")]
        range: f64,
        alpha: f64,
    },
    SmoothedTruncation { base: Box<KernelSpec>, r: f64 },
    CompactOptimal {
        d: usize,
        rho: f64,
        #[serde(rename = "R")]
        range: f64,
    },
    PoissonDegenerate { d: usize, rho: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    MostRepulsiveCB,
    BesselType,
    LaguerreGauss,
    CompactU,
    SmoothedTruncation,
    CompactOptimal,
    PoissonDegenerate,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be positive and finite, got {v}")))
    }
}

fn dim(d: usize) -> Result<()> {
    if (1..=64).contains(&d) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("d must be in 1..=64, got {d}")))
    }
}

impl KernelSpec {
    pub fn family(&self) -> Family {
        match self {
            KernelSpec::MostRepulsiveCB { .. } => Family::MostRepulsiveCB,
            KernelSpec::BesselType { .. } => Family::BesselType,
            KernelSpec::LaguerreGauss { .. } => Family::LaguerreGauss,
            KernelSpec::CompactU { .. } => Family::CompactU,
            KernelSpec::SmoothedTruncation { .. } => Family::SmoothedTruncation,
            KernelSpec::CompactOptimal { .. } => Family::CompactOptimal,
            KernelSpec::PoissonDegenerate { .. } => Family::PoissonDegenerate,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            KernelSpec::MostRepulsiveCB { d, .. }
            | KernelSpec::BesselType { d, .. }
            | KernelSpec::LaguerreGauss { d, .. }
            | KernelSpec::CompactU { d, .. }
            | KernelSpec::CompactOptimal { d, .. }
            | KernelSpec::PoissonDegenerate { d, .. } => *d,
            KernelSpec::SmoothedTruncation { base, .. } => base.dim(),
        }
    }

    pub fn rho(&self) -> f64 {
        match self {
            KernelSpec::MostRepulsiveCB { rho, .. }
            | KernelSpec::BesselType { rho, .. }
            | KernelSpec::LaguerreGauss { rho, .. }
            | KernelSpec::CompactU { rho, .. }
            | KernelSpec::CompactOptimal { rho, .. }
            | KernelSpec::PoissonDegenerate { rho, .. } => *rho,
            KernelSpec::SmoothedTruncation { base, .. } => base.rho(),
        }
    }

    /// Check the positivity and integrality constraints of the spec.
    pub fn check(&self) -> Result<()> {
        dim(self.dim())?;
        positive("rho", self.rho())?;
        match self {
            KernelSpec::BesselType { sigma, alpha, .. } => {
                if !(*sigma >= 0.0) || !sigma.is_finite() {
                    return Err(Error::InvalidParameter(format!("sigma must be >= 0, got {sigma}")));
                }
                positive("alpha", *alpha)
            }
            KernelSpec::LaguerreGauss { m, alpha, .. } => {
                if *m < 1 {
                    return Err(Error::InvalidParameter("m must be >= 1".into()));
                }
                positive("alpha", *alpha)
            }
            KernelSpec::CompactU { range, alpha, .. } => {
                positive("R", *range)?;
                positive("alpha", *alpha)
            }
            KernelSpec::CompactOptimal { range, .. } => positive("R", *range),
            KernelSpec::SmoothedTruncation { base, r } => {
                if matches!(**base, KernelSpec::PoissonDegenerate { .. }) {
                    return Err(Error::InvalidParameter("cannot truncate the Poisson kernel".into()));
                }
                base.check()?;
                positive("r", *r)
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone)]
pub(crate) enum Imp {
    Cb { k: f64, t_ball: f64 },
    Bessel { mu: f64, c: f64, f0: f64, a2: f64, half_sigma: f64, sigma: f64 },
    Laguerre { m: u64, alpha: f64, norm: f64, f0: f64 },
    Conv(Arc<ConvKernel>),
    Smoothed { base: Box<RadialKernel>, r: f64, trunc: Arc<compact::Truncation> },
    Poisson,
}

/// A stationary isotropic kernel with its radial profile and transform.
#[derive(Clone)]
pub struct RadialKernel {
    pub spec: KernelSpec,
    pub d: usize,
    pub rho: f64,
    /// None means unbounded support.
    pub support_radius: Option<f64>,
    pub fourier_support_radius: Option<f64>,
    pub fourier_max_at_origin: bool,
    /// true when the Fourier transform is only available by quadrature
    pub fourier_numeric: bool,
    /// R > M optimum built from the maximal-α rule rather than a proof
    pub heuristic: bool,
    pub(crate) imp: Imp,
}

impl std::fmt::Debug for RadialKernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RadialKernel").field("spec", &self.spec).field("heuristic", &self.heuristic).finish()
    }
}

/// Build a kernel from its spec.
pub fn make_kernel(spec: &KernelSpec) -> Result<RadialKernel> {
    spec.check()?;
    let d = spec.dim();
    let rho = spec.rho();
    let df = d as f64;
    let base = |imp: Imp| RadialKernel {
        spec: spec.clone(),
        d,
        rho,
        support_radius: None,
        fourier_support_radius: None,
        fourier_max_at_origin: false,
        fourier_numeric: false,
        heuristic: false,
        imp,
    };
    Ok(match spec {
        KernelSpec::MostRepulsiveCB { .. } => {
            let t_ball = (rho * gamma(0.5 * df + 1.0) / PI.powf(0.5 * df)).powf(1.0 / df);
            let mut k = base(Imp::Cb { k: 2.0 * PI * t_ball, t_ball });
            k.fourier_support_radius = Some(t_ball);
            k.fourier_max_at_origin = true;
            k
        }
        &KernelSpec::BesselType { sigma, alpha, .. } => {
            let mu = 0.5 * (sigma + df);
            let c = 2.0 / alpha * mu.sqrt();
            let f0 = rho * (2.0 * PI).powf(0.5 * df) * alpha.powi(d as i32) * gamma_ratio(0.5 * (sigma + 2.0), 0.5 * df)
                / (sigma + df).powf(0.5 * df);
            let a2 = 2.0 * PI * PI * alpha * alpha / (sigma + df);
            let mut k = base(Imp::Bessel { mu, c, f0, a2, half_sigma: 0.5 * sigma, sigma });
            k.fourier_support_radius = Some(1.0 / a2.sqrt());
            k.fourier_max_at_origin = true;
            k
        }
        &KernelSpec::LaguerreGauss { m, alpha, .. } => {
            let norm = rho / binom_shifted(m, 0.5 * df);
            let f0 = norm * alpha.powi(d as i32) * (m as f64 * PI).powf(0.5 * df);
            let mut k = base(Imp::Laguerre { m, alpha, norm, f0 });
            k.fourier_max_at_origin = true;
            k
        }
        &KernelSpec::CompactU { d, rho, range, alpha } => {
            let p = compact::CompactParams::new(d, rho, range, alpha)?;
            compact::compact_u_kernel(&p)?
        }
        &KernelSpec::CompactOptimal { d, rho, range } => compact::most_locally_repulsive(d, rho, range)?,
        KernelSpec::SmoothedTruncation { base: b, r } => {
            let bk = make_kernel(b)?;
            compact::smoothed_truncation(&bk, *r)?
        }
        KernelSpec::PoissonDegenerate { .. } => base(Imp::Poisson),
    })
}

impl RadialKernel {
    pub(crate) fn from_parts(spec: KernelSpec, d: usize, rho: f64, imp: Imp) -> Self {
        RadialKernel {
            spec,
            d,
            rho,
            support_radius: None,
            fourier_support_radius: None,
            fourier_max_at_origin: false,
            fourier_numeric: false,
            heuristic: false,
            imp,
        }
    }

    pub fn family(&self) -> Family {
        self.spec.family()
    }

    pub fn is_poisson(&self) -> bool {
        matches!(self.imp, Imp::Poisson)
    }

    pub fn conv(&self) -> Option<&Arc<ConvKernel>> {
        match &self.imp {
            Imp::Conv(c) => Some(c),
            _ => None,
        }
    }

    /// Radial profile C(r).
    pub fn eval(&self, r: f64) -> f64 {
        let r = r.abs();
        if r == 0.0 {
            return self.rho;
        }
        match &self.imp {
            Imp::Cb { k, .. } => self.rho * bessel_lambda(0.5 * self.d as f64, k * r),
            Imp::Bessel { mu, c, .. } => self.rho * bessel_lambda(*mu, c * r),
            Imp::Laguerre { m, alpha, norm, .. } => {
                let x = r * r / (*m as f64 * alpha * alpha);
                norm * laguerre_weighted((*m - 1) as u32, 0.5 * self.d as f64, x, x)
            }
            Imp::Conv(c) => c.eval(r),
            Imp::Smoothed { base, r: range, trunc } => {
                if r >= *range {
                    0.0
                } else {
                    trunc.factor(2.0 * r / range) * base.eval(r)
                }
            }
            Imp::Poisson => 0.0,
        }
    }

    /// Radial Fourier transform F(C)(t).
    pub fn fourier(&self, t: f64) -> f64 {
        let t = t.abs();
        match &self.imp {
            Imp::Cb { t_ball, .. } => {
                if t <= *t_ball {
                    1.0
                } else {
                    0.0
                }
            }
            Imp::Bessel { f0, a2, half_sigma, sigma, .. } => {
                let x = 1.0 - a2 * t * t;
                if *sigma == 0.0 {
                    return if x >= 0.0 { *f0 } else { 0.0 };
                }
                if x <= 0.0 {
                    0.0
                } else {
                    f0 * x.powf(*half_sigma)
                }
            }
            Imp::Laguerre { m, alpha, f0, .. } => {
                let y = *m as f64 * (PI * alpha * t).powi(2);
                f0 * poisson_cdf_below(*m, y)
            }
            Imp::Conv(c) => {
                let v = c.fourier_u(t);
                v * v
            }
            Imp::Smoothed { r, .. } => {
                let f = |x: f64| self.eval(x);
                quadrature::hankel_fourier(&f, self.d, t, Extent::Finite(*r), 1e-10).unwrap_or_else(|e| match e {
                    Error::NoConvergence { value, .. } => value,
                    _ => f64::NAN,
                })
            }
            Imp::Poisson => 0.0,
        }
    }

    /// How C decays, for integrals of C and C².
    pub fn extent(&self) -> Extent {
        match &self.imp {
            Imp::Cb { k, .. } => Extent::Oscillatory { scale: 2.0 * PI / k },
            Imp::Bessel { c, .. } => Extent::Oscillatory { scale: 2.0 * PI / c },
            Imp::Laguerre { m, alpha, .. } => Extent::Infinite { scale: alpha * (*m as f64).sqrt() },
            Imp::Conv(c) => Extent::Finite(c.range),
            Imp::Smoothed { r, .. } => Extent::Finite(*r),
            Imp::Poisson => Extent::Finite(0.0),
        }
    }

    /// How F(C) decays, for integrals of F(C), F(C)² and spectral moments.
    pub fn fourier_extent(&self) -> Extent {
        match &self.imp {
            Imp::Cb { t_ball, .. } => Extent::Finite(*t_ball),
            Imp::Bessel { a2, .. } => Extent::Finite(1.0 / a2.sqrt()),
            Imp::Laguerre { m, alpha, .. } => Extent::Infinite { scale: 1.0 / (PI * alpha * (*m as f64).sqrt()) },
            Imp::Conv(c) => Extent::Oscillatory { scale: 1.0 / c.range },
            Imp::Smoothed { base, r, .. } => match base.fourier_extent() {
                Extent::Finite(t) => Extent::Finite(t + 80.0 / r),
                e => e,
            },
            Imp::Poisson => Extent::Finite(0.0),
        }
    }

    /// Radius where F(C) jumps or loses smoothness, if any.
    pub fn fourier_jump_radius(&self) -> Option<f64> {
        match &self.imp {
            Imp::Cb { t_ball, .. } => Some(*t_ball),
            Imp::Bessel { a2, .. } => Some(1.0 / a2.sqrt()),
            _ => None,
        }
    }

    /// Upper end of the t-range scanned when looking for sup F(C).
    pub fn fourier_scan_limit(&self) -> f64 {
        match self.fourier_extent() {
            Extent::Finite(t) => t,
            Extent::Infinite { scale } => 12.0 * scale,
            Extent::Oscillatory { scale } => 20.0 * scale,
        }
    }

    /// Closed-form α_max for the families that have one.
    pub fn alpha_max(&self) -> Option<f64> {
        match &self.spec {
            &KernelSpec::BesselType { d, rho, sigma, .. } => alpha_max(Family::BesselType, d, rho, sigma).ok(),
            &KernelSpec::LaguerreGauss { d, rho, m, .. } => alpha_max(Family::LaguerreGauss, d, rho, m as f64).ok(),
            _ => None,
        }
    }
}

/// e^{-y} Σ_{k<m} y^k/k!, summed in log space.
fn poisson_cdf_below(m: u64, y: f64) -> f64 {
    if y == 0.0 {
        return 1.0;
    }
    let ly = y.ln();
    if y < m as f64 {
        // 1 - P(N >= m): the upper tail is small and its terms fall off fast
        let mut lt = -y + m as f64 * ly - crate::specfun::ln_gamma(m as f64 + 1.0);
        let mut tail = 0.0;
        let mut k = m as f64;
        loop {
            let t = lt.exp();
            tail += t;
            k += 1.0;
            if t <= 1e-18 * tail || t == 0.0 {
                break;
            }
            lt += ly - k.ln();
        }
        return (1.0 - tail).clamp(0.0, 1.0);
    }
    let mut s = 0.0;
    let mut lt = -y;
    for k in 0..m {
        if k > 0 {
            lt += ly - (k as f64).ln();
        }
        let t = lt.exp();
        s += t;
        if k as f64 > y && t < 1e-18 * s {
            break;
        }
    }
    s.min(1.0)
}

/// Closed-form α_max for BesselType (σ) and LaguerreGauss (m).
pub fn alpha_max(family: Family, d: usize, rho: f64, sigma_or_m: f64) -> Result<f64> {
    dim(d)?;
    positive("rho", rho)?;
    let df = d as f64;
    match family {
        Family::BesselType => {
            let s = sigma_or_m;
            if !(s >= 0.0) {
                return Err(Error::InvalidParameter(format!("sigma must be >= 0, got {s}")));
            }
            // α^d = (σ+d)^{d/2} Γ((σ+2)/2) / (ρ (2π)^{d/2} Γ((σ+d+2)/2))
            let ad = (s + df).powf(0.5 * df) / (rho * (2.0 * PI).powf(0.5 * df) * gamma_ratio(0.5 * (s + 2.0), 0.5 * df));
            Ok(ad.powf(1.0 / df))
        }
        Family::LaguerreGauss => {
            let m = sigma_or_m;
            if !(m >= 1.0) || m.fract() != 0.0 {
                return Err(Error::InvalidParameter(format!("m must be an integer >= 1, got {m}")));
            }
            let ad = binom_shifted(m as u64, 0.5 * df) / (rho * (m * PI).powf(0.5 * df));
            Ok(ad.powf(1.0 / df))
        }
        f => Err(Error::Unsupported(format!("no closed-form alpha_max for {f:?}"))),
    }
}

/// lim_{m→∞} α_max of the Laguerre–Gaussian family.
pub fn laguerre_alpha_max_limit(d: usize, rho: f64) -> f64 {
    let df = d as f64;
    1.0 / (PI.sqrt() * (ln_gamma(0.5 * df + 1.0) / df).exp() * rho.powf(1.0 / df))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    None,
    #[serde(rename = "F_exceeds_one")]
    FExceedsOne,
    #[serde(rename = "F_negative")]
    FNegative,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    #[serde(rename = "sup_F")]
    pub sup_f: f64,
    pub argsup_t: f64,
    pub alpha_max: Option<f64>,
    pub violation: Violation,
}

/// Tolerance on F for kernels whose transform comes from quadrature.
pub const NUMERIC_FOURIER_SLACK: f64 = 1e-9;

/// Existence check 0 ≤ F(C) ≤ 1.
pub fn validate(kernel: &RadialKernel) -> ValidityReport {
    if kernel.is_poisson() {
        return ValidityReport { valid: true, sup_f: 0.0, argsup_t: 0.0, alpha_max: None, violation: Violation::None };
    }
    if let Imp::Cb { .. } = kernel.imp {
        return ValidityReport { valid: true, sup_f: 1.0, argsup_t: 0.0, alpha_max: None, violation: Violation::None };
    }
    let am = kernel.alpha_max();
    if let (Some(am), true) = (am, kernel.fourier_max_at_origin) {
        let alpha = match kernel.spec {
            KernelSpec::BesselType { alpha, .. } | KernelSpec::LaguerreGauss { alpha, .. } => alpha,
            _ => unreachable!(),
        };
        let valid = alpha <= am * (1.0 + 4.0 * f64::EPSILON);
        return ValidityReport {
            valid,
            sup_f: kernel.fourier(0.0),
            argsup_t: 0.0,
            alpha_max: Some(am),
            violation: if valid { Violation::None } else { Violation::FExceedsOne },
        };
    }
    let hi = kernel.fourier_scan_limit();
    let n = if kernel.fourier_numeric { 257 } else { 2048 };
    let (arg, sup) = quadrature::maximize_1d(|t| kernel.fourier(t), 0.0, hi, n, 1e-10 * hi);
    let (_, neg) = quadrature::maximize_1d(|t| -kernel.fourier(t), 0.0, hi, n, 1e-10 * hi);
    let slack = if kernel.fourier_numeric { NUMERIC_FOURIER_SLACK } else { 1e-12 };
    let violation = if sup > 1.0 + slack {
        Violation::FExceedsOne
    } else if -neg < -slack {
        Violation::FNegative
    } else {
        Violation::None
    };
    ValidityReport { valid: violation == Violation::None, sup_f: sup, argsup_t: arg, alpha_max: am, violation }
}

/// sup over an n-point grid on [0, r_max] of |f - g|.
pub fn sup_distance(f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64, r_max: f64, n: usize) -> f64 {
    let n = n.max(2);
    (0..n)
        .map(|i| {
            let r = r_max * i as f64 / (n - 1) as f64;
            (f(r) - g(r)).abs()
        })
        .fold(0.0, f64::max)
}

/// Sup-norm distances of each kernel in `seq` to `limit` on [0, r_max].
pub fn limit_check(seq: &[RadialKernel], limit: &RadialKernel, r_max: f64, n: usize) -> Vec<f64> {
    seq.iter().map(|k| sup_distance(|r| k.eval(r), |r| limit.eval(r), r_max, n)).collect()
}
