//! Compactly supported kernels C = u∗u with u supported on the ball of
//! radius R/2: the closed-form optimum for R ≤ M, the (α, β) family used
//! beyond M, and smoothed truncations of arbitrary kernels.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::conv::{bump, bump_prime, SelfConvolution};
use crate::error::{Error, Result};
use crate::kernel::{Imp, KernelSpec, RadialKernel};
use crate::quadrature::{self, integrate_pts, sphere_area, QuadOpts};
use crate::specfun::{bessel_first_zero, bessel_lambda, bessel_zeros_below, gamma, j_unchecked};

/// Grid intervals for the tabulated u∗u.
const CONV_INTERVALS: usize = 512;
/// Grid intervals for the tabulated bump self-convolution on [0, 2].
const BUMP_INTERVALS: usize = 2048;

/// The range threshold M: M^d = 2^{d-2} j²_{(d-2)/2} Γ(d/2) / (ρ π^{d/2}).
pub fn constant_m(d: usize, rho: f64) -> f64 {
    let df = d as f64;
    let j = bessel_first_zero(0.5 * df - 1.0).expect("zero of J_nu, nu >= -1/2");
    (2f64.powf(df - 2.0) * j * j * gamma(0.5 * df) / (rho * PI.powf(0.5 * df))).powf(1.0 / df)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompactParams {
    pub d: usize,
    pub rho: f64,
    #[serde(rename = "R")]
    pub range: f64,
    pub alpha: f64,
}

impl CompactParams {
    pub fn new(d: usize, rho: f64, range: f64, alpha: f64) -> Result<Self> {
        if !(1..=64).contains(&d) {
            return Err(Error::InvalidParameter(format!("d must be in 1..=64, got {d}")));
        }
        for (n, v) in [("rho", rho), ("R", range), ("alpha", alpha)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{n} must be positive and finite, got {v}")));
            }
        }
        let nu = 0.5 * d as f64 - 1.0;
        let a = range / (2.0 * alpha);
        for z in bessel_zeros_below(nu, 64, a + 1.0)? {
            if (a - z).abs() <= 1e-9 * z.max(1.0) {
                return Err(Error::BesselZeroCollision { a, nu });
            }
        }
        Ok(CompactParams { d, rho, range, alpha })
    }
}

#[derive(Debug, Clone)]
enum Shape {
    /// κ J_ν(2jr/R)/r^ν
    Optimal { j: f64, amp: f64, famp: f64 },
    Family { alpha: f64, beta: f64, lam_a: f64, jpj: f64 },
}

/// Half-range profile u with its closed-form Fourier transform.
#[derive(Debug, Clone)]
pub struct ProfileU {
    pub d: usize,
    pub rho: f64,
    pub range: f64,
    nu: f64,
    shape: Shape,
}

/// Profile of the optimum C_R (valid for any R; optimal when R ≤ M).
pub fn optimal_u(d: usize, rho: f64, range: f64) -> Result<ProfileU> {
    CompactParams::new(d, rho, range, range)?;
    let df = d as f64;
    let nu = 0.5 * df - 1.0;
    let j = bessel_first_zero(nu)?;
    // J'_ν(j) = -J_{ν+1}(j)
    let jp = j_unchecked(nu + 1.0, j);
    let kappa = (4.0 * rho * gamma(0.5 * df) / (PI.powf(0.5 * df) * range * range)).sqrt() / jp.abs();
    let amp = kappa * (j / range).powf(nu) / gamma(nu + 1.0);
    let famp = (rho * PI.powf(0.5 * df) * range.powi(d as i32) / (4f64.powf(nu) * gamma(0.5 * df))).sqrt() * j;
    Ok(ProfileU { d, rho, range, nu, shape: Shape::Optimal { j, amp, famp } })
}

/// Profile of the two-parameter family u = √ρ β (1 - Λ_ν(r/α)/Λ_ν(R/(2α))).
pub fn family_u(p: &CompactParams) -> Result<ProfileU> {
    let p = CompactParams::new(p.d, p.rho, p.range, p.alpha)?;
    let (d, r_, al) = (p.d, p.range, p.alpha);
    let df = d as f64;
    let nu = 0.5 * df - 1.0;
    let a = r_ / (2.0 * al);
    let lam_a = bessel_lambda(nu, a);
    let ratio = bessel_lambda(nu + 1.0, a) / lam_a;
    // q = J_{ν+1}(a)/J_ν(a)
    let q = 0.5 * a * ratio / (nu + 1.0);
    let bm2 = sphere_area(d)
        * (0.5 * r_).powf(df - 1.0)
        * (r_ / (2.0 * df) + 0.25 * r_ - (2.0 + nu) * al * q + 0.25 * r_ * q * q);
    if !(bm2 > 0.0 && bm2.is_finite()) {
        return Err(Error::Consistency(format!("beta^-2 = {bm2} is not positive at alpha = {al}")));
    }
    let beta = bm2.powf(-0.5);
    let jpj = nu / a - 0.5 * a * ratio / (nu + 1.0);
    Ok(ProfileU { d, rho: p.rho, range: r_, nu, shape: Shape::Family { alpha: al, beta, lam_a, jpj } })
}

/// Cubic through four equispaced samples at t0 ± w, t0 ± 2w, evaluated at t.
fn bridge(f: impl Fn(f64) -> f64, t0: f64, w: f64, t: f64) -> f64 {
    let xs = [t0 - 2.0 * w, t0 - w, t0 + w, t0 + 2.0 * w];
    let ys = xs.map(&f);
    let mut s = 0.0;
    for i in 0..4 {
        let mut l = 1.0;
        for k in 0..4 {
            if k != i {
                l *= (t - xs[k]) / (xs[i] - xs[k]);
            }
        }
        s += l * ys[i];
    }
    s
}

impl ProfileU {
    pub fn half_range(&self) -> f64 {
        0.5 * self.range
    }

    pub fn alpha(&self) -> Option<f64> {
        match self.shape {
            Shape::Family { alpha, .. } => Some(alpha),
            Shape::Optimal { .. } => None,
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match self.shape {
            Shape::Family { beta, .. } => Some(beta),
            Shape::Optimal { .. } => None,
        }
    }

    /// κ of the optimal profile.
    pub fn kappa(&self) -> Option<f64> {
        match self.shape {
            Shape::Optimal { j, amp, .. } => Some(amp * gamma(self.nu + 1.0) / (j / self.range).powf(self.nu)),
            Shape::Family { .. } => None,
        }
    }

    /// Coefficient of the Bessel term, i.e. u = √ρβ + γ J_ν(r/α)/r^ν.
    pub fn gamma_coef(&self) -> Option<f64> {
        match self.shape {
            Shape::Family { alpha, beta, lam_a, .. } => {
                Some(-self.rho.sqrt() * beta / lam_a * gamma(self.nu + 1.0) * (2.0 * alpha).powf(self.nu))
            }
            Shape::Optimal { .. } => None,
        }
    }

    pub fn u(&self, r: f64) -> f64 {
        let r = r.abs();
        if r >= self.half_range() {
            return 0.0;
        }
        match self.shape {
            Shape::Optimal { j, amp, .. } => amp * bessel_lambda(self.nu, 2.0 * j * r / self.range),
            Shape::Family { alpha, beta, lam_a, .. } => self.rho.sqrt() * beta * (1.0 - bessel_lambda(self.nu, r / alpha) / lam_a),
        }
    }

    /// du/dr.
    pub fn u_prime(&self, r: f64) -> f64 {
        let r = r.abs();
        if r >= self.half_range() {
            return 0.0;
        }
        let lp = |x: f64| -x * bessel_lambda(self.nu + 1.0, x) / (2.0 * (self.nu + 1.0));
        match self.shape {
            Shape::Optimal { j, amp, .. } => {
                let k = 2.0 * j / self.range;
                amp * k * lp(k * r)
            }
            Shape::Family { alpha, beta, lam_a, .. } => -self.rho.sqrt() * beta * lp(r / alpha) / (alpha * lam_a),
        }
    }

    /// Closed-form F(u)(t).
    pub fn fourier_u(&self, t: f64) -> f64 {
        let t = t.abs();
        match self.shape {
            Shape::Optimal { j, famp, .. } => {
                let t0 = j / (PI * self.range);
                let raw = |t: f64| {
                    let z = PI * self.range * t;
                    famp * bessel_lambda(self.nu, z) / (j * j - z * z)
                };
                let w = 1e-3 * t0;
                if (t - t0).abs() < w {
                    bridge(raw, t0, w, t)
                } else {
                    raw(t)
                }
            }
            Shape::Family { alpha, .. } => {
                let t0 = 1.0 / (2.0 * PI * alpha);
                let w = 1e-3 * t0;
                if (t - t0).abs() < w {
                    bridge(|t| self.family_raw(t), t0, w, t)
                } else {
                    self.family_raw(t)
                }
            }
        }
    }

    fn family_raw(&self, t: f64) -> f64 {
        let Shape::Family { alpha, beta, jpj, .. } = self.shape else { unreachable!() };
        let nu = self.nu;
        let r_ = self.range;
        let z = PI * r_ * t;
        let s = PI * r_ * r_ / 4.0;
        let l0 = bessel_lambda(nu, z);
        let l1 = bessel_lambda(nu + 1.0, z);
        let g2 = gamma(nu + 2.0);
        let p = s.powf(nu) * l0 / gamma(nu + 1.0);
        let a = s.powf(nu + 1.0) * l1 / g2;
        let q = nu * p / (PI * r_) - s.powf(nu) * PI * r_ * t * t * l1 / (2.0 * g2);
        let b = PI * (r_ * alpha * jpj * p - 2.0 * PI * r_ * alpha * alpha * q) / (1.0 - 4.0 * PI * PI * alpha * alpha * t * t);
        self.rho.sqrt() * beta * (a + b)
    }

    /// ∫ u² over R^d, by quadrature.
    pub fn norm2(&self) -> f64 {
        let d = self.d;
        let h = self.half_range();
        let v = integrate_pts(|r| r.powi(d as i32 - 1) * self.u(r).powi(2), &[0.0, 0.5 * h, h], QuadOpts::tol(1e-15, 1e-12))
            .map(|q| q.value)
            .unwrap_or(f64::NAN);
        sphere_area(d) * v
    }

    /// ∫ |∇u|² over R^d, by quadrature.
    pub fn grad_norm2(&self) -> f64 {
        let d = self.d;
        let h = self.half_range();
        let v = integrate_pts(|r| r.powi(d as i32 - 1) * self.u_prime(r).powi(2), &[0.0, 0.5 * h, h], QuadOpts::tol(1e-15, 1e-12))
            .map(|q| q.value)
            .unwrap_or(f64::NAN);
        sphere_area(d) * v
    }

    /// sup_t |F(u)(t)| on a scan grid; returns (argsup, sup).
    pub fn sup_abs_fourier(&self, grid_n: usize) -> (f64, f64) {
        let hi = self.fourier_scan_limit();
        quadrature::maximize_1d(|t| self.fourier_u(t).abs(), 0.0, hi, grid_n, 1e-12 * hi)
    }

    pub fn fourier_scan_limit(&self) -> f64 {
        let mut hi = 20.0 / self.range;
        if let Shape::Family { alpha, .. } = self.shape {
            hi = hi.max(2.0 / (2.0 * PI * alpha));
        }
        hi
    }
}

/// C = u∗u with u a half-range profile; u∗u tabulated on first use.
#[derive(Debug)]
pub struct ConvKernel {
    pub profile: ProfileU,
    pub range: f64,
    table: OnceLock<SelfConvolution>,
}

impl ConvKernel {
    pub fn new(profile: ProfileU) -> Self {
        let range = profile.range;
        ConvKernel { profile, range, table: OnceLock::new() }
    }

    fn table(&self) -> &SelfConvolution {
        self.table.get_or_init(|| {
            let p = &self.profile;
            SelfConvolution::new(&|r| p.u(r), p.half_range(), p.d, CONV_INTERVALS)
        })
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.table().eval(r)
    }

    pub fn fourier_u(&self, t: f64) -> f64 {
        self.profile.fourier_u(t)
    }

    /// Table value at 0, i.e. ∫u² by the convolution route.
    pub fn conv_at_zero(&self) -> f64 {
        self.table().at_zero()
    }
}

fn conv_kernel(spec: KernelSpec, profile: ProfileU, heuristic: bool) -> RadialKernel {
    let (d, rho, range) = (profile.d, profile.rho, profile.range);
    let mut k = RadialKernel::from_parts(spec, d, rho, Imp::Conv(Arc::new(ConvKernel::new(profile))));
    k.support_radius = Some(range);
    k.heuristic = heuristic;
    k
}

pub(crate) fn compact_u_kernel(p: &CompactParams) -> Result<RadialKernel> {
    let prof = family_u(p)?;
    let spec = KernelSpec::CompactU { d: p.d, rho: p.rho, range: p.range, alpha: p.alpha };
    Ok(conv_kernel(spec, prof, false))
}

/// The closed-form optimum C_R; requires R ≤ M.
pub fn optimal_cr(d: usize, rho: f64, range: f64) -> Result<RadialKernel> {
    let prof = optimal_u(d, rho, range)?;
    let m = constant_m(d, rho);
    if range > m * (1.0 + 1e-12) {
        return Err(Error::RangeAboveM { r: range, m });
    }
    let mut k = conv_kernel(KernelSpec::CompactOptimal { d, rho, range }, prof, false);
    k.fourier_max_at_origin = true;
    Ok(k)
}

/// Outcome of the search for the largest feasible α.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AlphaSearch {
    /// +∞ when every α above the scan floor is feasible
    pub alpha: f64,
    #[serde(rename = "sup_F_u")]
    pub sup_f: f64,
    pub bounded: bool,
}

/// Grid size for the sup |F(u)| scans of the α search.
pub const ALPHA_SCAN_GRID: usize = 2048;

fn sup_at(d: usize, rho: f64, range: f64, alpha: f64) -> Option<f64> {
    let p = CompactParams::new(d, rho, range, alpha).ok()?;
    let prof = family_u(&p).ok()?;
    Some(prof.sup_abs_fourier(ALPHA_SCAN_GRID).1)
}

/// Largest α with sup_t |F(u)(t)| ≤ 1.
///
/// Feasibility is not monotone in α (sup |F(u)| jumps as R/(2α) crosses
/// Bessel zeros), so the search scans α downward on a geometric grid from
/// 8R, then bisects between the first feasible grid point and its
/// infeasible neighbour. Large α is treated as the α → ∞ regime.
pub fn alpha_max_search(d: usize, rho: f64, range: f64, tol: f64) -> Result<AlphaSearch> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol must be positive, got {tol}")));
    }
    CompactParams::new(d, rho, range, range)?;
    let top = 8.0 * range;
    let feasible = |a: f64| sup_at(d, rho, range, a).map(|s| s <= 1.0);
    if let Some(s) = sup_at(d, rho, range, top) {
        if s <= 1.0 {
            return Ok(AlphaSearch { alpha: f64::INFINITY, sup_f: s, bounded: false });
        }
    }
    let factor = 1.03;
    let floor = 1e-8 * range;
    let mut hi = top;
    let mut a = top / factor;
    while a >= floor {
        match feasible(a) {
            Some(true) => {
                let mut lo = a;
                while hi - lo > tol {
                    let mut mid = 0.5 * (lo + hi);
                    // step off excluded values
                    let mut ok = feasible(mid);
                    let mut nudge = 0;
                    while ok.is_none() && nudge < 8 {
                        mid += 1e-7 * (hi - lo);
                        ok = feasible(mid);
                        nudge += 1;
                    }
                    match ok {
                        Some(true) => lo = mid,
                        Some(false) => hi = mid,
                        None => break,
                    }
                }
                let s = sup_at(d, rho, range, lo).unwrap_or(f64::NAN);
                return Ok(AlphaSearch { alpha: lo, sup_f: s, bounded: true });
            }
            Some(false) => hi = a,
            None => {}
        }
        a /= factor;
    }
    Err(Error::SearchFailed(format!("no feasible alpha down to {floor}")))
}

/// The most locally repulsive kernel with range R: C_R when R ≤ M, else the
/// family member at the largest feasible α (flagged heuristic).
pub fn most_locally_repulsive(d: usize, rho: f64, range: f64) -> Result<RadialKernel> {
    let m = constant_m(d, rho);
    if range <= m * (1.0 + 1e-12) {
        return optimal_cr(d, rho, range);
    }
    let s = alpha_max_search(d, rho, range, 1e-6 * range)?;
    if !s.bounded {
        return Err(Error::SearchFailed(format!("every alpha is feasible at R = {range}; the maximal-alpha rule is undefined")));
    }
    let prof = family_u(&CompactParams::new(d, rho, range, s.alpha)?)?;
    Ok(conv_kernel(KernelSpec::CompactOptimal { d, rho, range }, prof, true))
}

/// Tabulated H = (h∗h)/‖h‖² for the bump h, one per dimension.
#[derive(Debug)]
pub struct Truncation {
    pub d: usize,
    table: SelfConvolution,
    norm2: f64,
    grad2: f64,
}

impl Truncation {
    pub fn get(d: usize) -> Arc<Truncation> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Truncation>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().unwrap().get(&d) {
            return t.clone();
        }
        let t = Arc::new(Truncation::build(d));
        cache.lock().unwrap().entry(d).or_insert(t).clone()
    }

    fn build(d: usize) -> Truncation {
        let table = SelfConvolution::new(&bump, 1.0, d, BUMP_INTERVALS);
        let opts = QuadOpts::tol(1e-16, 1e-12);
        let rad = |f: &dyn Fn(f64) -> f64| {
            sphere_area(d) * integrate_pts(|r| r.powi(d as i32 - 1) * f(r), &[0.0, 0.5, 0.9, 1.0], opts).map(|q| q.value).unwrap_or(f64::NAN)
        };
        let norm2 = rad(&|r| bump(r).powi(2));
        let grad2 = rad(&|r| bump_prime(r).powi(2));
        Truncation { d, table, norm2, grad2 }
    }

    /// H(s), with H(0) = 1 and H = 0 for s ≥ 2.
    pub fn factor(&self, s: f64) -> f64 {
        if s == 0.0 {
            1.0
        } else {
            self.table.eval(s) / self.norm2
        }
    }

    /// ∫|∇h|² / ∫h², so that ΔH(0) = -grad_ratio.
    pub fn grad_ratio(&self) -> f64 {
        self.grad2 / self.norm2
    }
}

/// C_r(x) = H(2x/r) C(x).
pub fn smoothed_truncation(base: &RadialKernel, r: f64) -> Result<RadialKernel> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidParameter(format!("r must be positive and finite, got {r}")));
    }
    if base.is_poisson() {
        return Err(Error::InvalidParameter("cannot truncate the Poisson kernel".into()));
    }
    let trunc = Truncation::get(base.d);
    let spec = KernelSpec::SmoothedTruncation { base: Box::new(base.spec.clone()), r };
    let mut k = RadialKernel::from_parts(spec, base.d, base.rho, Imp::Smoothed { base: Box::new(base.clone()), r, trunc });
    k.support_radius = Some(r);
    k.fourier_numeric = true;
    Ok(k)
}
