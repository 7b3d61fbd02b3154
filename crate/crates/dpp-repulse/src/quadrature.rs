//! Deterministic 1-D integration and search: adaptive Gauss–Kronrod,
//! radial integrals over R^d, radial Fourier (Hankel) transforms, bisection
//! and bounded maximization.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::specfun::{bessel_lambda, gamma};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub const DEFAULT_REL_TOL: f64 = 1e-9;
pub const MAX_PANELS: usize = 100_000;

#[derive(Debug, Clone, Copy)]
pub struct QuadOpts {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts { abs_tol: 1e-300, rel_tol: DEFAULT_REL_TOL, max_panels: MAX_PANELS }
    }
}

impl QuadOpts {
    pub fn rel(rel_tol: f64) -> Self {
        QuadOpts { rel_tol, ..Default::default() }
    }
    pub fn tol(abs_tol: f64, rel_tol: f64) -> Self {
        QuadOpts { abs_tol, rel_tol, max_panels: MAX_PANELS }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Quad {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error).then(o.a.total_cmp(&self.a))
    }
}

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut rk = fc * WGK[7];
    let mut rg = fc * WG[3];
    let mut fv = [(0.0, 0.0); 7];
    for (j, fvj) in fv.iter_mut().enumerate() {
        let dx = h * XGK[j];
        let (f1, f2) = (f(c - dx), f(c + dx));
        *fvj = (f1, f2);
        rk += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            rg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * rk;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let asc = asc * h.abs();
    let mut err = ((rk - rg) * h).abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * (200.0 * err / asc).powf(1.5).min(1.0);
    }
    Panel { a, b, value: rk * h, error: err.max(50.0 * f64::EPSILON * (rk * h).abs()) }
}

/// Adaptive GK15 on [a, b].
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, opts: QuadOpts) -> Result<Quad> {
    integrate_pts(f, &[a, b], opts)
}

/// Adaptive GK15 over consecutive intervals of `pts` (ascending, ends included).
pub fn integrate_pts(f: impl Fn(f64) -> f64, pts: &[f64], opts: QuadOpts) -> Result<Quad> {
    let mut heap = BinaryHeap::new();
    let (mut value, mut error) = (0.0, 0.0);
    for w in pts.windows(2) {
        if w[1] > w[0] {
            let p = gk15(&f, w[0], w[1]);
            value += p.value;
            error += p.error;
            heap.push(p);
        }
    }
    let mut panels = heap.len();
    loop {
        if error <= opts.abs_tol.max(opts.rel_tol * value.abs()) {
            break;
        }
        if panels >= opts.max_panels {
            return Err(Error::NoConvergence { value, error });
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let m = 0.5 * (worst.a + worst.b);
        if m <= worst.a || m >= worst.b {
            // cannot split further; accept what we have
            heap.push(worst);
            break;
        }
        let (l, r) = (gk15(&f, worst.a, m), gk15(&f, m, worst.b));
        value += l.value + r.value - worst.value;
        error += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        panels += 1;
    }
    // recompute sums in a fixed order to cancel drift from incremental updates
    let mut all: Vec<Panel> = heap.into_vec();
    all.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = all.iter().map(|p| p.value).sum();
    let error = all.iter().map(|p| p.error).sum();
    Ok(Quad { value, error, panels })
}

/// Evenly spaced breakpoints on [a, b] with spacing at most `h`.
pub fn chunks(a: f64, b: f64, h: f64) -> Vec<f64> {
    let n = (((b - a) / h).ceil() as usize).clamp(1, 1_000_000);
    (0..=n).map(|i| if i == n { b } else { a + (b - a) * i as f64 / n as f64 }).collect()
}

/// How a radial integrand behaves at its far end.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extent {
    /// integrate over [0, upper]
    Finite(f64),
    /// smooth integrand with fast (Gaussian-type) decay; mapped r = s t/(1-t)
    Infinite { scale: f64 },
    /// power-law decay, possibly oscillating with wavelength about `scale`;
    /// smooth taper plus Wynn extrapolation over doubling cutoffs
    Oscillatory { scale: f64 },
}

/// Outcome of a tail-extrapolated integral.
#[derive(Debug, Clone, Copy)]
pub struct TailQuad {
    pub value: f64,
    pub error: f64,
    pub converged: bool,
    pub diverging: bool,
}

/// ∫_0^∞ f for an integrand with fast decay, through r = s t/(1-t).
pub fn integrate_mapped(f: impl Fn(f64) -> f64, scale: f64, opts: QuadOpts) -> Result<Quad> {
    let g = |t: f64| {
        if t >= 1.0 {
            return 0.0;
        }
        let om = 1.0 - t;
        let v = f(scale * t / om) * scale / (om * om);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    let pts: Vec<f64> = (0..=16).map(|i| i as f64 / 16.0).collect();
    integrate_pts(g, &pts, opts)
}

/// Keep the partial value of a non-converged panel sum; its error estimate
/// is carried into the total.
fn partial(r: Result<Quad>) -> Quad {
    match r {
        Ok(q) => q,
        Err(Error::NoConvergence { value, error }) => Quad { value, error, panels: 0 },
        Err(_) => Quad { value: f64::NAN, error: f64::INFINITY, panels: 0 },
    }
}

fn psi(v: f64) -> f64 {
    if v <= 0.0 {
        0.0
    } else {
        (-1.0 / v).exp()
    }
}

/// C-infinity cutoff: 1 on [0, 1/2], 0 on [1, inf).
pub fn taper(s: f64) -> f64 {
    if s <= 0.5 {
        return 1.0;
    }
    if s >= 1.0 {
        return 0.0;
    }
    let u = 2.0 * s - 1.0;
    let (a, b) = (psi(1.0 - u), psi(u));
    a / (a + b)
}

/// Wynn's epsilon algorithm; returns (estimate, change from previous estimate).
pub fn wynn_epsilon(s: &[f64]) -> (f64, f64) {
    let n = s.len();
    if n < 3 {
        let last = *s.last().unwrap_or(&0.0);
        let prev = if n >= 2 { s[n - 2] } else { last };
        return (last, (last - prev).abs());
    }
    // columns eps_k^(i), k = -1, 0, 1, ...
    let mut prev: Vec<f64> = vec![0.0; n + 1];
    let mut cur: Vec<f64> = s.to_vec();
    let mut estimates = vec![s[n - 1]];
    let mut k = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        for i in 0..cur.len() - 1 {
            let d = cur[i + 1] - cur[i];
            if d == 0.0 || !d.is_finite() {
                next.clear();
                break;
            }
            next.push(prev[i + 1] + 1.0 / d);
        }
        if next.is_empty() {
            break;
        }
        k += 1;
        prev = cur;
        cur = next;
        if k % 2 == 0 {
            estimates.push(*cur.last().unwrap());
        }
    }
    let m = estimates.len();
    let best = estimates[m - 1];
    let change = if m >= 2 { (best - estimates[m - 2]).abs() } else { (s[n - 1] - s[n - 2]).abs() };
    (best, change)
}

/// ∫_0^∞ f via tapered partial integrals on doubling cutoffs, extrapolated.
pub fn integrate_oscillatory(f: impl Fn(f64) -> f64, scale: f64, start: f64, opts: QuadOpts) -> TailQuad {
    let chunk = 0.5 * scale;
    let l0 = start.max(16.0 * scale);
    let mut seq: Vec<f64> = Vec::new();
    let mut increments: Vec<f64> = Vec::new();
    // plain integral of f up to L/2 accumulated across stages
    let mut head = 0.0;
    let mut head_end = 0.0;
    let mut err_acc = 0.0;
    let mut last = (0.0, f64::INFINITY);
    let mut converged = false;
    for n in 0..14 {
        let l = l0 * 2f64.powi(n);
        let half = 0.5 * l;
        let pts = chunks(head_end, half, chunk);
        let q = partial(integrate_pts(&f, &pts, QuadOpts { max_panels: MAX_PANELS * 4, ..opts }));
        head += q.value;
        err_acc += q.error;
        head_end = half;
        let tpts = chunks(half, l, chunk);
        let tail = partial(integrate_pts(|r| f(r) * taper(r / l), &tpts, opts));
        let s = head + tail.value;
        if let Some(&p) = seq.last() {
            increments.push(s - p);
        }
        seq.push(s);
        if seq.len() >= 3 {
            let (est, _) = wynn_epsilon(&seq);
            let tol = opts.abs_tol.max(opts.rel_tol * est.abs());
            let change = (est - last.0).abs();
            if change <= tol && last.1 <= 10.0 * tol {
                converged = true;
                last = (est, change);
                break;
            }
            last = (est, change);
        } else {
            last = (s, f64::INFINITY);
        }
    }
    let m = increments.len();
    let diverging = !converged
        && m >= 4
        && increments[m - 4..].windows(2).all(|w| w[1].abs() >= 0.85 * w[0].abs() && w[1].signum() == w[0].signum());
    TailQuad { value: last.0, error: last.1 + err_acc, converged, diverging }
}

/// Surface area of the unit sphere in R^d: 2 π^{d/2} / Γ(d/2).
pub fn sphere_area(d: usize) -> f64 {
    2.0 * PI.powf(0.5 * d as f64) / gamma(0.5 * d as f64)
}

/// Volume of the unit ball in R^d.
pub fn ball_volume(d: usize) -> f64 {
    PI.powf(0.5 * d as f64) / gamma(0.5 * d as f64 + 1.0)
}

/// A radial profile integrated over R^d.
pub struct RadialIntegrand<'a> {
    pub f: &'a (dyn Fn(f64) -> f64 + Sync),
    pub d: usize,
    pub extent: Extent,
}

/// (2π^{d/2}/Γ(d/2)) ∫_0^upper r^{d-1} f(r) dr.
pub fn integrate_radial(g: &RadialIntegrand, rel_tol: f64) -> Result<f64> {
    let d = g.d;
    let f = g.f;
    let w = move |r: f64| if d == 1 { f(r) } else { r.powi(d as i32 - 1) * f(r) };
    let opts = QuadOpts::rel(rel_tol);
    let v = match g.extent {
        Extent::Finite(b) => integrate(w, 0.0, b, opts)?.value,
        Extent::Infinite { scale } => integrate_mapped(w, scale, opts)?.value,
        Extent::Oscillatory { scale } => {
            let t = integrate_oscillatory(w, scale, 0.0, QuadOpts::tol(1e-15, rel_tol));
            if !t.converged {
                return Err(Error::NoConvergence { value: t.value, error: t.error });
            }
            t.value
        }
    };
    Ok(sphere_area(d) * v)
}

/// Fourier transform F(f)(t) of the radial function f(|x|) on R^d:
/// (2π^{d/2}/Γ(d/2)) ∫ r^{d-1} f(r) Λ_{(d-2)/2}(2π r t) dr.
pub fn hankel_fourier(f: &(dyn Fn(f64) -> f64 + Sync), d: usize, t: f64, extent: Extent, rel_tol: f64) -> Result<f64> {
    let t = t.abs();
    if t == 0.0 {
        return integrate_radial(&RadialIntegrand { f, d, extent }, rel_tol);
    }
    let nu = 0.5 * d as f64 - 1.0;
    let k = 2.0 * PI * t;
    let w = move |r: f64| {
        let v = f(r) * bessel_lambda(nu, k * r);
        if d == 1 {
            v
        } else {
            r.powi(d as i32 - 1) * v
        }
    };
    let period = 1.0 / t;
    let v = match extent {
        Extent::Finite(b) => integrate_pts(w, &chunks(0.0, b, 0.5 * period), QuadOpts::tol(1e-14, rel_tol))?.value,
        Extent::Infinite { scale } => {
            // oscillation makes the mapped form awkward; cut where the decay
            // has made the profile negligible
            let upper = rapid_cutoff(f, scale);
            integrate_pts(w, &chunks(0.0, upper, 0.5 * period.min(scale)), QuadOpts::tol(1e-14, rel_tol))?.value
        }
        Extent::Oscillatory { scale } => {
            let t = integrate_oscillatory(w, scale.min(period), 16.0 * period.max(scale), QuadOpts::tol(1e-14, rel_tol));
            if !t.converged {
                return Err(Error::NoConvergence { value: t.value, error: t.error });
            }
            t.value
        }
    };
    Ok(sphere_area(d) * v)
}

/// Smallest multiple of `scale` beyond which |f| stays below 1e-19 |f(0)|.
pub fn rapid_cutoff(f: &dyn Fn(f64) -> f64, scale: f64) -> f64 {
    let f0 = f(0.0).abs().max(1e-300);
    let mut r = 4.0 * scale;
    let mut quiet = 0;
    while r < 1e4 * scale {
        if f(r).abs() < 1e-19 * f0 && f(1.25 * r).abs() < 1e-19 * f0 {
            quiet += 1;
            if quiet >= 2 {
                return r;
            }
        } else {
            quiet = 0;
        }
        r *= 1.25;
    }
    r
}

/// Root of a sign-changing continuous function on [lo, hi].
pub fn bisect_root(h: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (flo, fhi) = (h(lo), h(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo * fhi > 0.0 || !(flo * fhi).is_finite() {
        return Err(Error::NoSignChange { lo, hi });
    }
    Ok(crate::specfun::bisect_unchecked(h, lo, hi, flo, tol))
}

/// Grid scan with `grid_n` points then golden-section refinement around the best.
pub fn maximize_1d(h: impl Fn(f64) -> f64 + Sync, lo: f64, hi: f64, grid_n: usize, tol: f64) -> (f64, f64) {
    let n = grid_n.max(3);
    let xs: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
    let vals: Vec<f64> = xs.par_iter().map(|&x| h(x)).collect();
    let mut best = 0;
    for i in 1..n {
        if vals[i] > vals[best] {
            best = i;
        }
    }
    let (mut a, mut b) = (xs[best.saturating_sub(1)], xs[(best + 1).min(n - 1)]);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (h(c), h(d));
    let mut iter = 0;
    while (b - a) > tol && iter < 200 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = h(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = h(d);
        }
        iter += 1;
    }
    let mut arg = xs[best];
    let mut max = vals[best];
    for (x, v) in [(c, fc), (d, fd)] {
        if v > max {
            arg = x;
            max = v;
        }
    }
    (arg, max)
}
