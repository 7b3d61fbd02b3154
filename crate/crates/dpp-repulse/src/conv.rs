//! Radial self-convolution (u∗u)(s) of a profile supported on [0, a],
//! tabulated once and interpolated with a clamped cubic spline.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::quadrature::{integrate_pts, sphere_area, QuadOpts};
use crate::specfun::gamma;

/// Area of the unit sphere S^{d-2} (the angular factor left after fixing
/// the polar axis along the shift vector).
fn omega_minus2(d: usize) -> f64 {
    match d {
        2 => 2.0,
        _ => sphere_area(d - 1),
    }
}

/// (u∗u)(s) for a radial u on R^d vanishing beyond `a`, by direct quadrature.
pub fn self_convolution_at(u: &(dyn Fn(f64) -> f64 + Sync), a: f64, d: usize, s: f64) -> f64 {
    let s = s.abs();
    if s >= 2.0 * a {
        return 0.0;
    }
    let opts = QuadOpts::tol(1e-14, 1e-11);
    if s == 0.0 {
        let v = integrate_pts(|r| r.powi(d as i32 - 1) * u(r) * u(r), &[0.0, 0.5 * a, a], opts)
            .map(|q| q.value)
            .unwrap_or(f64::NAN);
        return sphere_area(d) * v;
    }
    if d == 1 {
        let lo = s - a;
        let mut pts = vec![lo];
        for p in [0.0, s] {
            if p > lo && p < a {
                pts.push(p);
            }
        }
        pts.push(a);
        pts.sort_by(f64::total_cmp);
        return integrate_pts(|y| u(y.abs()) * u((s - y).abs()), &pts, opts).map(|q| q.value).unwrap_or(f64::NAN);
    }
    let inner = |r: f64| -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let c = (s * s + r * r - a * a) / (2.0 * s * r);
        if c >= 1.0 {
            return 0.0;
        }
        let tmax = if c <= -1.0 { PI } else { c.acos() };
        let g = |th: f64| {
            let dist = (s * s + r * r - 2.0 * s * r * th.cos()).max(0.0).sqrt();
            u(dist) * th.sin().powi(d as i32 - 2)
        };
        integrate_pts(g, &[0.0, 0.5 * tmax, tmax], opts).map(|q| q.value).unwrap_or(f64::NAN)
    };
    let lo = (s - a).max(0.0);
    let mut pts = vec![lo];
    if a - s > lo {
        pts.push(a - s);
    }
    pts.push(a);
    let v = integrate_pts(|r| r.powi(d as i32 - 1) * u(r) * inner(r), &pts, opts).map(|q| q.value).unwrap_or(f64::NAN);
    omega_minus2(d) * v
}

/// Tabulated self-convolution on [0, 2a].
#[derive(Debug, Clone)]
pub struct SelfConvolution {
    pub d: usize,
    pub a: f64,
    step: f64,
    y: Vec<f64>,
    m: Vec<f64>,
}

impl SelfConvolution {
    pub fn new(u: &(dyn Fn(f64) -> f64 + Sync), a: f64, d: usize, intervals: usize) -> Self {
        let n = intervals.max(8);
        let step = 2.0 * a / n as f64;
        let y: Vec<f64> = (0..=n)
            .into_par_iter()
            .map(|i| if i == n { 0.0 } else { self_convolution_at(u, a, d, i as f64 * step) })
            .collect();
        let m = clamped_spline(&y, step);
        SelfConvolution { d, a, step, y, m }
    }

    /// Value at s = 0, i.e. ∫u².
    pub fn at_zero(&self) -> f64 {
        self.y[0]
    }

    pub fn eval(&self, s: f64) -> f64 {
        let s = s.abs();
        let n = self.y.len() - 1;
        if s >= 2.0 * self.a {
            return 0.0;
        }
        let x = s / self.step;
        let i = (x.floor() as usize).min(n - 1);
        let t = x - i as f64;
        let h2 = self.step * self.step;
        let (y0, y1, m0, m1) = (self.y[i], self.y[i + 1], self.m[i], self.m[i + 1]);
        let a = 1.0 - t;
        a * y0 + t * y1 + ((a * a * a - a) * m0 + (t * t * t - t) * m1) * h2 / 6.0
    }
}

/// Second derivatives of the cubic spline with zero end slopes.
fn clamped_spline(y: &[f64], h: f64) -> Vec<f64> {
    let n = y.len();
    let mut diag = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    let (lower, upper) = (h / 6.0, h / 6.0);
    diag[0] = h / 3.0;
    rhs[0] = (y[1] - y[0]) / h;
    diag[n - 1] = h / 3.0;
    rhs[n - 1] = -(y[n - 1] - y[n - 2]) / h;
    for i in 1..n - 1 {
        diag[i] = 2.0 * h / 3.0;
        rhs[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h;
    }
    // Thomas algorithm with constant off-diagonals
    let mut c = vec![0.0; n];
    let mut dd = rhs;
    c[0] = upper / diag[0];
    dd[0] /= diag[0];
    for i in 1..n {
        let den = diag[i] - lower * c[i - 1];
        if i < n - 1 {
            c[i] = upper / den;
        }
        dd[i] = (dd[i] - lower * dd[i - 1]) / den;
    }
    for i in (0..n - 1).rev() {
        dd[i] -= c[i] * dd[i + 1];
    }
    dd
}

/// The bump exp(1/(r²-1)) on the unit ball.
pub fn bump(r: f64) -> f64 {
    if r.abs() >= 1.0 {
        0.0
    } else {
        (1.0 / (r * r - 1.0)).exp()
    }
}

/// Radial derivative of `bump`.
pub fn bump_prime(r: f64) -> f64 {
    if r.abs() >= 1.0 {
        0.0
    } else {
        let q = r * r - 1.0;
        -2.0 * r / (q * q) * bump(r)
    }
}

/// Volume of the radius-`a` ball in R^d.
pub fn ball_volume_radius(d: usize, a: f64) -> f64 {
    PI.powf(0.5 * d as f64) / gamma(0.5 * d as f64 + 1.0) * a.powi(d as i32)
}
