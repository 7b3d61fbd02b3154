//! Real special functions: Gamma, Bessel J of real order, its zeros, the
//! normalized Bessel function and generalized Laguerre polynomials.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// B_{2k} / (2k (2k-1)), k = 1..6
const STIRLING: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Gamma function for x > 0.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma_fn needs x > 0, got {x}")));
    }
    Ok(gamma(x))
}

/// Unchecked Gamma; valid for any real x that is not a pole.
pub(crate) fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x == x.floor() && x <= 21.0 {
        let mut f = 1.0;
        for k in 2..(x as u32) {
            f *= k as f64;
        }
        return f;
    }
    let y = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (y + i as f64);
    }
    let t = y + LANCZOS_G + 0.5;
    if x < 140.0 {
        (2.0 * PI).sqrt() * t.powf(y + 0.5) * (-t).exp() * a
    } else {
        ((y + 0.5) * t.ln() - t + a.ln()).exp() * (2.0 * PI).sqrt()
    }
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 12.0 {
        return gamma(x).ln();
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut s = 0.0;
    let mut p = inv;
    for c in STIRLING {
        s += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + s
}

/// Γ(x + a) / Γ(x) without forming either Gamma value.
pub fn gamma_ratio(x: f64, a: f64) -> f64 {
    if a == 0.0 {
        return 1.0;
    }
    if x + a < 30.0 && x < 30.0 && x > 0.0 && x + a > 0.0 {
        return gamma(x + a) / gamma(x);
    }
    let mut f = 1.0;
    let mut y = x;
    while y < 20.0 || y + a < 20.0 {
        f *= y / (y + a);
        y += 1.0;
    }
    let mut s = (y - 0.5) * (a / y).ln_1p() + a * (y + a).ln() - a;
    let (iy, iya) = (1.0 / y, 1.0 / (y + a));
    let (mut py, mut pya) = (iy, iya);
    for c in STIRLING {
        s += c * (pya - py);
        py *= iy * iy;
        pya *= iya * iya;
    }
    f * s.exp()
}

/// binom(m - 1 + a, m - 1) for integer m >= 1 and real a > -1.
pub fn binom_shifted(m: u64, a: f64) -> f64 {
    gamma_ratio(m as f64, a) / gamma(a + 1.0)
}

fn check_order(nu: f64, x: f64) -> Result<()> {
    if !(nu >= -0.5) || !nu.is_finite() {
        return Err(Error::Domain(format!("Bessel order must be >= -1/2, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Bessel argument must be finite and >= 0, got {x}")));
    }
    Ok(())
}

/// Bessel function of the first kind J_ν(x), ν >= -1/2, x >= 0.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_order(nu, x)?;
    Ok(j_unchecked(nu, x))
}

/// Derivative J_ν'(x).
pub fn bessel_j_prime(nu: f64, x: f64) -> Result<f64> {
    check_order(nu, x)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 || nu > 1.0 {
            0.0
        } else if nu == 1.0 {
            0.5
        } else if nu > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        });
    }
    if nu == 0.0 {
        return Ok(-j_unchecked(1.0, x));
    }
    if nu >= 0.5 {
        Ok(0.5 * (j_unchecked(nu - 1.0, x) - j_unchecked(nu + 1.0, x)))
    } else {
        Ok(nu / x * j_unchecked(nu, x) - j_unchecked(nu + 1.0, x))
    }
}

/// J_ν(x) for ν > -1 (and by one recurrence step for ν >= -3/2), x >= 0.
pub(crate) fn j_unchecked(nu: f64, x: f64) -> f64 {
    if nu < -1.0 {
        // J_{ν} = (2(ν+1)/x) J_{ν+1} - J_{ν+2}
        if x == 0.0 {
            return f64::INFINITY;
        }
        return 2.0 * (nu + 1.0) / x * j_unchecked(nu + 1.0, x) - j_unchecked(nu + 2.0, x);
    }
    let (v, ls) = j_scaled(nu, x);
    if ls == 0.0 {
        v
    } else {
        v * ls.exp()
    }
}

/// J_ν(x) = value * exp(log_scale); keeps deep underflow representable.
fn j_scaled(nu: f64, x: f64) -> (f64, f64) {
    if x == 0.0 {
        return if nu == 0.0 {
            (1.0, 0.0)
        } else if nu > 0.0 {
            (0.0, 0.0)
        } else {
            (f64::INFINITY, 0.0)
        };
    }
    let z = 0.25 * x * x;
    if x < 2.0 || z <= 4.0 * (nu + 1.0) {
        let s = hyp0f1_neg(nu, z);
        let lp = nu * (0.5 * x).ln() - ln_gamma_any(nu + 1.0);
        return (s * gamma_sign(nu + 1.0), lp);
    }
    if x >= 25.0 {
        if let Some(v) = hankel_asymptotic(nu, x) {
            return (v, 0.0);
        }
    }
    if nu < 0.0 {
        // J_ν = J'_{ν+1} + (ν+1)/x J_{ν+1}
        let (j1, jp1, ls) = steed(nu + 1.0, x);
        return (jp1 + (nu + 1.0) / x * j1, ls);
    }
    let (j, _, ls) = steed(nu, x);
    (j, ls)
}

fn ln_gamma_any(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x)
    } else {
        gamma(x).abs().ln()
    }
}

fn gamma_sign(x: f64) -> f64 {
    if x > 0.0 || gamma(x) > 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Σ_k (-z)^k / ((ν+1)_k k!)
fn hyp0f1_neg(nu: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -z / ((nu + k) * k);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() || k > 500.0 {
            break;
        }
    }
    sum
}

/// Hankel's expansion; None when the series stops converging first.
fn hankel_asymptotic(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term: f64 = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        let next = term * (mu - (2.0 * k - 1.0_f64).powi(2)) / (k * 8.0 * x);
        if next == 0.0 {
            break;
        }
        if next.abs() > term.abs() {
            return None;
        }
        term = next;
        // terms alternate between Q (odd k) and P (even k), signs (-1)^{floor(k/2)}
        let sign = if (k as u64 / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if (k as u64) % 2 == 1 {
            q += sign * term;
        } else {
            p += sign * term;
        }
        if term.abs() < 1e-17 {
            break;
        }
        if k > 200.0 {
            return None;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    Some((2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin()))
}

/// Steed's method (continued fractions CF1 and CF2 plus downward
/// recurrence) for x >= 2, ν >= 0. Returns (J_ν, J_ν', log scale).
fn steed(nu: f64, x: f64) -> (f64, f64, f64) {
    const EPS: f64 = 1e-16;
    const FPMIN: f64 = 1e-300;
    const MAXIT: usize = 2_000_000;
    const BIG: f64 = 1e250;
    let nl = (nu - x + 1.5).max(0.0).floor() as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    let mut isign = 1.0;
    let mut h = nu * xi;
    if h.abs() < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    let mut log_scale = 0.0;
    for _ in 0..nl {
        let t = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * t - rjl;
        rjl = t;
        if rjl.abs() > BIG {
            rjl /= BIG;
            rjpl /= BIG;
            log_scale -= BIG.ln();
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut tmp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = tmp;
    for i in 2..MAXIT {
        a += 2.0 * (i - 1) as f64;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        tmp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = tmp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            break;
        }
    }
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    // the seed FPMIN goes into the log scale so deep underflow survives
    let scale = rjmu / rjl;
    (rjl1 / FPMIN * scale, rjp1 / FPMIN * scale, log_scale + FPMIN.ln())
}

/// Normalized Bessel function Λ_ν(x) = Γ(ν+1) (2/x)^ν J_ν(x), with Λ_ν(0) = 1.
///
/// Entire in x; Λ_{-1/2} = cos, Λ_{1/2}(x) = sin(x)/x.
pub fn bessel_lambda(nu: f64, x: f64) -> f64 {
    let x = x.abs();
    if x == 0.0 {
        return 1.0;
    }
    let z = 0.25 * x * x;
    if x < 2.0 || z <= 4.0 * (nu + 1.0) {
        return hyp0f1_neg(nu, z);
    }
    let (j, ls) = j_scaled(nu, x);
    if j == 0.0 {
        return 0.0;
    }
    let lp = ln_gamma_any(nu + 1.0) + nu * (2.0 / x).ln() + ls;
    gamma_sign(nu + 1.0) * j * lp.exp()
}

/// d/dx Λ_ν(x) = -x Λ_{ν+1}(x) / (2(ν+1)).
pub fn bessel_lambda_prime(nu: f64, x: f64) -> f64 {
    -x * bessel_lambda(nu + 1.0, x) / (2.0 * (nu + 1.0))
}

/// First positive zero j_ν of J_ν.
pub fn bessel_first_zero(nu: f64) -> Result<f64> {
    Ok(bessel_zeros_below(nu, 1, f64::INFINITY)?[0])
}

/// The first `n` positive zeros of J_ν.
pub fn bessel_zeros(nu: f64, n: usize) -> Result<Vec<f64>> {
    bessel_zeros_below(nu, n, f64::INFINITY)
}

/// Positive zeros of J_ν, at most `n` of them, stopping once past `limit`.
pub fn bessel_zeros_below(nu: f64, n: usize, limit: f64) -> Result<Vec<f64>> {
    check_order(nu, 1.0)?;
    let step = 0.5;
    let mut lo = nu.max(1.0);
    let mut flo = j_unchecked(nu, lo);
    let mut zeros = Vec::with_capacity(n.min(64));
    // zeros are spaced by more than 2.5 for ν >= -1/2, the first lies
    // below ν + 1.86 ν^{1/3} + O(ν^{-1/3})
    let first_cap = nu + 3.0 * PI + 3.0 * (nu + 1.0).cbrt();
    while zeros.len() < n {
        let hi = lo + step;
        let fhi = j_unchecked(nu, hi);
        if flo == 0.0 {
            zeros.push(lo);
        } else if flo * fhi < 0.0 {
            zeros.push(bisect_unchecked(|t| j_unchecked(nu, t), lo, hi, flo, 0.0));
        }
        if zeros.last().is_some_and(|&z| z > limit) {
            break;
        }
        if zeros.is_empty() && hi > first_cap {
            return Err(Error::NoSignChange { lo: nu.max(1.0), hi });
        }
        lo = hi;
        flo = fhi;
    }
    Ok(zeros)
}

/// Bisection to machine resolution, h(lo) having sign of `flo`.
pub(crate) fn bisect_unchecked(h: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, flo: f64, tol: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= tol {
            break;
        }
        let fm = h(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Generalized Laguerre polynomial L_m^α(x) by the three-term recurrence.
pub fn laguerre(m: u32, alpha: f64, x: f64) -> f64 {
    laguerre_weighted(m, alpha, x, 0.0)
}

/// e^{-w} L_m^α(x); the weight is spread over the recurrence so large
/// arguments do not overflow before the damping is applied.
pub fn laguerre_weighted(m: u32, alpha: f64, x: f64, w: f64) -> f64 {
    let half = (-0.5 * w).exp();
    let mut l0 = half;
    if m == 0 {
        return l0 * half;
    }
    let mut l1 = (1.0 + alpha - x) * half;
    for k in 1..m {
        let k = k as f64;
        let l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    l1 * half
}
