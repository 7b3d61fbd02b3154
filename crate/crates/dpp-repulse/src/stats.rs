//! Estimators for checking simulated patterns against theory.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::RadialKernel;
use crate::metrics::{count_variance, fmt17, pcf, CurveKind, PcfCurve};
use crate::quadrature::sphere_area;
use crate::sampler::{replicates, sample_poisson, PointPattern, SpectralModel, Window};

/// n/|W|.
pub fn empirical_intensity(p: &PointPattern) -> f64 {
    p.len() as f64 / p.window.volume()
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub se: f64,
}

/// Pooled intensity Σn/(k|W|) with the across-pattern standard error.
pub fn pooled_intensity(patterns: &[PointPattern]) -> Result<Estimate> {
    let first = patterns.first().ok_or_else(|| Error::InvalidParameter("no patterns".into()))?;
    let vol = first.window.volume();
    let xs: Vec<f64> = patterns.iter().map(|p| p.len() as f64 / vol).collect();
    let (m, v) = mean_var(&xs);
    Ok(Estimate { value: m, se: (v / xs.len() as f64).sqrt() })
}

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let m = xs.iter().sum::<f64>() / n;
    let v = if xs.len() > 1 { xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (n - 1.0) } else { f64::NAN };
    (m, v)
}

fn epanechnikov(u: f64, b: f64) -> f64 {
    let s = u / b;
    if s.abs() >= 1.0 {
        0.0
    } else {
        0.75 / b * (1.0 - s * s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PcfEstimate {
    pub curve: PcfCurve,
    pub bandwidth: Vec<f64>,
    pub n_patterns: usize,
    pub pointwise_se: Vec<f64>,
}

impl PcfEstimate {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("r,g_hat,se\n");
        for i in 0..self.curve.radii.len() {
            let _ = writeln!(s, "{},{},{}", fmt17(self.curve.radii[i]), fmt17(self.curve.values[i]), fmt17(self.pointwise_se[i]));
        }
        s
    }
}

/// Minimum number of pooled pairs within a bandwidth of each radius.
pub const MIN_PAIRS: usize = 5;

/// Kernel-smoothed, translation-corrected pcf estimate pooled over patterns
/// as a ratio of sums. `bandwidths` has one entry per radius, or a single
/// entry used for all.
pub fn empirical_pcf(patterns: &[PointPattern], radii: &[f64], bandwidths: &[f64]) -> Result<PcfEstimate> {
    let first = patterns.first().ok_or_else(|| Error::InvalidParameter("need at least one pattern".into()))?;
    let w = &first.window;
    if patterns.iter().any(|p| &p.window != w) {
        return Err(Error::InvalidParameter("all patterns must share one window".into()));
    }
    if radii.is_empty() || radii.iter().any(|&r| !(r > 0.0)) {
        return Err(Error::InvalidParameter("radii must be positive".into()));
    }
    if radii.windows(2).any(|p| !(p[1] > p[0])) {
        return Err(Error::InvalidParameter("radii must be strictly ascending".into()));
    }
    let bw: Vec<f64> = match bandwidths.len() {
        1 => vec![bandwidths[0]; radii.len()],
        n if n == radii.len() => bandwidths.to_vec(),
        _ => return Err(Error::InvalidParameter("need one bandwidth or one per radius".into())),
    };
    if bw.iter().any(|&b| !(b > 0.0)) {
        return Err(Error::InvalidParameter("bandwidth must be positive".into()));
    }
    let d = w.dim();
    let sides = w.sides();
    let vol = w.volume();
    let nr = radii.len();
    // per pattern: smoothed corrected pair sums A, denominators n(n-1)/|W|², pair counts
    let parts: Vec<(Vec<f64>, f64, Vec<usize>)> = patterns
        .par_iter()
        .map(|p| {
            let mut a = vec![0.0; nr];
            let mut cnt = vec![0usize; nr];
            let pts = &p.points;
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let mut gam = 1.0;
                    let mut r2 = 0.0;
                    for c in 0..d {
                        let z = pts[i][c] - pts[j][c];
                        gam *= sides[c] - z.abs();
                        r2 += z * z;
                    }
                    let dist = r2.sqrt();
                    for k in 0..nr {
                        let kb = epanechnikov(radii[k] - dist, bw[k]);
                        if kb > 0.0 {
                            // both ordered pairs
                            a[k] += 2.0 * kb / gam;
                            cnt[k] += 1;
                        }
                    }
                }
            }
            let n = pts.len() as f64;
            (a, n * (n - 1.0) / (vol * vol), cnt)
        })
        .collect();
    let m = patterns.len();
    let mut values = vec![0.0; nr];
    let mut ses = vec![0.0; nr];
    let bsum: f64 = parts.iter().map(|p| p.1).sum();
    for k in 0..nr {
        let pairs: usize = parts.iter().map(|p| p.2[k]).sum();
        if pairs < MIN_PAIRS {
            return Err(Error::InvalidParameter(format!("only {pairs} pairs near r = {} (need {MIN_PAIRS})", radii[k])));
        }
        let s = sphere_area(d) * radii[k].powi(d as i32 - 1);
        let asum: f64 = parts.iter().map(|p| p.0[k]).sum();
        let ratio = asum / (s * bsum);
        values[k] = ratio;
        // linearized ratio-estimator variance from per-pattern residuals
        ses[k] = if m > 1 {
            let e2: f64 = parts.iter().map(|p| (p.0[k] / s - ratio * p.1).powi(2)).sum();
            (m as f64 / (m as f64 - 1.0) * e2).sqrt() / bsum
        } else {
            f64::NAN
        };
    }
    Ok(PcfEstimate {
        curve: PcfCurve { radii: radii.to_vec(), values, kind: CurveKind::Empirical },
        bandwidth: bw,
        n_patterns: m,
        pointwise_se: ses,
    })
}

/// Default smoothing bandwidth 0.1/ρ^{1/d}.
pub fn default_bandwidth(rho: f64, d: usize) -> f64 {
    0.1 / rho.powf(1.0 / d as f64)
}

/// Bandwidth used at a probe radius: the default, capped at r/4 so that the
/// smoothing bias near the origin stays below the Monte Carlo noise.
pub fn probe_bandwidth(rho: f64, d: usize, r: f64) -> f64 {
    default_bandwidth(rho, d).min(0.25 * r)
}

#[derive(Debug, Clone, Serialize)]
pub struct CountStats {
    pub n: usize,
    pub mean: f64,
    pub mean_se: f64,
    pub variance: f64,
    pub variance_se: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Mean and variance of the counts in `sub` across patterns.
pub fn count_stats(patterns: &[PointPattern], sub: &Window) -> Result<CountStats> {
    if patterns.len() < 2 {
        return Err(Error::InvalidParameter("need at least two patterns".into()));
    }
    let xs: Vec<f64> = patterns.iter().map(|p| p.points.iter().filter(|x| sub.contains_strict(x)).count() as f64).collect();
    let n = xs.len() as f64;
    let (m, v) = mean_var(&xs);
    let m4 = xs.iter().map(|x| (x - m).powi(4)).sum::<f64>() / n;
    // large-sample variance of the sample variance
    let var_s2 = ((m4 - v * v * (n - 3.0) / (n - 1.0)) / n).max(0.0);
    Ok(CountStats { n: xs.len(), mean: m, mean_se: (v / n).sqrt(), variance: v, variance_se: var_s2.sqrt(), warnings: Vec::new() })
}

/// Smallest r beyond which (C/ρ)² stays under 1e-2 (checked up to 4r).
pub fn interaction_range(kernel: &RadialKernel) -> f64 {
    if kernel.is_poisson() {
        return 0.0;
    }
    if let Some(s) = kernel.support_radius {
        return s;
    }
    let small = |r: f64| (0..=64).all(|i| (kernel.eval(r * (1.0 + 3.0 * i as f64 / 64.0)) / kernel.rho).powi(2) < 1e-2);
    let mut r = 0.05 / kernel.rho.powf(1.0 / kernel.d as f64);
    while !small(r) && r < 1e6 {
        r *= 1.1;
    }
    r
}

/// Draw `reps` patterns from the kernel (Poisson for the degenerate kernel).
pub fn simulate(kernel: &RadialKernel, window: &Window, reps: usize, seed: u64, k: Option<usize>) -> Result<Vec<PointPattern>> {
    if kernel.is_poisson() {
        return replicates(reps, |s| sample_poisson(kernel.rho, window, seed, s));
    }
    let model = SpectralModel::new(kernel, window, k, None)?;
    replicates(reps, |s| model.draw(seed, s))
}

/// Monte Carlo mean and variance of the counts in `sub`.
pub fn count_variance_mc(kernel: &RadialKernel, window: &Window, sub: &Window, reps: usize, seed: u64) -> Result<CountStats> {
    if !window.contains(sub) {
        return Err(Error::InvalidParameter("sub-window must lie inside the window".into()));
    }
    let pats = simulate(kernel, window, reps, seed, None)?;
    let mut st = count_stats(&pats, sub)?;
    let margin = (0..window.dim()).map(|i| (sub.lower[i] - window.lower[i]).min(window.upper[i] - sub.upper[i])).fold(f64::INFINITY, f64::min);
    let need = interaction_range(kernel);
    if margin < need {
        st.warnings.push(format!("margin {margin} is below the interaction range {need}"));
    }
    Ok(st)
}

#[derive(Debug, Clone, Serialize)]
pub struct Band {
    pub estimate: f64,
    pub se: f64,
    pub theory: f64,
    /// |estimate - theory| ≤ 3 se
    pub pass: bool,
}

impl Band {
    fn new(estimate: f64, se: f64, theory: f64) -> Band {
        Band { estimate, se, theory, pass: (estimate - theory).abs() <= 3.0 * se }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PcfProbe {
    pub r: f64,
    pub bandwidth: f64,
    #[serde(flatten)]
    pub band: Band,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimReport {
    pub reps: usize,
    pub seed: u64,
    pub window: Window,
    pub intensity: Band,
    pub pcf: Vec<PcfProbe>,
    pub sub_window: Window,
    pub count_variance: Band,
    pub count_mean: Band,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Probe radii for the pcf check, in units of ρ^{-1/d}.
pub const PROBE_RADII: [f64; 3] = [0.1, 0.5, 1.0];

/// Simulate and compare intensity, pcf at the probe radii and the count
/// variance in the centred sub-window of volume 4/ρ against theory.
pub fn validate_sim(kernel: &RadialKernel, window: &Window, reps: usize, seed: u64) -> Result<SimReport> {
    if reps < 2 {
        return Err(Error::InvalidParameter("need at least 2 replicates".into()));
    }
    let d = kernel.d;
    let rho = kernel.rho;
    let unit = rho.powf(-1.0 / d as f64);
    let pats = simulate(kernel, window, reps, seed, None)?;
    let mut warnings: Vec<String> = pats[0].provenance.notes.iter().filter(|n| n.contains("too small")).cloned().collect();
    let inten = pooled_intensity(&pats)?;
    let radii: Vec<f64> = PROBE_RADII.iter().map(|r| r * unit).collect();
    let bws: Vec<f64> = radii.iter().map(|&r| probe_bandwidth(rho, d, r)).collect();
    let est = empirical_pcf(&pats, &radii, &bws)?;
    let pcf_probes = radii
        .iter()
        .enumerate()
        .map(|(i, &r)| Ok(PcfProbe { r, bandwidth: bws[i], band: Band::new(est.curve.values[i], est.pointwise_se[i], pcf(kernel, r)?) }))
        .collect::<Result<Vec<_>>>()?;
    let half = 0.5 * (4.0 / rho).powf(1.0 / d as f64);
    let centre: Vec<f64> = window.lower.iter().zip(&window.upper).map(|(a, b)| 0.5 * (a + b)).collect();
    let sub = Window::new(centre.iter().map(|c| c - half).collect(), centre.iter().map(|c| c + half).collect())?;
    if !window.contains(&sub) {
        return Err(Error::InvalidParameter("window too small for the count sub-window".into()));
    }
    let cs = count_stats(&pats, &sub)?;
    let margin = (0..d).map(|i| sub.lower[i] - window.lower[i]).fold(f64::INFINITY, f64::min);
    let need = interaction_range(kernel);
    if margin < need {
        warnings.push(format!("count sub-window margin {margin} is below the interaction range {need}"));
    }
    let var_theory = count_variance(kernel, &sub)?;
    let intensity = Band::new(inten.value, inten.se, rho);
    let count_variance = Band::new(cs.variance, cs.variance_se, var_theory);
    let count_mean = Band::new(cs.mean, cs.mean_se, rho * sub.volume());
    let pass = intensity.pass && count_variance.pass && count_mean.pass && pcf_probes.iter().all(|p| p.band.pass);
    Ok(SimReport {
        reps,
        seed,
        window: window.clone(),
        intensity,
        pcf: pcf_probes,
        sub_window: sub,
        count_variance,
        count_mean,
        pass,
        warnings,
    })
}
