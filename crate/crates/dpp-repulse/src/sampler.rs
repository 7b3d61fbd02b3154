//! Point patterns on rectangles: spectral DPP sampling, Poisson, Matérn II.
//!
//! The DPP sampler replaces the kernel on the window W = Π[lo_i, hi_i] by
//! its Fourier series, C(x-y) ≈ Σ_k λ_k φ_k(x) conj(φ_k(y)) with
//! φ_k(x) = exp(2iπ k·(x-lo)/L)/√|W|. Each λ_k is the average of F(C) over
//! the frequency cell k/L ± 1/(2L), so Σλ_k = ρ|W| up to truncation. The
//! approximation is periodic on W.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{KernelSpec, RadialKernel};
use crate::metrics::fmt17;
use crate::quadrature::{ball_volume, integrate_pts, Extent, QuadOpts};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl Window {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Window> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidParameter("window bounds must be non-empty and of equal length".into()));
        }
        if lower.iter().zip(&upper).any(|(a, b)| !(b > a) || !a.is_finite() || !b.is_finite()) {
            return Err(Error::InvalidParameter("window needs upper_i > lower_i".into()));
        }
        Ok(Window { lower, upper })
    }

    /// The cube [-h, h]^d.
    pub fn centered(d: usize, h: f64) -> Result<Window> {
        Window::new(vec![-h; d], vec![h; d])
    }

    /// Parse "lo1,hi1;lo2,hi2;...".
    pub fn parse(s: &str) -> Result<Window> {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for part in s.split(';') {
            let v: Vec<&str> = part.split(',').map(str::trim).collect();
            if v.len() != 2 {
                return Err(Error::InvalidParameter(format!("bad window component '{part}'")));
            }
            let p = |x: &str| x.parse::<f64>().map_err(|_| Error::InvalidParameter(format!("bad number '{x}'")));
            lo.push(p(v[0])?);
            hi.push(p(v[1])?);
        }
        Window::new(lo, hi)
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn sides(&self) -> Vec<f64> {
        self.lower.iter().zip(&self.upper).map(|(a, b)| b - a).collect()
    }

    pub fn volume(&self) -> f64 {
        self.sides().iter().product()
    }

    pub fn contains_strict(&self, x: &[f64]) -> bool {
        x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(v, (a, b))| v > a && v < b)
    }

    pub fn contains(&self, other: &Window) -> bool {
        (0..self.dim()).all(|i| other.lower[i] >= self.lower[i] && other.upper[i] <= self.upper[i])
    }

    fn dilate(&self, r: f64) -> Window {
        Window { lower: self.lower.iter().map(|a| a - r).collect(), upper: self.upper.iter().map(|b| b + r).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub model: String,
    pub seed: u64,
    /// replicate index; selects the generator stream
    pub stream: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum_lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<KernelSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proposal_intensity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hardcore_r: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Provenance {
    fn plain(model: &str, seed: u64, stream: u64) -> Self {
        Provenance {
            model: model.into(),
            seed,
            stream,
            truncation_k: None,
            sum_lambda: None,
            spec: None,
            proposal_intensity: None,
            hardcore_r: None,
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointPattern {
    pub points: Vec<Vec<f64>>,
    pub window: Window,
    pub provenance: Provenance,
}

impl PointPattern {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let d = self.window.dim();
        let header: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
        let mut s = header.join(",");
        s.push('\n');
        for p in &self.points {
            let row: Vec<String> = p.iter().map(|&v| fmt17(v)).collect();
            let _ = writeln!(s, "{}", row.join(","));
        }
        s
    }

    /// Sidecar metadata: window and provenance.
    pub fn sidecar_json(&self) -> String {
        #[derive(Serialize)]
        struct Sidecar<'a> {
            window: &'a Window,
            n_points: usize,
            #[serde(flatten)]
            provenance: &'a Provenance,
        }
        serde_json::to_string_pretty(&Sidecar { window: &self.window, n_points: self.len(), provenance: &self.provenance })
            .expect("serializable")
            + "\n"
    }

    /// Read back a pattern written by `to_csv` plus its sidecar.
    pub fn from_files(csv: &str, sidecar: &str) -> Result<PointPattern> {
        #[derive(Deserialize)]
        struct Sidecar {
            window: Window,
            #[serde(flatten)]
            provenance: Provenance,
        }
        let sc: Sidecar = serde_json::from_str(sidecar).map_err(|e| Error::InvalidParameter(format!("sidecar: {e}")))?;
        let d = sc.window.dim();
        let mut lines = csv.lines();
        let header = lines.next().unwrap_or("");
        if header.split(',').count() != d {
            return Err(Error::InvalidParameter(format!("CSV header '{header}' does not match d = {d}")));
        }
        let mut points = Vec::new();
        for l in lines.filter(|l| !l.is_empty()) {
            let p = l
                .split(',')
                .map(|x| x.parse::<f64>().map_err(|_| Error::InvalidParameter(format!("bad CSV value '{x}'"))))
                .collect::<Result<Vec<_>>>()?;
            if p.len() != d {
                return Err(Error::InvalidParameter(format!("row '{l}' has wrong length")));
            }
            points.push(p);
        }
        Ok(PointPattern { points, window: sc.window, provenance: sc.provenance })
    }
}

/// Generator for (seed, replicate): one ChaCha20 stream per replicate.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut r = ChaCha20Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Run `reps` independent replicates in parallel, ordered by index.
pub fn replicates<T: Send>(reps: usize, f: impl Fn(u64) -> Result<T> + Sync) -> Result<Vec<T>> {
    (0..reps as u64).into_par_iter().map(&f).collect()
}

fn uniform_in(rng: &mut ChaCha20Rng, w: &Window) -> Vec<f64> {
    (0..w.dim())
        .map(|i| loop {
            let u: f64 = rng.random();
            if u > 0.0 {
                let x = w.lower[i] + u * (w.upper[i] - w.lower[i]);
                if x < w.upper[i] {
                    break x;
                }
            }
        })
        .collect()
}

/// Homogeneous Poisson process.
pub fn sample_poisson(rho: f64, window: &Window, seed: u64, stream: u64) -> Result<PointPattern> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::InvalidParameter(format!("rho must be positive, got {rho}")));
    }
    let mut rng = rng_for(seed, stream);
    let points = poisson_points(&mut rng, rho, window)?;
    let mut prov = Provenance::plain("poisson", seed, stream);
    prov.proposal_intensity = Some(rho);
    Ok(PointPattern { points, window: window.clone(), provenance: prov })
}

fn poisson_points(rng: &mut ChaCha20Rng, rho: f64, window: &Window) -> Result<Vec<Vec<f64>>> {
    let mean = rho * window.volume();
    let n = if mean > 0.0 {
        Poisson::new(mean).map_err(|e| Error::Sampler(format!("Poisson({mean}): {e}")))?.sample(rng) as usize
    } else {
        0
    };
    Ok((0..n).map(|_| uniform_in(rng, window)).collect())
}

/// Proposal intensity giving retained intensity `target_rho`:
/// λ_p = -ln(1 - ρ V_r)/V_r.
pub fn solve_matern_proposal(target_rho: f64, hardcore_r: f64, d: usize) -> Result<f64> {
    if !(target_rho > 0.0) || !(hardcore_r > 0.0) || d == 0 {
        return Err(Error::InvalidParameter("need target_rho > 0, hardcore_r > 0, d >= 1".into()));
    }
    let v = ball_volume(d) * hardcore_r.powi(d as i32);
    // ρ V_r = 1 is the unreachable supremum; allow for rounding in V_r
    if target_rho * v >= 1.0 - 1e-12 {
        return Err(Error::Domain(format!("target intensity {target_rho} unreachable: rho V_r = {} >= 1", target_rho * v)));
    }
    Ok(-(-target_rho * v).ln_1p() / v)
}

/// Retained intensity (1 - exp(-λ_p V_r))/V_r.
pub fn matern_retained_intensity(lambda_p: f64, hardcore_r: f64, d: usize) -> f64 {
    let v = ball_volume(d) * hardcore_r.powi(d as i32);
    -(-lambda_p * v).exp_m1() / v
}

/// Type II Matérn hardcore process.
pub fn sample_matern2(lambda_p: f64, hardcore_r: f64, window: &Window, seed: u64, stream: u64) -> Result<PointPattern> {
    if !(lambda_p > 0.0 && lambda_p.is_finite()) || !(hardcore_r > 0.0 && hardcore_r.is_finite()) {
        return Err(Error::InvalidParameter("need proposal intensity > 0 and hardcore radius > 0".into()));
    }
    let mut rng = rng_for(seed, stream);
    let big = window.dilate(hardcore_r);
    let props = poisson_points(&mut rng, lambda_p, &big)?;
    let marks: Vec<f64> = (0..props.len()).map(|_| rng.random::<f64>()).collect();
    let d = window.dim();
    // flat grid of cells of side hardcore_r; proposals bucketed by cell
    let dims: Vec<usize> = big.sides().iter().map(|s| ((s / hardcore_r).ceil() as usize).max(1)).collect();
    let cell_of = |p: &[f64]| -> Vec<usize> {
        p.iter().zip(&big.lower).zip(&dims).map(|((x, l), &n)| (((x - l) / hardcore_r).floor() as usize).min(n - 1)).collect()
    };
    let flat = |c: &[usize]| c.iter().zip(&dims).fold(0usize, |acc, (i, n)| acc * n + i);
    let ncell: usize = dims.iter().product();
    let mut start = vec![0usize; ncell + 1];
    let cells: Vec<usize> = props.iter().map(|p| flat(&cell_of(p))).collect();
    for &c in &cells {
        start[c + 1] += 1;
    }
    for c in 0..ncell {
        start[c + 1] += start[c];
    }
    let mut order = vec![0usize; props.len()];
    let mut fill = start.clone();
    for (i, &c) in cells.iter().enumerate() {
        order[fill[c]] = i;
        fill[c] += 1;
    }
    // within a cell, ascending mark, so a scan can stop at the first larger mark
    for c in 0..ncell {
        order[start[c]..start[c + 1]].sort_unstable_by(|&a, &b| marks[a].total_cmp(&marks[b]));
    }
    let r2 = hardcore_r * hardcore_r;
    let mut points = Vec::new();
    let mut nb = vec![0usize; d];
    for (i, p) in props.iter().enumerate() {
        if !window.contains_strict(p) {
            continue;
        }
        let c = cell_of(p);
        let mut beaten = false;
        'offsets: for code in 0..3usize.pow(d as u32) {
            let mut code = code;
            for k in 0..d {
                let o = (code % 3) as i64 - 1;
                code /= 3;
                let v = c[k] as i64 + o;
                if v < 0 || v >= dims[k] as i64 {
                    continue 'offsets;
                }
                nb[k] = v as usize;
            }
            let f = flat(&nb);
            for &j in &order[start[f]..start[f + 1]] {
                if marks[j] >= marks[i] {
                    break;
                }
                if props[j].iter().zip(p).map(|(a, b)| (a - b) * (a - b)).sum::<f64>() < r2 {
                    beaten = true;
                    break 'offsets;
                }
            }
        }
        if !beaten {
            points.push(p.clone());
        }
    }
    let mut prov = Provenance::plain("matern2", seed, stream);
    prov.proposal_intensity = Some(lambda_p);
    prov.hardcore_r = Some(hardcore_r);
    prov.notes.push("proposals drawn on the window dilated by the hardcore radius".into());
    Ok(PointPattern { points, window: window.clone(), provenance: prov })
}

/// How eigenvalues are obtained from F(C).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenRule {
    /// average of F(C) over the frequency cell (default)
    CellAverage,
    /// F(C)(k/L)
    PointSample,
}

const GL6: [(f64, f64); 6] = [
    (-0.932_469_514_203_152_1, 0.171_324_492_379_170_4),
    (-0.661_209_386_466_264_5, 0.360_761_573_048_138_6),
    (-0.238_619_186_083_196_9, 0.467_913_934_572_691_0),
    (0.238_619_186_083_196_9, 0.467_913_934_572_691_0),
    (0.661_209_386_466_264_5, 0.360_761_573_048_138_6),
    (0.932_469_514_203_152_1, 0.171_324_492_379_170_4),
];

/// Mean of f(|t|) over the box Π[c_i - h_i/2, c_i + h_i/2].
fn cell_average(f: &dyn Fn(f64) -> f64, c: &[f64], h: &[f64], jump: Option<f64>) -> f64 {
    let d = c.len();
    let (mut near, mut far) = (0.0, 0.0);
    for i in 0..d {
        let (a, b) = (c[i] - 0.5 * h[i], c[i] + 0.5 * h[i]);
        let lo = if a > 0.0 { a } else if b < 0.0 { -b } else { 0.0 };
        near += lo * lo;
        far += a.abs().max(b.abs()).powi(2);
    }
    let vol: f64 = h.iter().product();
    match jump {
        Some(j) if j * j > near && j * j < far => {
            fn nest(k: usize, acc: f64, c: &[f64], h: &[f64], j: f64, f: &dyn Fn(f64) -> f64) -> f64 {
                let (a, b) = (c[k] - 0.5 * h[k], c[k] + 0.5 * h[k]);
                let mut pts = vec![a];
                if j * j > acc {
                    let s = (j * j - acc).sqrt();
                    for p in [-s, s] {
                        if p > a && p < b {
                            pts.push(p);
                        }
                    }
                }
                pts.push(b);
                pts.sort_by(f64::total_cmp);
                let last = k + 1 == c.len();
                integrate_pts(
                    |x| if last { f((acc + x * x).sqrt()) } else { nest(k + 1, acc + x * x, c, h, j, f) },
                    &pts,
                    QuadOpts::tol(1e-14 * h.iter().product::<f64>(), 1e-10),
                )
                .map(|q| q.value)
                .unwrap_or_else(|e| match e {
                    Error::NoConvergence { value, .. } => value,
                    _ => f64::NAN,
                })
            }
            nest(0, 0.0, c, h, j, f) / vol
        }
        _ => {
            // tensor Gauss-Legendre
            let n = GL6.len();
            let mut s = 0.0;
            for idx in 0..n.pow(d as u32) {
                let mut m = idx;
                let mut r2 = 0.0;
                let mut w = 1.0;
                for i in 0..d {
                    let (x, wx) = GL6[m % n];
                    m /= n;
                    let t = c[i] + 0.5 * h[i] * x;
                    r2 += t * t;
                    w *= 0.5 * wx;
                }
                s += w * f(r2.sqrt());
            }
            s
        }
    }
}

/// Spectral approximation of a DPP on a window: frequencies and eigenvalues.
#[derive(Debug, Clone)]
pub struct SpectralModel {
    pub window: Window,
    pub spec: KernelSpec,
    pub truncation_k: usize,
    pub rule: EigenRule,
    /// integer frequency vectors with λ > 0
    pub freqs: Vec<Vec<i64>>,
    pub lambdas: Vec<f64>,
    pub sum_lambda: f64,
    pub notes: Vec<String>,
}

/// Cap on the number of frequency cells.
const MAX_CELLS: usize = 4_000_000;

impl SpectralModel {
    /// `k = None` picks the truncation automatically.
    pub fn new(kernel: &RadialKernel, window: &Window, k: Option<usize>, rule: Option<EigenRule>) -> Result<SpectralModel> {
        if kernel.is_poisson() {
            return Err(Error::Sampler("the Poisson kernel has no spectral representation; use sample_poisson".into()));
        }
        if window.dim() != kernel.d {
            return Err(Error::InvalidParameter("window dimension differs from kernel dimension".into()));
        }
        if k == Some(0) {
            return Err(Error::InvalidParameter("truncation K must be >= 1".into()));
        }
        let rule = rule.unwrap_or(if kernel.fourier_numeric { EigenRule::PointSample } else { EigenRule::CellAverage });
        let sides = window.sides();
        let target = kernel.rho * window.volume();
        let lmax = sides.iter().cloned().fold(0.0, f64::max);
        let support = match kernel.fourier_extent() {
            Extent::Finite(t) => Some(t),
            _ => None,
        };
        let mut notes = vec!["periodic approximation of the kernel on the window".to_string()];
        let exact_k = support.map(|t| (t * lmax + 1.0).ceil() as usize);
        let mut kk = match (k, exact_k) {
            (Some(k), _) => k,
            (None, Some(e)) => e,
            (None, None) => ((4.0 * kernel.fourier_scan_limit() / 20.0 * lmax).ceil() as usize).max(4),
        };
        loop {
            let cells = (2 * kk + 1).pow(kernel.d as u32);
            if cells > MAX_CELLS {
                return Err(Error::Sampler(format!("truncation K = {kk} needs {cells} frequency cells")));
            }
            let (freqs, lambdas) = eigen(kernel, &sides, kk, rule)?;
            let sum: f64 = lambdas.iter().sum();
            let auto = k.is_none() && exact_k.is_none();
            if auto && sum < 0.999 * target {
                kk = (kk as f64 * 1.5).ceil() as usize;
                continue;
            }
            if sum < 0.99 * target {
                notes.push(format!("truncation too small: sum of eigenvalues {sum} < 0.99 rho|W| = {}", 0.99 * target));
            }
            return Ok(SpectralModel { window: window.clone(), spec: kernel.spec.clone(), truncation_k: kk, rule, freqs, lambdas, sum_lambda: sum, notes });
        }
    }

    /// One realization.
    pub fn draw(&self, seed: u64, stream: u64) -> Result<PointPattern> {
        let mut rng = rng_for(seed, stream);
        let active: Vec<usize> = (0..self.lambdas.len()).filter(|&i| rng.random::<f64>() < self.lambdas[i]).collect();
        let points = project(&mut rng, &self.window, active.iter().map(|&i| &self.freqs[i][..]).collect())?;
        let mut prov = Provenance::plain(&format!("dpp:{:?}", self.spec.family()), seed, stream);
        prov.truncation_k = Some(self.truncation_k);
        prov.sum_lambda = Some(self.sum_lambda);
        prov.spec = Some(self.spec.clone());
        prov.notes = self.notes.clone();
        prov.notes.push(format!("eigenvalue rule: {:?}", self.rule));
        Ok(PointPattern { points, window: self.window.clone(), provenance: prov })
    }
}

fn eigen(kernel: &RadialKernel, sides: &[f64], kk: usize, rule: EigenRule) -> Result<(Vec<Vec<i64>>, Vec<f64>)> {
    let d = sides.len();
    let n = 2 * kk + 1;
    let h: Vec<f64> = sides.iter().map(|l| 1.0 / l).collect();
    let jump = kernel.fourier_jump_radius();
    let f = |t: f64| kernel.fourier(t);
    let raw: Vec<(Vec<i64>, f64)> = (0..n.pow(d as u32))
        .into_par_iter()
        .map(|idx| {
            let mut m = idx;
            let k: Vec<i64> = (0..d)
                .map(|_| {
                    let v = (m % n) as i64 - kk as i64;
                    m /= n;
                    v
                })
                .collect();
            let c: Vec<f64> = k.iter().zip(&h).map(|(&ki, hi)| ki as f64 * hi).collect();
            let lam = match rule {
                EigenRule::CellAverage => cell_average(&f, &c, &h, jump),
                EigenRule::PointSample => f(c.iter().map(|x| x * x).sum::<f64>().sqrt()),
            };
            (k, lam)
        })
        .collect();
    let mut freqs = Vec::new();
    let mut lambdas = Vec::new();
    for (k, lam) in raw {
        if !lam.is_finite() {
            return Err(Error::Sampler(format!("eigenvalue at {k:?} is not finite")));
        }
        let clipped = lam.clamp(0.0, 1.0);
        if (clipped - lam).abs() >= 1e-9 {
            return Err(Error::Sampler(format!("eigenvalue {lam} at {k:?} lies outside [0, 1]; is the kernel valid?")));
        }
        if clipped > 0.0 {
            freqs.push(k);
            lambdas.push(clipped);
        }
    }
    Ok((freqs, lambdas))
}

/// Maximal rejections per point before giving up.
pub const MAX_REJECTIONS: usize = 1_000_000;

/// Sequential sampling of the projection DPP spanned by the given modes.
fn project(rng: &mut ChaCha20Rng, w: &Window, freqs: Vec<&[i64]>) -> Result<Vec<Vec<f64>>> {
    let n = freqs.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let vol = w.volume();
    let sides = w.sides();
    let norm = 1.0 / vol.sqrt();
    let modes = |x: &[f64]| -> Vec<Complex64> {
        freqs
            .iter()
            .map(|k| {
                let ph: f64 = k.iter().zip(x.iter().zip(&w.lower)).zip(&sides).map(|((&ki, (xi, lo)), l)| ki as f64 * (xi - lo) / l).sum();
                Complex64::from_polar(norm, 2.0 * std::f64::consts::PI * ph.fract())
            })
            .collect()
    };
    // orthonormal basis of the current subspace, as coordinate vectors in C^n
    let mut basis: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[i] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    let mut points = Vec::with_capacity(n);
    let scale = vol / n as f64;
    while !basis.is_empty() {
        let mut tries = 0usize;
        let (x, c) = loop {
            let x = uniform_in(rng, w);
            let v = modes(&x);
            let c: Vec<Complex64> = basis.iter().map(|e| e.iter().zip(&v).map(|(a, b)| a.conj() * b).sum()).collect();
            let p = scale * c.iter().map(|z| z.norm_sqr()).sum::<f64>();
            if rng.random::<f64>() < p {
                break (x, c);
            }
            tries += 1;
            if tries >= MAX_REJECTIONS {
                return Err(Error::Sampler(format!("{MAX_REJECTIONS} rejections for point {} of {n}", points.len() + 1)));
            }
        };
        points.push(x);
        let i = basis.len();
        if i == 1 {
            break;
        }
        // span of {E y : Σ y_j conj(c_j) = 0}, then Gram-Schmidt
        let m = (0..i).max_by(|&a, &b| c[a].norm_sqr().total_cmp(&c[b].norm_sqr())).unwrap();
        let em = basis[m].clone();
        let mut next: Vec<Vec<Complex64>> = Vec::with_capacity(i - 1);
        for j in (0..i).filter(|&j| j != m) {
            let f = c[j].conj() / c[m].conj();
            let mut e: Vec<Complex64> = basis[j].iter().zip(&em).map(|(a, b)| a - f * b).collect();
            for q in &next {
                let dot: Complex64 = q.iter().zip(&e).map(|(a, b)| a.conj() * b).sum();
                for (ei, qi) in e.iter_mut().zip(q) {
                    *ei -= dot * qi;
                }
            }
            let nrm = e.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for ei in e.iter_mut() {
                *ei /= nrm;
            }
            next.push(e);
        }
        basis = next;
    }
    Ok(points)
}

/// One DPP realization; builds the spectral model each call.
pub fn sample_dpp(kernel: &RadialKernel, window: &Window, seed: u64, stream: u64, k: Option<usize>) -> Result<PointPattern> {
    SpectralModel::new(kernel, window, k, None)?.draw(seed, stream)
}
