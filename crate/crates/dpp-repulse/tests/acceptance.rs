// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
// Reference values are written out here rather than taken from the library.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::RngExt;

use dpp_repulse::compact::{constant_m, optimal_cr, smoothed_truncation, CompactParams};
use dpp_repulse::kernel::{alpha_max, laguerre_alpha_max_limit, make_kernel, sup_distance, validate, Family, KernelSpec, RadialKernel};
use dpp_repulse::metrics::{count_variance, global_repulsiveness, local_repulsiveness, pcf};
use dpp_repulse::quadrature::hankel_fourier;
use dpp_repulse::sampler::{rng_for, Window};
use dpp_repulse::stats::validate_sim;

// first positive zeros of J_{-1/2}, J_0, J_{1/2}
const J_ZEROS: [f64; 3] = [PI / 2.0, 2.404_825_557_695_773, PI];
// unit-ball volumes for d = 1, 2, 3
const BALL: [f64; 3] = [2.0, PI, 4.0 * PI / 3.0];

type Check = std::result::Result<String, String>;

struct Run {
    lines: Vec<String>,
    failed: Vec<usize>,
}

impl Run {
    fn criterion(&mut self, n: usize, name: &str, limit: Duration, f: impl FnOnce() -> Check) {
        let t = Instant::now();
        let out = f();
        let el = t.elapsed();
        let in_time = el <= limit;
        let (ok, detail) = match out {
            Ok(s) => (in_time, s),
            Err(s) => (false, s),
        };
        let line = format!(
            "{} {n:>2} {name}: {detail} [{:.3?} / limit {:?}{}]",
            if ok { "PASS" } else { "FAIL" },
            el,
            limit,
            if in_time { "" } else { ", over time" }
        );
        println!("{line}");
        if !ok {
            self.failed.push(n);
        }
        self.lines.push(line);
    }
}

fn kern(s: KernelSpec) -> RadialKernel {
    make_kernel(&s).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

// Δg(0) for the ball-indicator spectrum: (8π²/ρ) ∫_{|t|<a} |t|² dt with
// |B(a)| = ρ, i.e. (8π²/ρ) d V_d a^{d+2}/(d+2)
fn cb_local(d: usize, rho: f64) -> f64 {
    let v = BALL[d - 1];
    let a = (rho / v).powf(1.0 / d as f64);
    8.0 * PI * PI / rho * d as f64 * v * a.powi(d as i32 + 2) / (d as f64 + 2.0)
}

fn cb_radius(d: usize, rho: f64) -> f64 {
    (rho / BALL[d - 1]).powf(1.0 / d as f64)
}

fn one_two_three() -> Check {
    let want = [PI * PI / 8.0, J_ZEROS[1] / PI.sqrt(), PI.cbrt()];
    let mut worst: f64 = 0.0;
    for d in 1..=3 {
        let e = (constant_m(d, 1.0) - want[d - 1]).abs();
        ensure(e <= 1e-9, format!("d={d}: M={} want {}", constant_m(d, 1.0), want[d - 1]))?;
        worst = worst.max(e);
    }
    Ok(format!("max |M - ref| = {worst:.1e} (tol 1e-9), M(1,1)={:.6}", constant_m(1, 1.0)))
}

fn alpha_max_values() -> Check {
    let a = alpha_max(Family::BesselType, 2, 1.0, 0.0).map_err(err)?;
    let e1 = (a - 1.0 / PI.sqrt()).abs();
    ensure(e1 <= 1e-12, format!("Bessel alpha_max {a}"))?;
    // in d = 2 the Laguerre-Gauss closed form is exactly the m → ∞ value,
    // which itself reduces to 1/(√π Γ(2)^{1/2}) = 1/√π
    let am = alpha_max(Family::LaguerreGauss, 2, 1.0, 1e6).map_err(err)?;
    let lim = laguerre_alpha_max_limit(2, 1.0);
    let e2 = (am - lim).abs();
    let e3 = (lim - 1.0 / PI.sqrt()).abs();
    ensure(e2 <= 1e-12 && e3 <= 1e-12, format!("LG m=1e6 {am} limit {lim}"))?;
    Ok(format!("Bessel err {e1:.1e}, LG(m=1e6) vs limit {e2:.1e}, limit vs 1/sqrt(pi) {e3:.1e} (tol 1e-12)"))
}

fn random_valid_kernel(rng: &mut impl rand::Rng) -> Option<RadialKernel> {
    let d = rng.random_range(1..=3usize);
    let rho = 0.5 + 1.5 * rng.random::<f64>();
    let u = 0.15 + 0.85 * rng.random::<f64>();
    let unit = rho.powf(-1.0 / d as f64);
    let spec = match rng.random_range(0..6) {
        0 => {
            let sigma = 6.0 * rng.random::<f64>();
            KernelSpec::BesselType { d, rho, sigma, alpha: u * alpha_max(Family::BesselType, d, rho, sigma).ok()? }
        }
        1 => {
            let m = rng.random_range(1..=12u64);
            KernelSpec::LaguerreGauss { d, rho, m, alpha: u * alpha_max(Family::LaguerreGauss, d, rho, m as f64).ok()? }
        }
        2 => KernelSpec::CompactOptimal { d, rho, range: u * constant_m(d, rho) },
        3 => {
            let range = (0.3 + 0.7 * rng.random::<f64>()) * constant_m(d, rho);
            KernelSpec::CompactU { d, rho, range, alpha: range * (0.05 + 0.6 * u) }
        }
        4 => {
            let base = if rng.random::<bool>() {
                KernelSpec::MostRepulsiveCB { d, rho }
            } else {
                KernelSpec::LaguerreGauss { d, rho, m: 2, alpha: u * alpha_max(Family::LaguerreGauss, d, rho, 2.0).ok()? }
            };
            KernelSpec::SmoothedTruncation { base: Box::new(base), r: (1.5 + 4.0 * rng.random::<f64>()) * unit }
        }
        _ => {
            let m = rng.random_range(20..=200u64);
            KernelSpec::LaguerreGauss { d, rho, m, alpha: alpha_max(Family::LaguerreGauss, d, rho, m as f64).ok()? }
        }
    };
    let k = make_kernel(&spec).ok()?;
    validate(&k).valid.then_some(k)
}

struct Sweep {
    n: usize,
    rejected: usize,
    worst_bound_gap: f64,
}

fn most_repulsive(sweep: &mut Option<Sweep>) -> Check {
    let mut worst: f64 = 0.0;
    for d in 1..=3 {
        for rho in [0.5, 1.0, 2.0] {
            let g = global_repulsiveness(&kern(KernelSpec::MostRepulsiveCB { d, rho })).map_err(err)?;
            ensure((g - 1.0 / rho).abs() <= 1e-7, format!("C_B d={d} rho={rho}: {g}"))?;
            worst = worst.max((g - 1.0 / rho).abs());
        }
    }
    let mut rng = rng_for(2024, 0);
    let (mut n, mut rejected) = (0, 0);
    let mut max_gap = f64::NEG_INFINITY;
    let mut min_local_margin = f64::INFINITY;
    let mut families = std::collections::BTreeMap::new();
    while n < 50 {
        let Some(k) = random_valid_kernel(&mut rng) else {
            rejected += 1;
            ensure(rejected < 500, "too many invalid draws")?;
            continue;
        };
        n += 1;
        *families.entry(format!("{:?}", k.family())).or_insert(0) += 1;
        let g = global_repulsiveness(&k).map_err(|e| format!("{:?}: {e:?}", k.spec))?;
        let gap = g - 1.0 / k.rho;
        ensure(gap <= 1e-7, format!("{:?}: global {g} > 1/rho", k.spec))?;
        max_gap = max_gap.max(gap);
        if let Some(l) = local_repulsiveness(&k).map_err(err)?.value() {
            let margin = l - cb_local(k.d, k.rho);
            ensure(margin >= -1e-6, format!("{:?}: local {l} below C_B", k.spec))?;
            min_local_margin = min_local_margin.min(margin);
        }
    }
    *sweep = Some(Sweep { n, rejected, worst_bound_gap: max_gap });
    Ok(format!(
        "C_B global err {worst:.1e} (tol 1e-7); {n} valid kernels {families:?}, max(global - 1/rho) = {max_gap:.2e}, min(local - local_CB) = {min_local_margin:.3e}"
    ))
}

fn gaussian_local() -> Check {
    let k = kern(KernelSpec::LaguerreGauss { d: 1, rho: 1.0, m: 1, alpha: 1.0 });
    let l = local_repulsiveness(&k).map_err(err)?.value().ok_or("no local value")?;
    ensure((l - 4.0).abs() <= 1e-6, format!("local {l}"))?;
    // in d = 1 the Laplacian is g'' and g is even: g''(0) ≈ 2(g(h) - g(0))/h²
    let h = 1e-3;
    let fd = 2.0 * (pcf(&k, h).map_err(err)? - pcf(&k, 0.0).map_err(err)?) / (h * h);
    ensure((fd - l).abs() <= 1e-3, format!("second difference {fd} vs {l}"))?;
    Ok(format!("local {l:.10} (want 4, tol 1e-6), second difference {fd:.6} (tol 1e-3)"))
}

fn probes(k: &RadialKernel, scale: f64) -> Vec<f64> {
    [0.05, 0.3, 0.7, 1.15, 1.8]
        .iter()
        .map(|&s| {
            let t = s * scale;
            match k.fourier_jump_radius() {
                Some(j) if (t - j).abs() < 0.05 * j => t * 1.1,
                _ => t,
            }
        })
        .collect()
}

fn closed_forms() -> Check {
    let mut settings: Vec<(KernelSpec, f64)> = Vec::new();
    for (d, rho) in [(1, 1.0), (2, 0.5), (3, 2.0)] {
        settings.push((KernelSpec::MostRepulsiveCB { d, rho }, cb_radius(d, rho)));
    }
    for (d, rho, sigma, frac) in [(2, 1.0, 0.0, 0.7), (1, 2.0, 3.0, 0.9), (3, 0.5, 1.5, 0.5)] {
        let am = alpha_max(Family::BesselType, d, rho, sigma).unwrap();
        settings.push((KernelSpec::BesselType { d, rho, sigma, alpha: frac * am }, 1.0 / (frac * am)));
    }
    for (d, rho, m, frac) in [(1, 1.0, 1u64, 0.8), (2, 1.0, 3, 0.6), (3, 2.0, 6, 1.0)] {
        let am = alpha_max(Family::LaguerreGauss, d, rho, m as f64).unwrap();
        settings.push((KernelSpec::LaguerreGauss { d, rho, m, alpha: frac * am }, 1.0 / (frac * am)));
    }
    for (d, alpha) in [(1, 0.2), (2, 0.15), (3, 0.12)] {
        settings.push((KernelSpec::CompactU { d, rho: 1.0, range: 1.0, alpha }, 2.0));
    }
    for d in 1..=3 {
        let m = constant_m(d, 1.0);
        settings.push((KernelSpec::CompactOptimal { d, rho: 1.0, range: 0.8 * m }, 2.0 / m));
    }
    let mut worst: f64 = 0.0;
    for (spec, scale) in &settings {
        let k = kern(spec.clone());
        for t in probes(&k, *scale) {
            let h = hankel_fourier(&|r| k.eval(r), k.d, t, k.extent(), 1e-10).map_err(|e| format!("{spec:?} t={t}: {e:?}"))?;
            let e = (h - k.fourier(t)).abs();
            ensure(e <= 1e-6, format!("{spec:?} t={t}: closed {} hankel {h}", k.fourier(t)))?;
            worst = worst.max(e);
        }
    }
    Ok(format!(
        "{} settings x 5 t over C_B, BesselType, LaguerreGauss, CompactU, CompactOptimal; max abs err {worst:.1e} (tol 1e-6); SmoothedTruncation has no closed form",
        settings.len()
    ))
}

fn compact_optimum() -> Check {
    let mut worst_f: f64 = 0.0;
    let mut worst_l: f64 = 0.0;
    for d in 1..=3 {
        let m = constant_m(d, 1.0);
        for range in [0.5 * m, m] {
            let k = optimal_cr(d, 1.0, range).map_err(err)?;
            let e = (k.fourier(0.0) - (range / m).powi(d as i32)).abs();
            ensure(e <= 1e-8, format!("d={d} R={range}: F(0) = {}", k.fourier(0.0)))?;
            worst_f = worst_f.max(e);
            let l = local_repulsiveness(&k).map_err(err)?.value().ok_or("no local value")?;
            let want = 8.0 * J_ZEROS[d - 1].powi(2) / (range * range);
            ensure((l - want).abs() <= 1e-5, format!("d={d} R={range}: local {l} want {want}"))?;
            worst_l = worst_l.max((l - want).abs());
        }
    }
    let opt = local_repulsiveness(&optimal_cr(1, 1.0, 1.0).map_err(err)?).map_err(err)?.value().unwrap();
    let mut beaten = 0;
    let mut margin = f64::INFINITY;
    let mut alpha = 0.45;
    let mut tried = 0;
    while beaten < 20 {
        tried += 1;
        ensure(tried < 200, "could not find 20 feasible competitors")?;
        alpha *= 0.93;
        if CompactParams::new(1, 1.0, 1.0, alpha).is_err() {
            continue;
        }
        let k = kern(KernelSpec::CompactU { d: 1, rho: 1.0, range: 1.0, alpha });
        if !validate(&k).valid {
            continue;
        }
        let l = local_repulsiveness(&k).map_err(err)?.value().ok_or("no local value")?;
        ensure(opt <= l + 1e-6, format!("C_2(alpha={alpha}) local {l} < C_R {opt}"))?;
        margin = margin.min(l - opt);
        beaten += 1;
    }
    Ok(format!(
        "F(C_R)(0) err {worst_f:.1e} (tol 1e-8), local err {worst_l:.1e} (tol 1e-5); C_R local {opt:.6} vs 20 feasible C_2, min margin {margin:.3e}"
    ))
}

fn family_limits() -> Check {
    let b = kern(KernelSpec::BesselType { d: 2, rho: 1.0, sigma: 1e3, alpha: 0.4 });
    let d1 = sup_distance(|r| b.eval(r), |r| (-(r / 0.4f64).powi(2)).exp(), 1.0, 2001);
    ensure(d1 < 0.01, format!("Bessel sigma=1e3 vs Gaussian {d1}"))?;
    let am = alpha_max(Family::LaguerreGauss, 2, 1.0, 200.0).map_err(err)?;
    let lg = kern(KernelSpec::LaguerreGauss { d: 2, rho: 1.0, m: 200, alpha: am });
    let cb2 = kern(KernelSpec::MostRepulsiveCB { d: 2, rho: 1.0 });
    let d2 = sup_distance(|r| lg.eval(r), |r| cb2.eval(r), 2.0, 2001);
    ensure(d2 < 0.05, format!("LG m=200 vs C_B {d2}"))?;
    let cb1 = kern(KernelSpec::MostRepulsiveCB { d: 1, rho: 1.0 });
    let c50 = smoothed_truncation(&cb1, 50.0).map_err(err)?;
    // sin(πr)/(πr) written out for the d = 1 reference
    let sinc = |r: f64| if r == 0.0 { 1.0 } else { (PI * r).sin() / (PI * r) };
    let d3 = sup_distance(|r| c50.eval(r), sinc, 2.0, 2001);
    ensure(d3 < 0.02, format!("C_r(50) vs C_B {d3}"))?;
    Ok(format!("Bessel->Gaussian {d1:.2e} (<0.01), LG->C_B {d2:.2e} (<0.05), C_50->C_B {d3:.2e} (<0.02)"))
}

fn orderings() -> Check {
    let am = alpha_max(Family::BesselType, 2, 1.0, 0.0).map_err(err)?;
    let g = |sigma: f64, alpha: f64| pcf(&kern(KernelSpec::BesselType { d: 2, rho: 1.0, sigma, alpha }), 0.5).unwrap();
    let by_alpha: Vec<f64> = [0.2, 0.3, 0.4, am].iter().map(|&a| g(0.0, a)).collect();
    let by_sigma: Vec<f64> = [0.0, 2.0, 5.0]
        .iter()
        .map(|&s| g(s, alpha_max(Family::BesselType, 2, 1.0, s).unwrap()))
        .collect();
    let alpha_ok = by_alpha.windows(2).all(|w| w[1] < w[0]);
    let sigma_ok = by_sigma.windows(2).all(|w| w[1] > w[0]);
    let msg = format!(
        "g(0.5) over alpha {{0.2,0.3,0.4,max}} {by_alpha:.4?} (decreasing: {alpha_ok}), over sigma {{0,2,5}} {by_sigma:.4?} (increasing: {sigma_ok})"
    );
    ensure(alpha_ok && sigma_ok, msg.clone())?;
    Ok(msg)
}

// 2J_1(x)/x by its power series, for the criterion-8 counterexample
fn jinc_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let (mut term, mut sum) = (1.0, 1.0);
    for k in 1..60 {
        term *= q / (k as f64 * (k + 1) as f64);
        sum += term;
    }
    sum
}

// Criteria that cannot hold as stated, each with a check that the stated
// reason is still the cause.
fn known_unattainable(n: usize) -> Option<(&'static str, bool)> {
    match n {
        8 => {
            // with σ = 0, d = 2: g(r) = 1 - (2J_1(2r/α)/(2r/α))²; at r = 0.5 the
            // α = 0.2 curve sits in its first side lobe and lies below α = 0.3
            let g = |alpha: f64| 1.0 - jinc_series(1.0 / alpha).powi(2);
            Some(("g(0.5) is not monotone between alpha = 0.2 and 0.3 for this kernel", g(0.2) < g(0.3)))
        }
        _ => None,
    }
}

fn simulation() -> Check {
    let cb = kern(KernelSpec::MostRepulsiveCB { d: 2, rho: 1.0 });
    let w = Window::centered(2, 5.0).map_err(err)?;
    let rep = validate_sim(&cb, &w, 500, 7).map_err(err)?;
    // the count-variance reference is recomputed here from the kernel
    let var_theory = count_variance(&cb, &rep.sub_window).map_err(err)?;
    ensure((rep.count_variance.theory - var_theory).abs() <= 1e-9 * var_theory, "count variance reference mismatch")?;
    let b = |x: &dpp_repulse::stats::Band| format!("{:.4}±{:.4} vs {:.4}", x.estimate, x.se, x.theory);
    let pcf_s: Vec<String> = rep.pcf.iter().map(|p| format!("g({})={}", p.r, b(&p.band))).collect();
    ensure(rep.intensity.pass, format!("intensity {}", b(&rep.intensity)))?;
    for p in &rep.pcf {
        ensure(p.band.pass, format!("pcf at {}: {}", p.r, b(&p.band)))?;
    }
    ensure(rep.count_variance.pass, format!("count variance {}", b(&rep.count_variance)))?;

    let pois = kern(KernelSpec::PoissonDegenerate { d: 2, rho: 1.0 });
    let ctl = validate_sim(&pois, &w, 500, 8).map_err(err)?;
    for p in &ctl.pcf {
        ensure(p.band.theory == 1.0 && p.band.pass, format!("Poisson control pcf at {}: {}", p.r, b(&p.band)))?;
    }
    ensure(ctl.intensity.pass, "Poisson control intensity")?;
    Ok(format!(
        "C_B: intensity {}, {}, var {}; Poisson control ghat {:?}",
        b(&rep.intensity),
        pcf_s.join(", "),
        b(&rep.count_variance),
        ctl.pcf.iter().map(|p| format!("{:.3}", p.band.estimate)).collect::<Vec<_>>()
    ))
}

#[test]
fn acceptance() {
    println!();
    let mut run = Run { lines: Vec::new(), failed: Vec::new() };
    let ms = Duration::from_millis;
    let s = Duration::from_secs;
    run.criterion(1, "constant M", ms(1), one_two_three);
    run.criterion(2, "alpha_max", ms(1), alpha_max_values);
    let mut sweep = None;
    run.criterion(3, "most repulsive benchmark", s(30), || most_repulsive(&mut sweep));
    run.criterion(4, "spectral moment vs second difference", s(1), gaussian_local);
    run.criterion(5, "Fourier closed forms vs Hankel", s(30), closed_forms);
    run.criterion(6, "compact optimum", s(120), compact_optimum);
    run.criterion(7, "family limits", s(10), family_limits);
    run.criterion(8, "pcf orderings", s(1), orderings);
    run.criterion(9, "simulation validation", s(300), simulation);
    run.criterion(10, "global bound over sweep", s(30), || {
        let sw = sweep.as_ref().ok_or("sweep did not run")?;
        ensure(sw.worst_bound_gap <= 1e-9, format!("max(global - 1/rho) = {:e}", sw.worst_bound_gap))?;
        Ok(format!(
            "{} kernels ({} invalid draws skipped), max(global - 1/rho) = {:.2e} (tol 1e-9)",
            sw.n, sw.rejected, sw.worst_bound_gap
        ))
    });
    let mut unexpected = Vec::new();
    for &n in &run.failed {
        match known_unattainable(n) {
            Some((why, true)) => println!("NOTE {n:>2} fails for a known reason: {why}"),
            Some((why, false)) => unexpected.push(format!("{n}: stated reason no longer holds ({why})")),
            None => unexpected.push(run.lines.iter().find(|l| l.starts_with(&format!("FAIL {n:>2}"))).cloned().unwrap()),
        }
    }
    println!("{} of 10 criteria pass", 10 - run.failed.len());
    assert!(unexpected.is_empty(), "failing criteria:\n{}", unexpected.join("\n"));
}
