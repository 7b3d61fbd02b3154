//! wasm-bindgen surface for the static demo page in `www/`.
//!
//! Three operations: theoretical pcf curves, the existence check, and one
//! simulated pattern. Kernel specs are passed as JSON strings, in the same
//! format the CLI reads.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use dpp_repulse::kernel::{make_kernel, validate, KernelSpec, RadialKernel};
use dpp_repulse::metrics::PcfCurve;
use dpp_repulse::sampler::{sample_poisson, SpectralModel, Window};

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn kernel(spec_json: &str) -> Result<RadialKernel, String> {
    let spec: KernelSpec = serde_json::from_str(spec_json).map_err(|e| format!("bad spec: {e}"))?;
    make_kernel(&spec).map_err(|e| e.to_string())
}

fn to_js<T: Serialize>(v: &T) -> Result<JsValue, JsValue> {
    serde_wasm_bindgen::to_value(v).map_err(js_err)
}

#[derive(Serialize)]
struct Curve {
    r: Vec<f64>,
    g: Vec<f64>,
}

pub fn pcf_curve_native(spec_json: &str, rmax: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>), String> {
    let k = kernel(spec_json)?;
    let rep = validate(&k);
    if !rep.valid {
        return Err(format!("kernel is not valid (sup F = {:.6})", rep.sup_f));
    }
    let c = PcfCurve::on_grid(&k, rmax, n).map_err(|e| e.to_string())?;
    Ok((c.radii, c.values))
}

/// g(r) on n equispaced radii in [0, rmax].
#[wasm_bindgen]
pub fn pcf_curve(spec_json: &str, rmax: f64, n: usize) -> Result<JsValue, JsValue> {
    let (r, g) = pcf_curve_native(spec_json, rmax, n).map_err(js_err)?;
    to_js(&Curve { r, g })
}

/// Validity report: {valid, sup_F, argsup_t, alpha_max, violation}.
#[wasm_bindgen]
pub fn check_kernel(spec_json: &str) -> Result<JsValue, JsValue> {
    let k = kernel(spec_json).map_err(js_err)?;
    to_js(&validate(&k))
}

#[derive(Serialize)]
struct Pattern {
    x: Vec<f64>,
    y: Vec<f64>,
    half_width: f64,
    sum_lambda: Option<f64>,
}

pub fn sample_native(spec_json: &str, half_width: f64, seed: u64) -> Result<(Vec<Vec<f64>>, Option<f64>), String> {
    let k = kernel(spec_json)?;
    if k.d != 2 {
        return Err("the demo draws planar patterns only (d = 2)".into());
    }
    let w = Window::centered(2, half_width).map_err(|e| e.to_string())?;
    if k.is_poisson() {
        let p = sample_poisson(k.rho, &w, seed, 0).map_err(|e| e.to_string())?;
        return Ok((p.points, None));
    }
    let rep = validate(&k);
    if !rep.valid {
        return Err(format!("kernel is not valid (sup F = {:.6})", rep.sup_f));
    }
    let m = SpectralModel::new(&k, &w, None, None).map_err(|e| e.to_string())?;
    let p = m.draw(seed, 0).map_err(|e| e.to_string())?;
    Ok((p.points, Some(m.sum_lambda)))
}

/// One planar realization on [-h, h]².
#[wasm_bindgen]
pub fn sample_pattern(spec_json: &str, half_width: f64, seed: u64) -> Result<JsValue, JsValue> {
    let (pts, sum_lambda) = sample_native(spec_json, half_width, seed).map_err(js_err)?;
    to_js(&Pattern { x: pts.iter().map(|p| p[0]).collect(), y: pts.iter().map(|p| p[1]).collect(), half_width, sum_lambda })
}
