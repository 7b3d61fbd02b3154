use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use dpp_repulse::compact::{alpha_max_search, constant_m, most_locally_repulsive};
use dpp_repulse::kernel::{self, laguerre_alpha_max_limit, make_kernel, validate, Family, KernelSpec, RadialKernel};
use dpp_repulse::metrics::{summary, PcfCurve};
use dpp_repulse::sampler::{replicates, sample_matern2, sample_poisson, solve_matern_proposal, PointPattern, SpectralModel, Window};
use dpp_repulse::stats::validate_sim;
use dpp_repulse::Error;

/// Stationary DPP kernels: existence, repulsiveness, compact optima, simulation.
#[derive(Parser)]
#[command(name = "dpp-repulse", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check 0 <= F(C) <= 1 and print the validity report.
    Validate {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Theoretical pair correlation function on [0, rmax].
    Pcf {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        rmax: f64,
        #[arg(long)]
        n: usize,
        /// output CSV; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Global and local repulsiveness.
    Metrics {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Most locally repulsive kernel with range R.
    CompactOpt {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long = "R", allow_negative_numbers = true)]
        range: f64,
    },
    /// Simulate point patterns.
    Simulate {
        #[arg(long, conflicts_with = "model")]
        spec: Option<PathBuf>,
        #[arg(long, value_enum)]
        model: Option<Model>,
        /// "lo1,hi1;lo2,hi2;..."
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long)]
        out: PathBuf,
        /// intensity of the Poisson model
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        rho: f64,
        /// hardcore radius of the Matérn model
        #[arg(long, allow_negative_numbers = true)]
        hardcore_r: Option<f64>,
        /// proposal intensity of the Matérn model
        #[arg(long, allow_negative_numbers = true)]
        lambda_p: Option<f64>,
        /// retained intensity of the Matérn model (alternative to --lambda-p)
        #[arg(long, allow_negative_numbers = true, conflicts_with = "lambda_p")]
        target_rho: Option<f64>,
        /// spectral truncation K (automatic when omitted)
        #[arg(long)]
        k: Option<usize>,
    },
    /// Simulate and compare intensity, pcf and count variance with theory.
    ValidateSim {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// defaults to [-5,5]^d scaled by rho^{-1/d}
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Largest admissible alpha for a family.
    AlphaMax {
        #[arg(long, value_enum)]
        family: AlphaFamily,
        #[arg(long)]
        d: usize,
        #[arg(long, allow_negative_numbers = true)]
        rho: f64,
        #[arg(long, allow_negative_numbers = true)]
        sigma: Option<f64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long = "R", allow_negative_numbers = true)]
        range: Option<f64>,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1e-6)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Poisson,
    Matern2,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphaFamily {
    #[value(name = "BesselType")]
    BesselType,
    #[value(name = "LaguerreGauss")]
    LaguerreGauss,
    #[value(name = "CompactU")]
    CompactU,
}

/// Matérn proposal intensity used when neither --lambda-p nor --target-rho is given.
const SATURATED_PROPOSAL: f64 = 1e3;

enum Fail {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::InvalidParameter(_) | Error::RangeAboveM { .. } | Error::BesselZeroCollision { .. } => {
                Fail::Domain(e.to_string())
            }
            _ => Fail::Internal(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

fn io_err(p: &Path, e: std::io::Error) -> Fail {
    Fail::Internal(format!("{}: {e}", p.display()))
}

fn read_spec(p: &Path) -> Result<KernelSpec, Fail> {
    let s = fs::read_to_string(p).map_err(|e| io_err(p, e))?;
    serde_json::from_str(&s).map_err(|e| usage(format!("{}: {e}", p.display())))
}

fn valid_kernel(p: &Path) -> Result<RadialKernel, Fail> {
    let k = make_kernel(&read_spec(p)?)?;
    let rep = validate(&k);
    if !rep.valid {
        return Err(Fail::Domain(format!("kernel is not valid: {:?} (sup F = {})", rep.violation, rep.sup_f)));
    }
    Ok(k)
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_err(p, e)),
        None => {
            let mut o = std::io::stdout().lock();
            o.write_all(text.as_bytes()).map_err(|e| Fail::Internal(e.to_string()))
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Fail> {
    match cmd {
        Cmd::Validate { spec } => {
            let k = make_kernel(&read_spec(&spec)?)?;
            let rep = validate(&k);
            print_json(&rep);
            Ok(if rep.valid { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Cmd::Pcf { spec, rmax, n, out } => {
            if !(rmax > 0.0) || n < 2 {
                return Err(usage("need --rmax > 0 and --n >= 2"));
            }
            let k = valid_kernel(&spec)?;
            let c = PcfCurve::on_grid(&k, rmax, n)?;
            write_out(out.as_deref(), &c.to_csv())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Metrics { spec } => {
            let k = valid_kernel(&spec)?;
            print_json(&summary(&k)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CompactOpt { d, rho, range } => {
            let m = constant_m(d.max(1), if rho > 0.0 { rho } else { 1.0 });
            let k = most_locally_repulsive(d, rho, range)?;
            let c = k.conv().expect("compact kernel");
            let p = &c.profile;
            let s = summary(&k)?;
            let shape = match p.kappa() {
                Some(kappa) => json!({ "kappa": kappa }),
                None => json!({ "alpha": p.alpha(), "beta": p.beta(), "gamma": p.gamma_coef() }),
            };
            print_json(&json!({
                "spec": k.spec,
                "branch": if k.heuristic { "heuristic" } else { "closed_form" },
                "heuristic": k.heuristic,
                "M": m,
                "R": range,
                "profile": shape,
                "fourier_at_0": k.fourier(0.0),
                "global": s.global,
                "local": s.local,
                "local_flag": s.local_flag,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Simulate { spec, model, window, seed, reps, out, rho, hardcore_r, lambda_p, target_rho, k } => {
            if reps == 0 {
                return Err(usage("--reps must be >= 1"));
            }
            let w = Window::parse(&window).map_err(|e| usage(e.to_string()))?;
            let pats: Vec<PointPattern> = match (spec, model) {
                (Some(spec), None) => {
                    let kern = valid_kernel(&spec)?;
                    if kern.is_poisson() {
                        replicates(reps, |s| sample_poisson(kern.rho, &w, seed, s))?
                    } else {
                        let sm = SpectralModel::new(&kern, &w, k, None)?;
                        replicates(reps, |s| sm.draw(seed, s))?
                    }
                }
                (None, Some(Model::Poisson)) => replicates(reps, |s| sample_poisson(rho, &w, seed, s))?,
                (None, Some(Model::Matern2)) => {
                    let r = hardcore_r.ok_or_else(|| usage("matern2 needs --hardcore-r"))?;
                    let lp = match (lambda_p, target_rho) {
                        (Some(l), _) => l,
                        (None, Some(t)) => solve_matern_proposal(t, r, w.dim())?,
                        (None, None) => SATURATED_PROPOSAL,
                    };
                    let mut pats = replicates(reps, |s| sample_matern2(lp, r, &w, seed, s))?;
                    if lambda_p.is_none() && target_rho.is_none() {
                        for p in &mut pats {
                            p.provenance.notes.push(format!("proposal intensity {SATURATED_PROPOSAL} stands in for the saturated limit"));
                        }
                    }
                    pats
                }
                _ => return Err(usage("give exactly one of --spec or --model")),
            };
            fs::create_dir_all(&out).map_err(|e| io_err(&out, e))?;
            for (i, p) in pats.iter().enumerate() {
                let base = out.join(format!("pattern_{i:04}"));
                let csv = base.with_extension("csv");
                let js = base.with_extension("json");
                fs::write(&csv, p.to_csv()).map_err(|e| io_err(&csv, e))?;
                fs::write(&js, p.sidecar_json()).map_err(|e| io_err(&js, e))?;
            }
            print_json(&json!({ "reps": reps, "out": out, "points": pats.iter().map(|p| p.len()).collect::<Vec<_>>() }));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ValidateSim { spec, reps, seed, window } => {
            if reps < 2 {
                return Err(usage("--reps must be >= 2"));
            }
            let k = valid_kernel(&spec)?;
            let w = match window {
                Some(s) => Window::parse(&s).map_err(|e| usage(e.to_string()))?,
                None => Window::centered(k.d, 5.0 * k.rho.powf(-1.0 / k.d as f64))?,
            };
            print_json(&validate_sim(&k, &w, reps, seed)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::AlphaMax { family, d, rho, sigma, m, range, tol } => {
            let v = match family {
                AlphaFamily::BesselType => {
                    let s = sigma.ok_or_else(|| usage("BesselType needs --sigma"))?;
                    json!({ "family": "BesselType", "alpha_max": kernel::alpha_max(Family::BesselType, d, rho, s)? })
                }
                AlphaFamily::LaguerreGauss => {
                    let m = m.ok_or_else(|| usage("LaguerreGauss needs --m"))?;
                    let a = kernel::alpha_max(Family::LaguerreGauss, d, rho, m as f64)?;
                    json!({ "family": "LaguerreGauss", "alpha_max": a, "limit_m_infinity": laguerre_alpha_max_limit(d, rho) })
                }
                AlphaFamily::CompactU => {
                    let r = range.ok_or_else(|| usage("CompactU needs --R"))?;
                    let s = alpha_max_search(d, rho, r, tol)?;
                    json!({
                        "family": "CompactU",
                        "alpha_max": if s.bounded { Some(s.alpha) } else { None },
                        "bounded": s.bounded,
                        "sup_F_u": s.sup_f,
                    })
                }
            };
            print_json(&v);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Ok(t) = std::env::var("DPP_REPULSE_THREADS") {
        match t.trim().parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: DPP_REPULSE_THREADS must be a positive integer, got '{t}'");
                return ExitCode::from(1);
            }
        }
    }
    match run(cli.cmd) {
        Ok(c) => c,
        Err(Fail::Usage(m)) | Err(Fail::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
