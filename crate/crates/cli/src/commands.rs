use crate::config::Config;
use crate::error::CliError;
use crate::{CommonArgs, CompareArgs, Demo};
use legendre_pade::pade::{self, default_split};
use legendre_pade::scattering::{
    born_exact_invr2, born_series, coulomb_exact, coulomb_series, exact_half_csc, rn_series, unit_series,
    PotentialKind, PotentialSpec, RnParams, RnQuadrature, RnSeriesOptions,
};
use legendre_pade::series::eval_partial_sum;
use legendre_pade::{ComplexSeries, Error, PadeApproximant};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

/// Demos without `--N` use c_0..c_8 and, unless `--L`/`--M` are given, the
/// [3/3] split; this is the configuration behind the reference results.
const DEFAULT_ORDER: usize = 8;
const DEFAULT_DEMO_SPLIT: (usize, usize) = (3, 3);
const CSV_HEADER: &str = "theta,re_partial,im_partial,re_pade,im_pade,re_exact,im_exact,sigma_pade,pole_flag";

enum Exact {
    None,
    HalfCsc,
    Coulomb { k: f64 },
    Invr2 { alpha: f64, k: f64 },
}

impl Exact {
    fn eval(&self, theta: f64) -> Option<Complex64> {
        let value = match *self {
            Exact::None => return None,
            Exact::HalfCsc => exact_half_csc(theta).map(|v| Complex64::new(v, 0.0)),
            Exact::Coulomb { k } => coulomb_exact(theta, k),
            Exact::Invr2 { alpha, k } => born_exact_invr2(theta, alpha, k).map(|v| Complex64::new(v, 0.0)),
        };
        value.ok()
    }
}

struct Resolved {
    series: ComplexSeries,
    exact: Exact,
    l: usize,
    m: usize,
    output: Option<PathBuf>,
}

fn load_config(args: &CommonArgs) -> Result<Config, CliError> {
    match &args.config {
        Some(path) => Config::load(path),
        None => Ok(Config::default()),
    }
}

fn positive(name: &str, value: f64) -> Result<f64, CliError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::Args(format!("--{name} must be positive, got {value}")))
    }
}

fn resolve(args: &CommonArgs, cfg: &Config) -> Result<Resolved, CliError> {
    let (demo, coeffs) = if args.demo.is_some() || args.coeffs.is_some() {
        (args.demo, args.coeffs.clone())
    } else {
        let demo = match cfg.raw("demo") {
            Some(name) => Some(
                <Demo as clap::ValueEnum>::from_str(name, false)
                    .map_err(|_| CliError::Args(format!("config key `demo`: unknown demo `{name}`")))?,
            ),
            None => None,
        };
        (demo, cfg.pick::<PathBuf>(None, "coeffs")?)
    };
    let order = cfg.pick(args.n, "N")?;
    let k = positive("k", cfg.pick(args.k, "k")?.unwrap_or(1.0))?;
    let (series, exact) = match (demo, coeffs) {
        (Some(_), Some(_)) => {
            return Err(CliError::Args(
                "give either a demo or a coefficient file, not both".into(),
            ))
        }
        (None, None) => return Err(CliError::Args("no series: pass --demo or --coeffs".into())),
        (None, Some(path)) => {
            let series = read_coefficients(&path)?;
            let series = match order {
                Some(n) if n < series.order() => series.truncated(n)?,
                Some(n) if n > series.order() => {
                    return Err(CliError::Args(format!(
                        "--N {n} exceeds the highest order {} in {}",
                        series.order(),
                        path.display()
                    )))
                }
                _ => series,
            };
            (series, Exact::None)
        }
        (Some(demo), None) => {
            let n = order.unwrap_or(DEFAULT_ORDER);
            match demo {
                Demo::Unit => (unit_series(n), Exact::HalfCsc),
                Demo::Coulomb => (coulomb_series(n, k)?, Exact::Coulomb { k }),
                Demo::Invr2 => {
                    let alpha = cfg.pick(args.alpha, "alpha")?.unwrap_or(1.0);
                    let potential = PotentialSpec::new(PotentialKind::InverseR2, alpha)?;
                    (born_series(&potential, n, k)?, Exact::Invr2 { alpha, k })
                }
                Demo::Rn => {
                    let defaults = RnQuadrature::default();
                    let params = RnParams::with_charge_ratio(
                        cfg.pick(args.mass, "mass")?.unwrap_or(10.0),
                        cfg.pick(args.q_over_m, "QoverM")?.unwrap_or(0.5),
                        cfg.pick(args.eta, "eta")?.unwrap_or(1e-4),
                        cfg.pick(args.mu, "mu")?.unwrap_or(1e-6),
                    )?;
                    let options = RnSeriesOptions {
                        quadrature: RnQuadrature {
                            horizon_eps: cfg
                                .pick(args.horizon_eps, "horizon-eps")?
                                .unwrap_or(defaults.horizon_eps),
                            r_max_factor: cfg
                                .pick(args.r_max_factor, "r-max-factor")?
                                .unwrap_or(defaults.r_max_factor),
                            rel_tol: defaults.rel_tol,
                        },
                        subtract_one: cfg.switch(args.subtract_one, "subtract-one")?,
                        include_l_phase: !cfg.switch(args.drop_l_phase, "drop-l-phase")?,
                    };
                    (rn_series(n, &params, &options)?, Exact::None)
                }
            }
        }
    };
    let (dl, dm) = if demo.is_some() && order.is_none() {
        DEFAULT_DEMO_SPLIT
    } else {
        default_split(series.order())
    };
    let l = cfg.pick(args.l, "L")?;
    let m = cfg.pick(args.m, "M")?;
    let (l, m) = match (l, m) {
        (Some(l), Some(m)) => (l, m),
        (Some(l), None) => (l, series.order().saturating_sub(l).min(dm)),
        (None, Some(m)) => (series.order().saturating_sub(m).min(dl), m),
        (None, None) => (dl, dm),
    };
    Ok(Resolved {
        series,
        exact,
        l,
        m,
        output: cfg.pick(args.output.clone(), "output")?,
    })
}

#[derive(Debug, Deserialize)]
struct CoefficientRow {
    l: usize,
    re: f64,
    im: f64,
}

fn read_coefficients(path: &Path) -> Result<ComplexSeries, CliError> {
    let file = std::fs::File::open(path).map_err(|e| CliError::io(path.display(), e))?;
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
    let bad = |msg: String| CliError::Args(format!("{}: {msg}", path.display()));
    let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["l", "re", "im"] {
        return Err(bad("header must be `l,re,im`".into()));
    }
    let mut coefficients = Vec::new();
    for row in reader.deserialize::<CoefficientRow>() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        if row.l != coefficients.len() {
            return Err(bad(format!("expected l = {}, found l = {}", coefficients.len(), row.l)));
        }
        coefficients.push(Complex64::new(row.re, row.im));
    }
    if coefficients.is_empty() {
        return Err(bad("no coefficients".into()));
    }
    Ok(ComplexSeries::new(coefficients)?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p.display(), e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("stdout", e)),
    }
}

fn build(resolved: &Resolved) -> Result<(PadeApproximant, pade::ConstructionReport), CliError> {
    pade::construct(&resolved.series, resolved.l, resolved.m).map_err(|e| match e {
        Error::InsufficientCoefficients { .. } => CliError::Args(e.to_string()),
        other => CliError::Construction(other),
    })
}

#[derive(Serialize)]
struct JsonComplex {
    re: f64,
    im: f64,
}

impl From<&Complex64> for JsonComplex {
    fn from(z: &Complex64) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct ConstructOutput {
    #[serde(rename = "L")]
    l: usize,
    #[serde(rename = "M")]
    m: usize,
    series: Vec<JsonComplex>,
    numerator: Vec<JsonComplex>,
    denominator: Vec<JsonComplex>,
    condition_estimate: f64,
    residual: f64,
}

pub fn construct(args: &CommonArgs) -> Result<(), CliError> {
    let cfg = load_config(args)?;
    let resolved = resolve(args, &cfg)?;
    let (approximant, report) = build(&resolved)?;
    let out = ConstructOutput {
        l: resolved.l,
        m: resolved.m,
        series: resolved.series.coefficients().iter().map(Into::into).collect(),
        numerator: approximant.numerator().iter().map(Into::into).collect(),
        denominator: approximant.denominator().iter().map(Into::into).collect(),
        condition_estimate: report.condition_estimate,
        residual: report.residual,
    };
    let mut text = serde_json::to_string_pretty(&out).expect("finite values serialize");
    text.push('\n');
    write_output(resolved.output.as_deref(), &text)
}

pub fn compare(args: &CompareArgs) -> Result<(), CliError> {
    let cfg = load_config(&args.common)?;
    let theta_min = cfg.pick(args.theta_min, "theta-min")?.unwrap_or(0.05);
    let theta_max = cfg.pick(args.theta_max, "theta-max")?.unwrap_or(PI);
    let steps = cfg.pick(args.steps, "steps")?.unwrap_or(400);
    if !(0.0..=PI).contains(&theta_min) || !(0.0..=PI).contains(&theta_max) {
        return Err(CliError::Args(format!(
            "angles are radians in [0, π], got [{theta_min}, {theta_max}]"
        )));
    }
    if !(theta_min < theta_max) || steps < 2 {
        return Err(CliError::Args("need theta-min < theta-max and at least 2 steps".into()));
    }
    let resolved = resolve(&args.common, &cfg)?;
    let (approximant, _) = build(&resolved)?;

    let mut text = String::with_capacity(160 * (steps + 1));
    text.push_str(CSV_HEADER);
    text.push('\n');
    let span = theta_max - theta_min;
    for i in 0..steps {
        let theta = if i + 1 == steps {
            theta_max
        } else {
            theta_min + span * i as f64 / (steps - 1) as f64
        };
        let partial = eval_partial_sum(&resolved.series, theta)?;
        let pade_value = match pade::eval(&approximant, theta) {
            Ok(v) => Some(v),
            Err(Error::PadePole { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        write!(text, "{:.16e},{:.16e},{:.16e},", theta, partial.re, partial.im).unwrap();
        match pade_value {
            Some(p) => write!(text, "{:.16e},{:.16e},", p.re, p.im).unwrap(),
            None => text.push_str(",,"),
        }
        match resolved.exact.eval(theta) {
            Some(e) => write!(text, "{:.16e},{:.16e},", e.re, e.im).unwrap(),
            None => text.push_str(",,"),
        }
        match pade_value {
            Some(p) => write!(text, "{:.16e},false", p.norm_sqr()).unwrap(),
            None => text.push_str(",true"),
        }
        text.push('\n');
    }
    write_output(resolved.output.as_deref(), &text)
}
