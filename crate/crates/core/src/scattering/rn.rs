//! Scalar waves of mass `μ` and wavenumber `η` scattered by a
//! Reissner–Nordström black hole of mass `M` and charge `Q`
//! (geometric units), with horizons `r_± = M ± √(M² − Q²)`.

use crate::error::{Error, Result};
use crate::quadrature::{geometric_points, integrate_adaptive, AdaptiveOptions};
use crate::series::ComplexSeries;
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};

/// Validated black-hole and field parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RnParams {
    mass: f64,
    charge: f64,
    eta: f64,
    mu: f64,
}

impl RnParams {
    /// Requires `M > 0`, `|Q| < M`, `η > 0` and `μ ≥ 0`.
    pub fn new(mass: f64, charge: f64, eta: f64, mu: f64) -> Result<Self> {
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::InvalidParams(format!("mass must be positive, got {mass}")));
        }
        if !(charge.abs() < mass) {
            return Err(Error::InvalidParams(format!(
                "charge must satisfy |Q| < M, got Q = {charge}, M = {mass}"
            )));
        }
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::InvalidParams(format!("eta must be positive, got {eta}")));
        }
        if !(mu >= 0.0 && mu.is_finite()) {
            return Err(Error::InvalidParams(format!("mu must be non-negative, got {mu}")));
        }
        Ok(RnParams { mass, charge, eta, mu })
    }

    /// Same as [`RnParams::new`] with `Q = ratio · M`.
    pub fn with_charge_ratio(mass: f64, ratio: f64, eta: f64, mu: f64) -> Result<Self> {
        Self::new(mass, ratio * mass, eta, mu)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `ω = √(η² + μ²)`.
    pub fn omega(&self) -> f64 {
        self.eta.hypot(self.mu)
    }

    fn root(&self) -> f64 {
        ((self.mass - self.charge) * (self.mass + self.charge)).sqrt()
    }

    pub fn r_plus(&self) -> f64 {
        self.mass + self.root()
    }

    pub fn r_minus(&self) -> f64 {
        self.mass - self.root()
    }
}

fn check_outside(r: f64, params: &RnParams, inclusive: bool) -> Result<()> {
    let rp = params.r_plus();
    let ok = if inclusive { r >= rp } else { r > rp };
    if !ok || !r.is_finite() {
        return Err(Error::Domain {
            what: "r",
            value: r,
            domain: if inclusive { "[r_+, ∞)" } else { "(r_+, ∞)" },
        });
    }
    Ok(())
}

/// Tortoise coordinate
/// `r* = r + r_+²/(r_+ − r_−) ln(r/r_+ − 1) − r_−²/(r_+ − r_−) ln(r/r_− − 1)`.
///
/// The `r_−` term is dropped when `r_− = 0`, where its coefficient vanishes.
pub fn rn_tortoise(r: f64, params: &RnParams) -> Result<f64> {
    check_outside(r, params, false)?;
    Ok(tortoise_from_gap(r - params.r_plus(), params))
}

/// `r*` written in terms of `d = r − r_+`, which keeps full precision next
/// to the horizon.
fn tortoise_from_gap(d: f64, params: &RnParams) -> f64 {
    let (rp, rm) = (params.r_plus(), params.r_minus());
    let r = rp + d;
    let span = rp - rm;
    let mut rs = r + rp * rp / span * (d / rp).ln();
    if rm > 0.0 {
        rs -= rm * rm / span * ((r - rm) / rm).ln();
    }
    rs
}

/// `dr*/dr = 1 / ((1 − r_+/r)(1 − r_−/r))`.
pub fn rn_drstar_dr(r: f64, params: &RnParams) -> Result<f64> {
    check_outside(r, params, false)?;
    Ok(drstar_dr(r, params))
}

fn drstar_dr(r: f64, params: &RnParams) -> f64 {
    let (rp, rm) = (params.r_plus(), params.r_minus());
    r * r / ((r - rp) * (r - rm))
}

/// Effective potential
/// `(1 − r_+/r)(1 − r_−/r)[l(l+1)/r² + (r_+ + r_−)/r³ − 2 r_+ r_−/r⁴] + μ²(r_+ r_−/r² − (r_+ + r_−)/r)`.
///
/// Unlike the tortoise coordinate this is finite on the horizon, so
/// `r = r_+` is accepted.
pub fn rn_effective_potential(r: f64, l: usize, params: &RnParams) -> Result<f64> {
    check_outside(r, params, true)?;
    Ok(effective_potential(r, l, params))
}

fn effective_potential(r: f64, l: usize, params: &RnParams) -> f64 {
    let (rp, rm) = (params.r_plus(), params.r_minus());
    let ll = (l * (l + 1)) as f64;
    let r2 = r * r;
    let f = (1.0 - rp / r) * (1.0 - rm / r);
    let mu2 = params.mu * params.mu;
    f * (ll / r2 + (rp + rm) / (r2 * r) - 2.0 * rp * rm / (r2 * r2)) + mu2 * (rp * rm / r2 - (rp + rm) / r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseOrder {
    Zeroth,
    First,
}

/// Cutoffs and tolerance for the first-order phase-shift integrals, which
/// run over `[r_+(1 + horizon_eps), r_max_factor / η]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RnQuadrature {
    pub horizon_eps: f64,
    pub r_max_factor: f64,
    pub rel_tol: f64,
}

impl Default for RnQuadrature {
    fn default() -> Self {
        RnQuadrature {
            horizon_eps: 1e-8,
            r_max_factor: 50.0,
            rel_tol: 1e-8,
        }
    }
}

impl RnQuadrature {
    fn validate(&self, params: &RnParams) -> Result<()> {
        if !(self.horizon_eps > 0.0 && self.horizon_eps.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "horizon cutoff must be positive, got {}",
                self.horizon_eps
            )));
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParams(format!(
                "rel_tol must be positive, got {}",
                self.rel_tol
            )));
        }
        let rp = params.r_plus();
        let upper = self.r_max_factor / params.eta;
        if !(upper.is_finite() && upper > rp * (1.0 + self.horizon_eps)) {
            return Err(Error::InvalidParams(format!(
                "upper cutoff {upper} must lie beyond the horizon cutoff {}",
                rp * (1.0 + self.horizon_eps)
            )));
        }
        Ok(())
    }
}

const RADIAL_PIECES: usize = 300;

/// Phase shift of the `l`-th partial wave.
///
/// The zeroth order is `lπ/2 + Mη − 2Mη ln 2 + 2Mη ln(√(M² − Q²)/M)`. The
/// first order is
/// `−atan[(I_s/η) / (1 + I_2/η)] + (r_+ + r_−) η ln((r_+ − r_−)/(r_+ + r_−))`
/// with `I_s = ∫ sin²(ηr*) (dr*/dr) V_l dr` and
/// `I_2 = ∫ sin(2ηr*) (dr*/dr) V_l dr` over the configured cutoffs.
pub fn rn_phase_shift(l: usize, params: &RnParams, order: PhaseOrder, quad: &RnQuadrature) -> Result<f64> {
    match order {
        PhaseOrder::Zeroth => Ok(zeroth_order(l, params)),
        PhaseOrder::First => first_order(l, params, quad),
    }
}

fn zeroth_order(l: usize, params: &RnParams) -> f64 {
    let me = params.mass * params.eta;
    l as f64 * PI / 2.0 + me - 2.0 * me * LN_2 + 2.0 * me * (params.root() / params.mass).ln()
}

fn first_order(l: usize, params: &RnParams, quad: &RnQuadrature) -> Result<f64> {
    let (rp, rm) = (params.r_plus(), params.r_minus());
    if rp - rm <= 0.0 {
        return Err(Error::InvalidParams(
            "first-order phase shift diverges for coincident horizons".into(),
        ));
    }
    quad.validate(params)?;
    let eta = params.eta;
    let upper = quad.r_max_factor / eta;
    let points = geometric_points(rp * quad.horizon_eps, upper - rp, RADIAL_PIECES);
    let opts = AdaptiveOptions {
        rel_tol: quad.rel_tol,
        abs_tol: 0.0,
        max_intervals: 50_000,
    };
    // both integrands are weighted by (dr*/dr) V_l, evaluated in d = r − r_+
    let weight = |d: f64| {
        let r = rp + d;
        effective_potential(r, l, params) * drstar_dr(r, params)
    };
    let i_sin2 = integrate_adaptive(
        |d| {
            let s = (eta * tortoise_from_gap(d, params)).sin();
            s * s * weight(d)
        },
        &points,
        opts,
    )?
    .value;
    let i_sin = integrate_adaptive(
        |d| (2.0 * eta * tortoise_from_gap(d, params)).sin() * weight(d),
        &points,
        opts,
    )?
    .value;
    let ratio = (i_sin2 / eta) / (1.0 + i_sin / eta);
    Ok(-ratio.atan() + (rp + rm) * eta * ((rp - rm) / (rp + rm)).ln())
}

/// Options for [`rn_series`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RnSeriesOptions {
    pub quadrature: RnQuadrature,
    /// Use `exp(2iδ) − 1` instead of `exp(2iδ)`.
    pub subtract_one: bool,
    /// Keep the `lπ/2` term of the zeroth-order phase. Dropping it flips the
    /// sign of every odd coefficient.
    pub include_l_phase: bool,
}

impl Default for RnSeriesOptions {
    fn default() -> Self {
        RnSeriesOptions {
            quadrature: RnQuadrature::default(),
            subtract_one: false,
            include_l_phase: true,
        }
    }
}

/// `c_l = (2l+1)/(2iω) · exp(2i(δ⁰_l + δ¹_l))` for `l = 0..=order`.
pub fn rn_series(order: usize, params: &RnParams, options: &RnSeriesOptions) -> Result<ComplexSeries> {
    let omega = params.omega();
    let mut coefficients = Vec::with_capacity(order + 1);
    for l in 0..=order {
        let mut delta = zeroth_order(l, params) + first_order(l, params, &options.quadrature)?;
        if !options.include_l_phase {
            delta -= l as f64 * PI / 2.0;
        }
        let mut s = Complex64::new(0.0, 2.0 * delta).exp();
        if options.subtract_one {
            s -= 1.0;
        }
        coefficients.push(s * (2 * l + 1) as f64 / Complex64::new(0.0, 2.0 * omega));
    }
    ComplexSeries::new(coefficients)
}
