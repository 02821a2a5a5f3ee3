//! First Born approximation, `δ_l = -k ∫₀^∞ j_l²(kr) V(r) r² dr`, for
//! power-law potentials `V = α / r^s`.
//!
//! With `x = kr` the phase shift is `-α k^{s-2} ∫₀^∞ j_l²(x) x^{2-s} dx`.
//! The integral is split at `X`: `[0, X]` goes to adaptive Gauss–Kronrod,
//! and `[X, ∞)` is summed in closed form from the finite expansion
//! `h_l(x) = (-i)^{l+1} e^{ix}/x · Σ_{k≤l} i^k (l+k)! / (k! (l-k)! (2x)^k)`,
//! using `j_l = Re h_l`.

use super::check_open_theta;
use crate::error::{Error, Result};
use crate::quadrature::{integrate_adaptive, AdaptiveOptions};
use crate::series::ComplexSeries;
use crate::special_fn::spherical_bessel_j;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    /// `α / r`
    InverseR,
    /// `α / r²`
    InverseR2,
}

impl PotentialKind {
    fn power(self) -> i32 {
        match self {
            PotentialKind::InverseR => 1,
            PotentialKind::InverseR2 => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    pub alpha: f64,
}

impl PotentialSpec {
    pub fn new(kind: PotentialKind, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::InvalidParams(format!(
                "coupling alpha must be finite, got {alpha}"
            )));
        }
        Ok(PotentialSpec { kind, alpha })
    }

    pub fn value(&self, r: f64) -> f64 {
        self.alpha / r.powi(self.kind.power())
    }
}

fn check_k(k: f64) -> Result<()> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidParams(format!("wavenumber k must be positive, got {k}")));
    }
    Ok(())
}

/// Born phase shift. `α/r²` uses the closed form `-πα / (2(2l+1))`;
/// other potentials go through [`born_phase_shift_quadrature`].
pub fn born_phase_shift(potential: &PotentialSpec, l: usize, k: f64) -> Result<f64> {
    check_k(k)?;
    if potential.alpha == 0.0 {
        return Ok(0.0);
    }
    match potential.kind {
        PotentialKind::InverseR2 => Ok(-PI * potential.alpha / (2.0 * (2 * l + 1) as f64)),
        PotentialKind::InverseR => born_phase_shift_quadrature(potential, l, k),
    }
}

/// Born phase shift by quadrature, relative tolerance 1e-9.
///
/// The Born integral of `α/r` diverges logarithmically at large `r`; that
/// case returns [`Error::NonConvergence`].
pub fn born_phase_shift_quadrature(potential: &PotentialSpec, l: usize, k: f64) -> Result<f64> {
    check_k(k)?;
    if potential.alpha == 0.0 {
        return Ok(0.0);
    }
    let s = potential.kind.power();
    let integral = bessel_power_integral(l, s)?;
    Ok(-potential.alpha * k.powi(s - 2) * integral)
}

/// `∫₀^∞ j_l²(x) x^{2-s} dx`.
fn bessel_power_integral(l: usize, s: i32) -> Result<f64> {
    if s <= 1 {
        return Err(Error::NonConvergence {
            what: "Born integral (tail decays like 1/r^s, needs s > 1)",
            estimate: f64::INFINITY,
            error: f64::INFINITY,
        });
    }
    let x_split = 100.0 + 10.0 * l as f64;
    let pieces = (x_split / PI).ceil() as usize;
    let points: Vec<f64> = (0..=pieces).map(|i| x_split * i as f64 / pieces as f64).collect();
    let head = integrate_adaptive(
        |x| {
            let j = spherical_bessel_j(l, x);
            j * j * x.powi(2 - s)
        },
        &points,
        AdaptiveOptions {
            rel_tol: 1e-11,
            abs_tol: 1e-15,
            max_intervals: 50_000,
        },
    )?;
    Ok(head.value + bessel_power_tail(l, s, x_split))
}

/// `∫_X^∞ j_l²(x) x^{2-s} dx` from the finite Hankel expansion.
fn bessel_power_tail(l: usize, s: i32, x: f64) -> f64 {
    // u(t) = Σ U_k t^k with t = 1/x
    let mut u = Vec::with_capacity(l + 1);
    let mut a_k = 1.0; // (l+k)! / (k! (l-k)!)
    let mut i_pow = Complex64::new(1.0, 0.0);
    for k in 0..=l {
        if k > 0 {
            a_k *= ((l + k) * (l + 1 - k)) as f64 / k as f64;
            i_pow *= Complex64::new(0.0, 1.0);
        }
        u.push(i_pow * a_k / 2f64.powi(k as i32));
    }
    let mut mean_part = 0.0;
    let mut osc_part = Complex64::new(0.0, 0.0);
    for p in 0..=2 * l {
        let mut d = 0.0;
        let mut g = Complex64::new(0.0, 0.0);
        for j in p.saturating_sub(l)..=p.min(l) {
            d += (u[j] * u[p - j].conj()).re;
            g += u[j] * u[p - j];
        }
        let q = s + p as i32;
        mean_part += d * x.powi(1 - q) / (q - 1) as f64;
        osc_part += g * oscillatory_tail(q, x);
    }
    let sign = if (l + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    0.5 * (mean_part + sign * osc_part.re)
}

/// `∫_X^∞ x^{-q} e^{2ix} dx` by repeated integration by parts, truncated
/// where the asymptotic terms stop decreasing.
fn oscillatory_tail(q: i32, x: f64) -> Complex64 {
    let mut term = Complex64::new(0.0, 0.5) * x.powi(-q);
    let mut sum = term;
    for j in 0..200 {
        let factor = Complex64::new(0.0, -0.5) * (q + j) as f64 / x;
        let next = term * factor;
        if next.norm() >= term.norm() || next.norm() < 1e-20 * sum.norm() {
            break;
        }
        term = next;
        sum += term;
    }
    sum * Complex64::new(0.0, 2.0 * x).exp()
}

/// Small-phase-shift partial-wave coefficients `c_l = (2l+1) δ_l / k`.
pub fn born_series(potential: &PotentialSpec, order: usize, k: f64) -> Result<ComplexSeries> {
    let coefficients = (0..=order)
        .map(|l| {
            Ok(Complex64::new(
                (2 * l + 1) as f64 * born_phase_shift(potential, l, k)? / k,
                0.0,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexSeries::new(coefficients)
}

/// Born amplitude for `α/r²`: `-πα / (4k sin(θ/2))`.
pub fn born_exact_invr2(theta: f64, alpha: f64, k: f64) -> Result<f64> {
    check_k(k)?;
    check_open_theta(theta, "Born amplitude for α/r²")?;
    Ok(-PI * alpha / (4.0 * k * (0.5 * theta).sin()))
}
