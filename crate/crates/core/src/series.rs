//! Truncated Legendre-basis series `Σ_{l=0}^{N} c_l P_l(cos θ)`.
//!
//! `N` is the highest retained order, so a series of order `N` holds `N + 1`
//! coefficients.

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre_on;
use crate::special_fn::legendre_eval_all;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Coefficients `c_0..c_N` of a truncated Legendre expansion. Always
/// non-empty and finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    coefficients: Vec<Complex64>,
}

impl ComplexSeries {
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidSeries("a series needs at least one coefficient".into()));
        }
        if let Some(l) = coefficients
            .iter()
            .position(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::InvalidSeries(format!("coefficient c_{l} is not finite")));
        }
        Ok(ComplexSeries { coefficients })
    }

    pub fn from_real(coefficients: &[f64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// Highest retained order `N`.
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_abs(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// First `order + 1` coefficients.
    pub fn truncated(&self, order: usize) -> Result<Self> {
        if order >= self.coefficients.len() {
            return Err(Error::InsufficientCoefficients {
                needed: order + 1,
                got: self.coefficients.len(),
            });
        }
        Ok(ComplexSeries {
            coefficients: self.coefficients[..=order].to_vec(),
        })
    }

    pub fn scaled(&self, alpha: Complex64) -> Result<Self> {
        Self::new(self.coefficients.iter().map(|c| c * alpha).collect())
    }

    /// `α·self + β·other`, padding the shorter series with zeros.
    pub fn linear_combination(&self, alpha: Complex64, other: &Self, beta: Complex64) -> Result<Self> {
        let n = self.len().max(other.len());
        let zero = Complex64::new(0.0, 0.0);
        let coefficients = (0..n)
            .map(|l| {
                alpha * self.coefficients.get(l).copied().unwrap_or(zero)
                    + beta * other.coefficients.get(l).copied().unwrap_or(zero)
            })
            .collect();
        Self::new(coefficients)
    }

    pub fn eval(&self, theta: f64) -> Result<Complex64> {
        eval_partial_sum(self, theta)
    }
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain {
            what: "theta",
            value: theta,
            domain: "[0, π]",
        });
    }
    Ok(())
}

/// Evaluates `Σ_{l=0}^{N} c_l P_l(cos θ)` for `θ ∈ [0, π]`.
///
/// `θ = 0` is accepted; the partial sum is finite there even where the
/// functions it approximates diverge.
pub fn eval_partial_sum(series: &ComplexSeries, theta: f64) -> Result<Complex64> {
    check_theta(theta)?;
    let p = legendre_eval_all(series.order(), theta.cos())?;
    Ok(series.coefficients.iter().zip(&p).map(|(c, &pl)| c * pl).sum())
}

/// Minimum node count for [`project_legendre_coefficient`].
pub const PROJECTION_MIN_NODES: usize = 64;
const PROJECTION_MAX_NODES: usize = 4096;
const PROJECTION_AGREEMENT: f64 = 1e-11;

/// Order-`n` Legendre coefficient `(2n+1)/2 ∫₋₁¹ f P_n d(cos θ)` of a
/// function of `θ`.
///
/// The integral is taken in `θ` (`d(cos θ) = sin θ dθ`) with Gauss–Legendre
/// nodes on `[0, π]`, starting from `max(64, n + 9)` nodes and doubling until
/// two successive estimates agree to 1e-11. Working in `θ` keeps integrands
/// like `1/(2 sin(θ/2))`, singular at `cos θ = 1`, smooth.
pub fn project_legendre_coefficient<F>(f: F, n: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    let estimate = |nodes: usize| -> Complex64 {
        gauss_legendre_on(nodes, 0.0, PI)
            .into_iter()
            .map(|(theta, w)| {
                let p = legendre_eval_all(n, theta.cos()).expect("cos θ lies in [-1, 1]");
                f(theta) * (p[n] * theta.sin() * w)
            })
            .sum::<Complex64>()
            * (0.5 * (2 * n + 1) as f64)
    };
    let mut nodes = PROJECTION_MIN_NODES.max(n + 9);
    let mut prev = estimate(nodes);
    while nodes < PROJECTION_MAX_NODES {
        nodes *= 2;
        let next = estimate(nodes);
        if (next - prev).norm() <= PROJECTION_AGREEMENT * next.norm().max(1.0) {
            return next;
        }
        prev = next;
    }
    prev
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_bad_series() {
        assert!(ComplexSeries::new(vec![]).is_err());
        assert!(ComplexSeries::new(vec![c(1.0, 0.0), c(f64::NAN, 0.0)]).is_err());
        assert!(ComplexSeries::new(vec![c(f64::INFINITY, 0.0)]).is_err());
    }

    #[test]
    fn unit_series_at_backward_angle() {
        let s = ComplexSeries::from_real(&[1.0; 7]).unwrap();
        let v = s.eval(PI).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn forward_angle_sums_coefficients() {
        let s = ComplexSeries::new(vec![c(1.0, 2.0), c(-0.5, 0.25), c(3.0, -1.0)]).unwrap();
        let v = s.eval(0.0).unwrap();
        assert!((v - c(3.5, 1.25)).norm() < 1e-14);
    }

    #[test]
    fn constant_series() {
        let s = ComplexSeries::new(vec![c(2.0, 3.0)]).unwrap();
        for &t in &[0.0, 0.7, 2.0, PI] {
            assert_eq!(s.eval(t).unwrap(), c(2.0, 3.0));
        }
    }

    #[test]
    fn theta_outside_range_rejected() {
        let s = ComplexSeries::from_real(&[1.0, 1.0]).unwrap();
        assert!(s.eval(-0.1).is_err());
        assert!(s.eval(3.2).is_err());
    }

    #[test]
    fn projection_of_legendre_polynomial() {
        let p3 = |t: f64| c(legendre_eval_all(3, t.cos()).unwrap()[3], 0.0);
        assert!((project_legendre_coefficient(p3, 3) - c(1.0, 0.0)).norm() < 1e-12);
        assert!(project_legendre_coefficient(p3, 2).norm() < 1e-12);
    }

    #[test]
    fn projection_of_half_cosecant() {
        let f = |t: f64| c(1.0 / (2.0 * (0.5 * t).sin()), 0.0);
        for n in 0..=6 {
            let v = project_legendre_coefficient(f, n);
            assert!((v - c(1.0, 0.0)).norm() < 1e-10, "n={n} v={v}");
        }
    }

    #[test]
    fn truncation_and_scaling() {
        let s = ComplexSeries::from_real(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.truncated(1).unwrap().coefficients(), &[c(1.0, 0.0), c(2.0, 0.0)]);
        assert!(s.truncated(3).is_err());
        assert_eq!(s.scaled(c(0.0, 1.0)).unwrap().coefficients()[2], c(0.0, 3.0));
    }

    fn series_strategy(max_len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 1..=max_len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn projection_round_trip(raw in series_strategy(10)) {
            let s = ComplexSeries::new(raw.iter().map(|&(r, i)| c(r, i)).collect()).unwrap();
            for l in 0..s.len() {
                let got = project_legendre_coefficient(|t| s.eval(t).unwrap(), l);
                prop_assert!((got - s.coefficients()[l]).norm() < 1e-10);
            }
        }

        #[test]
        fn evaluation_is_linear(
            a in series_strategy(8),
            b in series_strategy(8),
            alpha in (-2.0..2.0f64, -2.0..2.0f64),
            beta in (-2.0..2.0f64, -2.0..2.0f64),
            theta in 0.0..PI,
        ) {
            let sa = ComplexSeries::new(a.iter().map(|&(r, i)| c(r, i)).collect()).unwrap();
            let sb = ComplexSeries::new(b.iter().map(|&(r, i)| c(r, i)).collect()).unwrap();
            let (al, be) = (c(alpha.0, alpha.1), c(beta.0, beta.1));
            let combo = sa.linear_combination(al, &sb, be).unwrap();
            let lhs = combo.eval(theta).unwrap();
            let rhs = al * sa.eval(theta).unwrap() + be * sb.eval(theta).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()) * 10.0);
        }
    }
}
