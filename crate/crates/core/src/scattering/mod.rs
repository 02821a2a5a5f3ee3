//! Series generators and closed-form amplitudes for the worked examples:
//! the unit series behind `1/(2 sin(θ/2))`, Coulomb scattering, first Born
//! approximation for power-law potentials, and scalar waves scattered by a
//! Reissner–Nordström black hole.

mod born;
mod coulomb;
mod rn;

pub use born::{
    born_exact_invr2, born_phase_shift, born_phase_shift_quadrature, born_series, PotentialKind, PotentialSpec,
};
pub use coulomb::{coulomb_exact, coulomb_series};
pub use rn::{
    rn_drstar_dr, rn_effective_potential, rn_phase_shift, rn_series, rn_tortoise, PhaseOrder, RnParams, RnQuadrature,
    RnSeriesOptions,
};

use crate::error::{Error, Result};
use crate::series::ComplexSeries;
use num_complex::Complex64;
use std::f64::consts::PI;

/// `c_l = 1` for `l = 0..=order`, the expansion of `1/(2 sin(θ/2))`.
pub fn unit_series(order: usize) -> ComplexSeries {
    ComplexSeries::from_real(&vec![1.0; order + 1]).expect("unit coefficients are finite")
}

pub(crate) fn check_open_theta(theta: f64, what: &'static str) -> Result<()> {
    if theta == 0.0 {
        return Err(Error::Divergence(what));
    }
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::Domain {
            what: "theta",
            value: theta,
            domain: "(0, π]",
        });
    }
    Ok(())
}

/// `1/(2 sin(θ/2))` on `(0, π]`.
pub fn exact_half_csc(theta: f64) -> Result<f64> {
    check_open_theta(theta, "1/(2 sin(θ/2))")?;
    Ok(1.0 / (2.0 * (0.5 * theta).sin()))
}

/// Differential cross section `σ = |f|²`.
pub fn cross_section(f: Complex64) -> f64 {
    f.norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_series_lengths() {
        assert_eq!(unit_series(0).coefficients(), &[Complex64::new(1.0, 0.0)]);
        let s = unit_series(6);
        assert_eq!(s.len(), 7);
        assert!(s.coefficients().iter().all(|c| *c == Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn half_csc_values() {
        assert!((exact_half_csc(PI).unwrap() - 0.5).abs() < 1e-16);
        assert!((exact_half_csc(PI / 3.0).unwrap() - 1.0).abs() < 1e-15);
        let v = exact_half_csc(0.5).unwrap();
        assert!((v - 1.0 / (2.0 * 0.25f64.sin())).abs() < 1e-15);
        assert!((v - 2.020_986_250_610_535_6).abs() < 1e-14);
        assert!(matches!(exact_half_csc(0.0), Err(Error::Divergence(_))));
        assert!(exact_half_csc(-1.0).is_err());
        assert!(exact_half_csc(4.0).is_err());
    }

    #[test]
    fn unit_series_coefficients_by_projection() {
        use crate::series::project_legendre_coefficient;
        for l in 0..=6 {
            let v = project_legendre_coefficient(|t| Complex64::new(1.0 / (2.0 * (0.5 * t).sin()), 0.0), l);
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn cross_section_is_squared_modulus() {
        assert_eq!(cross_section(Complex64::new(3.0, 4.0)), 25.0);
        assert_eq!(cross_section(Complex64::new(0.0, 0.0)), 0.0);
    }
}
