use super::check_open_theta;
use crate::error::{Error, Result};
use crate::series::ComplexSeries;
use crate::special_fn::log_gamma_complex;
use num_complex::Complex64;

fn check_k(k: f64) -> Result<()> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidParams(format!("wavenumber k must be positive, got {k}")));
    }
    Ok(())
}

/// `Γ(a + i/k) / Γ(a - i/k)` through log-gamma; unit modulus for real `a`.
fn gamma_ratio(a: f64, k: f64) -> Result<Complex64> {
    let z = Complex64::new(a, 1.0 / k);
    Ok((log_gamma_complex(z)? - log_gamma_complex(z.conj())?).exp())
}

/// Coulomb partial-wave coefficients
/// `c_l = (2l+1)/(2ik) · Γ(l+1+i/k)/Γ(l+1-i/k)`, `l = 0..=order`.
pub fn coulomb_series(order: usize, k: f64) -> Result<ComplexSeries> {
    check_k(k)?;
    let prefactor = Complex64::new(0.0, -1.0 / (2.0 * k));
    let coefficients = (0..=order)
        .map(|l| Ok(prefactor * (2 * l + 1) as f64 * gamma_ratio(l as f64 + 1.0, k)?))
        .collect::<Result<Vec<_>>>()?;
    ComplexSeries::new(coefficients)
}

/// Closed-form Coulomb amplitude
/// `-1/(2k² sin²(θ/2)) · Γ(1+i/k)/Γ(1-i/k) · exp(-(2i/k) ln sin(θ/2))`.
pub fn coulomb_exact(theta: f64, k: f64) -> Result<Complex64> {
    check_k(k)?;
    check_open_theta(theta, "Coulomb amplitude")?;
    let s = (0.5 * theta).sin();
    let phase = Complex64::new(0.0, -2.0 / k * s.ln()).exp();
    Ok(-gamma_ratio(1.0, k)? * phase / (2.0 * k * k * s * s))
}
