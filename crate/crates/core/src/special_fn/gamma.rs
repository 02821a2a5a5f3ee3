//! Complex log-gamma.
//!
//! Lanczos approximation with `g = 7` and nine coefficients (the Godfrey
//! set), valid for `Re z ≥ 1/2`; the left half plane goes through the
//! reflection formula `Γ(z) Γ(1-z) = π / sin(πz)`. Relative accuracy of
//! `Γ` is about 1e-15 on `Re z ∈ [-10, 10]`, `|Im z| ≤ 10`.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;

#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Principal logarithm of `Γ(z)`: `exp` of the result is `Γ(z)` and the
/// imaginary part lies in `(-π, π]`.
pub fn log_gamma_complex(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::GammaPole(z.re));
    }
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain {
            what: "z",
            value: if z.re.is_finite() { z.im } else { z.re },
            domain: "finite complex numbers",
        });
    }
    let raw = if z.re < 0.5 {
        let s = (z * PI).sin();
        Complex64::new(PI.ln(), 0.0) - s.ln() - lanczos(Complex64::new(1.0, 0.0) - z)
    } else {
        lanczos(z)
    };
    Ok(Complex64::new(raw.re, wrap_phase(raw.im)))
}

/// Lanczos sum for `Re z ≥ 1/2`, without branch reduction.
fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

fn wrap_phase(phi: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut w = phi - two_pi * (phi / two_pi).round();
    if w <= -PI {
        w += two_pi;
    }
    w
}
