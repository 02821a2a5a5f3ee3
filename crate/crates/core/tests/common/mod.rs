//! Helpers shared by the integration tests.

use legendre_pade::series::project_legendre_coefficient;
use legendre_pade::special_fn::legendre_eval_all;
use legendre_pade::{Complex64, ComplexSeries};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_complex(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

pub fn legendre_sum(coefs: &[Complex64], x: f64) -> Complex64 {
    let p = legendre_eval_all(coefs.len() - 1, x).unwrap();
    coefs.iter().zip(&p).map(|(a, pl)| a * pl).sum()
}

/// Largest coefficient difference relative to the largest target modulus.
pub fn max_rel(got: &[Complex64], want: &[Complex64]) -> f64 {
    let scale = want.iter().map(|z| z.norm()).fold(0.0, f64::max);
    got.iter().zip(want).map(|(g, w)| (g - w).norm()).fold(0.0, f64::max) / scale
}

/// Random `P/Q` with `Q` bounded away from zero on `[-1, 1]`, returned with
/// its Legendre coefficients `c_0..c_{L+2M}` (enough for every product order
/// up to `L+M` to be exact).
pub fn random_rational(rng: &mut ChaCha8Rng, l: usize, m: usize) -> (Vec<Complex64>, Vec<Complex64>, ComplexSeries) {
    let a: Vec<Complex64> = (0..=l).map(|_| random_complex(rng, 1.0)).collect();
    let b = loop {
        let mut b = vec![Complex64::new(1.0, 0.0)];
        b.extend((0..m).map(|_| random_complex(rng, 0.35)));
        let min_q = (0..=400)
            .map(|i| legendre_sum(&b, -1.0 + 2.0 * i as f64 / 400.0).norm())
            .fold(f64::INFINITY, f64::min);
        if min_q > 0.4 {
            break b;
        }
    };
    let coefficients = (0..=l + 2 * m)
        .map(|n| {
            project_legendre_coefficient(
                |theta| {
                    let x = theta.cos();
                    legendre_sum(&a, x) / legendre_sum(&b, x)
                },
                n,
            )
        })
        .collect();
    (a, b, ComplexSeries::new(coefficients).unwrap())
}
