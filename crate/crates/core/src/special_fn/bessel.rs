//! Spherical Bessel functions of the first kind, `j_l(x) = √(π/2x) J_{l+1/2}(x)`.
//!
//! Three regimes:
//!
//! * `x < 1`: ascending power series (terms shrink by at least `x²/2`).
//! * `x ≥ l_max`: upward recurrence from `j_0`, `j_1`.
//! * otherwise: Miller's downward recurrence started well above `l_max`,
//!   rescaled against `j_0` and `j_1`. Upward recurrence loses all accuracy
//!   once `l > x`, which is why the crossover sits at `x = l_max`.

/// Exponent beyond which the downward recurrence is renormalized.
const RESCALE_LIMIT: f64 = 1e250;

/// `j_l(x)` for `x ≥ 0`. Negative `x` uses `j_l(-x) = (-1)^l j_l(x)`.
pub fn spherical_bessel_j(l: usize, x: f64) -> f64 {
    *spherical_bessel_j_all(l, x)
        .last()
        .expect("table has l_max + 1 entries")
}

/// `[j_0(x), ..., j_{l_max}(x)]`.
pub fn spherical_bessel_j_all(l_max: usize, x: f64) -> Vec<f64> {
    if x.is_nan() {
        return vec![f64::NAN; l_max + 1];
    }
    if x < 0.0 {
        let mut v = spherical_bessel_j_all(l_max, -x);
        v.iter_mut().skip(1).step_by(2).for_each(|j| *j = -*j);
        return v;
    }
    if x == 0.0 {
        let mut v = vec![0.0; l_max + 1];
        v[0] = 1.0;
        return v;
    }
    if x < 1.0 {
        return (0..=l_max).map(|l| power_series(l, x)).collect();
    }
    if x >= l_max as f64 {
        return upward(l_max, x);
    }
    downward(l_max, x)
}

fn power_series(l: usize, x: f64) -> f64 {
    // x^l / (2l+1)!!
    let mut lead = 1.0;
    for k in 1..=l {
        lead *= x / (2 * k + 1) as f64;
    }
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= y / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn upward(l_max: usize, x: f64) -> Vec<f64> {
    let (s, c) = x.sin_cos();
    let mut v = Vec::with_capacity(l_max + 1);
    v.push(s / x);
    if l_max >= 1 {
        v.push(s / (x * x) - c / x);
    }
    for l in 1..l_max {
        let next = (2 * l + 1) as f64 / x * v[l] - v[l - 1];
        v.push(next);
    }
    v
}

fn downward(l_max: usize, x: f64) -> Vec<f64> {
    let start = l_max + 20 + (4.0 * (l_max as f64).sqrt()) as usize;
    let mut v = vec![0.0; start + 2];
    v[start] = 1e-280;
    for n in (0..start).rev() {
        v[n] = (2 * n + 3) as f64 / x * v[n + 1] - v[n + 2];
        if v[n].abs() > RESCALE_LIMIT {
            let inv = 1.0 / v[n].abs();
            v[n..].iter_mut().for_each(|t| *t *= inv);
        }
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    // least-squares match on the two closed forms, robust near zeros of j_0
    let norm = v[0].hypot(v[1]);
    let (u0, u1) = (v[0] / norm, v[1] / norm);
    let scale = (j0 * u0 + j1 * u1) / norm;
    v.truncate(l_max + 1);
    v.iter_mut().for_each(|t| *t *= scale);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert!((spherical_bessel_j(0, 2.0) - 2f64.sin() / 2.0).abs() < 1e-16);
        assert_eq!(spherical_bessel_j(1, 0.0), 0.0);
        assert_eq!(spherical_bessel_j(0, 0.0), 1.0);
        let j1 = spherical_bessel_j(1, 1.0);
        assert!((j1 - (1f64.sin() - 1f64.cos())).abs() < 1e-15);
        assert!((j1 - 0.301_168_678_939_756_74).abs() < 1e-15);
        for &x in &[0.3f64, 1.7, 6.0, 40.0] {
            let j2 = (3.0 / (x * x) - 1.0) * x.sin() / x - 3.0 * x.cos() / (x * x);
            assert!((spherical_bessel_j(2, x) - j2).abs() < 1e-14 * (1.0 + j2.abs() / 1e-3));
        }
    }

    #[test]
    fn reference_values() {
        // 20-digit reference values of √(π/2x) J_{l+1/2}(x)
        #[allow(clippy::excessive_precision)]
        let cases: &[(usize, f64, f64)] = &[
            (0, 0.01, 0.999_983_333_416_666_468_25),
            (0, 3.7, -0.143_198_957_002_295_496_87),
            (0, 100.0, -0.005_063_656_411_097_587_936_6),
            (1, 0.01, 0.003_333_300_000_119_047_468),
            (1, 0.5, 0.162_537_030_636_066_568_86),
            (1, 25.0, -0.039_859_875_274_695_380_77),
            (5, 0.01, 9.619_972_620_034_287_641_8e-15),
            (5, 0.5, 2.977_466_875_457_445_581_6e-6),
            (5, 1.0, 0.000_092_561_158_611_258_163_567),
            (5, 3.7, 0.038_613_656_933_813_531_175),
            (5, 10.0, -0.055_534_511_621_452_180_909),
            (5, 100.0, -0.009_290_148_934_907_571_766_3),
            (10, 0.01, 7.273_076_134_503_788_686_2e-31),
            (10, 1.0, 7.116_552_640_047_313_024e-11),
            (10, 3.7, 0.000_025_876_217_463_288_221_869),
            (10, 10.0, 0.064_605_154_492_564_264_271),
            (10, 25.0, -0.036_253_285_601_128_565_996),
            (10, 100.0, -0.000_195_657_859_713_429_005_96),
            (20, 0.01, 7.625_970_137_479_624_548_5e-66),
            (20, 0.5, 7.251_588_081_015_397_126_3e-32),
            (20, 1.0, 7.537_795_722_236_872_994e-26),
            (20, 3.7, 1.502_967_780_904_954_968_4e-14),
            (20, 10.0, 2.308_371_961_319_468_716_7e-6),
            (20, 25.0, 0.028_500_071_484_154_682_356),
            (20, 50.0, -0.015_785_029_898_269_297_655),
            (20, 100.0, 0.010_107_671_283_873_054_092),
        ];
        for &(l, x, expected) in cases {
            let got = spherical_bessel_j(l, x);
            let rel = ((got - expected) / expected).abs();
            assert!(rel < 1e-10, "j_{l}({x}) = {got}, expected {expected}, rel {rel}");
        }
    }

    #[test]
    fn table_consistent_with_single() {
        for &x in &[0.2, 2.0, 7.5, 19.0, 33.0] {
            let all = spherical_bessel_j_all(20, x);
            for (l, &v) in all.iter().enumerate() {
                let single = spherical_bessel_j(l, x);
                assert!((v - single).abs() <= 1e-12 * single.abs().max(1e-300), "l={l} x={x}");
            }
        }
    }

    #[test]
    fn addition_identity_at_forward_angle() {
        // Σ (2l+1) j_l(x)² = 1
        let j = spherical_bessel_j_all(40, 5.0);
        let s: f64 = j.iter().enumerate().map(|(l, v)| (2 * l + 1) as f64 * v * v).sum();
        assert!((s - 1.0).abs() < 1e-8, "sum = {s}");
    }

    #[test]
    fn parity_for_negative_argument() {
        let p = spherical_bessel_j_all(5, 2.3);
        let n = spherical_bessel_j_all(5, -2.3);
        for l in 0..=5 {
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(n[l], sign * p[l]);
        }
    }
}
