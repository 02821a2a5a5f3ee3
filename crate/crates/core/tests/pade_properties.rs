mod common;

use common::{legendre_sum, max_rel, random_complex, random_rational};
use legendre_pade::linalg::ComplexMatrix;
use legendre_pade::pade::{self, build_denominator_system, construct, product_coefficients, solve_denominator};
use legendre_pade::scattering::{exact_half_csc, unit_series};
use legendre_pade::series::{eval_partial_sum, project_legendre_coefficient};
use legendre_pade::{Complex64, ComplexSeries, Error};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn complex_series(max_order: usize) -> impl Strategy<Value = ComplexSeries> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 1..=max_order + 1)
        .prop_map(|v| ComplexSeries::new(v.into_iter().map(|(re, im)| c(re, im)).collect()).unwrap())
}

#[test]
fn rational_functions_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut draws = 0;
    for total in 1..=8usize {
        for m in 0..=total.min(4) {
            let l = total - m;
            let (a, b, series) = random_rational(&mut rng, l, m);
            let (p, _) = construct(&series, l, m).unwrap();
            assert!(max_rel(p.numerator(), &a) < 1e-8, "[{l}/{m}] numerator");
            assert!(max_rel(p.denominator(), &b) < 1e-8, "[{l}/{m}] denominator");
            draws += 1;
        }
    }
    assert!(draws >= 20);
}

#[test]
fn matching_property_on_constructed_approximants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (l, m, n) in [(3, 3, 6), (3, 3, 8), (2, 4, 9), (5, 2, 7), (1, 1, 4)] {
        let series = ComplexSeries::new((0..=n).map(|_| random_complex(&mut rng, 1.0)).collect()).unwrap();
        let (p, report) = construct(&series, l, m).unwrap();
        let prod = product_coefficients(&series, p.denominator(), l + m);
        let scale = series.max_abs();
        for (order, z) in prod.iter().enumerate() {
            let target = if order <= l { p.numerator()[order] } else { c(0.0, 0.0) };
            assert!((z - target).norm() <= 1e-9 * scale, "[{l}/{m}] order {order}");
        }
        assert!(report.residual <= 1e-9 * scale);
    }
}

#[test]
fn matching_property_by_projection() {
    // For an exact rational f = P/Q, projecting f·Q reproduces the numerator
    // and zeros through order L+M.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (l, m) = (3, 3);
    let (a, b, series) = random_rational(&mut rng, l, m);
    let (p, _) = construct(&series, l, m).unwrap();
    for n in 0..=l + m {
        let proj = project_legendre_coefficient(
            |theta| {
                let x = theta.cos();
                legendre_sum(&a, x) / legendre_sum(&b, x) * legendre_sum(p.denominator(), x)
            },
            n,
        ) - if n <= l { p.numerator()[n] } else { c(0.0, 0.0) };
        assert!(proj.norm() < 1e-9, "order {n}: {proj}");
    }
}

#[test]
fn oscillation_suppressed_for_unit_series() {
    let series = unit_series(8);
    let (p, _) = construct(&series, 3, 3).unwrap();
    let (mut pade_err, mut partial_err) = (0.0f64, 0.0f64);
    for i in 0..=600 {
        let theta = PI / 3.0 + (2.0 * PI / 3.0) * i as f64 / 600.0;
        let exact = exact_half_csc(theta).unwrap();
        pade_err = pade_err.max((pade::eval(&p, theta).unwrap() - exact).norm());
        partial_err = partial_err.max((eval_partial_sum(&series, theta).unwrap() - exact).norm());
    }
    assert!(pade_err <= 1e-2);
    assert!(pade_err * 10.0 <= partial_err, "{pade_err} vs {partial_err}");
}

#[test]
fn cramer_cross_check() {
    fn det(a: &[Vec<Complex64>]) -> Complex64 {
        // Laplace expansion along the first row
        let n = a.len();
        if n == 1 {
            return a[0][0];
        }
        (0..n)
            .map(|col| {
                let minor: Vec<Vec<Complex64>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| *v)
                            .collect()
                    })
                    .collect();
                let sign = if col % 2 == 0 { 1.0 } else { -1.0 };
                a[0][col] * det(&minor) * sign
            })
            .sum()
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for m in 1..=3 {
        for l in 0..=3 {
            let n = l + 2 * m;
            let series = ComplexSeries::new((0..=n).map(|_| random_complex(&mut rng, 1.0)).collect()).unwrap();
            let sys = build_denominator_system(&series, l, m).unwrap();
            let rows: Vec<Vec<Complex64>> = (0..m).map(|r| (0..m).map(|k| sys.matrix[(r, k)]).collect()).collect();
            let d = det(&rows);
            let b = solve_denominator(&series, l, m).unwrap();
            for k in 0..m {
                let replaced: Vec<Vec<Complex64>> = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        let mut row = row.clone();
                        row[k] = sys.rhs[r];
                        row
                    })
                    .collect();
                let cramer = det(&replaced) / d;
                assert!(
                    (cramer - b[k + 1]).norm() <= 1e-10 * cramer.norm().max(1.0),
                    "[{l}/{m}] b_{}",
                    k + 1
                );
            }
        }
    }
}

#[test]
fn system_entries_for_unit_series() {
    // L=0, M=1: A = Σ_m (1 m 1)² = 1/3, rhs = -(0 1 1)² = -1/3
    let sys = build_denominator_system(&unit_series(1), 0, 1).unwrap();
    assert!((sys.matrix[(0, 0)] - c(1.0 / 3.0, 0.0)).norm() < 1e-15);
    assert!((sys.rhs[0] + c(1.0 / 3.0, 0.0)).norm() < 1e-15);
    let constant = ComplexSeries::from_real(&[2.0, 0.0]).unwrap();
    let b = solve_denominator(&constant, 0, 1).unwrap();
    assert_eq!(b[1], c(0.0, 0.0));
    let synthetic = ComplexMatrix::from_rows(&[vec![c(4.0, 0.0), c(1.0, 0.0)], vec![c(0.5, 0.0), c(3.0, 1.0)]]);
    let chosen = [c(1.0, -2.0), c(0.5, 0.25)];
    let rhs = synthetic.mul_vec(&chosen);
    let solved = legendre_pade::linalg::lu_factor(&synthetic).unwrap().solve(&rhs);
    assert!(max_rel(&solved, &chosen) < 1e-14);
}

#[test]
fn insufficient_and_singular_inputs() {
    assert!(matches!(
        construct(&unit_series(4), 3, 3),
        Err(Error::InsufficientCoefficients { needed: 7, got: 5 })
    ));
    let spike = ComplexSeries::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
    assert!(matches!(construct(&spike, 1, 2), Err(Error::SingularSystem { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degenerate_equals_partial_sum(series in complex_series(8), theta in 0.0..PI) {
        let (p, _) = construct(&series, series.order(), 0).unwrap();
        prop_assert_eq!(p.denominator(), &[c(1.0, 0.0)][..]);
        let a = pade::eval(&p, theta).unwrap();
        let b = eval_partial_sum(&series, theta).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * b.norm().max(1e-300) + 1e-15);
    }

    #[test]
    fn scaling_covariance(series in complex_series(9), re in -3.0..3.0f64, im in -3.0..3.0f64) {
        prop_assume!(series.order() >= 6);
        prop_assume!(re.hypot(im) > 1e-2);
        let alpha = c(re, im);
        let Ok((p, _)) = construct(&series, 3, 3) else { return Ok(()) };
        let (q, _) = construct(&series.scaled(alpha).unwrap(), 3, 3).unwrap();
        let scaled: Vec<Complex64> = p.numerator().iter().map(|a| a * alpha).collect();
        prop_assert!(max_rel(q.numerator(), &scaled) <= 1e-10);
        prop_assert!(max_rel(q.denominator(), p.denominator()) <= 1e-10);
    }

    #[test]
    fn denominator_leads_with_one(series in complex_series(8)) {
        let (l, m) = pade::default_split(series.order());
        if let Ok((p, report)) = construct(&series, l, m) {
            prop_assert_eq!(p.denominator()[0], c(1.0, 0.0));
            prop_assert_eq!(p.numerator().len(), l + 1);
            prop_assert_eq!(p.denominator().len(), m + 1);
            prop_assert!(report.residual >= 0.0);
            prop_assert!(p.numerator().iter().chain(p.denominator()).all(|z| z.re.is_finite() && z.im.is_finite()));
        }
    }
}
