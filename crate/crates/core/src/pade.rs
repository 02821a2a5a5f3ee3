//! Generalized Padé approximants on the Legendre basis.
//!
//! Given `c_0..c_N`, find `a_0..a_L` and `b_0..b_M` (`b_0 = 1`, `L + M ≤ N`)
//! such that the Legendre expansion of
//!
//! ```text
//! (Σ_{m=0}^{N} c_m P_m) (Σ_{l=0}^{M} b_l P_l)
//! ```
//!
//! has coefficient `a_n` at orders `n ≤ L` and vanishes at orders
//! `L+1..=L+M`. The approximant is then `Σ a_n P_n / Σ b_m P_m`.
//!
//! Products of Legendre polynomials reduce through the squared 3j symbol:
//! the order-`n` coefficient of `P_l P_m` is `(2n+1) (l m n; 0 0 0)²`.
//! The `M` vanishing conditions form a dense linear system in `b_1..b_M`,
//! solved by LU with partial pivoting.
//!
//! Every supplied coefficient enters the products. With exactly `N = L + M`
//! the system is the classic one over `c_0..c_{L+M}`; supplying more terms
//! (up to `L + 2M`) makes the vanishing conditions exact for the full series.

use crate::error::{Error, Result};
use crate::linalg::{condition_estimate, lu_factor, ComplexMatrix};
use crate::series::{check_theta, ComplexSeries};
use crate::special_fn::{legendre_eval_all, ThreeJTable};
use num_complex::Complex64;

/// Relative threshold on `|Q(θ)| / Σ|b_m|` below which evaluation reports a
/// pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// Enforced-zero residual limit, relative to `max |c_l|`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Rational function `Σ_{n≤L} a_n P_n(cos θ) / Σ_{m≤M} b_m P_m(cos θ)` with
/// `b_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PadeApproximant {
    numerator: Vec<Complex64>,
    denominator: Vec<Complex64>,
}

/// Numerical health of one construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructionReport {
    /// `‖A‖₁ ‖A⁻¹‖₁` of the denominator system (1 when `M = 0`).
    pub condition_estimate: f64,
    /// Largest modulus among the product coefficients at orders
    /// `L+1..=L+M`, recomputed after the solve.
    pub residual: f64,
}

impl PadeApproximant {
    /// Builds an approximant from explicit coefficients. `denominator[0]`
    /// must be exactly 1.
    pub fn from_parts(numerator: Vec<Complex64>, denominator: Vec<Complex64>) -> Result<Self> {
        if numerator.is_empty() || denominator.is_empty() {
            return Err(Error::InvalidParams(
                "numerator and denominator need at least one coefficient".into(),
            ));
        }
        if denominator[0] != Complex64::new(1.0, 0.0) {
            return Err(Error::InvalidParams(format!("b_0 must be 1, got {}", denominator[0])));
        }
        let finite = |z: &Complex64| z.re.is_finite() && z.im.is_finite();
        if !numerator.iter().chain(&denominator).all(finite) {
            return Err(Error::InvalidParams("approximant coefficients must be finite".into()));
        }
        Ok(PadeApproximant { numerator, denominator })
    }

    pub fn numerator(&self) -> &[Complex64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Complex64] {
        &self.denominator
    }

    /// Numerator degree `L`.
    pub fn l(&self) -> usize {
        self.numerator.len() - 1
    }

    /// Denominator degree `M`.
    pub fn m(&self) -> usize {
        self.denominator.len() - 1
    }

    pub fn eval(&self, theta: f64) -> Result<Complex64> {
        eval(self, theta)
    }

    /// Numerator and denominator values at `θ`, without the pole check.
    pub fn parts_at(&self, theta: f64) -> Result<(Complex64, Complex64)> {
        check_theta(theta)?;
        let p = legendre_eval_all(self.l().max(self.m()), theta.cos())?;
        let num = self.numerator.iter().zip(&p).map(|(a, &pn)| a * pn).sum();
        let den = self.denominator.iter().zip(&p).map(|(b, &pm)| b * pm).sum();
        Ok((num, den))
    }
}

/// Default `(L, M)` for a series of order `N`: `L = M = N/2` for even `N`,
/// `L = (N+1)/2`, `M = (N-1)/2` for odd `N`.
pub fn default_split(order: usize) -> (usize, usize) {
    (order.div_ceil(2), order / 2)
}

/// Linear system `A b' = rhs` for `b' = (b_1, ..., b_M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenominatorSystem {
    pub matrix: ComplexMatrix,
    pub rhs: Vec<Complex64>,
}

fn check_sizes(series: &ComplexSeries, l: usize, m: usize) -> Result<()> {
    if series.len() < l + m + 1 {
        return Err(Error::InsufficientCoefficients {
            needed: l + m + 1,
            got: series.len(),
        });
    }
    Ok(())
}

fn table_for(series: &ComplexSeries, l: usize, m: usize) -> ThreeJTable {
    ThreeJTable::new(m, series.order(), l + m)
}

fn system_with_table(series: &ComplexSeries, l: usize, m: usize, table: &ThreeJTable) -> DenominatorSystem {
    let c = series.coefficients();
    let contract =
        |k: usize, n: usize| -> Complex64 { c.iter().enumerate().map(|(idx, cm)| cm * table.get(k, idx, n)).sum() };
    let mut matrix = ComplexMatrix::zeros(m);
    let mut rhs = Vec::with_capacity(m);
    for j in 1..=m {
        let n = l + j;
        for k in 1..=m {
            matrix[(j - 1, k - 1)] = contract(k, n);
        }
        rhs.push(-contract(0, n));
    }
    DenominatorSystem { matrix, rhs }
}

/// Row `j` (order `n = L + j`), column `k`:
/// `A[j-1][k-1] = Σ_m c_m (k m n; 0 0 0)²`, `rhs[j-1] = -Σ_m c_m (0 m n; 0 0 0)²`.
pub fn build_denominator_system(series: &ComplexSeries, l: usize, m: usize) -> Result<DenominatorSystem> {
    check_sizes(series, l, m)?;
    Ok(system_with_table(series, l, m, &table_for(series, l, m)))
}

fn solve_with_table(series: &ComplexSeries, l: usize, m: usize, table: &ThreeJTable) -> Result<(Vec<Complex64>, f64)> {
    let mut b = vec![Complex64::new(1.0, 0.0)];
    if m == 0 {
        return Ok((b, 1.0));
    }
    let system = system_with_table(series, l, m, table);
    let cond = condition_estimate(&system.matrix);
    let factors = lu_factor(&system.matrix).ok_or(Error::SingularSystem {
        condition_estimate: cond,
    })?;
    b.extend(factors.solve(&system.rhs));
    if !b.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::SingularSystem {
            condition_estimate: cond,
        });
    }
    Ok((b, cond))
}

/// Denominator `b_0..b_M` with `b_0 = 1`.
pub fn solve_denominator(series: &ComplexSeries, l: usize, m: usize) -> Result<Vec<Complex64>> {
    check_sizes(series, l, m)?;
    solve_with_table(series, l, m, &table_for(series, l, m)).map(|(b, _)| b)
}

/// Legendre coefficient of order `n` of `(Σ c P)(Σ b P)`:
/// `(2n+1) Σ_l Σ_m b_l c_m (l m n; 0 0 0)²`.
fn product_coefficient(series: &ComplexSeries, b: &[Complex64], n: usize, table: &ThreeJTable) -> Complex64 {
    let c = series.coefficients();
    let mut acc = Complex64::new(0.0, 0.0);
    for (lb, bl) in b.iter().enumerate() {
        for (mc, cm) in c.iter().enumerate() {
            let t = table.get(lb, mc, n);
            if t != 0.0 {
                acc += bl * cm * t;
            }
        }
    }
    acc * (2 * n + 1) as f64
}

/// Legendre coefficients `0..=max_order` of the product of `series` with the
/// denominator polynomial `b`.
pub fn product_coefficients(series: &ComplexSeries, b: &[Complex64], max_order: usize) -> Vec<Complex64> {
    let table = ThreeJTable::new(b.len().saturating_sub(1), series.order(), max_order);
    (0..=max_order)
        .map(|n| product_coefficient(series, b, n, &table))
        .collect()
}

/// Numerator `a_n = (2n+1) Σ_l Σ_m b_l c_m (l m n; 0 0 0)²`, `0 ≤ n ≤ L`.
pub fn compute_numerator(series: &ComplexSeries, b: &[Complex64], l: usize, m: usize) -> Result<Vec<Complex64>> {
    check_sizes(series, l, m)?;
    if b.len() != m + 1 {
        return Err(Error::InvalidParams(format!(
            "denominator has {} coefficients, expected M + 1 = {}",
            b.len(),
            m + 1
        )));
    }
    let table = table_for(series, l, m);
    Ok((0..=l).map(|n| product_coefficient(series, b, n, &table)).collect())
}

/// Builds the `[L/M]` approximant of `series`.
pub fn construct(series: &ComplexSeries, l: usize, m: usize) -> Result<(PadeApproximant, ConstructionReport)> {
    check_sizes(series, l, m)?;
    let table = table_for(series, l, m);
    let (b, cond) = solve_with_table(series, l, m, &table)?;
    let a: Vec<Complex64> = (0..=l).map(|n| product_coefficient(series, &b, n, &table)).collect();
    let residual = ((l + 1)..=(l + m))
        .map(|n| product_coefficient(series, &b, n, &table).norm())
        .fold(0.0, f64::max);
    let limit = RESIDUAL_TOLERANCE * series.max_abs();
    if !(residual <= limit) {
        return Err(Error::ResidualTooLarge {
            residual,
            limit,
            condition_estimate: cond,
        });
    }
    let approximant = PadeApproximant::from_parts(a, b)?;
    Ok((
        approximant,
        ConstructionReport {
            condition_estimate: cond,
            residual,
        },
    ))
}

/// `Σ a_n P_n(cos θ) / Σ b_m P_m(cos θ)`. A denominator smaller than
/// `1e-12 · Σ|b_m|` is reported as a pole.
pub fn eval(p: &PadeApproximant, theta: f64) -> Result<Complex64> {
    let (num, den) = p.parts_at(theta)?;
    let scale: f64 = p.denominator.iter().map(|b| b.norm()).sum();
    if !(den.norm() >= POLE_TOLERANCE * scale) {
        return Err(Error::PadePole {
            theta,
            magnitude: den.norm(),
        });
    }
    Ok(num / den)
}
