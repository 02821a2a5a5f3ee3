//! Dense complex LU factorization with partial pivoting, sized for the small
//! (`M × M`, `M` at most a few dozen) denominator systems.

use num_complex::Complex64;

/// Square row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        ComplexMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> f64 {
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self[(r, c)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self[(r, c)] * v[c]).sum())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.n + c]
    }
}

/// `P A = L U` with unit-diagonal `L` stored below the diagonal.
#[derive(Debug, Clone)]
pub struct LuFactors {
    lu: ComplexMatrix,
    perm: Vec<usize>,
}

/// Smallest pivot magnitude, relative to `max |A|`, accepted as nonsingular.
pub const PIVOT_TOLERANCE: f64 = 1e-14;

/// Factorizes `a`; returns `None` when a pivot falls below
/// `PIVOT_TOLERANCE · max|A|` (or the matrix is all zeros).
pub fn lu_factor(a: &ComplexMatrix) -> Option<LuFactors> {
    let n = a.dim();
    let scale = a.max_abs();
    if n > 0 && !(scale > 0.0 && scale.is_finite()) {
        return None;
    }
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let (p, pmag) = (k..n)
            .map(|r| (r, lu[(r, k)].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("non-empty column");
        if pmag < PIVOT_TOLERANCE * scale {
            return None;
        }
        if p != k {
            for c in 0..n {
                let tmp = lu[(k, c)];
                lu[(k, c)] = lu[(p, c)];
                lu[(p, c)] = tmp;
            }
            perm.swap(k, p);
        }
        let pivot = lu[(k, k)];
        for r in (k + 1)..n {
            let factor = lu[(r, k)] / pivot;
            lu[(r, k)] = factor;
            for c in (k + 1)..n {
                let u = lu[(k, c)];
                lu[(r, c)] -= factor * u;
            }
        }
    }
    Some(LuFactors { lu, perm })
}

impl LuFactors {
    pub fn solve(&self, rhs: &[Complex64]) -> Vec<Complex64> {
        let n = self.lu.dim();
        assert_eq!(rhs.len(), n);
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| rhs[p]).collect();
        for r in 0..n {
            for c in 0..r {
                let l = self.lu[(r, c)];
                let yc = y[c];
                y[r] -= l * yc;
            }
        }
        for r in (0..n).rev() {
            for c in (r + 1)..n {
                let u = self.lu[(r, c)];
                let yc = y[c];
                y[r] -= u * yc;
            }
            y[r] /= self.lu[(r, r)];
        }
        y
    }

    pub fn inverse(&self) -> ComplexMatrix {
        let n = self.lu.dim();
        let mut inv = ComplexMatrix::zeros(n);
        let mut e = vec![Complex64::new(0.0, 0.0); n];
        for c in 0..n {
            e.iter_mut().for_each(|z| *z = Complex64::new(0.0, 0.0));
            e[c] = Complex64::new(1.0, 0.0);
            for (r, v) in self.solve(&e).into_iter().enumerate() {
                inv[(r, c)] = v;
            }
        }
        inv
    }
}

/// `‖A‖₁ ‖A⁻¹‖₁`, or infinity for a singular matrix.
pub fn condition_estimate(a: &ComplexMatrix) -> f64 {
    if a.dim() == 0 {
        return 1.0;
    }
    match lu_factor(a) {
        Some(f) => a.norm1() * f.inverse().norm1(),
        None => f64::INFINITY,
    }
}
