//! Squared Wigner 3j symbols with all projections zero, in exact rationals.
//!
//! For `J = l + m + n` even, `g = J/2`, and `(l, m, n)` satisfying the
//! triangle inequality,
//!
//! ```text
//! (l m n; 0 0 0)² = (J-2l)! (J-2m)! (J-2n)! / (J+1)!
//!                   · [ g! / ((g-l)! (g-m)! (g-n)!) ]²
//! ```
//!
//! and zero otherwise. The triple Legendre integral is twice this value.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Unordered triple of angular momenta. Construction sorts the entries, so
/// every permutation of `(l, m, n)` produces the same key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeJKey {
    l: u32,
    m: u32,
    n: u32,
}

impl ThreeJKey {
    pub fn new(l: u32, m: u32, n: u32) -> Self {
        let mut v = [l, m, n];
        v.sort_unstable();
        ThreeJKey {
            l: v[0],
            m: v[1],
            n: v[2],
        }
    }

    pub fn parts(&self) -> (u32, u32, u32) {
        (self.l, self.m, self.n)
    }

    /// Parity and triangle selection rules.
    pub fn is_allowed(&self) -> bool {
        // sorted: l <= m <= n, so the triangle inequality reduces to n <= l + m
        (self.l + self.m + self.n).is_multiple_of(2) && self.n <= self.l + self.m
    }

    pub fn value(&self) -> BigRational {
        if !self.is_allowed() {
            return BigRational::zero();
        }
        let (l, m, n) = (self.l as u64, self.m as u64, self.n as u64);
        let j = l + m + n;
        let g = j / 2;
        let num = factorial(j - 2 * l) * factorial(j - 2 * m) * factorial(j - 2 * n);
        let den = factorial(j + 1);
        let ratio = factorial(g) / (factorial(g - l) * factorial(g - m) * factorial(g - n));
        let ratio_sq = &ratio * &ratio;
        BigRational::new(BigInt::from(num * ratio_sq), BigInt::from(den))
    }
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(l m n; 0 0 0)²` as a reduced exact rational.
pub fn threej_zero_sq(l: u32, m: u32, n: u32) -> BigRational {
    ThreeJKey::new(l, m, n).value()
}

/// `∫₋₁¹ P_l(x) P_m(x) P_n(x) dx = 2 (l m n; 0 0 0)²`.
pub fn triple_product_integral(l: u32, m: u32, n: u32) -> BigRational {
    threej_zero_sq(l, m, n) * BigRational::from_integer(BigInt::from(2))
}

/// Dense table of `(l m n; 0 0 0)²` converted to `f64` once, for
/// `l ≤ l_max`, `m ≤ m_max`, `n ≤ n_max`.
#[derive(Debug, Clone)]
pub struct ThreeJTable {
    dims: [usize; 3],
    values: Vec<f64>,
}

impl ThreeJTable {
    pub fn new(l_max: usize, m_max: usize, n_max: usize) -> Self {
        let dims = [l_max + 1, m_max + 1, n_max + 1];
        let mut values = vec![0.0; dims[0] * dims[1] * dims[2]];
        let mut cache = std::collections::HashMap::new();
        for l in 0..dims[0] {
            for m in 0..dims[1] {
                for n in 0..dims[2] {
                    let key = ThreeJKey::new(l as u32, m as u32, n as u32);
                    if !key.is_allowed() {
                        continue;
                    }
                    let v = *cache
                        .entry(key)
                        .or_insert_with(|| key.value().to_f64().unwrap_or(f64::NAN));
                    values[(l * dims[1] + m) * dims[2] + n] = v;
                }
            }
        }
        ThreeJTable { dims, values }
    }

    #[inline]
    pub fn get(&self, l: usize, m: usize, n: usize) -> f64 {
        debug_assert!(l < self.dims[0] && m < self.dims[1] && n < self.dims[2]);
        self.values[(l * self.dims[1] + m) * self.dims[2] + n]
    }
}
