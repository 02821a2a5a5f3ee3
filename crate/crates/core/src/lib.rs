//! Generalized Padé approximants on the Legendre-polynomial basis.
//!
//! A truncated partial-wave series `Σ c_l P_l(cos θ)` oscillates around the
//! function it approximates, most visibly near `θ = π`, and adding terms does
//! not remove the oscillation. Replacing the partial sum by a ratio of two
//! Legendre-basis polynomials whose product with the denominator matches the
//! series removes it.
//!
//! Modules:
//!
//! * [`special_fn`]: Legendre polynomials, exact squared 3j symbols with zero
//!   projections, complex log-gamma and spherical Bessel functions.
//! * [`series`]: truncated Legendre series and their partial sums.
//! * [`pade`]: construction and evaluation of the approximant.
//! * [`scattering`]: series generators and closed-form amplitudes for the unit
//!   series, Coulomb scattering, Born scattering off `α/r²`, and scalar
//!   scattering in Reissner–Nordström spacetime.
//! * [`quadrature`]: Gauss–Legendre rules and adaptive Gauss–Kronrod
//!   integration used by the above.

// NaN must fail validation checks, hence `!(x < y)` rather than `x >= y`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod linalg;
pub mod pade;
pub mod quadrature;
pub mod scattering;
pub mod series;
pub mod special_fn;

pub use error::{Error, Result};
pub use pade::{ConstructionReport, PadeApproximant};
pub use series::ComplexSeries;

pub use num_complex::Complex64;
