//! Special functions used by the series, the approximant and the scattering
//! examples. Everything here is a pure function of its arguments.

mod bessel;
mod gamma;
mod legendre;
mod threej;

pub use bessel::{spherical_bessel_j, spherical_bessel_j_all};
pub use gamma::log_gamma_complex;
pub use legendre::{legendre_eval, legendre_eval_all};
pub use threej::{threej_zero_sq, triple_product_integral, ThreeJKey, ThreeJTable};
