//! Quadrature, root finding and differentiation primitives.
//!
//! Everything here is a pure function of its inputs and safe to call from
//! any number of threads.

mod diff;
mod quadrature;
mod roots;

pub use diff::central_diff;
pub use quadrature::{
    integrate_expsinh, integrate_finite, integrate_finite_sing, integrate_gauss, integrate_semiinf,
    QuadResult,
};
pub use roots::poly_roots;
