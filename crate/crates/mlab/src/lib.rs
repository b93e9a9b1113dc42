//! mlab: a numerical laboratory for Mahler measures, quadruple lattice sums
//! and L-values of elliptic curves of conductors 20, 24, 27 and 36.
//!
//! The crate exposes each layer as an independently testable module:
//!
//! - [`numerics`] — tanh-sinh / exp-sinh quadrature, low-degree polynomial
//!   roots, Richardson central differences;
//! - [`hypergeo`] — Gamma/digamma and generalized hypergeometric series,
//!   including the logarithmic Gauss case at the unit argument;
//! - [`qseries`] — exact truncated q-expansions on fractional-exponent
//!   lattices, an eta-quotient expression language with exact identity
//!   checking, and numeric evaluation at real or complex nome;
//! - [`elliptic`] — complete elliptic integrals, Jacobi elliptic functions,
//!   the Weierstrass P-function and the doubly periodic parameterization of
//!   the curve y^2 = 4x((1-k)^2 - x(1-kx)^2);
//! - [`mahler`] — the three polynomial-family Mahler measures by direct
//!   Jensen quadrature and by hypergeometric closed forms;
//! - [`lvalues`] — the lattice sum F(b,c), eta-product Mellin integrals for
//!   L(E,2), and the intermediate integrals H, G, S, J, F1, F2;
//! - [`verify`] — a registry of named numeric and exact-series identities
//!   with uniform execution and reporting.
//!
//! The `mlab` binary drives computation, verification and series dumps from
//! the command line; the `examples/` directory contains one runnable program
//! per capability.

pub mod elliptic;
pub mod error;
pub mod hypergeo;
pub mod lvalues;
pub mod mahler;
pub mod numerics;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
