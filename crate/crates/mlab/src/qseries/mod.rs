//! Exact truncated q-series on fractional-exponent lattices, an eta-quotient
//! expression language, exact identity checking, and numeric evaluation at
//! real or complex nome.

mod characters;
mod expr;
mod fracseries;
mod numeric;

pub use characters::{CharacterTable, CHI_6, CHI_M3, CHI_M4};
pub use expr::{lambert_character, parse_expr, series_equal, series_of, EtaExpr, LambertKind};
pub use fracseries::FracSeries;
pub use numeric::{
    a_c, a_real, b_exp, c_exp, eta_c, eta_exp, euler_product_c, eval_numeric, lambert_eval, phi_c,
    phi_exp, phi_neg_exp, psi_c, psi_exp, psi_neg_exp, LambertVariant,
};
