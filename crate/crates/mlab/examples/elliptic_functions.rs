//! Jacobi elliptic functions, the complete integral of the third kind, and
//! the Fourier expansion of cn^2 dn^2 / (1 - alpha sn^4).
//!
//! Run with: cargo run --release --example elliptic_functions

use mlab::elliptic::{fourier_cn2dn2, h_alpha, jacobi, modulus_params};
use mlab::numerics::integrate_finite_sing;

fn main() -> mlab::Result<()> {
    let alpha = 0.5;
    let params = modulus_params(alpha)?;
    println!(
        "alpha = {alpha}: K = {:.12}, K' = {:.12}, nome = {:.12}",
        params.big_k, params.big_k_prime, params.nome
    );

    println!();
    println!("u/K     sn              cn              dn              ratio vs Fourier");
    for frac in [0.2, 0.5, 0.8] {
        let u = frac * params.big_k;
        let (sn, cn, dn) = jacobi(u, alpha)?;
        let ratio = cn * cn * dn * dn / (1.0 - alpha * sn.powi(4));
        let series = fourier_cn2dn2(u, &params, 400);
        println!(
            "{frac:.2}  {sn:.12}  {cn:.12}  {dn:.12}  {:+.2e}",
            ratio - series
        );
    }

    println!();
    println!(
        "third-kind combination h(alpha) (always pi/4 = {:.12}):",
        std::f64::consts::PI / 4.0
    );
    for a in [0.1, 0.3, 0.7] {
        println!("  h({a}) = {:.12}", h_alpha(a)?);
    }

    println!();
    println!("and the same constant as a plain quadrature:");
    for a in [0.0, 0.3, 0.9] {
        let v = integrate_finite_sing(
            |v, xc| {
                let omv = if xc < 0.0 { -xc } else { 1.0 - v };
                (omv * (1.0 + v) * (1.0 - a * v * v)).sqrt() / (1.0 - a * v.powi(4))
            },
            0.0,
            1.0,
            1e-12,
        )?
        .value;
        println!("  alpha = {a}: {v:.12}");
    }
    Ok(())
}
