//! The doubly periodic parameterization w(x) of
//! y^2 = 4x((1-k)^2 - x(1-kx)^2): periods, special values, and the
//! agreement of the Weierstrass and Fourier routes.
//!
//! Run with: cargo run --release --example w_curve

use mlab::elliptic::{sig3_nome, w_curve, w_fourier, w_periods};
use mlab::qseries::a_real;

fn main() -> mlab::Result<()> {
    let k = 2.0;
    let params = w_periods(k)?;
    println!("k = {k}");
    println!("K  = {:.12}", params.period_k);
    println!(
        "K' = {:.12} + {:.12} i",
        params.period_k_prime.re, params.period_k_prime.im
    );

    let q = sig3_nome(k)?;
    println!("signature-3 nome q = {q:.12}");
    println!("2K       = {:.12}", 2.0 * params.period_k);
    println!("-pi a(-q) = {:.12}", -std::f64::consts::PI * a_real(-q)?);

    println!();
    println!("w along the real axis, Weierstrass vs Fourier:");
    for frac in [0.25, 0.5, 0.75, 1.0] {
        let x = frac * params.period_k;
        let wp_route = w_curve(x, k)?;
        let (fourier, logform) = w_fourier(x, k, 200)?;
        println!(
            "  x = {frac:.2} K: w = {wp_route:.12} | {fourier:.12}   log(1+4w) = {logform:.12}"
        );
    }
    println!("(w(K) = 1 and log(1+4w(K)) = log 5 are the quarter-period values.)");
    Ok(())
}
