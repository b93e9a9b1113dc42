//! Generalized hypergeometric evaluation, including the slowly convergent
//! unit-argument cases and the logarithmic Gauss series near z = 1.
//!
//! Run with: cargo run --release --example hypergeometric

use mlab::hypergeo::{gamma_fn, hyp2f1_13_23_1, pfq_eval};

fn main() -> mlab::Result<()> {
    // Gauss summation as a sanity anchor:
    // 2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))
    let (a, b, c) = (0.25, 0.5, 2.0);
    let series = pfq_eval(&[a, b], &[c], 1.0)?;
    let gamma = gamma_fn(c)? * gamma_fn(c - a - b)? / (gamma_fn(c - a)? * gamma_fn(c - b)?);
    println!("2F1({a},{b};{c};1): series = {series:.13}, Gamma form = {gamma:.13}");

    // the conductor-27 pair of 3F2 values at the unit argument
    let f1 = pfq_eval(&[1.0 / 3.0, 1.0 / 3.0, 1.0], &[2.0 / 3.0, 4.0 / 3.0], 1.0)?;
    let f2 = pfq_eval(&[2.0 / 3.0, 2.0 / 3.0, 1.0], &[4.0 / 3.0, 5.0 / 3.0], 1.0)?;
    println!("3F2(1/3,1/3,1; 2/3,4/3; 1) = {f1:.13}");
    println!("3F2(2/3,2/3,1; 4/3,5/3; 1) = {f2:.13}");

    // the logarithmic Gauss series walking into its z = 1 singularity
    println!("\n2F1(1/3,2/3;1;z) near the logarithmic point:");
    for k in 2..=8 {
        let z = 1.0 - 10f64.powi(-k);
        println!("  z = 1 - 1e-{k}: {:.12}", hyp2f1_13_23_1(z)?);
    }
    Ok(())
}
