//! L(E, 2) for conductors 20, 24, 27, 36 with the intermediate integrals
//! H, G, S and the elementary closed forms that reduce them.
//!
//! Run with: cargo run --release --example lvalue_integrals

use mlab::lvalues::{
    elementary_e20, g_eval, h_eval, l_elliptic, s_eval, GMethod, HMethod, SMethod,
};

fn main() -> mlab::Result<()> {
    for conductor in [20u32, 24, 27, 36] {
        println!("L(E{conductor}, 2) = {:.12}", l_elliptic(conductor)?);
    }

    println!();
    println!("conductor 27 through H(1):");
    println!(
        "  -H(1)/9 by the definition  = {:.12}",
        -h_eval(1.0, HMethod::Definition)? / 9.0
    );
    println!(
        "  -H(1)/9 by the reduction   = {:.12}",
        -h_eval(1.0, HMethod::Reduced)? / 9.0
    );
    println!(
        "  -H(1)/9 elementary         = {:.12}",
        -h_eval(1.0, HMethod::Elementary)? / 9.0
    );

    println!();
    println!("conductor 24 through G(1):");
    println!(
        "  -G(1)/4 by the definition  = {:.12}",
        -g_eval(1.0, GMethod::Definition)? / 4.0
    );
    println!(
        "  -G(1)/4 by the reduction   = {:.12}",
        -g_eval(1.0, GMethod::RealReduced)? / 4.0
    );
    println!(
        "  -G(1)/4 elementary         = {:.12}",
        -g_eval(1.0, GMethod::ElementaryX1)? / 4.0
    );

    println!();
    println!("conductor 20 through S and the elementary integral:");
    let s1 = s_eval(1.0, SMethod::Definition)?;
    let s5 = s_eval(5.0, SMethod::Definition)?;
    println!("  (S(5) - S(1))/4            = {:.12}", (s5 - s1) / 4.0);
    println!("  elementary t-integral      = {:.12}", elementary_e20()?);

    println!();
    let g_half = g_eval(0.5, GMethod::Definition)?;
    let closed = -std::f64::consts::PI.powi(2) * 2.0f64.ln() / 3.0;
    println!("G(1/2) = {g_half:.12}   (-pi^2 log2 / 3 = {closed:.12})");
    Ok(())
}
