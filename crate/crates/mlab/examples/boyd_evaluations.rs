//! The two headline lattice-sum evaluations: the conductor-24 and
//! conductor-20 Mahler measure identities, each checked three ways.
//!
//! Run with: cargo run --release --example boyd_evaluations

use std::f64::consts::PI;

use mlab::lvalues::{f_integral, LatticeSumSpec};
use mlab::mahler::{g_via_j, mahler_direct, mahler_hyper_m, n_value, Family};

fn main() -> mlab::Result<()> {
    println!("conductor 24:  m(8) = 4 m(2) = (24/pi^2) F(2,3)");
    let m8 = mahler_hyper_m(8.0)?;
    let m2 = mahler_hyper_m(2.0)?;
    let f23 = f_integral(&LatticeSumSpec::from_ints(2, 3)?)?;
    println!("  m(8)              = {m8:.15}");
    println!("  4 m(2)            = {:.15}", 4.0 * m2);
    println!("  (24/pi^2) F(2,3)  = {:.15}", 24.0 / (PI * PI) * f23);

    println!();
    println!("conductor 20:  g(4) = (3/4) n(32^(1/3)) = (10/pi^2) F(1,5)");
    let g4 = g_via_j(4.0)?;
    let g4_direct = mahler_direct(Family::G, 4.0)?;
    let n32 = n_value(32.0f64.powf(1.0 / 3.0))?;
    let f15 = f_integral(&LatticeSumSpec::from_ints(1, 5)?)?;
    println!("  g(4) via J        = {g4:.15}");
    println!("  g(4) via Jensen   = {g4_direct:.15}");
    println!("  (3/4) n(32^(1/3)) = {:.15}", 0.75 * n32);
    println!("  (10/pi^2) F(1,5)  = {:.15}", 10.0 / (PI * PI) * f15);
    Ok(())
}
