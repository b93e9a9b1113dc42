//! Summation by cubes against the eta-product Mellin integral, and the
//! F(5,9) reduction to F(1,1) and F(1,5).
//!
//! Run with: cargo run --release --example lattice_sums

use mlab::lvalues::{f_cube, f_integral, LatticeSumSpec};

fn main() -> mlab::Result<()> {
    let spec = LatticeSumSpec::from_ints(2, 3)?;
    let integral = f_integral(&spec)?;
    println!("F(2,3) by the Mellin integral: {integral:.12}");
    println!("partial sums over expanding cubes:");
    for n in [0u32, 5, 10, 20, 40] {
        let cube = f_cube(&spec, n);
        println!("  N = {n:3}: {cube:.10}   gap {:+.3e}", cube - integral);
    }

    println!();
    let f59 = f_integral(&LatticeSumSpec::from_ints(5, 9)?)?;
    let f11 = f_integral(&LatticeSumSpec::from_ints(1, 1)?)?;
    let f15 = f_integral(&LatticeSumSpec::from_ints(1, 5)?)?;
    println!("9 F(5,9)            = {:.12}", 9.0 * f59);
    println!("45 F(1,1) - 50 F(1,5) = {:.12}", 45.0 * f11 - 50.0 * f15);
    Ok(())
}
