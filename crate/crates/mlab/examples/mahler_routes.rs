//! The three Mahler-measure families by every route: direct Jensen
//! quadrature, hypergeometric closed forms, the J integral on [2,8], and the
//! branch continuation of n inside (0,3) where the raw measure departs from
//! the hypergeometric branch.
//!
//! Run with: cargo run --release --example mahler_routes

use mlab::mahler::{
    f_aux, g_via_j, mahler_direct, mahler_hyper_g, mahler_hyper_m, n_branch, Family,
};

fn main() -> mlab::Result<()> {
    println!("family m at alpha = 2: direct vs 3F2 form");
    println!("  direct = {:.12}", mahler_direct(Family::M, 2.0)?);
    println!("  hyper  = {:.12}", mahler_hyper_m(2.0)?);

    println!();
    println!("family g across its routes:");
    println!("  g(4)  via J integral       = {:.12}", g_via_j(4.0)?);
    println!(
        "  g(4)  via Jensen           = {:.12}",
        mahler_direct(Family::G, 4.0)?
    );
    println!(
        "  g(10) via f-decomposition  = {:.12}",
        mahler_hyper_g(10.0)?
    );
    println!(
        "  g(10) via Jensen           = {:.12}",
        mahler_direct(Family::G, 10.0)?
    );

    println!();
    println!("family n: f(1/64) against the Jensen route at alpha = 4");
    println!("  f(1/64) = {:.12}", f_aux(1.0 / 64.0)?);
    println!("  n(4)    = {:.12}", mahler_direct(Family::N, 4.0)?);

    println!();
    println!("inside (0,3) the polynomial X^3+Y^3+1-aXY meets the torus and the");
    println!("raw measure splits from the hypergeometric branch:");
    let k = 2.0f64.powf(1.0 / 3.0);
    let raw = mahler_direct(Family::N, k)?;
    let branch = n_branch(k)?;
    println!("  n(2^(1/3))  raw measure = {raw:.12}");
    println!("  n~(2^(1/3)) branch      = {branch:.12}");
    println!("  defect                  = {:.12}", raw - branch);
    Ok(())
}
