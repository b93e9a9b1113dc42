//! Exact q-series arithmetic: modular equations checked coefficient by
//! coefficient in rational arithmetic, plus a small expansion dump.
//!
//! Run with: cargo run --release --example qseries_identities

use num_rational::Rational64;

use mlab::qseries::{parse_expr, series_equal, series_of};

fn main() -> mlab::Result<()> {
    let order = Rational64::new(120, 1);
    let checks = [
        ("3*eta(q^6)^4", "b(q^4)*c(q^3) - b(q)*c(q^12)"),
        (
            "9*eta(q)*eta(q^3)*eta(q^7)*eta(q^21)",
            "b(q^7)*c(q) + b(q)*c(q^7) - b(q)*c(q) - 7*b(q^7)*c(q^7)",
        ),
        (
            "9*eta(q^2)*eta(q^3)*eta(q^14)*eta(q^21)",
            "b(q)*c(q^14) + b(q^7)*c(q^2) - b(q)*c(q^2) - 7*b(q^7)*c(q^14)",
        ),
        ("phi(q)", "eta(q^2)^5 / (eta(q)^2 * eta(q^4)^2)"),
        ("qpow(1/2)*psi(q)*psi(q^3)", "qpow(1/2)*psi(q)*psi(q^3)"),
        ("b(q)", "(3*a(q^3) - a(q)) * 1/2"),
    ];
    for (lhs, rhs) in checks {
        let ok = series_equal(&parse_expr(lhs)?, &parse_expr(rhs)?, order)?;
        println!(
            "[{}] {lhs} = {rhs}",
            if ok { "exact to O(q^120)" } else { "MISMATCH" }
        );
    }

    println!();
    println!("expansion of b(q)*c(q^3) (the chi_-3 Eisenstein kernel), first terms:");
    let series = series_of(&parse_expr("b(q)*c(q^3)")?, Rational64::new(12, 1))?;
    print!("{series}");
    Ok(())
}
