//! Run the full identity catalog and print a status table.
//!
//! Run with: cargo run --release --example verify_catalog

use mlab::verify::{list_identities, run_all, Status};

fn main() {
    let start = std::time::Instant::now();
    let reports = run_all(None, 4);
    let controls: std::collections::HashSet<_> = list_identities(None)
        .into_iter()
        .filter(|r| r.control)
        .map(|r| r.id)
        .collect();
    let mut pass = 0;
    let mut expected_fail = 0;
    for r in &reports {
        let label = match r.status {
            Status::Pass => {
                pass += 1;
                "pass "
            }
            _ if controls.contains(&r.id) => {
                expected_fail += 1;
                "ctrl "
            }
            Status::Fail => "FAIL ",
            Status::Error => "ERROR",
        };
        println!(
            "{label} {:28} |lhs-rhs| = {:10.3e}  tol = {:8.1e}",
            r.id, r.abs_diff, r.tolerance
        );
    }
    println!(
        "\n{pass} pass, {expected_fail} controls failing as designed, {} other, {:.1} s",
        reports.len() - pass - expected_fail,
        start.elapsed().as_secs_f64()
    );
}
