//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::f64::consts::PI;
use std::time::Instant;

use mlab::elliptic::{
    fourier_cn2dn2, h_alpha, jacobi, modulus_params, sig3_nome, w_curve, w_curve_derivative,
    w_fourier, w_periods,
};
use mlab::hypergeo::{gamma_fn, hyp2f1_13_23_1, pfq_eval};
use mlab::lvalues::{f1_f2, f_cube, f_integral, g_eval, j_y, l_elliptic, GMethod, LatticeSumSpec};
use mlab::mahler::{g_via_j, mahler_direct, mahler_hyper_m, Family};
use mlab::numerics::central_diff;
use mlab::qseries::a_real;
use mlab::verify::{run_all, Status};

struct Criterion {
    label: &'static str,
    ok: bool,
    detail: String,
}

impl Criterion {
    fn new(label: &'static str) -> Self {
        Criterion {
            label,
            ok: true,
            detail: String::new(),
        }
    }

    fn check(&mut self, name: &str, diff: f64, tol: f64) {
        let good = diff.is_finite() && diff <= tol;
        if !good {
            self.ok = false;
        }
        self.detail.push_str(&format!(
            "\n    {name}: |diff| = {diff:.3e} (tol {tol:.1e})"
        ));
    }

    fn finish(self) {
        println!(
            "acceptance {}: {}{}",
            self.label,
            if self.ok { "PASS" } else { "FAIL" },
            self.detail
        );
        assert!(self.ok, "criterion failed: {}{}", self.label, self.detail);
    }
}

fn ints(b: i64, c: i64) -> LatticeSumSpec {
    LatticeSumSpec::from_ints(b, c).unwrap()
}

#[test]
fn acceptance_01_boyd_conductor_24() {
    let start = Instant::now();
    let mut c = Criterion::new("01 boyd conductor 24");
    let f23 = f_integral(&ints(2, 3)).unwrap();
    let m8 = mahler_hyper_m(8.0).unwrap();
    let m2 = mahler_hyper_m(2.0).unwrap();
    c.check(
        "(24/pi^2) F(2,3) = m(8)",
        (24.0 / (PI * PI) * f23 - m8).abs(),
        1e-8,
    );
    c.check("m(8) = 4 m(2)", (m8 - 4.0 * m2).abs(), 1e-8);
    c.check("runtime <= 10 s", start.elapsed().as_secs_f64(), 10.0);
    c.finish();
}

#[test]
fn acceptance_02_boyd_conductor_20() {
    let start = Instant::now();
    let mut c = Criterion::new("02 boyd conductor 20");
    let f15 = f_integral(&ints(1, 5)).unwrap();
    let g4 = g_via_j(4.0).unwrap();
    let n32 = mahler_direct(Family::N, 2.0f64.powf(5.0 / 3.0)).unwrap();
    c.check(
        "(10/pi^2) F(1,5) = g(4)",
        (10.0 / (PI * PI) * f15 - g4).abs(),
        1e-8,
    );
    c.check("g(4) = (3/4) n(2^(5/3))", (g4 - 0.75 * n32).abs(), 1e-7);
    c.check("runtime <= 30 s", start.elapsed().as_secs_f64(), 30.0);
    c.finish();
}

#[test]
fn acceptance_03_conductor_27_three_way() {
    let mut c = Criterion::new("03 conductor 27 hypergeometric");
    let l27 = l_elliptic(27).unwrap();
    let g13 = gamma_fn(1.0 / 3.0).unwrap();
    let g23 = gamma_fn(2.0 / 3.0).unwrap();
    let v_3f2 = g13.powi(3) / 27.0
        * pfq_eval(&[1.0 / 3.0, 1.0 / 3.0, 1.0], &[2.0 / 3.0, 4.0 / 3.0], 1.0).unwrap()
        - g23.powi(3) / 18.0
            * pfq_eval(&[2.0 / 3.0, 2.0 / 3.0, 1.0], &[4.0 / 3.0, 5.0 / 3.0], 1.0).unwrap();
    let v_4f3 = 4.0 * PI * PI / 81.0
        * (6.0f64.ln()
            + pfq_eval(&[4.0 / 3.0, 5.0 / 3.0, 1.0, 1.0], &[2.0, 2.0, 2.0], -0.125).unwrap()
                / 108.0);
    c.check("L(E27,2) vs 3F2 pair", (l27 - v_3f2).abs(), 1e-8);
    c.check("L(E27,2) vs 4F3 form", (l27 - v_4f3).abs(), 1e-8);
    c.check("3F2 vs 4F3", (v_3f2 - v_4f3).abs(), 1e-8);
    c.finish();
}

#[test]
fn acceptance_04_conductor_36_three_way() {
    let mut c = Criterion::new("04 conductor 36 hypergeometric");
    let l36 = l_elliptic(36).unwrap();
    let g13 = gamma_fn(1.0 / 3.0).unwrap();
    let g23 = gamma_fn(2.0 / 3.0).unwrap();
    let v_3f2 = -2.0 * PI * PI * 2.0f64.ln() / 27.0
        + g13.powi(3) / (3.0 * 2.0f64.powf(7.0 / 3.0))
            * pfq_eval(
                &[1.0 / 3.0, 1.0 / 3.0, 1.0],
                &[5.0 / 6.0, 4.0 / 3.0],
                -0.125,
            )
            .unwrap()
        + g23.powi(3) / 2.0f64.powf(11.0 / 3.0)
            * pfq_eval(
                &[2.0 / 3.0, 2.0 / 3.0, 1.0],
                &[7.0 / 6.0, 5.0 / 3.0],
                -0.125,
            )
            .unwrap();
    let v_g = 2.0 * PI * PI / 9.0 * g_via_j(2.0).unwrap();
    c.check("L(E36,2) vs 3F2 pair", (l36 - v_3f2).abs(), 1e-8);
    c.check("L(E36,2) vs (2pi^2/9) g(2)", (l36 - v_g).abs(), 1e-8);
    c.check("3F2 vs g(2)", (v_3f2 - v_g).abs(), 1e-8);
    c.finish();
}

#[test]
fn acceptance_05_g_half_closed_form() {
    let mut c = Criterion::new("05 G(1/2) closed form");
    let g = g_eval(0.5, GMethod::Definition).unwrap();
    c.check(
        "G(1/2) = -pi^2 log2 / 3",
        (g + PI * PI * 2.0f64.ln() / 3.0).abs(),
        1e-7,
    );
    c.finish();
}

#[test]
fn acceptance_06_functional_equation() {
    let mut c = Criterion::new("06 g functional equation");
    for p in [0.4f64, 0.7, 1.0] {
        let lhs = mahler_direct(Family::G, 4.0 * p * (1.0 + p)).unwrap()
            + mahler_direct(Family::G, 4.0 * (1.0 + p) / (p * p)).unwrap();
        let rhs = 2.0 * mahler_direct(Family::G, 2.0 * (1.0 + p) * (1.0 + p) / p).unwrap();
        c.check(&format!("p = {p}"), (lhs - rhs).abs(), 1e-7);
    }
    c.finish();
}

#[test]
fn acceptance_07_f1_f2_closed_forms() {
    let mut c = Criterion::new("07 F1/F2 hypergeometric closed forms");
    for lambda in [1.0f64, 2.0, 5.0] {
        let (f1, f2) = f1_f2(lambda).unwrap();
        let z = 1.0 / (lambda * lambda);
        let f3 = pfq_eval(&[0.5, 0.5, 0.5], &[1.5, 1.0], z).unwrap();
        let f4 = pfq_eval(&[1.5, 1.5, 1.0, 1.0], &[2.0, 2.0, 2.0], z).unwrap();
        c.check(
            &format!("difference form, lambda = {lambda}"),
            (f1 - f2 - PI * f3).abs(),
            1e-8,
        );
        let rhs = PI / 2.0 * (4.0 * lambda).ln() + PI / 2.0 * f3 - PI * z / 16.0 * f4;
        c.check(
            &format!("F1 closed form, lambda = {lambda}"),
            (f1 - rhs).abs(),
            1e-8,
        );
    }
    c.finish();
}

#[test]
fn acceptance_08_2f1_kernel() {
    let mut c = Criterion::new("08 2F1(1/3,2/3;1) kernel");
    for y in [2.0f64, 5.0, 7.0] {
        let quad = mlab::numerics::integrate_finite_sing(
            |t, xc| {
                let (n0, n1) = if xc > 0.0 { (xc, 1.0 - t) } else { (t, -xc) };
                let q = 4.0 + (4.0 - y) * y * t + y * y * t * t;
                1.0 / (n0 * n1 * q).sqrt()
            },
            0.0,
            1.0,
            1e-12,
        )
        .unwrap()
        .value
            / (2.0 * PI);
        let hyper = hyp2f1_13_23_1(27.0 * y * y / (y + 4.0).powi(3)).unwrap() / (y + 4.0);
        c.check(
            &format!("integral form, y = {y}"),
            (quad - hyper).abs(),
            1e-9,
        );
    }
    for y in [3.0f64, 5.0, 7.0] {
        let dj = central_diff(|t| j_y(t).unwrap(), y, 1e-3);
        let hyper = hyp2f1_13_23_1(27.0 * y * y / (y + 4.0).powi(3)).unwrap() / (y + 4.0);
        c.check(&format!("dJ/dy, y = {y}"), (dj - hyper).abs(), 1e-6);
    }
    c.finish();
}

#[test]
fn acceptance_09_exact_series_suite() {
    let start = Instant::now();
    let mut c = Criterion::new("09 exact q-series suite");
    let reports = run_all(Some("exact"), 4);
    assert!(reports.len() >= 16, "only {} exact records", reports.len());
    let failures: Vec<_> = reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.id.clone())
        .collect();
    c.check(
        &format!(
            "{} identities coefficient-exact to O(q^120); failing: {failures:?}",
            reports.len()
        ),
        failures.len() as f64,
        0.5,
    );
    c.check("runtime <= 60 s", start.elapsed().as_secs_f64(), 60.0);
    c.finish();
}

#[test]
fn acceptance_10_elliptic_layer() {
    let mut c = Criterion::new("10 elliptic layer");
    let alpha = 0.5;
    let params = modulus_params(alpha).unwrap();
    for frac in [0.3f64, 0.7] {
        let u = frac * params.big_k;
        let (sn, cn, dn) = jacobi(u, alpha).unwrap();
        let lhs = cn * cn * dn * dn / (1.0 - alpha * sn.powi(4));
        let rhs = fourier_cn2dn2(u, &params, 400);
        c.check(
            &format!("Fourier ratio at u = {frac} K"),
            (lhs - rhs).abs(),
            1e-10,
        );
    }
    for a in [0.25f64, 0.5, 0.81] {
        let sa = a.sqrt();
        let kernel = |weight: &dyn Fn(f64, f64) -> f64| -> f64 {
            mlab::numerics::integrate_finite_sing(
                |v, xc| {
                    let omv = if xc < 0.0 { -xc } else { 1.0 - v };
                    let omv2 = omv * (1.0 + v);
                    ((omv2) * (1.0 - a * v * v)).sqrt() / (1.0 - a * v.powi(4)) * weight(v, omv2)
                },
                0.0,
                1.0,
                1e-11,
            )
            .unwrap()
            .value
        };
        let sn_case = -8.0 / PI * kernel(&|v, _| v.ln());
        let sn_rhs =
            mahler_hyper_m(4.0 / sa).unwrap() + mahler_hyper_m(4.0 * sa).unwrap() / sa + sa.ln();
        c.check(
            &format!("log sn moment, alpha = {a}"),
            (sn_case - sn_rhs).abs(),
            1e-7,
        );
        let cn_case = -8.0 / PI * kernel(&|_, omv2| omv2.ln());
        let cn_rhs = 2.0 * mahler_hyper_m(4.0 / sa).unwrap()
            + (a / (1.0 - a)).ln()
            + ((1.0 - sa) / (1.0 + sa)).ln() / sa;
        c.check(
            &format!("log cn moment, alpha = {a}"),
            (cn_case - cn_rhs).abs(),
            1e-7,
        );
        let dn_case = -8.0 / PI * kernel(&|v, _| (1.0 - a * v * v).ln());
        let dn_rhs = 2.0 / sa * mahler_hyper_m(4.0 * sa).unwrap() - (1.0 - a).ln()
            + ((1.0 - sa) / (1.0 + sa)).ln() / sa;
        c.check(
            &format!("log dn moment, alpha = {a}"),
            (dn_case - dn_rhs).abs(),
            1e-7,
        );
    }
    for a in [0.1f64, 0.3, 0.7] {
        c.check(
            &format!("third-kind combination, alpha = {a}"),
            (h_alpha(a).unwrap() - PI / 4.0).abs(),
            1e-9,
        );
    }
    c.finish();
}

#[test]
fn acceptance_11_w_curve_suite() {
    let mut c = Criterion::new("11 w-curve suite at k = 2");
    let k = 2.0f64;
    let params = w_periods(k).unwrap();
    let mut worst = 0.0f64;
    for i in 1..=10 {
        let x = params.period_k * i as f64 / 11.0;
        let w = w_curve(x, k).unwrap();
        let dw = w_curve_derivative(x, k).unwrap();
        let res =
            (dw * dw - 4.0 * w * ((1.0 - k) * (1.0 - k) - w * (1.0 - k * w) * (1.0 - k * w))).abs();
        worst = worst.max(res);
    }
    c.check("ODE residual over 10 points", worst, 1e-6);
    c.check(
        "w(K) = 1",
        (w_curve(params.period_k, k).unwrap() - 1.0).abs(),
        1e-9,
    );
    let x = 0.6 * params.period_k;
    let (wf, _) = w_fourier(x, k, 200).unwrap();
    c.check(
        "Fourier vs Weierstrass route",
        (wf - w_curve(x, k).unwrap()).abs(),
        1e-8,
    );
    let q = sig3_nome(k).unwrap();
    c.check(
        "2K = -pi a(-q)",
        (2.0 * params.period_k + PI * a_real(-q).unwrap()).abs(),
        1e-9,
    );
    c.finish();
}

#[test]
fn acceptance_12_lattice_cross_validation() {
    let mut c = Criterion::new("12 lattice sum cross-validation");
    let spec = ints(2, 3);
    let integral = f_integral(&spec).unwrap();
    let mut gaps = Vec::new();
    for n in [10u32, 20, 40] {
        gaps.push((f_cube(&spec, n) - integral).abs());
    }
    c.check("|cube(40) - integral| <= 1e-2", gaps[2], 1e-2);
    c.check(
        "gap decreasing over N = 10, 20, 40",
        if gaps[0] > gaps[1] && gaps[1] > gaps[2] {
            0.0
        } else {
            1.0
        },
        0.5,
    );
    // 20 pseudo-random rational specs: the single-term sum is exactly 1
    let mut state = 0x5deece66du64;
    let mut exact = true;
    for _ in 0..20 {
        let mut next = |m: i64| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) as i64).rem_euclid(m) + 1
        };
        let spec = LatticeSumSpec::new(
            num_rational::Rational64::new(next(9), next(9)),
            num_rational::Rational64::new(next(9), next(9)),
        )
        .unwrap();
        if f_cube(&spec, 0) != 1.0 {
            exact = false;
        }
    }
    c.check(
        "cube(b,c,0) = 1 exactly",
        if exact { 0.0 } else { 1.0 },
        0.5,
    );
    c.finish();
}

#[test]
fn acceptance_13_f59_relation() {
    let mut c = Criterion::new("13 F(5,9) relation");
    let f11 = f_integral(&ints(1, 1)).unwrap();
    let f15 = f_integral(&ints(1, 5)).unwrap();
    let f59 = (45.0 * f11 - 50.0 * f15) / 9.0;
    let lhs = 18.0 / (5.0 * PI * PI) * f59;
    let rhs = mahler_direct(Family::G, -4.0).unwrap() - 2.0 * g_via_j(4.0).unwrap();
    c.check(
        "(18/5pi^2) F(5,9) = g(-4) - 2 g(4)",
        (lhs - rhs).abs(),
        1e-6,
    );
    c.finish();
}

#[test]
fn acceptance_14_exotic_and_cor00() {
    let mut c = Criterion::new("14 exotic relation and conductor-20 evaluations");
    let croot4 = 4.0f64.powf(1.0 / 3.0);
    let s5 = 5.0f64.sqrt();
    let n_a = mlab::mahler::n_value((7.0 + s5) / croot4).unwrap();
    let n_b = mahler_direct(Family::N, (7.0 - s5) / croot4).unwrap();
    let n_c = mlab::mahler::n_value(32.0f64.powf(1.0 / 3.0)).unwrap();
    c.check(
        "16 n((7+s5)/4^(1/3)) - 8 n((7-s5)/4^(1/3)) = 19 n(32^(1/3))",
        (16.0 * n_a - 8.0 * n_b - 19.0 * n_c).abs(),
        1e-6,
    );
    let l20 = l_elliptic(20).unwrap();
    let n_third = mahler_direct(Family::N, 2.0f64.powf(1.0 / 3.0)).unwrap();
    c.check(
        "n(2^(1/3)) = 25 L(E20,2) / (6 pi^2) with the raw measure",
        (n_third - 25.0 / (6.0 * PI * PI) * l20).abs(),
        1e-6,
    );
    // supporting evidence for the line above: the identity does hold for the
    // hypergeometric branch of n, which splits from the measure inside (0,3)
    let n_tilde = mlab::mahler::n_branch(2.0f64.powf(1.0 / 3.0)).unwrap();
    c.check(
        "branch value n~(2^(1/3)) = 25 L(E20,2) / (6 pi^2)",
        (n_tilde - 25.0 / (6.0 * PI * PI) * l20).abs(),
        1e-6,
    );
    let g_m2 = mahler_direct(Family::G, -2.0).unwrap();
    c.check(
        "g(-2) = 15 L(E20,2) / pi^2",
        (g_m2 - 15.0 / (PI * PI) * l20).abs(),
        1e-6,
    );
    c.finish();
}

#[test]
fn acceptance_15_negative_controls() {
    let mut c = Criterion::new("15 negative controls");
    for id in ["NEGCTRL_PHI_PSI", "NEGCTRL_M8_SCALE"] {
        let report = mlab::verify::run(id).unwrap();
        c.check(
            &format!("{id} reports fail"),
            if report.status == Status::Fail {
                0.0
            } else {
                1.0
            },
            0.5,
        );
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_mlab"))
            .args(["verify", "--id", id])
            .output()
            .expect("binary runs");
        c.check(
            &format!("{id} drives a nonzero exit"),
            if out.status.code() == Some(1) {
                0.0
            } else {
                1.0
            },
            0.5,
        );
    }
    c.finish();
}

#[test]
fn acceptance_16_full_catalog() {
    let start = Instant::now();
    let mut c = Criterion::new("16 full catalog run");
    let reports = run_all(None, 4);
    let controls: std::collections::HashSet<_> = mlab::verify::list_identities(None)
        .into_iter()
        .filter(|r| r.control)
        .map(|r| r.id)
        .collect();
    let failures: Vec<_> = reports
        .iter()
        .filter(|r| r.status != Status::Pass && !controls.contains(&r.id))
        .map(|r| r.id.clone())
        .collect();
    c.check(
        &format!(
            "zero non-control failures over {} records; failing: {failures:?}",
            reports.len()
        ),
        failures.len() as f64,
        0.5,
    );
    c.check("runtime <= 600 s", start.elapsed().as_secs_f64(), 600.0);
    c.finish();
}
