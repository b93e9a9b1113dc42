//! Lattice sums F(b,c), eta-product Mellin integrals for L(E,2), and the
//! intermediate integrals H, G, S, J, F1, F2 with their elementary
//! closed-form reductions.
//!
//! Every q-integral over (0,1) is evaluated in the variable u = -log q, so
//! the eta-inversion evaluators keep full accuracy at both ends.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::numerics::{integrate_finite_sing, integrate_semiinf};
use crate::qseries::{c_exp, eta_exp, phi_exp, phi_neg_exp};

/// A quadruple lattice sum specification: positive rationals b, c with
/// derived scales (1, b, c, bc).
#[derive(Clone, Copy, Debug)]
pub struct LatticeSumSpec {
    pub b: Rational64,
    pub c: Rational64,
}

impl LatticeSumSpec {
    pub fn new(b: Rational64, c: Rational64) -> Result<Self> {
        if b <= Rational64::new(0, 1) || c <= Rational64::new(0, 1) {
            return Err(Error::domain(format!(
                "F(b,c) needs b, c > 0, got {b}, {c}"
            )));
        }
        Ok(LatticeSumSpec { b, c })
    }

    pub fn from_ints(b: i64, c: i64) -> Result<Self> {
        Self::new(Rational64::new(b, 1), Rational64::new(c, 1))
    }

    fn scales_f64(&self) -> [f64; 4] {
        let b = *self.b.numer() as f64 / *self.b.denom() as f64;
        let c = *self.c.numer() as f64 / *self.c.denom() as f64;
        [1.0, b, c, b * c]
    }

    /// ((b+1)(c+1))^2
    fn prefactor(&self) -> f64 {
        let b = *self.b.numer() as f64 / *self.b.denom() as f64;
        let c = *self.c.numer() as f64 / *self.c.denom() as f64;
        ((b + 1.0) * (c + 1.0)).powi(2)
    }
}

/// Partial sum of the quadruple lattice sum over the cube max|n_i| <= n,
/// times the prefactor (b+1)^2 (c+1)^2.
///
/// The quadratic form is assembled in exact integer arithmetic (denominators
/// of b and c are scaled out), so the n = 0 term is exactly 1. Slices at
/// fixed n_1 are summed sequentially and then combined pairwise.
pub fn f_cube(spec: &LatticeSumSpec, n: u32) -> f64 {
    f_cube_with_progress(spec, n, &mut |_done, _total| {})
}

/// As [`f_cube`], reporting (slices done, total slices) after each n_1 slice.
pub fn f_cube_with_progress(
    spec: &LatticeSumSpec,
    n: u32,
    progress: &mut dyn FnMut(u64, u64),
) -> f64 {
    let n = n as i64;
    let (pb, qb) = (*spec.b.numer(), *spec.b.denom());
    let (pc, qc) = (*spec.c.numer(), *spec.c.denom());
    // Q * qb * qc = qb qc s1 + pb qc s2 + pc qb s3 + pb pc s4, all integers
    let (w1, w2, w3, w4) = (qb * qc, pb * qc, pc * qb, pb * pc);
    // numerator: ((b+1)(c+1) qb qc)^2 = ((pb+qb)(pc+qc))^2
    let top = (((pb + qb) * (pc + qc)) as f64).powi(2);

    let sq = |i: i64| (6 * i + 1) * (6 * i + 1);
    let total_slices = (2 * n + 1) as u64;
    let mut slices = Vec::with_capacity(total_slices as usize);
    let mut done = 0u64;
    for n1 in -n..=n {
        let t1 = w1 * sq(n1);
        let parity1 = n1 & 1;
        let mut slice = 0.0f64;
        for n2 in -n..=n {
            let t2 = t1 + w2 * sq(n2);
            let parity2 = parity1 ^ (n2 & 1);
            for n3 in -n..=n {
                let t3 = t2 + w3 * sq(n3);
                let parity3 = parity2 ^ (n3 & 1);
                let mut inner = 0.0f64;
                for n4 in -n..=n {
                    let q = (t3 + w4 * sq(n4)) as f64;
                    let term = top / (q * q);
                    if (parity3 ^ (n4 & 1)) == 0 {
                        inner += term;
                    } else {
                        inner -= term;
                    }
                }
                slice += inner;
            }
        }
        slices.push(slice);
        done += 1;
        progress(done, total_slices);
    }
    // pairwise reduction over the n_1 slices
    while slices.len() > 1 {
        let mut next = Vec::with_capacity(slices.len() / 2 + 1);
        for chunk in slices.chunks(2) {
            next.push(chunk.iter().sum());
        }
        slices = next;
    }
    slices[0]
}

/// Fully sequential accumulation; used to check that the pairwise reduction
/// does not change the value beyond rounding.
pub fn f_cube_sequential(spec: &LatticeSumSpec, n: u32) -> f64 {
    let n = n as i64;
    let (pb, qb) = (*spec.b.numer(), *spec.b.denom());
    let (pc, qc) = (*spec.c.numer(), *spec.c.denom());
    let (w1, w2, w3, w4) = (qb * qc, pb * qc, pc * qb, pb * pc);
    let top = (((pb + qb) * (pc + qc)) as f64).powi(2);
    let sq = |i: i64| (6 * i + 1) * (6 * i + 1);
    let mut sum = 0.0f64;
    for n1 in -n..=n {
        for n2 in -n..=n {
            for n3 in -n..=n {
                for n4 in -n..=n {
                    let q = (w1 * sq(n1) + w2 * sq(n2) + w3 * sq(n3) + w4 * sq(n4)) as f64;
                    let sign = if ((n1 ^ n2 ^ n3 ^ n4) & 1) == 0 {
                        1.0
                    } else {
                        -1.0
                    };
                    sum += sign * top / (q * q);
                }
            }
        }
    }
    sum
}

/// F(b,c) as the Mellin integral of the four-eta product:
/// (b+1)^2 (c+1)^2 int_0^inf u eta(e^-24u) eta(e^-24bu) eta(e^-24cu) eta(e^-24bcu) du.
pub fn f_integral(spec: &LatticeSumSpec) -> Result<f64> {
    let scales = spec.scales_f64();
    let r = integrate_semiinf(
        |u| {
            let mut p = u;
            for s in scales {
                p *= eta_exp(24.0 * s * u);
            }
            p
        },
        1e-12,
    )?;
    Ok(spec.prefactor() * r.value)
}

/// Eta products of the four supported conductors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConductorForm {
    pub conductor: u32,
}

impl ConductorForm {
    pub fn new(conductor: u32) -> Result<Self> {
        match conductor {
            20 | 24 | 27 | 36 => Ok(ConductorForm { conductor }),
            _ => Err(Error::domain(format!(
                "unsupported conductor {conductor}; expected 20, 24, 27 or 36"
            ))),
        }
    }

    /// The weight-two form f(e^-u).
    fn eval_exp(&self, u: f64) -> f64 {
        match self.conductor {
            20 => (eta_exp(2.0 * u) * eta_exp(10.0 * u)).powi(2),
            24 => eta_exp(2.0 * u) * eta_exp(4.0 * u) * eta_exp(6.0 * u) * eta_exp(12.0 * u),
            27 => (eta_exp(3.0 * u) * eta_exp(9.0 * u)).powi(2),
            36 => eta_exp(6.0 * u).powi(4),
            _ => unreachable!(),
        }
    }
}

/// L(E, 2) = -int_0^1 f(q) log q dq/q = int_0^inf u f(e^-u) du for the
/// eta product attached to the conductor.
pub fn l_elliptic(conductor: u32) -> Result<f64> {
    let form = ConductorForm::new(conductor)?;
    let r = integrate_semiinf(|u| u * form.eval_exp(u), 1e-12)?;
    Ok(r.value)
}

// --- scaled psi helpers -----------------------------------------------------

/// q^(1/8) psi(q) at q = e^-t, i.e. eta^2(e^-2t)/eta(e^-t).
fn a_psi(t: f64) -> f64 {
    let e2 = eta_exp(2.0 * t);
    e2 * e2 / eta_exp(t)
}

/// q^(1/8) psi(-q) at q = e^-t, i.e. eta(e^-t) eta(e^-4t) / eta(e^-2t).
fn a_psi_neg(t: f64) -> f64 {
    eta_exp(t) * eta_exp(4.0 * t) / eta_exp(2.0 * t)
}

/// q^(1/4) psi^2(q) at q = e^-t; switches to the involution form
/// (pi/2t) phi^2(-e^(-2 pi^2 / t)) for small t.
fn psi2_scaled(t: f64) -> f64 {
    if t < 0.7 {
        let f = phi_neg_exp(2.0 * std::f64::consts::PI * std::f64::consts::PI / t);
        std::f64::consts::PI / (2.0 * t) * f * f
    } else {
        let a = a_psi(t);
        a * a
    }
}

/// q^(1/4) psi^2(q) - 5 q^(5/4) psi^2(q^5) at q = e^-t, by the involution
/// for small t where the direct difference cancels.
fn psi2_comb(t: f64) -> f64 {
    if t < 0.7 {
        let pi2 = 2.0 * std::f64::consts::PI * std::f64::consts::PI;
        let f1 = phi_neg_exp(pi2 / t);
        let f5 = phi_neg_exp(pi2 / (5.0 * t));
        std::f64::consts::PI / (2.0 * t) * (f1 * f1 - f5 * f5)
    } else {
        psi2_scaled(t) - 5.0 * psi2_scaled(5.0 * t)
    }
}

// --- H(x) -------------------------------------------------------------------

/// Evaluation routes for H(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HMethod {
    /// (1/3) int_0^1 b(q^x) c(q) log q dq/q
    Definition,
    /// (2 pi / sqrt(3) x) int_0^1 b(q) c(q^3) log(3 c(q^(9x))/c(q^(3x))) dq/q
    Reduced,
    /// The alpha-integral with equal moduli; only x = 1 and x = 1/3.
    Elementary,
}

pub fn h_eval(x: f64, method: HMethod) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::domain(format!("H(x) needs x > 0, got {x}")));
    }
    match method {
        HMethod::Definition => {
            let r = integrate_semiinf(|v| v * b_exp_safe(x * v) * c_exp_safe(v), 1e-11)?;
            Ok(-r.value / 3.0)
        }
        HMethod::Reduced => {
            let r = integrate_semiinf(
                |v| {
                    let weight = b_exp_safe(v) * c_exp_safe(3.0 * v);
                    if weight == 0.0 {
                        return 0.0;
                    }
                    let ratio = 3.0 * c_exp_safe(9.0 * x * v) / c_exp_safe(3.0 * x * v);
                    weight * ratio.ln()
                },
                1e-11,
            )?;
            Ok(2.0 * std::f64::consts::PI / (3.0f64.sqrt() * x) * r.value)
        }
        HMethod::Elementary => {
            if (x - 1.0).abs() < 1e-12 {
                let i2 = integrate_finite_sing(h_elem_integrand_x1, 0.0, 1.0, 1e-11)?;
                Ok(2.0 * std::f64::consts::PI / (3.0 * 3.0f64.sqrt()) * i2.value)
            } else if (x - 1.0 / 3.0).abs() < 1e-12 {
                let i1 = integrate_finite_sing(h_elem_integrand_x13, 0.0, 1.0, 1e-11)?;
                Ok(2.0 * std::f64::consts::PI / 3.0f64.sqrt() * i1.value)
            } else {
                Err(Error::domain(format!(
                    "the elementary route for H is available at x = 1 and x = 1/3 only, got {x}"
                )))
            }
        }
    }
}

fn b_exp_safe(t: f64) -> f64 {
    let v = crate::qseries::b_exp(t);
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

fn c_exp_safe(t: f64) -> f64 {
    let v = c_exp(t);
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

fn h_elem_integrand_x1(alpha: f64, xc: f64) -> f64 {
    let (a, one_minus_a) = if xc > 0.0 {
        (xc, 1.0 - alpha)
    } else {
        (alpha, -xc)
    };
    let a3 = a.powf(1.0 / 3.0);
    a3 * (1.0 - a3) / (a * one_minus_a) * h_log_factor_sided(a, one_minus_a)
}

fn h_elem_integrand_x13(alpha: f64, xc: f64) -> f64 {
    let (a, one_minus_a) = if xc > 0.0 {
        (xc, 1.0 - alpha)
    } else {
        (alpha, -xc)
    };
    let oma3 = one_minus_a.powf(1.0 / 3.0);
    oma3 * (1.0 - oma3) / (a * one_minus_a) * h_log_factor_sided(a, one_minus_a)
}

/// As `h_log_factor` but with 1 - alpha supplied exactly.
fn h_log_factor_sided(a: f64, one_minus_a: f64) -> f64 {
    let one_minus_cbrt = if a < 0.5 {
        -((-a).ln_1p() / 3.0).exp_m1()
    } else {
        1.0 - one_minus_a.powf(1.0 / 3.0)
    };
    one_minus_cbrt.ln() - a.ln() / 3.0
}

// --- G(x) -------------------------------------------------------------------

/// Evaluation routes for G(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GMethod {
    /// int_0^1 q^(1/2) psi(q) psi(q^3) phi(-q^x) phi(-q^(3x)) log q dq/q
    Definition,
    /// The real reduction through A = q^(1/8) psi(q), B = q^(9/8) psi(q^9).
    RealReduced,
    /// The p-integral for G(1) only.
    ElementaryX1,
}

pub fn g_eval(x: f64, method: GMethod) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::domain(format!("G(x) needs x > 0, got {x}")));
    }
    match method {
        GMethod::Definition => {
            let r = integrate_semiinf(
                |v| {
                    let w = a_psi(v) * a_psi(3.0 * v);
                    if !w.is_finite() {
                        return 0.0;
                    }
                    v * w * phi_neg_exp(x * v) * phi_neg_exp(3.0 * x * v)
                },
                1e-11,
            )?;
            Ok(-r.value)
        }
        GMethod::RealReduced => {
            let r = integrate_semiinf(
                |v| {
                    let a = a_psi(v);
                    let b = a_psi(9.0 * v);
                    if !(a.is_finite() && b.is_finite()) {
                        return 0.0;
                    }
                    let weight = (a - b) * (a - 3.0 * b) * (a * a - 3.0 * b * b);
                    let ratio = a_psi(6.0 * x * v) / a_psi(3.0 * x * v);
                    let logf = (4.0 * ratio.powi(4)).ln();
                    if !logf.is_finite() {
                        return 0.0;
                    }
                    weight * logf
                },
                1e-11,
            )?;
            Ok(std::f64::consts::PI / (2.0 * 3.0f64.sqrt() * x) * r.value)
        }
        GMethod::ElementaryX1 => {
            if (x - 1.0).abs() > 1e-12 {
                return Err(Error::domain(
                    "the elementary route for G is available at x = 1 only",
                ));
            }
            let r = integrate_finite_sing(
                |p, xc| {
                    let (pv, half_minus) = if xc > 0.0 { (xc, 0.5 - p) } else { (p, -xc) };
                    let one_minus_2p = 2.0 * half_minus;
                    let num = ((one_minus_2p) * (2.0 - pv)).sqrt();
                    let logf = (pv.powi(3) * (2.0 - pv)).ln() - one_minus_2p.ln();
                    num * logf / ((1.0 - pv * pv) * pv.sqrt())
                },
                0.0,
                0.5,
                1e-11,
            )?;
            Ok(std::f64::consts::PI / 12.0 * r.value)
        }
    }
}

// --- S(x) -------------------------------------------------------------------

/// Evaluation routes for S(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SMethod {
    /// int_0^1 q^((1+x)/4) psi^2(q^x) (psi^2(q) - 5 q psi^2(q^5)) log q dq/q
    Definition,
    /// -pi int_0^1 q^(x/2) psi^4(-q^x) log(5 phi^2(q^5)/phi^2(q)) dq/q
    Reduced,
}

pub fn s_eval(x: f64, method: SMethod) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::domain(format!("S(x) needs x > 0, got {x}")));
    }
    match method {
        SMethod::Definition => {
            let r = integrate_semiinf(
                |v| {
                    let w = psi2_scaled(x * v) * psi2_comb(v);
                    if w.is_finite() {
                        v * w
                    } else {
                        0.0
                    }
                },
                1e-11,
            )?;
            Ok(-r.value)
        }
        SMethod::Reduced => {
            let r = integrate_semiinf(
                |v| {
                    let pn = a_psi_neg(x * v);
                    if !pn.is_finite() {
                        return 0.0;
                    }
                    let p1 = phi_exp(v);
                    let p5 = phi_exp(5.0 * v);
                    let logf = (5.0 * (p5 / p1).powi(2)).ln();
                    pn.powi(4) * logf
                },
                1e-11,
            )?;
            Ok(-std::f64::consts::PI * r.value)
        }
    }
}

// --- J(y) and friends --------------------------------------------------------

/// J(y) = (1/2pi) int_0^1 (2-y+3yt) log(1+yt) / sqrt(t(1-t)(4+(4-y)yt+y^2t^2)) dt
/// for 2 <= y <= 8.
pub fn j_y(y: f64) -> Result<f64> {
    if !(2.0..=8.0).contains(&y) {
        return Err(Error::domain(format!("J(y) needs 2 <= y <= 8, got {y}")));
    }
    // Completed square: 4 + (4-y)yt + y^2 t^2 = y^2 (t - t*)^2 + y(8-y)/4
    // with t* = (y-4)/(2y); the quadratic touches zero at y = 8, where the
    // numerator zero cancels the root, so t - t* must come from the panel
    // offset rather than from cancellation.
    let t_star = (y - 4.0) / (2.0 * y);
    let q_min = y * (8.0 - y) / 4.0;
    let integrand = |t: f64, near0: f64, near1: f64, dts: f64| -> f64 {
        let quartic = y * y * dts * dts + q_min;
        let numerator = (2.0 - y + 3.0 * y * t) * (y * t).ln_1p();
        numerator / (near0 * near1 * quartic).sqrt()
    };
    let mut cuts = vec![0.0];
    if t_star > 1e-12 && t_star < 1.0 - 1e-12 {
        cuts.push(t_star);
    }
    cuts.push(1.0);
    let mut total = 0.0;
    for w in cuts.windows(2) {
        let r = integrate_finite_sing(
            |t, xc| {
                // distances to the singular endpoints 0, 1 and the split t*
                let near0 = if w[0] == 0.0 && xc > 0.0 { xc } else { t };
                let near1 = if w[1] == 1.0 && xc < 0.0 {
                    -xc
                } else {
                    1.0 - t
                };
                let dts = if w[0] == t_star && xc > 0.0 {
                    xc
                } else if w[1] == t_star && xc < 0.0 {
                    xc
                } else {
                    t - t_star
                };
                integrand(t, near0, near1, dts)
            },
            w[0],
            w[1],
            5e-11,
        )?;
        total += r.value;
    }
    Ok(total / (2.0 * std::f64::consts::PI))
}

/// The pair (F1, F2) of square-root-kernel integrals over (0, 1/lambda).
pub fn f1_f2(lambda: f64) -> Result<(f64, f64)> {
    if lambda < 1.0 {
        return Err(Error::domain(format!(
            "F1/F2 need lambda >= 1, got {lambda}"
        )));
    }
    let upper = 1.0 / lambda;
    let pieces = |p: f64, xc: f64| -> (f64, f64, f64, f64) {
        // (p, 1 - lambda p, lambda - p, 1 - p), using endpoint offsets
        let pv = if xc > 0.0 { xc } else { p };
        let one_minus_lp = if xc < 0.0 {
            -lambda * xc
        } else {
            1.0 - lambda * p
        };
        let lam_minus_p = lambda - pv;
        let one_minus_p = if xc < 0.0 {
            (lambda - 1.0) / lambda - xc
        } else {
            1.0 - pv
        };
        (pv, one_minus_lp, lam_minus_p, one_minus_p)
    };
    let f1 = integrate_finite_sing(
        |p, xc| {
            let (pv, oml, lmp, omp) = pieces(p, xc);
            (oml * lmp).sqrt() * (-pv.ln()) / (omp * (1.0 + pv) * pv.sqrt())
        },
        0.0,
        upper,
        1e-11,
    )?
    .value;
    let f2 = integrate_finite_sing(
        |p, xc| {
            let (pv, oml, lmp, omp) = pieces(p, xc);
            (oml * lmp).sqrt() * (lmp.ln() - oml.ln()) / (omp * (1.0 + pv) * pv.sqrt())
        },
        0.0,
        upper,
        1e-11,
    )?
    .value;
    Ok((f1, f2))
}

/// The elementary integral equal to L(E_20, 2):
/// -(pi/20) int_0^1 (1-6t) log(1+4t) / sqrt(t(1-t)(1+4t^2)) dt.
pub fn elementary_e20() -> Result<f64> {
    let r = integrate_finite_sing(
        |t, xc| {
            let (near0, near1) = if xc > 0.0 { (xc, 1.0 - t) } else { (t, -xc) };
            (1.0 - 6.0 * t) * (4.0 * t).ln_1p() / (near0 * near1 * (1.0 + 4.0 * t * t)).sqrt()
        },
        0.0,
        1.0,
        1e-12,
    )?;
    Ok(-std::f64::consts::PI / 20.0 * r.value)
}

/// Right-hand side of the conductor-20 evaluation:
/// 2 g(2(1+p)^2/p) - g(4(1+p)/p^2) with p = (-1 + sqrt((3k-1)/(k-1)))/2.
pub fn theorem20_rhs(k: f64) -> Result<f64> {
    if k < 4.0 / 3.0 {
        return Err(Error::domain(format!(
            "theorem20_rhs needs k >= 4/3, got {k}"
        )));
    }
    let p = 0.5 * (-1.0 + ((3.0 * k - 1.0) / (k - 1.0)).sqrt());
    let arg1 = 2.0 * (1.0 + p) * (1.0 + p) / p;
    let arg2 = 4.0 * (1.0 + p) / (p * p);
    Ok(2.0 * crate::mahler::g_value(arg1)? - crate::mahler::g_value(arg2)?)
}
