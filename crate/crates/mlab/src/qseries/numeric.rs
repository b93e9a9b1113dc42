//! Floating-point evaluation of q-series expressions at real or complex
//! nome, with the Dedekind-eta modular inversion taking over for real
//! arguments near 1.
//!
//! Real evaluators are parameterized by t = -ln q (so quadratures in the
//! Mellin variable never form q - 1 differences); `eta_exp(t)` switches to
//! eta(exp(-4 pi^2 / t)) * sqrt(2 pi / t) once t drops below the inversion
//! threshold.

use num_complex::Complex64;

use super::characters::CharacterTable;
use super::expr::{EtaExpr, LambertKind};
use crate::error::{Error, Result};

const TAIL_LOG: f64 = 42.0; // e^-42 ~ 5.7e-19, below the 1e-14 tail contract
const TWO_PI: f64 = std::f64::consts::TAU;

/// Inversion threshold: q = e^-t > 0.9 iff t < 0.10536.
const ETA_INVERT_T: f64 = 2.0 * std::f64::consts::PI * 0.1;

/// eta(e^-t) for t > 0.
pub fn eta_exp(t: f64) -> f64 {
    assert!(t > 0.0, "eta_exp needs a positive exponent, got {t}");
    if t < ETA_INVERT_T {
        let tp = 4.0 * std::f64::consts::PI * std::f64::consts::PI / t;
        return (TWO_PI / t).sqrt() * eta_exp(tp);
    }
    // sum (-1)^n e^(-t (6n+1)^2 / 24); the cutoff is relative to the leading
    // term so post-inversion values far below 1 keep full relative accuracy
    let lead = t / 24.0;
    let mut s = 0.0;
    let mut n = 0i64;
    loop {
        let mut alive = false;
        for m in [n, -n - 1] {
            let p = ((6 * m + 1) * (6 * m + 1)) as f64 / 24.0;
            let x = t * p;
            if x - lead < TAIL_LOG {
                let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                s += sign * (-x).exp();
                alive = true;
            }
        }
        if !alive {
            return s;
        }
        n += 1;
    }
}

/// psi(e^-t) = e^(t/8) eta^2(e^-2t) / eta(e^-t)
pub fn psi_exp(t: f64) -> f64 {
    if t < 1.0 {
        let e2 = eta_exp(2.0 * t);
        return (t / 8.0).exp() * e2 * e2 / eta_exp(t);
    }
    let mut s = 0.0;
    let mut n = 0i64;
    loop {
        let tri = (n * (n + 1) / 2) as f64;
        let x = t * tri;
        if x > TAIL_LOG && n > 0 {
            return s;
        }
        s += (-x).exp();
        n += 1;
    }
}

/// phi(e^-t) = eta^5(e^-2t) / (eta^2(e^-t) eta^2(e^-4t))
pub fn phi_exp(t: f64) -> f64 {
    if t < 1.0 {
        let e1 = eta_exp(t);
        let e2 = eta_exp(2.0 * t);
        let e4 = eta_exp(4.0 * t);
        return e2.powi(5) / (e1 * e1 * e4 * e4);
    }
    let mut s = 1.0;
    let mut n = 1i64;
    loop {
        let x = t * (n * n) as f64;
        if x > TAIL_LOG {
            return s;
        }
        s += 2.0 * (-x).exp();
        n += 1;
    }
}

/// phi(-e^-t) = eta^2(e^-t) / eta(e^-2t)
pub fn phi_neg_exp(t: f64) -> f64 {
    if t < 1.0 {
        let e1 = eta_exp(t);
        return e1 * e1 / eta_exp(2.0 * t);
    }
    let mut s = 1.0;
    let mut n = 1i64;
    loop {
        let x = t * (n * n) as f64;
        if x > TAIL_LOG {
            return s;
        }
        let sign = if n % 2 == 0 { 2.0 } else { -2.0 };
        s += sign * (-x).exp();
        n += 1;
    }
}

/// psi(-e^-t) = e^(t/8) eta(e^-t) eta(e^-4t) / eta(e^-2t)
pub fn psi_neg_exp(t: f64) -> f64 {
    if t < 1.0 {
        return (t / 8.0).exp() * eta_exp(t) * eta_exp(4.0 * t) / eta_exp(2.0 * t);
    }
    let mut s = 0.0;
    let mut n = 0i64;
    loop {
        let tri = n * (n + 1) / 2;
        let x = t * tri as f64;
        if x > TAIL_LOG && n > 0 {
            return s;
        }
        let sign = if tri % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * (-x).exp();
        n += 1;
    }
}

/// b(e^-t) = eta^3(e^-t) / eta(e^-3t)
pub fn b_exp(t: f64) -> f64 {
    let e = eta_exp(t);
    e * e * e / eta_exp(3.0 * t)
}

/// c(e^-t) = 3 eta^3(e^-3t) / eta(e^-t)
pub fn c_exp(t: f64) -> f64 {
    let e3 = eta_exp(3.0 * t);
    3.0 * e3 * e3 * e3 / eta_exp(t)
}

/// a(q) for real |q| < 1 by lattice enumeration (no inversion available).
pub fn a_real(q: f64) -> Result<f64> {
    if q.abs() > 0.95 {
        return Err(Error::domain(format!(
            "a(q) direct summation needs |q| <= 0.95, got {q}"
        )));
    }
    if q == 0.0 {
        return Ok(1.0);
    }
    let cut = (TAIL_LOG / -q.abs().ln()).ceil() as i64 + 1;
    let bound = ((2.0 * cut as f64).sqrt() as i64) + 2;
    // power table: q^f for 0 <= f <= fmax
    let fmax = 3 * bound * bound + 1;
    let mut powers = Vec::with_capacity(fmax as usize + 1);
    let mut p = 1.0;
    for _ in 0..=fmax {
        powers.push(p);
        p *= q;
    }
    let mut s = 0.0;
    for m in -bound..=bound {
        for n in -bound..=bound {
            let f = m * m + m * n + n * n;
            if f <= fmax {
                s += powers[f as usize];
            }
        }
    }
    Ok(s)
}

// --- complex direct sums -------------------------------------------------

fn cut_for(q_abs: f64) -> Result<f64> {
    if q_abs >= 0.98 {
        return Err(Error::domain(format!(
            "complex theta summation needs |q| < 0.98, got {q_abs}"
        )));
    }
    Ok(TAIL_LOG / -q_abs.ln())
}

/// Euler product prod_{n>=1} (1 - q^n) for complex |q| < 1.
///
/// Eta quotients whose fractional q-powers cancel should be built from this
/// product: principal powers of q^j do not track the analytic continuation
/// once arguments wrap the cut, the plain power series does.
pub fn euler_product_c(q: Complex64) -> Result<Complex64> {
    let cut = cut_for(q.norm())? as i64 + 1;
    let one = Complex64::new(1.0, 0.0);
    let mut p = one;
    let mut qn = q;
    for _ in 0..=cut {
        p *= one - qn;
        qn *= q;
    }
    Ok(p)
}

pub fn eta_c(q: Complex64) -> Result<Complex64> {
    let cut = cut_for(q.norm())?;
    let mut s = Complex64::new(0.0, 0.0);
    let mut n = 0i64;
    loop {
        let mut alive = false;
        for m in [n, -n - 1] {
            let p = ((6 * m + 1) * (6 * m + 1)) as f64 / 24.0;
            if p < cut {
                let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                s += sign * q.powf(p);
                alive = true;
            }
        }
        if !alive {
            return Ok(s);
        }
        n += 1;
    }
}

pub fn phi_c(q: Complex64, signed: bool) -> Result<Complex64> {
    let cut = cut_for(q.norm())?;
    let mut s = Complex64::new(1.0, 0.0);
    let mut n = 1i64;
    while ((n * n) as f64) < cut {
        let sign = if signed && n % 2 == 1 { -2.0 } else { 2.0 };
        s += sign * q.powu((n * n) as u32);
        n += 1;
    }
    Ok(s)
}

pub fn psi_c(q: Complex64) -> Result<Complex64> {
    let cut = cut_for(q.norm())?;
    let mut s = Complex64::new(0.0, 0.0);
    let mut n = 0i64;
    loop {
        let tri = n * (n + 1) / 2;
        if (tri as f64) >= cut && n > 0 {
            return Ok(s);
        }
        s += q.powu(tri as u32);
        n += 1;
    }
}

pub fn a_c(q: Complex64) -> Result<Complex64> {
    let cut = cut_for(q.norm())? as i64 + 1;
    let bound = ((2.0 * cut as f64).sqrt() as i64) + 2;
    let fmax = 3 * bound * bound + 1;
    let mut powers = Vec::with_capacity(fmax as usize + 1);
    let mut p = Complex64::new(1.0, 0.0);
    for _ in 0..=fmax {
        powers.push(p);
        p *= q;
    }
    let mut s = Complex64::new(0.0, 0.0);
    for m in -bound..=bound {
        for n in -bound..=bound {
            let f = m * m + m * n + n * n;
            if f <= fmax {
                s += powers[f as usize];
            }
        }
    }
    Ok(s)
}

fn l_c(q: Complex64) -> Result<Complex64> {
    let cut = cut_for(q.norm())? as i64 + 1;
    let mut s = Complex64::new(1.0, 0.0);
    for n in 1..=cut {
        let qn = q.powu(n as u32);
        s -= 24.0 * n as f64 * qn / (Complex64::new(1.0, 0.0) - qn);
    }
    Ok(s)
}

// --- expression evaluation ------------------------------------------------

/// Numeric value of an expression at complex nome q, |q| < 1.
///
/// Real positive q routes through the eta-inversion evaluators, so pure
/// eta-quotient expressions remain accurate arbitrarily close to q = 1.
/// Leaves without an inversion form (a, L, Lambert sums) insist on an
/// effective argument |q^j| <= 0.95.
pub fn eval_numeric(expr: &EtaExpr, q: Complex64) -> Result<Complex64> {
    if q.norm() >= 1.0 {
        return Err(Error::domain(format!("|q| must be < 1, got {}", q.norm())));
    }
    let real_positive = q.im == 0.0 && q.re > 0.0;
    if real_positive {
        let t = -q.re.ln();
        eval_real(expr, t).map(|v| Complex64::new(v, 0.0))
    } else {
        eval_complex(expr, q)
    }
}

fn eval_real(expr: &EtaExpr, t: f64) -> Result<f64> {
    let tj = |j: &num_rational::Rational64| t * (*j.numer() as f64) / (*j.denom() as f64);
    match expr {
        EtaExpr::Eta(j) => Ok(eta_exp(tj(j))),
        EtaExpr::Phi(j) => Ok(phi_exp(tj(j))),
        EtaExpr::PhiNeg(j) => Ok(phi_neg_exp(tj(j))),
        EtaExpr::Psi(j) => Ok(psi_exp(tj(j))),
        EtaExpr::PsiNeg(j) => Ok(psi_neg_exp(tj(j))),
        EtaExpr::B(j) => Ok(b_exp(tj(j))),
        EtaExpr::C(j) => Ok(c_exp(tj(j))),
        EtaExpr::A(j) => a_real((-tj(j)).exp()),
        EtaExpr::ANeg(j) => a_real(-(-tj(j)).exp()),
        EtaExpr::Lser(j) => {
            let q = (-tj(j)).exp();
            if q > 0.95 {
                return Err(Error::domain("L(q) direct summation needs q <= 0.95"));
            }
            Ok(l_c(Complex64::new(q, 0.0))?.re)
        }
        EtaExpr::QPow(r) => Ok((-t * (*r.numer() as f64) / (*r.denom() as f64)).exp()),
        EtaExpr::Lambert(kind, j) => {
            let q = (-tj(j)).exp();
            lambert_kind_eval(*kind, q)
        }
        EtaExpr::Const(c) => Ok(*c.numer() as f64 / *c.denom() as f64),
        EtaExpr::Add(a, b) => Ok(eval_real(a, t)? + eval_real(b, t)?),
        EtaExpr::Sub(a, b) => Ok(eval_real(a, t)? - eval_real(b, t)?),
        EtaExpr::Mul(a, b) => Ok(eval_real(a, t)? * eval_real(b, t)?),
        EtaExpr::Div(a, b) => Ok(eval_real(a, t)? / eval_real(b, t)?),
        EtaExpr::Pow(a, n) => Ok(eval_real(a, t)?.powi(*n as i32)),
    }
}

fn eval_complex(expr: &EtaExpr, q: Complex64) -> Result<Complex64> {
    let qj = |j: &num_rational::Rational64| q.powf(*j.numer() as f64 / *j.denom() as f64);
    match expr {
        EtaExpr::Eta(j) => eta_c(qj(j)),
        EtaExpr::Phi(j) => phi_c(qj(j), false),
        EtaExpr::PhiNeg(j) => phi_c(qj(j), true),
        EtaExpr::Psi(j) => psi_c(qj(j)),
        EtaExpr::PsiNeg(j) => psi_c(-qj(j)),
        EtaExpr::B(j) => {
            let e = eta_c(qj(j))?;
            Ok(e * e * e / eta_c(qj(&(*j * 3)))?)
        }
        EtaExpr::C(j) => {
            let e3 = eta_c(qj(&(*j * 3)))?;
            Ok(3.0 * e3 * e3 * e3 / eta_c(qj(j))?)
        }
        EtaExpr::A(j) => a_c(qj(j)),
        EtaExpr::ANeg(j) => a_c(-qj(j)),
        EtaExpr::Lser(j) => l_c(qj(j)),
        EtaExpr::QPow(r) => Ok(q.powf(*r.numer() as f64 / *r.denom() as f64)),
        EtaExpr::Lambert(..) => Err(Error::domain(
            "formal Lambert sums are evaluated at real q only",
        )),
        EtaExpr::Const(c) => Ok(Complex64::new(*c.numer() as f64 / *c.denom() as f64, 0.0)),
        EtaExpr::Add(a, b) => Ok(eval_complex(a, q)? + eval_complex(b, q)?),
        EtaExpr::Sub(a, b) => Ok(eval_complex(a, q)? - eval_complex(b, q)?),
        EtaExpr::Mul(a, b) => Ok(eval_complex(a, q)? * eval_complex(b, q)?),
        EtaExpr::Div(a, b) => Ok(eval_complex(a, q)? / eval_complex(b, q)?),
        EtaExpr::Pow(a, n) => Ok(eval_complex(a, q)?.powu(*n)),
    }
}

fn lambert_kind_eval(kind: LambertKind, q: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&q) {
        return Err(Error::domain("Lambert evaluation needs 0 <= q < 1"));
    }
    if q == 0.0 {
        return Ok(0.0);
    }
    if q > 0.95 {
        return Err(Error::domain("Lambert evaluation needs q <= 0.95"));
    }
    let cut = (TAIL_LOG / -q.ln()).ceil() as i64 + 1;
    let chi = super::expr::lambert_character(kind);
    let mut s = 0.0;
    match kind {
        LambertKind::CThird => {
            let q3 = q.powf(1.0 / 3.0);
            for n in 1..=3 * cut {
                let cv = chi.eval(n) as f64;
                if cv == 0.0 {
                    continue;
                }
                let x3 = q3.powi(n as i32);
                let x = q.powi(n as i32);
                s += 3.0 * cv * (x3 / (1.0 - x3) - x / (1.0 - x));
            }
        }
        LambertKind::Chi6Half => {
            let qh = q.sqrt();
            for n in 1..=2 * cut {
                let cv = chi.eval(n) as f64;
                if cv == 0.0 {
                    continue;
                }
                s += cv * qh.powi(n as i32) / (1.0 - q.powi(n as i32));
            }
        }
        LambertKind::Chi3Signed => {
            for n in 1..=cut {
                let cv = chi.eval(n) as f64;
                if cv == 0.0 {
                    continue;
                }
                let x = (-q).powi(n as i32);
                s += cv * x / (1.0 - x);
            }
        }
        LambertKind::JWeightedAlternating => {
            for n in 1..=cut {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                s += sign * n as f64 * chi.eval(n) as f64 * q.powi(n as i32);
            }
        }
    }
    Ok(s)
}

/// Variants of the doubly-indexed character Lambert sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambertVariant {
    /// sum_{n,r >= 1} r chi(r n) q^(r n) = sum_m sigma_1(m) chi(m) q^m
    RWeighted,
    /// sum_{n >= 1} chi(n) q^(n/2) / (1 - q^n)
    HalfShifted,
}

/// Evaluate a character Lambert sum at real q in [0, 1).
pub fn lambert_eval(chi: &CharacterTable, variant: LambertVariant, q: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&q) {
        return Err(Error::domain(format!(
            "lambert_eval needs 0 <= q < 1, got {q}"
        )));
    }
    if q == 0.0 {
        return Ok(0.0);
    }
    if q > 0.95 {
        return Err(Error::domain("lambert_eval needs q <= 0.95"));
    }
    let base = (TAIL_LOG / -q.ln()).ceil();
    let cut = ((TAIL_LOG + 2.5 * (base + 2.0).ln()) / -q.ln()).ceil() as i64 + 1;
    match variant {
        LambertVariant::RWeighted => {
            let mut sigma = vec![0i64; cut as usize + 1];
            for d in 1..=cut {
                let mut m = d;
                while m <= cut {
                    sigma[m as usize] += d;
                    m += d;
                }
            }
            let mut s = 0.0;
            let mut qm = 1.0;
            for m in 1..=cut {
                qm *= q;
                let cv = chi.eval(m);
                if cv != 0 {
                    s += (cv * sigma[m as usize]) as f64 * qm;
                }
            }
            Ok(s)
        }
        LambertVariant::HalfShifted => {
            let qh = q.sqrt();
            let mut s = 0.0;
            for n in 1..=2 * cut {
                let cv = chi.eval(n) as f64;
                if cv == 0.0 {
                    continue;
                }
                s += cv * qh.powi(n as i32) / (1.0 - q.powi(n as i32));
            }
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::characters::{CHI_M3, CHI_M4};
    use num_rational::Rational64;

    fn r(n: i64, m: i64) -> Rational64 {
        Rational64::new(n, m)
    }

    #[test]
    fn eta_inversion_consistency() {
        // eta(e^-pi) = sqrt(2) * eta(e^-4pi) is the x = 2 case of the involution
        let pi = std::f64::consts::PI;
        let lhs = eta_exp(pi);
        let rhs = 2.0f64.sqrt() * eta_exp(4.0 * pi);
        assert!((lhs - rhs).abs() < 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn evaluators_match_series_at_q03() {
        let q = 0.3f64;
        let t = -q.ln();
        for (expr, val) in [
            (EtaExpr::Eta(r(1, 1)), eta_exp(t)),
            (EtaExpr::Phi(r(1, 1)), phi_exp(t)),
            (EtaExpr::PhiNeg(r(1, 1)), phi_neg_exp(t)),
            (EtaExpr::Psi(r(1, 1)), psi_exp(t)),
            (EtaExpr::PsiNeg(r(1, 1)), psi_neg_exp(t)),
            (EtaExpr::B(r(1, 1)), b_exp(t)),
            (EtaExpr::C(r(1, 1)), c_exp(t)),
        ] {
            let s = crate::qseries::series_of(&expr, r(130, 1)).unwrap();
            let direct = s.eval_f64(q);
            assert!(
                (val - direct).abs() < 1e-14 * (1.0 + val.abs()),
                "{expr:?}: {val} vs series {direct}"
            );
        }
    }

    #[test]
    fn phi_at_zero_limit() {
        // t large means q -> 0 and phi -> 1
        assert!((phi_exp(60.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn a_omega_splits_into_b_and_c() {
        // a(omega q) = b(q) + i sqrt(3) c(q^3) at q = 0.2
        let q = 0.2f64;
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let lhs = a_c(omega * q).unwrap();
        let t = -q.ln();
        let rhs = Complex64::new(b_exp(t), 3.0f64.sqrt() * c_exp(3.0 * t));
        assert!((lhs - rhs).norm() < 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn lambert_chi3_equals_bc_product() {
        // sum r chi_-3(rn) q^(rn) = (1/3) b(q) c(q^3)
        let q = 0.3f64;
        let t = -q.ln();
        let lhs = lambert_eval(&CHI_M3, LambertVariant::RWeighted, q).unwrap();
        let rhs = b_exp(t) * c_exp(3.0 * t) / 3.0;
        assert!((lhs - rhs).abs() < 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn lambert_chi4_equals_psi4() {
        // sum r chi_-4(rn) q^(rn) = q psi^4(-q^2)
        let q = 0.25f64;
        let t = -q.ln();
        let lhs = lambert_eval(&CHI_M4, LambertVariant::RWeighted, q).unwrap();
        let p = psi_neg_exp(2.0 * t);
        let rhs = q * p * p * p * p;
        assert!((lhs - rhs).abs() < 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn lambert_zero_limit() {
        assert_eq!(
            lambert_eval(&CHI_M3, LambertVariant::RWeighted, 0.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn eval_numeric_guards() {
        let e = EtaExpr::Phi(r(1, 1));
        assert!(eval_numeric(&e, Complex64::new(1.0, 0.2)).is_err());
        assert_eq!(
            eval_numeric(&e, Complex64::new(1e-300, 0.0)).unwrap().re,
            1.0
        );
    }
}
