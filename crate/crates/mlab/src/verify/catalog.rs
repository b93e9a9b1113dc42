//! Evaluators behind the identity catalog: one function per record id.

use num_complex::Complex64;
use num_rational::Rational64;

use super::CheckOutcome;
use crate::elliptic::{
    fourier_cn2dn2, h_alpha, jacobi, modulus_params, sig3_nome, w_curve, w_curve_derivative,
    w_fourier, w_periods,
};
use crate::error::Result;
use crate::hypergeo::{gamma_fn, hyp2f1_13_23_1, pfq_eval};
use crate::lvalues::{
    elementary_e20, f1_f2, f_integral, g_eval, h_eval, j_y, l_elliptic, s_eval, theorem20_rhs,
    GMethod, HMethod, LatticeSumSpec, SMethod,
};
use crate::mahler::{g_value, g_via_j, mahler_direct, mahler_hyper_m, n_branch, n_value, Family};
use crate::numerics::integrate_finite_sing;
use crate::qseries::{
    a_c, a_real, b_exp, c_exp, eta_exp, euler_product_c, lambert_eval, phi_exp, phi_neg_exp, psi_c,
    psi_neg_exp, series_equal, EtaExpr, FracSeries, LambertKind, LambertVariant, CHI_6, CHI_M3,
    CHI_M4,
};

type C = Complex64;
type Eval = fn() -> Result<CheckOutcome>;

const PI: f64 = std::f64::consts::PI;

pub(crate) fn evaluate(id: &str) -> Option<Result<CheckOutcome>> {
    lookup(id).map(|f| f())
}

#[cfg(test)]
pub(crate) fn evaluate_exists(id: &str) -> bool {
    lookup(id).is_some()
}

fn lookup(id: &str) -> Option<Eval> {
    Some(match id {
        "QS_ETA_PENTAGONAL" => qs_eta_pentagonal,
        "QS_B_FROM_A" => qs_b_from_a,
        "QS_C_FROM_A" => qs_c_from_a,
        "QS_PSI_ETA" => qs_psi_eta,
        "QS_PSINEG_ETA" => qs_psineg_eta,
        "QS_PHINEG_ETA" => qs_phineg_eta,
        "QS_PHI_ETA" => qs_phi_eta,
        "QS_A2_EISENSTEIN" => qs_a2_eisenstein,
        "QS_PHI4_EISENSTEIN" => qs_phi4_eisenstein,
        "QS_CHI6_LAMBERT" => qs_chi6_lambert,
        "QS_C_LAMBERT" => qs_c_lambert,
        "QS_ETA_PRODUCT_5" => qs_eta_product_5,
        "QS_SOMOS_T36_9_39" => qs_somos_t36,
        "QS_RAMANUJAN_ENTRY68" => qs_ramanujan_entry68,
        "QS_SOMOS_X42_8_56" => qs_somos_x56,
        "QS_SOMOS_X42_8_64" => qs_somos_x64,
        "QS_A_NEG_LAMBERT" => qs_a_neg_lambert,
        "QS_CHI3_RATIONAL" => qs_chi3_rational,
        "QS_ETA_INVERSION" => qs_eta_inversion,
        "QS_A_OMEGA" => qs_a_omega,
        "QS_A_OMEGA_SQUARED" => qs_a_omega_squared,
        "QS_PSI_OMEGA" => qs_psi_omega,
        "QS_EISEN_CHI6" => qs_eisen_chi6,
        "LAMBERT_CHI3_BC" => lambert_chi3_bc,
        "LAMBERT_CHI4_PSI" => lambert_chi4_psi,
        "M8_M2_F23" => m8_m2_f23,
        "G4_N32_F15" => g4_n32_f15,
        "E27_3F2" => e27_3f2,
        "E27_4F3" => e27_4f3,
        "E36_3F2" => e36_3f2,
        "E36_G2" => e36_g2,
        "G_HALF" => g_half,
        "H_REL_F13" => h_rel_f13,
        "H_REL_F11" => h_rel_f11,
        "H_REL_F37" => h_rel_f37,
        "H_REL_F67" => h_rel_f67,
        "H_REL_F32_7" => h_rel_f32_7,
        "H_DEF_EQ_REDUCED" => h_def_eq_reduced,
        "H_ELEMENTARY" => h_elementary,
        "G_DEF_EQ_REAL" => g_def_eq_real,
        "G_IMAG_ROUTE" => g_imag_route,
        "G1_ELEMENTARY" => g1_elementary,
        "TH_F23" => th_f23,
        "S_REL" => s_rel,
        "S_DEF_EQ_REDUCED" => s_def_eq_reduced,
        "E20_ELEMENTARY" => e20_elementary_record,
        "LEMK1" => lemk1,
        "LEMK2" => lemk2,
        "GN_COEFF" => gn_coeff,
        "ELLIPTIC_FOURIER" => elliptic_fourier,
        "SNCNDN_SN" => sncndn_sn,
        "SNCNDN_CN" => sncndn_cn,
        "SNCNDN_DN" => sncndn_dn,
        "PI4_INTEGRAL" => pi4_integral,
        "PI4_THIRD_KIND" => pi4_third_kind,
        "KO_FUNCEQ" => ko_funceq,
        "L1_T5" => l1_t5,
        "T5A_CUBIC" => t5a_cubic,
        "L2_DJDY" => l2_djdy,
        "DG_DY" => dg_dy,
        "TH1_JG" => th1_jg,
        "TH20_K" => th20_k,
        "COR0_CHAIN" => cor0_chain,
        "COR00_N" => cor00_n,
        "COR00_N_BRANCH" => cor00_n_branch,
        "COR00_G" => cor00_g,
        "EXOTIC" => exotic,
        "LR_226_A" => lr_226_a,
        "LR_226_B" => lr_226_b,
        "FUNC_EQ_G" => func_eq_g,
        "F59_A" => f59_a,
        "F59_B" => f59_b,
        "W_CURVE_SUITE_ODE" => w_suite_ode,
        "W_CURVE_SUITE_WK" => w_suite_wk,
        "W_CURVE_SUITE_FOURIER" => w_suite_fourier,
        "W_CURVE_SUITE_LOGFORM" => w_suite_logform,
        "W_CURVE_SUITE_2K" => w_suite_2k,
        "W_CURVE_SUITE_MULT" => w_suite_mult,
        "PARAM_DEG3" => param_deg3,
        "ALPHA_M_DEG5" => alpha_m_deg5,
        "DEG2_MODULAR" => deg2_modular,
        "NEGCTRL_PHI_PSI" => negctrl_phi_psi,
        "NEGCTRL_M8_SCALE" => negctrl_m8_scale,
        _ => return None,
    })
}

// --- helpers ---------------------------------------------------------------

fn num(pairs: Vec<(f64, f64)>) -> Result<CheckOutcome> {
    Ok(CheckOutcome::Numeric(pairs))
}

fn exact(lhs: EtaExpr, rhs: EtaExpr, order: i64) -> Result<CheckOutcome> {
    let ok = series_equal(&lhs, &rhs, Rational64::new(order, 1))?;
    Ok(CheckOutcome::Exact(ok))
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn eta(n: i64, d: i64) -> EtaExpr {
    EtaExpr::Eta(r(n, d))
}

fn b(n: i64, d: i64) -> EtaExpr {
    EtaExpr::B(r(n, d))
}

fn cth(n: i64, d: i64) -> EtaExpr {
    EtaExpr::C(r(n, d))
}

fn konst(n: i64, d: i64) -> EtaExpr {
    EtaExpr::Const(r(n, d))
}

fn qpow(n: i64, d: i64) -> EtaExpr {
    EtaExpr::QPow(r(n, d))
}

fn spec(bn: i64, bd: i64, cn: i64, cd: i64) -> Result<LatticeSumSpec> {
    LatticeSumSpec::new(r(bn, bd), r(cn, cd))
}

/// Richardson central difference with fallible evaluations.
fn diff4(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let coarse = (f(x + h)? - f(x - h)?) / (2.0 * h);
    let fine = (f(x + 0.5 * h)? - f(x - 0.5 * h)?) / h;
    Ok((4.0 * fine - coarse) / 3.0)
}

fn split_c(z: C, w: C) -> Vec<(f64, f64)> {
    vec![(z.re, w.re), (z.im, w.im)]
}

// --- exact q-series evaluators ----------------------------------------------

fn qs_eta_pentagonal() -> Result<CheckOutcome> {
    use num_rational::BigRational;
    use num_traits::One;
    let order = 120i64;
    let sum_form = crate::qseries::series_of(&eta(1, 1), r(order, 1))?;
    // q^(1/24) prod_{k<=order+1} (1 - q^k) on the 1/24 lattice
    let d = 24;
    let keys = (order + 1) * d;
    let mut prod = FracSeries::monomial(d, 1, BigRational::one(), keys);
    for k in 1..=order + 1 {
        let mut factor = FracSeries::constant(d, 1, keys);
        factor.insert(d * k, -BigRational::one());
        prod = prod.mul(&factor);
    }
    Ok(CheckOutcome::Exact(sum_form.equal_to(&prod, r(order, 1))?))
}

fn qs_b_from_a() -> Result<CheckOutcome> {
    let rhs = konst(3, 1)
        .mul(EtaExpr::A(r(3, 1)))
        .sub(EtaExpr::A(r(1, 1)))
        .mul(konst(1, 2));
    exact(b(1, 1), rhs, 120)
}

fn qs_c_from_a() -> Result<CheckOutcome> {
    let rhs = EtaExpr::A(r(1, 3))
        .sub(EtaExpr::A(r(1, 1)))
        .mul(konst(1, 2));
    exact(cth(1, 1), rhs, 120)
}

fn qs_psi_eta() -> Result<CheckOutcome> {
    let lhs = qpow(1, 8).mul(EtaExpr::Psi(r(1, 1)));
    let rhs = eta(2, 1).pow(2).div(eta(1, 1));
    exact(lhs, rhs, 120)
}

fn qs_psineg_eta() -> Result<CheckOutcome> {
    let lhs = qpow(1, 8).mul(EtaExpr::PsiNeg(r(1, 1)));
    let rhs = eta(1, 1).mul(eta(4, 1)).div(eta(2, 1));
    exact(lhs, rhs, 120)
}

fn qs_phineg_eta() -> Result<CheckOutcome> {
    exact(
        EtaExpr::PhiNeg(r(1, 1)),
        eta(1, 1).pow(2).div(eta(2, 1)),
        120,
    )
}

fn qs_phi_eta() -> Result<CheckOutcome> {
    let rhs = eta(2, 1).pow(5).div(eta(1, 1).pow(2).mul(eta(4, 1).pow(2)));
    exact(EtaExpr::Phi(r(1, 1)), rhs, 120)
}

fn qs_a2_eisenstein() -> Result<CheckOutcome> {
    let lhs = konst(2, 1).mul(EtaExpr::A(r(1, 1)).pow(2));
    let rhs = konst(3, 1)
        .mul(EtaExpr::Lser(r(3, 1)))
        .sub(EtaExpr::Lser(r(1, 1)));
    exact(lhs, rhs, 120)
}

fn qs_phi4_eisenstein() -> Result<CheckOutcome> {
    let lhs = konst(3, 1).mul(EtaExpr::Phi(r(1, 1)).pow(4));
    let rhs = konst(4, 1)
        .mul(EtaExpr::Lser(r(4, 1)))
        .sub(EtaExpr::Lser(r(1, 1)));
    exact(lhs, rhs, 120)
}

fn qs_chi6_lambert() -> Result<CheckOutcome> {
    let lhs = qpow(1, 2)
        .mul(EtaExpr::Psi(r(1, 1)))
        .mul(EtaExpr::Psi(r(3, 1)));
    exact(lhs, EtaExpr::Lambert(LambertKind::Chi6Half, r(1, 1)), 120)
}

fn qs_c_lambert() -> Result<CheckOutcome> {
    exact(
        cth(1, 1),
        EtaExpr::Lambert(LambertKind::CThird, r(1, 1)),
        120,
    )
}

fn qs_eta_product_5() -> Result<CheckOutcome> {
    let psi1 = EtaExpr::Psi(r(1, 1));
    let psi5 = EtaExpr::Psi(r(5, 1));
    let lhs = eta(1, 1).pow(2).mul(eta(5, 1).pow(2));
    let first = psi1.clone().pow(2).sub(qpow(1, 1).mul(psi5.clone().pow(2)));
    let second = psi1
        .pow(2)
        .sub(konst(5, 1).mul(qpow(1, 1)).mul(psi5.pow(2)));
    let rhs = qpow(1, 2).mul(first).mul(second);
    exact(lhs, rhs, 120)
}

fn qs_somos_t36() -> Result<CheckOutcome> {
    let lhs = konst(3, 1).mul(eta(6, 1).pow(4));
    let rhs = b(4, 1).mul(cth(3, 1)).sub(b(1, 1).mul(cth(12, 1)));
    exact(lhs, rhs, 120)
}

fn qs_ramanujan_entry68() -> Result<CheckOutcome> {
    let lhs = konst(9, 1)
        .mul(eta(1, 1))
        .mul(eta(3, 1))
        .mul(eta(7, 1))
        .mul(eta(21, 1));
    let rhs = b(7, 1)
        .mul(cth(1, 1))
        .add(b(1, 1).mul(cth(7, 1)))
        .sub(b(1, 1).mul(cth(1, 1)))
        .sub(konst(7, 1).mul(b(7, 1)).mul(cth(7, 1)));
    exact(lhs, rhs, 120)
}

fn qs_somos_x56() -> Result<CheckOutcome> {
    let lhs = konst(9, 1)
        .mul(eta(2, 1))
        .mul(eta(3, 1))
        .mul(eta(14, 1))
        .mul(eta(21, 1));
    let rhs = b(1, 1)
        .mul(cth(14, 1))
        .add(b(7, 1).mul(cth(2, 1)))
        .sub(b(1, 1).mul(cth(2, 1)))
        .sub(konst(7, 1).mul(b(7, 1)).mul(cth(14, 1)));
    exact(lhs, rhs, 120)
}

fn qs_somos_x64() -> Result<CheckOutcome> {
    let lhs = konst(9, 1)
        .mul(eta(1, 1))
        .mul(eta(6, 1))
        .mul(eta(7, 1))
        .mul(eta(42, 1));
    let rhs = b(2, 1)
        .mul(cth(1, 1))
        .add(konst(7, 1).mul(b(14, 1)).mul(cth(7, 1)))
        .sub(b(2, 1).mul(cth(7, 1)))
        .sub(b(14, 1).mul(cth(1, 1)));
    exact(lhs, rhs, 120)
}

fn qs_a_neg_lambert() -> Result<CheckOutcome> {
    let rhs = konst(1, 1).add(konst(6, 1).mul(EtaExpr::Lambert(LambertKind::Chi3Signed, r(1, 1))));
    exact(EtaExpr::ANeg(r(1, 1)), rhs, 120)
}

fn qs_chi3_rational() -> Result<CheckOutcome> {
    let one = || konst(1, 1);
    let lhs = konst(3, 1)
        .mul(qpow(2, 1))
        .mul(one().sub(qpow(2, 1)))
        .div(one().add(qpow(3, 1)).pow(2));
    let rhs = konst(0, 1)
        .sub(
            qpow(1, 1)
                .mul(one().sub(qpow(1, 1)))
                .div(one().add(qpow(3, 1))),
        )
        .sub(EtaExpr::Lambert(LambertKind::JWeightedAlternating, r(1, 1)));
    exact(lhs, rhs, 120)
}

// --- numeric q-series evaluators ----------------------------------------------

fn qs_eta_inversion() -> Result<CheckOutcome> {
    let lhs = eta_exp(PI);
    let rhs = 2.0f64.sqrt() * eta_exp(4.0 * PI);
    num(vec![(lhs, rhs)])
}

fn omega() -> C {
    C::from_polar(1.0, 2.0 * PI / 3.0)
}

/// b(q) = prod (1-q^n)^3 / prod (1-q^(3n)); the q^(1/24) powers cancel.
fn b_of_c(q: C) -> Result<C> {
    let e = euler_product_c(q)?;
    Ok(e * e * e / euler_product_c(q.powu(3))?)
}

/// c(q^3) = 3 q prod (1-q^(9n))^3 / prod (1-q^(3n)); again a plain power
/// series in q, so safe for complex arguments.
fn c_of_q_cubed(q: C) -> Result<C> {
    let e9 = euler_product_c(q.powu(9))?;
    Ok(3.0 * q * e9 * e9 * e9 / euler_product_c(q.powu(3))?)
}

fn qs_a_omega() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for q in [C::new(0.2, 0.0), C::new(0.2, 0.1)] {
        let lhs = a_c(omega() * q)?;
        let rhs = b_of_c(q)? + C::i() * 3.0f64.sqrt() * c_of_q_cubed(q)?;
        pairs.extend(split_c(lhs, rhs));
    }
    num(pairs)
}

fn qs_a_omega_squared() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    // real sample: Im a^2(omega q) = 2 sqrt(3) b(q) c(q^3)
    let q = 0.1f64;
    let t = -q.ln();
    let lhs = a_c(omega() * q)?.powu(2).im;
    let rhs = 2.0 * 3.0f64.sqrt() * b_exp(t) * c_exp(3.0 * t);
    pairs.push((lhs, rhs));
    // complex sample: a^2(omega q) = (b(q) + i sqrt(3) c(q^3))^2
    let q = C::new(0.2, 0.1);
    let lhs = a_c(omega() * q)?.powu(2);
    let rhs = (b_of_c(q)? + C::i() * 3.0f64.sqrt() * c_of_q_cubed(q)?).powu(2);
    pairs.extend(split_c(lhs, rhs));
    num(pairs)
}

fn qs_psi_omega() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for q in [C::new(0.1, 0.0), C::new(0.2, 0.1)] {
        let q2 = q * q;
        let lhs = 2.0 * psi_c(omega() * omega() * q2)?;
        let q18 = q2.powu(9);
        let rhs = 2.0 * psi_c(q2)? - (C::new(3.0, 3.0f64.sqrt())) * q2 * psi_c(q18)?;
        pairs.extend(split_c(lhs, rhs));
    }
    num(pairs)
}

fn qs_eisen_chi6() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for q in [0.1f64, 0.3] {
        let lhs = lambert_eval(&CHI_6, LambertVariant::RWeighted, q)?;
        let qc = C::new(q, 0.0);
        let inner = omega() * qc * psi_c(omega() * omega() * qc * qc)?.powu(4);
        let rhs = 2.0 / 3.0f64.sqrt() * inner.im;
        pairs.push((lhs, rhs));
    }
    num(pairs)
}

fn lambert_chi3_bc() -> Result<CheckOutcome> {
    let q = 0.3f64;
    let t = -q.ln();
    let lhs = lambert_eval(&CHI_M3, LambertVariant::RWeighted, q)?;
    let rhs = b_exp(t) * c_exp(3.0 * t) / 3.0;
    num(vec![(lhs, rhs)])
}

fn lambert_chi4_psi() -> Result<CheckOutcome> {
    let q = 0.25f64;
    let t = -q.ln();
    let lhs = lambert_eval(&CHI_M4, LambertVariant::RWeighted, q)?;
    let rhs = q * psi_neg_exp(2.0 * t).powi(4);
    num(vec![(lhs, rhs)])
}

// --- headline records -----------------------------------------------------------

fn m8_m2_f23() -> Result<CheckOutcome> {
    let m8 = mahler_hyper_m(8.0)?;
    let m2 = mahler_hyper_m(2.0)?;
    let f23 = f_integral(&spec(2, 1, 3, 1)?)?;
    num(vec![(m8, 4.0 * m2), (m8, 24.0 / (PI * PI) * f23)])
}

fn g4_n32_f15() -> Result<CheckOutcome> {
    let g4 = g_via_j(4.0)?;
    let n32 = n_value(32.0f64.powf(1.0 / 3.0))?;
    let f15 = f_integral(&spec(1, 1, 5, 1)?)?;
    num(vec![(g4, 10.0 / (PI * PI) * f15), (g4, 0.75 * n32)])
}

fn e27_3f2() -> Result<CheckOutcome> {
    let l = l_elliptic(27)?;
    let g13 = gamma_fn(1.0 / 3.0)?;
    let g23 = gamma_fn(2.0 / 3.0)?;
    let f1 = pfq_eval(&[1.0 / 3.0, 1.0 / 3.0, 1.0], &[2.0 / 3.0, 4.0 / 3.0], 1.0)?;
    let f2 = pfq_eval(&[2.0 / 3.0, 2.0 / 3.0, 1.0], &[4.0 / 3.0, 5.0 / 3.0], 1.0)?;
    let rhs = g13.powi(3) / 27.0 * f1 - g23.powi(3) / 18.0 * f2;
    num(vec![(l, rhs)])
}

fn e27_4f3() -> Result<CheckOutcome> {
    let l = l_elliptic(27)?;
    let f = pfq_eval(&[4.0 / 3.0, 5.0 / 3.0, 1.0, 1.0], &[2.0, 2.0, 2.0], -0.125)?;
    let rhs = 4.0 * PI * PI / 81.0 * (6.0f64.ln() + f / 108.0);
    num(vec![(l, rhs)])
}

fn e36_3f2() -> Result<CheckOutcome> {
    let l = l_elliptic(36)?;
    let g13 = gamma_fn(1.0 / 3.0)?;
    let g23 = gamma_fn(2.0 / 3.0)?;
    let f1 = pfq_eval(
        &[1.0 / 3.0, 1.0 / 3.0, 1.0],
        &[5.0 / 6.0, 4.0 / 3.0],
        -0.125,
    )?;
    let f2 = pfq_eval(
        &[2.0 / 3.0, 2.0 / 3.0, 1.0],
        &[7.0 / 6.0, 5.0 / 3.0],
        -0.125,
    )?;
    let rhs = -2.0 * PI * PI * 2.0f64.ln() / 27.0
        + g13.powi(3) / (3.0 * 2.0f64.powf(7.0 / 3.0)) * f1
        + g23.powi(3) / 2.0f64.powf(11.0 / 3.0) * f2;
    num(vec![(l, rhs)])
}

fn e36_g2() -> Result<CheckOutcome> {
    let l = l_elliptic(36)?;
    let rhs = 2.0 * PI * PI / 9.0 * g_via_j(2.0)?;
    num(vec![(l, rhs)])
}

fn g_half() -> Result<CheckOutcome> {
    let lhs = g_eval(0.5, GMethod::Definition)?;
    let rhs = -PI * PI * 2.0f64.ln() / 3.0;
    num(vec![(lhs, rhs)])
}

fn h_rel_f13() -> Result<CheckOutcome> {
    let h1 = h_eval(1.0, HMethod::Definition)?;
    let f13 = f_integral(&spec(1, 1, 3, 1)?)?;
    num(vec![(-h1, 9.0 * f13)])
}

fn h_rel_f11() -> Result<CheckOutcome> {
    let f11 = f_integral(&spec(1, 1, 1, 1)?)?;
    let h43 = h_eval(4.0 / 3.0, HMethod::Definition)?;
    let h112 = h_eval(1.0 / 12.0, HMethod::Definition)?;
    num(vec![(36.0 * f11, -4.0 * h43 + 0.25 * h112)])
}

fn h_rel_f37() -> Result<CheckOutcome> {
    let f = f_integral(&spec(3, 1, 7, 1)?)?;
    let h1 = h_eval(1.0, HMethod::Definition)?;
    let h7 = h_eval(7.0, HMethod::Definition)?;
    let h17 = h_eval(1.0 / 7.0, HMethod::Definition)?;
    num(vec![(27.0 / 16.0 * f, 8.0 / 7.0 * h1 - h7 - h17 / 49.0)])
}

fn h_rel_f67() -> Result<CheckOutcome> {
    let f = f_integral(&spec(6, 1, 7, 1)?)?;
    let h27 = h_eval(2.0 / 7.0, HMethod::Definition)?;
    let h14 = h_eval(14.0, HMethod::Definition)?;
    let h2 = h_eval(2.0, HMethod::Definition)?;
    num(vec![(27.0 / 49.0 * f, h27 / 49.0 + h14 - 8.0 / 7.0 * h2)])
}

fn h_rel_f32_7() -> Result<CheckOutcome> {
    let f = f_integral(&spec(3, 2, 7, 1)?)?;
    let h12 = h_eval(0.5, HMethod::Definition)?;
    let h72 = h_eval(3.5, HMethod::Definition)?;
    let h114 = h_eval(1.0 / 14.0, HMethod::Definition)?;
    num(vec![(
        27.0 / 25.0 * f,
        2.0 / 7.0 * h12 - 0.25 * h72 - h114 / 196.0,
    )])
}

fn h_def_eq_reduced() -> Result<CheckOutcome> {
    num(vec![(
        h_eval(1.0, HMethod::Definition)?,
        h_eval(1.0, HMethod::Reduced)?,
    )])
}

fn h_elementary() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for x in [1.0, 1.0 / 3.0] {
        pairs.push((
            h_eval(x, HMethod::Definition)?,
            h_eval(x, HMethod::Elementary)?,
        ));
    }
    num(pairs)
}

fn g_def_eq_real() -> Result<CheckOutcome> {
    num(vec![(
        g_eval(1.0, GMethod::Definition)?,
        g_eval(1.0, GMethod::RealReduced)?,
    )])
}

/// The omega-twisted route for G(1):
/// G(x) = (2pi/3x) Im int_0^1 omega q psi^4(omega^2 q^2)
///                        log(4 q^(3x) psi^4(q^(12x))/psi^4(q^(6x))) dq/q.
/// The twisted factor is evaluated through psi at the complex argument where
/// the direct theta sum converges, and through its conductor-6 Eisenstein
/// expansion sum sigma_1(m) chi_6(m) q^m closer to q = 1 (the equality of
/// the two is the QS_EISEN_CHI6 record).
fn g_imag_route() -> Result<CheckOutcome> {
    let x = 1.0f64;
    // sigma_1 chi_6 sieve for the near-cusp region
    const CUT: usize = 3_000_000;
    let sieved = |u: f64| -> f64 {
        let m_max = ((42.0 / u).ceil() as usize).min(CUT);
        let mut sigma = vec![0i64; m_max + 1];
        for d in 1..=m_max {
            let mut m = d;
            while m <= m_max {
                sigma[m] += d as i64;
                m += d;
            }
        }
        let mut s = 0.0;
        for m in 1..=m_max {
            let cv = CHI_6.eval(m as i64);
            if cv != 0 {
                s += (cv * sigma[m]) as f64 * (-u * m as f64).exp();
            }
        }
        3.0f64.sqrt() / 2.0 * s
    };
    let twisted = |u: f64| -> f64 {
        if u >= 0.05 {
            let q2 = (-2.0 * u).exp();
            let inner = omega()
                * (-u).exp()
                * psi_c(omega() * omega() * q2)
                    .map(|p| p.powu(4))
                    .unwrap_or(C::new(f64::NAN, f64::NAN));
            inner.im
        } else {
            sieved(u)
        }
    };
    let a_psi = |t: f64| {
        let e2 = eta_exp(2.0 * t);
        e2 * e2 / eta_exp(t)
    };
    let r = crate::numerics::integrate_semiinf(
        |u| {
            let ratio = a_psi(12.0 * x * u) / a_psi(6.0 * x * u);
            let lnf = (4.0 * ratio.powi(4)).ln();
            if lnf == 0.0 || !lnf.is_finite() {
                return 0.0;
            }
            let t = twisted(u);
            if t.is_finite() {
                t * lnf
            } else {
                0.0
            }
        },
        1e-9,
    )?;
    let lhs = 2.0 * PI / (3.0 * x) * r.value;
    num(vec![(lhs, g_eval(1.0, GMethod::RealReduced)?)])
}

fn g1_elementary() -> Result<CheckOutcome> {
    let g1 = g_eval(1.0, GMethod::ElementaryX1)?;
    let l24 = l_elliptic(24)?;
    num(vec![(g1, -4.0 * l24)])
}

fn th_f23() -> Result<CheckOutcome> {
    let l24 = l_elliptic(24)?;
    let g1 = g_eval(1.0, GMethod::Definition)?;
    let m2 = mahler_hyper_m(2.0)?;
    num(vec![(l24, -g1 / 4.0), (l24, PI * PI / 6.0 * m2)])
}

fn s_rel() -> Result<CheckOutcome> {
    let s1 = s_eval(1.0, SMethod::Definition)?;
    let s5 = s_eval(5.0, SMethod::Definition)?;
    let l20 = l_elliptic(20)?;
    num(vec![(s1 - s5, -4.0 * l20)])
}

fn s_def_eq_reduced() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for x in [1.0, 5.0] {
        pairs.push((
            s_eval(x, SMethod::Definition)?,
            s_eval(x, SMethod::Reduced)?,
        ));
    }
    num(pairs)
}

fn e20_elementary_record() -> Result<CheckOutcome> {
    num(vec![(elementary_e20()?, l_elliptic(20)?)])
}

fn lemk1() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for lambda in [1.0f64, 2.0, 5.0] {
        let (v1, v2) = f1_f2(lambda)?;
        let rhs = PI * pfq_eval(&[0.5, 0.5, 0.5], &[1.5, 1.0], 1.0 / (lambda * lambda))?;
        pairs.push((v1 - v2, rhs));
    }
    num(pairs)
}

fn lemk2() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for lambda in [1.0f64, 2.0, 5.0] {
        let (v1, _) = f1_f2(lambda)?;
        let z = 1.0 / (lambda * lambda);
        let f3 = pfq_eval(&[0.5, 0.5, 0.5], &[1.5, 1.0], z)?;
        let f4 = pfq_eval(&[1.5, 1.5, 1.0, 1.0], &[2.0, 2.0, 2.0], z)?;
        let rhs = PI / 2.0 * (4.0 * lambda).ln() + PI / 2.0 * f3 - PI * z / 16.0 * f4;
        pairs.push((v1, rhs));
    }
    num(pairs)
}

fn gn_coeff() -> Result<CheckOutcome> {
    let z = 0.5f64;
    let mut sum = 0.0;
    for n in 0..=30 {
        let nf = n as f64;
        let g = gamma_fn(nf + 1.5)? * gamma_fn(nf + 0.5)?
            / ((2.0 * nf + 1.0) * gamma_fn(nf + 1.0)?.powi(2));
        sum += g * z.powi(n);
    }
    let quad = integrate_finite_sing(
        |t, xc| {
            let (near0, near1) = if xc > 0.0 { (xc, 1.0 - t) } else { (t, -xc) };
            near1.sqrt() / ((1.0 - z * t * t) * (near0 * (1.0 - z * t)).sqrt())
        },
        0.0,
        1.0,
        1e-12,
    )?;
    num(vec![(sum, quad.value)])
}

fn elliptic_fourier() -> Result<CheckOutcome> {
    let alpha = 0.5f64;
    let params = modulus_params(alpha)?;
    let mut pairs = Vec::new();
    for frac in [0.3, 0.7] {
        let u = frac * params.big_k;
        let (sn, cn, dn) = jacobi(u, alpha)?;
        let lhs = cn * cn * dn * dn / (1.0 - alpha * sn.powi(4));
        let rhs = fourier_cn2dn2(u, &params, 400);
        pairs.push((lhs, rhs));
    }
    num(pairs)
}

/// int_0^1 sqrt((1-v^2)(1-a v^2))/(1-a v^4) * weight(v) dv
fn sn_kernel_moment(alpha: f64, weight: impl Fn(f64, f64) -> f64) -> Result<f64> {
    Ok(integrate_finite_sing(
        |v, xc| {
            let one_minus_v = if xc < 0.0 { -xc } else { 1.0 - v };
            let one_minus_v2 = one_minus_v * (1.0 + v);
            let kernel = (one_minus_v2 * (1.0 - alpha * v * v)).sqrt() / (1.0 - alpha * v.powi(4));
            kernel * weight(v, one_minus_v2)
        },
        0.0,
        1.0,
        1e-11,
    )?
    .value)
}

fn sncndn_sn() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for alpha in [0.25f64, 0.5, 0.81] {
        let i = sn_kernel_moment(alpha, |v, _| v.ln())?;
        let sa = alpha.sqrt();
        let rhs = mahler_hyper_m(4.0 / sa)? + mahler_hyper_m(4.0 * sa)? / sa + sa.ln();
        pairs.push((-8.0 / PI * i, rhs));
    }
    num(pairs)
}

fn sncndn_cn() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for alpha in [0.25f64, 0.5, 0.81] {
        let i = sn_kernel_moment(alpha, |_, omv2| omv2.ln())?;
        let sa = alpha.sqrt();
        let rhs = 2.0 * mahler_hyper_m(4.0 / sa)?
            + (alpha / (1.0 - alpha)).ln()
            + ((1.0 - sa) / (1.0 + sa)).ln() / sa;
        pairs.push((-8.0 / PI * i, rhs));
    }
    num(pairs)
}

fn sncndn_dn() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for alpha in [0.25f64, 0.5, 0.81] {
        let i = sn_kernel_moment(alpha, |v, _| (1.0 - alpha * v * v).ln())?;
        let sa = alpha.sqrt();
        let rhs = 2.0 / sa * mahler_hyper_m(4.0 * sa)? - (1.0 - alpha).ln()
            + ((1.0 - sa) / (1.0 + sa)).ln() / sa;
        pairs.push((-8.0 / PI * i, rhs));
    }
    num(pairs)
}

fn pi4_integral() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for alpha in [0.0f64, 0.3, 0.9] {
        let i = sn_kernel_moment(alpha, |_, _| 1.0)?;
        pairs.push((i, PI / 4.0));
    }
    num(pairs)
}

fn pi4_third_kind() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for alpha in [0.1f64, 0.3, 0.7] {
        pairs.push((h_alpha(alpha)?, PI / 4.0));
    }
    num(pairs)
}

fn ko_funceq() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for alpha in [0.2f64, 0.5, 0.9] {
        let quarter = alpha.powf(0.25);
        let lhs = 2.0 * mahler_hyper_m(2.0 * (quarter + 1.0 / quarter))?;
        let rhs = mahler_hyper_m(4.0 * alpha.sqrt())? + mahler_hyper_m(4.0 / alpha.sqrt())?;
        pairs.push((lhs, rhs));
    }
    num(pairs)
}

fn t5_quadrature(y: f64) -> Result<f64> {
    Ok(integrate_finite_sing(
        |t, xc| {
            let (near0, near1) = if xc > 0.0 { (xc, 1.0 - t) } else { (t, -xc) };
            let quartic = 4.0 + (4.0 - y) * y * t + y * y * t * t;
            1.0 / (near0 * near1 * quartic).sqrt()
        },
        0.0,
        1.0,
        1e-12,
    )?
    .value
        / (2.0 * PI))
}

fn t5_hyper_side(y: f64) -> Result<f64> {
    Ok(hyp2f1_13_23_1(27.0 * y * y / (y + 4.0).powi(3))? / (y + 4.0))
}

fn l1_t5() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for y in [2.0f64, 5.0, 7.0] {
        pairs.push((t5_quadrature(y)?, t5_hyper_side(y)?));
    }
    num(pairs)
}

fn t5a_cubic() -> Result<CheckOutcome> {
    let p = 0.7f64;
    let z1 = 27.0 * p * p * (1.0 + p) * (1.0 + p) / (4.0 * (1.0 + p + p * p).powi(3));
    let lhs = hyp2f1_13_23_1(z1)? / (1.0 + p + p * p);
    let z2 = p.powi(3) * (2.0 + p) / (1.0 + 2.0 * p);
    let rhs = pfq_eval(&[0.5, 0.5], &[1.0], z2)? / (1.0 + 2.0 * p).sqrt();
    num(vec![(lhs, rhs)])
}

fn l2_djdy() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for y in [3.0f64, 5.0, 7.0] {
        let dj = diff4(j_y, y, 1e-3)?;
        pairs.push((dj, t5_hyper_side(y)?));
    }
    num(pairs)
}

fn dg_dy() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for y in [3.0f64, 5.0, 7.0] {
        let dg = diff4(|t| mahler_direct(Family::G, t), y, 1e-3)?;
        pairs.push((dg, t5_hyper_side(y)?));
    }
    num(pairs)
}

fn th1_jg() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for y in [2.0f64, 4.0, 6.0, 8.0] {
        pairs.push((j_y(y)?, mahler_direct(Family::G, y)?));
    }
    num(pairs)
}

fn th20_k() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for k in [2.0f64, 3.0] {
        let y = 2.0 * k / (k - 1.0);
        pairs.push((j_y(y)?, theorem20_rhs(k)?));
    }
    num(pairs)
}

fn cor0_chain() -> Result<CheckOutcome> {
    let v0 = 10.0 / (PI * PI) * l_elliptic(20)?;
    let s5 = 5.0f64.sqrt();
    let v1 = 2.0 * g_value(4.0 + 2.0 * s5)? - g_value(8.0 + 4.0 * s5)?;
    let v2 = g_via_j(4.0)?;
    let v3 = 0.75 * n_value(32.0f64.powf(1.0 / 3.0))?;
    num(vec![(v0, v1), (v0, v2), (v0, v3)])
}

fn cor00_n() -> Result<CheckOutcome> {
    let lhs = mahler_direct(Family::N, 2.0f64.powf(1.0 / 3.0))?;
    let rhs = 25.0 / (6.0 * PI * PI) * l_elliptic(20)?;
    num(vec![(lhs, rhs)])
}

fn cor00_g() -> Result<CheckOutcome> {
    let lhs = mahler_direct(Family::G, -2.0)?;
    let rhs = 15.0 / (PI * PI) * l_elliptic(20)?;
    num(vec![(lhs, rhs)])
}

fn exotic() -> Result<CheckOutcome> {
    let croot4 = 4.0f64.powf(1.0 / 3.0);
    let s5 = 5.0f64.sqrt();
    let lhs = 16.0 * n_value((7.0 + s5) / croot4)? - 8.0 * n_value((7.0 - s5) / croot4)?;
    let rhs = 19.0 * n_value(32.0f64.powf(1.0 / 3.0))?;
    num(vec![(lhs, rhs)])
}

// The source prints these with n(2^(1/3)); inside (0,3) the relations are
// about the hypergeometric branch of n, so that value is used here.  The
// first combination fails by ~1 under every branch reading (and is
// inconsistent with the g(-2) and g(4) evaluations it is cited alongside);
// it is kept as printed and reads FAIL.
fn lr_226_a() -> Result<CheckOutcome> {
    let lhs = 3.0 * mahler_direct(Family::G, -2.0)?;
    let rhs = n_branch(2.0f64.powf(1.0 / 3.0))? + 4.0 * n_value(2.0f64.powf(5.0 / 3.0))?;
    num(vec![(lhs, rhs)])
}

fn lr_226_b() -> Result<CheckOutcome> {
    let lhs = 3.0 * g_via_j(4.0)?;
    let rhs = 4.0 * n_branch(2.0f64.powf(1.0 / 3.0))? + n_value(2.0f64.powf(5.0 / 3.0))?;
    num(vec![(lhs, rhs)])
}

fn cor00_n_branch() -> Result<CheckOutcome> {
    let lhs = n_branch(2.0f64.powf(1.0 / 3.0))?;
    let rhs = 25.0 / (6.0 * PI * PI) * l_elliptic(20)?;
    num(vec![(lhs, rhs)])
}

fn func_eq_g() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for p in [0.4f64, 0.7, 1.0] {
        let lhs = mahler_direct(Family::G, 4.0 * p * (1.0 + p))?
            + mahler_direct(Family::G, 4.0 * (1.0 + p) / (p * p))?;
        let rhs = 2.0 * mahler_direct(Family::G, 2.0 * (1.0 + p) * (1.0 + p) / p)?;
        pairs.push((lhs, rhs));
    }
    num(pairs)
}

fn f59_a() -> Result<CheckOutcome> {
    let f59 = f_integral(&spec(5, 1, 9, 1)?)?;
    let f11 = f_integral(&spec(1, 1, 1, 1)?)?;
    let f15 = f_integral(&spec(1, 1, 5, 1)?)?;
    num(vec![(9.0 * f59, 45.0 * f11 - 50.0 * f15)])
}

fn f59_b() -> Result<CheckOutcome> {
    let f59 = f_integral(&spec(5, 1, 9, 1)?)?;
    let lhs = 18.0 / (5.0 * PI * PI) * f59;
    let rhs = mahler_direct(Family::G, -4.0)? - 2.0 * g_via_j(4.0)?;
    num(vec![(lhs, rhs)])
}

// --- w-curve suite -----------------------------------------------------------

fn w_suite_ode() -> Result<CheckOutcome> {
    let k = 2.0f64;
    let params = w_periods(k)?;
    let mut worst = 0.0f64;
    for i in 1..=10 {
        let x = params.period_k * i as f64 / 11.0;
        let w = w_curve(x, k)?;
        let dw = w_curve_derivative(x, k)?;
        let lhs = dw * dw;
        let rhs = 4.0 * w * ((1.0 - k) * (1.0 - k) - w * (1.0 - k * w) * (1.0 - k * w));
        worst = worst.max((lhs - rhs).abs() / (1.0 + lhs.abs()));
    }
    num(vec![(worst, 0.0)])
}

fn w_suite_wk() -> Result<CheckOutcome> {
    let params = w_periods(2.0)?;
    num(vec![(w_curve(params.period_k, 2.0)?, 1.0)])
}

fn w_suite_fourier() -> Result<CheckOutcome> {
    let k = 2.0f64;
    let params = w_periods(k)?;
    let x = 0.6 * params.period_k;
    let (wf, _) = w_fourier(x, k, 200)?;
    num(vec![(wf, w_curve(x, k)?)])
}

fn w_suite_logform() -> Result<CheckOutcome> {
    let k = 2.0f64;
    let params = w_periods(k)?;
    let (_, logform) = w_fourier(params.period_k, k, 200)?;
    num(vec![(logform, ((3.0 * k - 1.0) / (k - 1.0)).ln())])
}

fn w_suite_2k() -> Result<CheckOutcome> {
    let k = 2.0f64;
    let params = w_periods(k)?;
    let q = sig3_nome(k)?;
    num(vec![(2.0 * params.period_k, -PI * a_real(-q)?)])
}

fn w_suite_mult() -> Result<CheckOutcome> {
    let k = 2.0f64;
    let q = sig3_nome(k)?;
    let p = 0.5 * (-1.0 + ((3.0 * k - 1.0) / (k - 1.0)).sqrt());
    let t = -q.ln();
    let ratio = (phi_exp(t) / phi_exp(3.0 * t)).powi(2);
    num(vec![(1.0 + 2.0 * p, ratio)])
}

// --- modular relation numerics --------------------------------------------------

/// alpha(q) = 1 - phi^4(-q)/phi^4(q) at q = e^-t.
fn alpha_of(t: f64) -> f64 {
    1.0 - (phi_neg_exp(t) / phi_exp(t)).powi(4)
}

fn param_deg3() -> Result<CheckOutcome> {
    let q = 0.1f64;
    let t = -q.ln();
    let alpha = alpha_of(t);
    let beta = alpha_of(3.0 * t);
    let mut pairs = Vec::new();
    // modular polynomial
    let lhs = (alpha * alpha + beta * beta + 6.0 * alpha * beta).powi(2);
    let rhs = 16.0 * alpha * beta * (4.0 * (1.0 + alpha * beta) - 3.0 * (alpha + beta)).powi(2);
    pairs.push((lhs, rhs));
    // rational parametrization: find p in (0,1) with alpha = p(2+p)^3/(1+2p)^3
    let target = |p: f64| p * (2.0 + p).powi(3) / (1.0 + 2.0 * p).powi(3);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if target(mid) < alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p = 0.5 * (lo + hi);
    let beta_from_p = p.powi(3) * (2.0 + p) / (1.0 + 2.0 * p);
    pairs.push((beta, beta_from_p));
    num(pairs)
}

fn alpha_m_deg5() -> Result<CheckOutcome> {
    let mut pairs = Vec::new();
    for q in [0.05f64, 0.15] {
        let t = -q.ln();
        let m = (phi_exp(t) / phi_exp(5.0 * t)).powi(2);
        let alpha = alpha_of(t);
        pairs.push((
            4.0 * alpha * (1.0 - alpha),
            (m - 1.0) * (5.0 - m).powi(5) / (64.0 * m.powi(5)),
        ));
        let psi_ratio = q * q * (psi_neg_exp(5.0 * t) / psi_neg_exp(t)).powi(4);
        pairs.push((1.0 - psi_ratio, 8.0 * (3.0 - m) / (5.0 - m).powi(2)));
    }
    num(pairs)
}

fn deg2_modular() -> Result<CheckOutcome> {
    // ascending Landen: alpha evaluated at nome q equals
    // 4 sqrt(alpha(q^2)) / (1 + sqrt(alpha(q^2)))^2
    let q = 0.1f64;
    let t = -q.ln();
    let lhs = alpha_of(t);
    let a2 = alpha_of(2.0 * t).sqrt();
    let rhs = 4.0 * a2 / (1.0 + a2) / (1.0 + a2);
    num(vec![(lhs, rhs)])
}

// --- negative controls -----------------------------------------------------------

fn negctrl_phi_psi() -> Result<CheckOutcome> {
    exact(EtaExpr::Phi(r(1, 1)), EtaExpr::Psi(r(1, 1)), 5)
}

fn negctrl_m8_scale() -> Result<CheckOutcome> {
    num(vec![(mahler_hyper_m(8.0)?, 3.0 * mahler_hyper_m(2.0)?)])
}
