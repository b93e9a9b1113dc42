//! Mahler measures of the three polynomial families
//!
//! - family M:  alpha + X + 1/X + Y + 1/Y
//! - family G:  (1+X)(1+Y)(X+Y) - alpha XY
//! - family N:  X^3 + Y^3 + 1 - alpha XY
//!
//! by a direct Jensen-reduction quadrature (the oracle, valid for every real
//! alpha) and by hypergeometric closed forms (fast, domain-restricted).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypergeo::pfq_eval;
use crate::numerics::{integrate_finite_sing, poly_roots};

type C = Complex64;

/// Polynomial family selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    M,
    G,
    N,
}

/// Evaluation route for a Mahler measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Auto,
    Direct,
    Hyper,
    JIntegral,
}

/// A Mahler-measure evaluation request.
#[derive(Clone, Copy, Debug)]
pub struct MahlerQuery {
    pub family: Family,
    pub alpha: f64,
    pub route: Route,
}

/// Coefficients (low to high in X) of the family polynomial at Y on the unit
/// circle. Family M is multiplied through by X, which leaves the measure
/// unchanged.
fn coefficients(family: Family, alpha: f64, y: C) -> Vec<C> {
    let one = C::new(1.0, 0.0);
    match family {
        Family::M => {
            let c = alpha + y.re * 2.0; // alpha + Y + 1/Y on |Y| = 1
            vec![one, C::new(c, 0.0), one]
        }
        Family::G => {
            let ly = one + y;
            vec![y * ly, ly * ly - alpha * y, ly]
        }
        Family::N => {
            // X^3 - alpha Y X + (Y^3 + 1)
            vec![y * y * y + one, -alpha * y, C::new(0.0, 0.0), one]
        }
    }
}

/// Jensen integrand at Y = exp(2 pi i s): sum of log+ |root|.
///
/// The log|leading coefficient| term integrates to zero by Jensen's formula
/// in the Y variable (the leading coefficients here are 1 or 1 + Y), so it
/// is omitted; `leading_term_integral` checks that numerically.
fn jensen_integrand(family: Family, alpha: f64, s: f64) -> f64 {
    let y = C::from_polar(1.0, 2.0 * std::f64::consts::PI * s);
    let coeffs = coefficients(family, alpha, y);
    let roots = match poly_roots(&coeffs) {
        Ok(r) => r,
        Err(_) => {
            // degenerate leading coefficient at measure-zero s: perturb
            let y2 = C::from_polar(1.0, 2.0 * std::f64::consts::PI * s + 1e-9);
            match poly_roots(&coefficients(family, alpha, y2)) {
                Ok(r) => r,
                Err(_) => return 0.0,
            }
        }
    };
    let mut acc = 0.0;
    for r in roots {
        let m = r.norm();
        // log+ with a dead zone at the unit circle
        if m > 1.0 + 1e-14 {
            acc += m.ln();
        }
    }
    acc
}

/// Number of roots strictly outside the unit circle; kinks of the Jensen
/// integrand happen where this count changes.
fn outside_count(family: Family, alpha: f64, s: f64) -> usize {
    let y = C::from_polar(1.0, 2.0 * std::f64::consts::PI * s);
    match poly_roots(&coefficients(family, alpha, y)) {
        Ok(roots) => roots.iter().filter(|r| r.norm() > 1.0).count(),
        Err(_) => usize::MAX,
    }
}

/// Direct (Jensen-reduced) Mahler measure; works for every real alpha.
///
/// The s-integral runs over (0, 1/2) (the integrand is even about s = 1/2)
/// and is split at the points where roots cross the unit circle.
pub fn mahler_direct(family: Family, alpha: f64) -> Result<f64> {
    // locate kink points by scanning the outside-root count
    const SCAN: usize = 768;
    let mut cuts = vec![0.0f64];
    let mut prev = outside_count(family, alpha, 0.5 / SCAN as f64 * 0.5);
    let mut prev_s = 0.5 / SCAN as f64 * 0.5;
    for i in 1..=SCAN {
        let s = 0.5 * i as f64 / SCAN as f64;
        let s = s.min(0.5 - 1e-12);
        let count = outside_count(family, alpha, s);
        if count != prev {
            // bisect the crossing
            let (mut lo, mut hi) = (prev_s, s);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if outside_count(family, alpha, mid) == prev {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            cuts.push(0.5 * (lo + hi));
            prev = count;
        }
        prev_s = s;
    }
    cuts.push(0.5);

    let mut total = 0.0;
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a < 1e-13 {
            continue;
        }
        total += jensen_panel(family, alpha, a, b, 0)?;
    }
    Ok(2.0 * total)
}

/// One tanh-sinh panel of the Jensen integral, bisecting on slow convergence
/// (root crossings narrower than the kink scan can hide inside a panel).
fn jensen_panel(family: Family, alpha: f64, a: f64, b: f64, depth: u32) -> Result<f64> {
    match integrate_finite_sing(|s, _| jensen_integrand(family, alpha, s), a, b, 1e-11) {
        Ok(r) => Ok(r.value),
        Err(Error::Convergence {
            best, err_estimate, ..
        }) => {
            if depth >= 7 {
                if err_estimate <= 1e-8 {
                    return Ok(best);
                }
                return Err(Error::Convergence {
                    what: format!("Jensen panel [{a}, {b}]"),
                    best,
                    err_estimate,
                });
            }
            let mid = 0.5 * (a + b);
            Ok(jensen_panel(family, alpha, a, mid, depth + 1)?
                + jensen_panel(family, alpha, mid, b, depth + 1)?)
        }
        Err(e) => Err(e),
    }
}

/// int_0^1 log|1 + exp(2 pi i s)| ds — zero by Jensen, evaluated numerically
/// as a self-check of the dropped leading term for family G.
pub fn leading_term_integral() -> Result<f64> {
    // |1 + e^(2 pi i s)| = 2 |cos(pi s)|; integrate over (0, 1/2) and double
    let r = integrate_finite_sing(
        |s, sc| {
            let cosine = if sc < 0.0 {
                // near s = 1/2: cos(pi s) = sin(pi (1/2 - s))
                (std::f64::consts::PI * -sc).sin()
            } else {
                (std::f64::consts::PI * s).cos()
            };
            (2.0 * cosine).ln()
        },
        0.0,
        0.5,
        1e-13,
    )?;
    Ok(2.0 * r.value)
}

// --- hypergeometric closed forms -------------------------------------------

const F43_PARAMS_M: ([f64; 4], [f64; 3]) = ([1.5, 1.5, 1.0, 1.0], [2.0, 2.0, 2.0]);
const F43_PARAMS_CUBIC: ([f64; 4], [f64; 3]) = ([4.0 / 3.0, 5.0 / 3.0, 1.0, 1.0], [2.0, 2.0, 2.0]);

/// m(alpha) by the closed forms: the 3F2 form on 0 <= alpha <= 4, the 4F3
/// form for |alpha| >= 4 (m is even in alpha).
pub fn mahler_hyper_m(alpha: f64) -> Result<f64> {
    let a = alpha.abs();
    if a <= 4.0 {
        if alpha < 0.0 {
            // m is even; the 3F2 form is stated for alpha >= 0
            return mahler_hyper_m(a);
        }
        if a == 0.0 {
            return Ok(0.0);
        }
        let f = pfq_eval(&[0.5, 0.5, 0.5], &[1.0, 1.5], a * a / 16.0)?;
        Ok(a / 4.0 * f)
    } else {
        let (up, lo) = F43_PARAMS_M;
        let f = pfq_eval(&up, &lo, 16.0 / (a * a))?;
        Ok(a.ln() - 2.0 / (a * a) * f)
    }
}

/// The auxiliary function f(z) = -log(z)/3 - 2z 4F3(4/3,5/3,1,1;2,2,2;27z),
/// defined for 0 < z <= 1/27.
pub fn f_aux(z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 1.0 / 27.0 + 1e-15) {
        return Err(Error::domain(format!("f_aux needs 0 < z <= 1/27, got {z}")));
    }
    let (up, lo) = F43_PARAMS_CUBIC;
    let f = pfq_eval(&up, &lo, (27.0 * z).min(1.0))?;
    Ok(-z.ln() / 3.0 - 2.0 * z * f)
}

/// n(alpha) by the hypergeometric form, for alpha >= 3.05 (27/alpha^3 safely
/// inside the summation domain).
pub fn mahler_hyper_n(alpha: f64) -> Result<f64> {
    if alpha < 3.05 {
        return Err(Error::domain(format!(
            "hypergeometric n(alpha) needs alpha >= 3.05, got {alpha}; use the direct route"
        )));
    }
    f_aux(1.0 / alpha.powi(3))
}

/// g(alpha) by the f-decomposition, valid for alpha > 8 where both arguments
/// lie in (0, 1/27].
pub fn mahler_hyper_g(alpha: f64) -> Result<f64> {
    if alpha <= 8.0 {
        return Err(Error::domain(format!(
            "hypergeometric g(alpha) needs alpha > 8, got {alpha}; use the J route or direct"
        )));
    }
    let z1 = alpha * alpha / (alpha + 4.0).powi(3);
    let z2 = alpha / (alpha - 2.0).powi(3);
    Ok(f_aux(z1)? / 3.0 + 4.0 / 3.0 * f_aux(z2)?)
}

/// g(y) through the J(y) integral; the two functions agree on [2, 8].
pub fn g_via_j(y: f64) -> Result<f64> {
    if !(2.0..=8.0).contains(&y) {
        return Err(Error::domain(format!(
            "the J route for g is valid on [2, 8], got {y}"
        )));
    }
    crate::lvalues::j_y(y)
}

/// Routed g(alpha): J integral on [2, 8], f-decomposition above 8, direct
/// Jensen quadrature everywhere else.
pub fn g_value(alpha: f64) -> Result<f64> {
    if (2.0..=8.0).contains(&alpha) {
        g_via_j(alpha)
    } else if alpha > 8.0 {
        mahler_hyper_g(alpha)
    } else {
        mahler_direct(Family::G, alpha)
    }
}

/// Routed n(alpha): hypergeometric when safely convergent, direct otherwise.
pub fn n_value(alpha: f64) -> Result<f64> {
    if alpha >= 3.05 {
        mahler_hyper_n(alpha)
    } else {
        mahler_direct(Family::N, alpha)
    }
}

/// The hypergeometric branch of n continued to 0 < alpha < 3.
///
/// Inside (0, 3) the polynomial X^3 + Y^3 + 1 - alpha XY vanishes on the
/// torus and the Mahler measure departs from the analytic continuation of
/// the large-alpha formula; the L-value relations of the literature hold for
/// the continued branch.  The continuation is performed along the real axis:
/// with f'(z) = -(1/3z) 2F1(1/3,2/3;1;27z) and the cubic transformation
/// Re 2F1(1/3,2/3;1;27y/(y-2)^3) = ((y-2)/(y+4)) 2F1(1/3,2/3;1;27y^2/(y+4)^3),
/// the branch value becomes
///   n~(alpha) = f(1/27) - (2/3) int_{y(alpha)}^{8} (y+1)/(y(y+4))
///               2F1(1/3,2/3;1;27y^2/(y+4)^3) dy,
/// where y(alpha) in (2, 8] solves (y-2)^3 = alpha^3 y.
pub fn n_branch(alpha: f64) -> Result<f64> {
    if !(0.0 < alpha && alpha < 3.0) {
        return Err(Error::domain(format!(
            "the branch continuation applies on 0 < alpha < 3, got {alpha}; n_value covers the rest"
        )));
    }
    let a3 = alpha.powi(3);
    // (y-2)^3 - a^3 y is increasing from -2a^3 at y = 2 to 216 - 8a^3 > 0 at 8
    let (mut lo, mut hi) = (2.0f64, 8.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (mid - 2.0).powi(3) < a3 * mid {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let y_alpha = 0.5 * (lo + hi);
    let tail = crate::numerics::integrate_finite_sing(
        |y, xc| {
            // 1 - sigma = (8-y)^2 (y+1) / (y+4)^3 exactly
            let from8 = if xc < 0.0 { -xc } else { 8.0 - y };
            let w = from8 * from8 * (y + 1.0) / (y + 4.0).powi(3);
            let f = crate::hypergeo::hyp2f1_13_23_1_from_w(w).unwrap_or(f64::NAN);
            (y + 1.0) / (y * (y + 4.0)) * f
        },
        y_alpha,
        8.0,
        1e-10,
    )?
    .value;
    Ok(f_aux(1.0 / 27.0)? - 2.0 / 3.0 * tail)
}

/// Dispatch a [`MahlerQuery`].
pub fn evaluate(query: &MahlerQuery) -> Result<f64> {
    match query.route {
        Route::Direct => mahler_direct(query.family, query.alpha),
        Route::Hyper => match query.family {
            Family::M => mahler_hyper_m(query.alpha),
            Family::G => mahler_hyper_g(query.alpha),
            Family::N => mahler_hyper_n(query.alpha),
        },
        Route::JIntegral => match query.family {
            Family::G => g_via_j(query.alpha),
            _ => Err(Error::domain("the J route applies to family g only")),
        },
        Route::Auto => match query.family {
            Family::M => mahler_hyper_m(query.alpha),
            Family::G => g_value(query.alpha),
            Family::N => n_value(query.alpha),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_of_zero_vanishes() {
        // (1+X)(1+Y)(X+Y) factors into one-variable-linear pieces
        let g0 = mahler_direct(Family::G, 0.0).unwrap();
        assert!(g0.abs() < 1e-10, "g(0) = {g0}");
    }

    #[test]
    fn m_eight_is_four_m_two_direct() {
        let m8 = mahler_direct(Family::M, 8.0).unwrap();
        let m2 = mahler_direct(Family::M, 2.0).unwrap();
        assert!((m8 - 4.0 * m2).abs() < 1e-8, "{m8} vs 4*{m2}");
    }

    #[test]
    fn m_even_in_alpha() {
        let plus = mahler_direct(Family::M, 3.0).unwrap();
        let minus = mahler_direct(Family::M, -3.0).unwrap();
        assert!((plus - minus).abs() < 1e-9, "{plus} vs {minus}");
    }

    #[test]
    fn direct_vs_two_dimensional_riemann_sum() {
        // coarse 2D oracle for m(2): run once before trusting the Jensen route
        let n = 2048usize;
        let alpha = 2.0;
        let mut sum = 0.0;
        for j in 0..n {
            let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / n as f64;
            for l in 0..n {
                let phi = 2.0 * std::f64::consts::PI * (l as f64 + 0.5) / n as f64;
                let p = alpha + 2.0 * theta.cos() + 2.0 * phi.cos();
                sum += p.abs().ln();
            }
        }
        let riemann = sum / (n * n) as f64;
        let jensen = mahler_direct(Family::M, alpha).unwrap();
        assert!(
            (riemann - jensen).abs() < 1e-4,
            "riemann {riemann} vs jensen {jensen}"
        );
    }

    #[test]
    fn hyper_matches_direct_for_m() {
        let direct = mahler_direct(Family::M, 2.0).unwrap();
        let hyper = mahler_hyper_m(2.0).unwrap();
        assert!((direct - hyper).abs() < 1e-8, "{direct} vs {hyper}");
        let d8 = mahler_direct(Family::M, 8.0).unwrap();
        let h8 = mahler_hyper_m(8.0).unwrap();
        assert!((d8 - h8).abs() < 1e-8, "{d8} vs {h8}");
    }

    #[test]
    fn hyper_m_at_zero() {
        assert_eq!(mahler_hyper_m(0.0).unwrap(), 0.0);
    }

    #[test]
    fn f_aux_small_argument_behavior() {
        // f(z) + log(z)/3 = -2z (1 + O(z))
        let z = 1e-6;
        let v = f_aux(z).unwrap() + z.ln() / 3.0;
        assert!((v + 2.0 * z).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn f_aux_matches_direct_n_and_g() {
        // n(4) = f(1/64)
        let direct = mahler_direct(Family::N, 4.0).unwrap();
        let via_f = f_aux(1.0 / 64.0).unwrap();
        assert!((direct - via_f).abs() < 1e-8, "{direct} vs {via_f}");
        // g(10) by the f-decomposition
        let direct_g = mahler_direct(Family::G, 10.0).unwrap();
        let hyper_g = mahler_hyper_g(10.0).unwrap();
        assert!((direct_g - hyper_g).abs() < 1e-8, "{direct_g} vs {hyper_g}");
    }

    #[test]
    fn n_asymptotics() {
        // n(alpha) - log(alpha) ~ -2/alpha^3
        let alpha = 100.0;
        let v = mahler_hyper_n(alpha).unwrap() - alpha.ln();
        let lead = -2.0 / alpha.powi(3);
        assert!((v / lead - 1.0).abs() < 1e-3, "ratio {}", v / lead);
    }

    #[test]
    fn m_asymptotics() {
        let v = mahler_hyper_m(1000.0).unwrap() - 1000.0f64.ln();
        assert!(v.abs() < 1e-5, "m(1000) - log 1000 = {v}");
    }

    #[test]
    fn kurokawa_ochiai_functional_equation() {
        // 2 m(2(a^(1/4) + a^(-1/4))) = m(4 sqrt a) + m(4 / sqrt a)
        for alpha in [0.2f64, 0.5, 0.9] {
            let q = alpha.powf(0.25);
            let lhs = 2.0 * mahler_hyper_m(2.0 * (q + 1.0 / q)).unwrap();
            let rhs = mahler_hyper_m(4.0 * alpha.sqrt()).unwrap()
                + mahler_hyper_m(4.0 / alpha.sqrt()).unwrap();
            assert!((lhs - rhs).abs() < 1e-8, "alpha = {alpha}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn dropped_leading_term_is_zero() {
        let v = leading_term_integral().unwrap();
        assert!(v.abs() < 1e-12, "leading term integral = {v}");
    }

    #[test]
    fn branch_continuation_inside_the_window() {
        // the continued branch differs from the raw measure inside (0,3) and
        // matches the conductor-20 L-value combination there
        let k = 2.0f64.powf(1.0 / 3.0);
        let branch = n_branch(k).unwrap();
        let l20 = crate::lvalues::l_elliptic(20).unwrap();
        let expected = 25.0 / (6.0 * std::f64::consts::PI.powi(2)) * l20;
        assert!((branch - expected).abs() < 1e-6, "{branch} vs {expected}");
        let raw = mahler_direct(Family::N, k).unwrap();
        assert!(
            (raw - branch).abs() > 0.1,
            "branch should differ from the measure here"
        );
        // outside the window the branch evaluator refuses
        assert!(n_branch(3.2).is_err());
    }

    #[test]
    fn hyper_domain_guards() {
        assert!(mahler_hyper_n(2.0).is_err());
        assert!(mahler_hyper_g(5.0).is_err());
        assert!(g_via_j(9.0).is_err());
        assert!(f_aux(0.2).is_err());
    }
}
