//! The doubly periodic parameterization w(x) = 3(1-k)^2 / (1 + 3 P(x)) of
//! the genus-one curve y^2 = 4x((1-k)^2 - x(1-kx)^2), valid for k > 4/3,
//! together with its periods, Fourier expansions and the signature-3 nome.

use num_complex::Complex64;

use super::weierstrass::{wp, wp_with_derivative};
use crate::error::{Error, Result};
use crate::hypergeo::hyp2f1_13_23_1;
use crate::numerics::integrate_finite_sing;

type C = Complex64;

/// Curve data for one k > 4/3.
#[derive(Clone, Copy, Debug)]
pub struct WCurveParams {
    pub k: f64,
    pub g2: f64,
    pub g3: f64,
    /// Real half period of w(x): w has periods 2K and 2K'.
    pub period_k: f64,
    /// The second (purely imaginary) half period.
    pub period_k_prime: C,
}

/// Weierstrass invariants of the curve.
pub fn invariants(k: f64) -> (f64, f64) {
    let g2 = -4.0 / 3.0 * (6.0 * k.powi(3) - 12.0 * k * k + 6.0 * k - 1.0);
    let g3 = 4.0 / 27.0
        * (2.0 - 6.0 * k + 3.0 * k * k)
        * (1.0 - 6.0 * k + 12.0 * k * k - 18.0 * k.powi(3) + 9.0 * k.powi(4));
    (g2, g3)
}

fn check_k(k: f64) -> Result<()> {
    if k < 4.0 / 3.0 + 1e-6 {
        return Err(Error::domain(format!(
            "w-curve degenerates at k = 4/3; need k > 4/3 + 1e-6, got {k}"
        )));
    }
    Ok(())
}

/// Half periods (K, K') of w(x).
///
/// K is computed by two independent quadratures — from the real zero of the
/// cubic and directly from the curve equation — which must agree to 1e-9.
/// K' comes from the straight-line integral to the upper-half-plane zero,
/// normalized so Re K' = 0 up to quadrature error and Im K' > 0.
pub fn w_periods(k: f64) -> Result<WCurveParams> {
    check_k(k)?;
    let (g2, g3) = invariants(k);
    // real zero of 4X^3 - g2 X - g3
    let r1 = (1.0 - k) * (1.0 - k) - 1.0 / 3.0;
    debug_assert!(
        (4.0 * r1.powi(3) - g2 * r1 - g3).abs() < 1e-9 * (1.0 + g3.abs()),
        "r1 is not a zero of the cubic"
    );

    // omega = int_0^inf dv / sqrt(v^4 + 3 r1 v^2 + c), via v = s/(1-s)
    let c = 3.0 * r1 * r1 - g2 / 4.0;
    let omega = integrate_finite_sing(
        |s, sc| {
            let one_minus = if sc < 0.0 { -sc } else { 1.0 - s };
            let v = s / one_minus;
            let f = 1.0 / (v.powi(4) + 3.0 * r1 * v * v + c).sqrt();
            f / (one_minus * one_minus)
        },
        0.0,
        1.0,
        1e-13,
    )?
    .value;

    // second route: K = int_0^1 dt / sqrt(4 t (1-t)(k^2 t^2 + k(k-2) t + (1-k)^2))
    let direct = integrate_finite_sing(
        |t, tc| {
            let (near, far) = if tc > 0.0 { (tc, 1.0 - t) } else { (-tc, t) };
            let quad = k * k * t * t + k * (k - 2.0) * t + (1.0 - k) * (1.0 - k);
            1.0 / (4.0 * near * far * quad).sqrt()
        },
        0.0,
        1.0,
        1e-13,
    )?
    .value;
    if (omega - direct).abs() > 1e-9 * omega.abs() {
        return Err(Error::Convergence {
            what: "w-curve period routes disagree".into(),
            best: omega,
            err_estimate: (omega - direct).abs(),
        });
    }

    // omega' = int over the straight segment from r1 to the upper-plane zero
    let disc = (3.0 * r1 * r1 - g2).sqrt();
    let r2 = C::new(-r1 / 2.0, disc / 2.0);
    let d = r2 - r1;
    // cubic factor along the segment: P(y(s)) = s(1-s) h(s) with h linear
    let h0 = -4.0 * d * d * (C::new(r1, 0.0) - r2.conj());
    let h1 = -4.0 * d * d * (r2 - r2.conj());
    // principal sqrt with a single branch flip where h crosses the cut
    let flip_at = {
        let di = h1.im - h0.im;
        if di.abs() > 0.0 {
            let s_star = -h0.im / di;
            if (0.0..1.0).contains(&s_star) {
                let re = h0.re + s_star * (h1.re - h0.re);
                if re < 0.0 {
                    Some(s_star)
                } else {
                    None
                }
            } else {
                None
            }
        } else {
            None
        }
    };
    let sqrt_h = |s: f64| -> C {
        let h = h0 + s * (h1 - h0);
        let mut r = h.sqrt();
        if let Some(s_star) = flip_at {
            if s > s_star {
                r = -r;
            }
        }
        r
    };
    let omega_prime_re = integrate_finite_sing(
        |s, sc| {
            let (near, far) = if sc > 0.0 { (sc, 1.0 - s) } else { (-sc, s) };
            let val = d / ((near * far).sqrt() * sqrt_h(s));
            val.re
        },
        0.0,
        1.0,
        1e-13,
    )?
    .value;
    let omega_prime_im = integrate_finite_sing(
        |s, sc| {
            let (near, far) = if sc > 0.0 { (sc, 1.0 - s) } else { (-sc, s) };
            let val = d / ((near * far).sqrt() * sqrt_h(s));
            val.im
        },
        0.0,
        1.0,
        1e-13,
    )?
    .value;
    let omega_prime = C::new(omega_prime_re, omega_prime_im);

    // The segment integral is the half period with P-value r2 up to lattice
    // translation; the combination 2 * segment - omega is the purely
    // imaginary half period of w. Normalize Im > 0.
    let mut kp = 2.0 * omega_prime - omega;
    if kp.im < 0.0 {
        kp = -kp;
    }
    Ok(WCurveParams {
        k,
        g2,
        g3,
        period_k: omega,
        period_k_prime: kp,
    })
}

/// w(x) = 3 (1-k)^2 / (1 + 3 P(x)).
pub fn w_curve(x: f64, k: f64) -> Result<f64> {
    check_k(k)?;
    let (g2, g3) = invariants(k);
    let p = wp(C::new(x, 0.0), g2, g3)?;
    let denom = 1.0 + 3.0 * p.re;
    if denom.abs() < 1e-9 * (1.0 + 3.0 * p.norm()) {
        return Err(Error::domain(format!("w(x) pole near x = {x}")));
    }
    if p.im.abs() > 1e-6 * p.norm() {
        return Err(Error::domain("P(x) unexpectedly complex for real x"));
    }
    Ok(3.0 * (1.0 - k) * (1.0 - k) / denom)
}

/// Derivative w'(x) through the Weierstrass route, for residual checks.
pub fn w_curve_derivative(x: f64, k: f64) -> Result<f64> {
    check_k(k)?;
    let (g2, g3) = invariants(k);
    let (p, dp) = wp_with_derivative(C::new(x, 0.0), g2, g3)?;
    let denom = 1.0 + 3.0 * p.re;
    Ok(-9.0 * (1.0 - k) * (1.0 - k) * dp.re / (denom * denom))
}

/// Nome of the w-curve Fourier expansions, via the signature-3 inversion:
/// q = exp(-(2 pi / sqrt 3) F(1/3,2/3;1;1-alpha) / F(1/3,2/3;1;alpha)) with
/// alpha = 27 p (1+p)^4 / (2 (1+4p+p^2)^3), p = (-1 + sqrt((3k-1)/(k-1)))/2.
pub fn sig3_nome(k: f64) -> Result<f64> {
    check_k(k)?;
    let p = 0.5 * (-1.0 + ((3.0 * k - 1.0) / (k - 1.0)).sqrt());
    let alpha = 27.0 * p * (1.0 + p).powi(4) / (2.0 * (1.0 + 4.0 * p + p * p).powi(3));
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(Error::domain(format!(
            "signature-3 alpha = {alpha} outside (0,1) at k = {k}"
        )));
    }
    let f_top = hyp2f1_13_23_1(1.0 - alpha)?;
    let f_bot = hyp2f1_13_23_1(alpha)?;
    Ok((-2.0 * std::f64::consts::PI / 3.0f64.sqrt() * f_top / f_bot).exp())
}

/// N-term Fourier sums for w(x) and log(1 - 2k/(1-k) w(x)).
///
/// Returns (w, logform). Both series use the signature-3 nome, fully
/// independent of the Weierstrass route.
pub fn w_fourier(x: f64, k: f64, terms: usize) -> Result<(f64, f64)> {
    check_k(k)?;
    let params = w_periods(k)?;
    let big_k = params.period_k;
    if !(0.0 < x && x < 2.0 * big_k) {
        return Err(Error::domain(format!(
            "w_fourier needs 0 < x < 2K = {}, got {x}",
            2.0 * big_k
        )));
    }
    let q = sig3_nome(k)?;
    let pi = std::f64::consts::PI;
    let mut w = 0.0;
    for n in 1..=terms {
        let qn = q.powi(n as i32);
        // numerator carries (-1)^(n+1), the denominator (-1)^n
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        let s = (pi * n as f64 * x / (2.0 * big_k)).sin();
        w += sign * qn / (1.0 - sign * qn + qn * qn) * s * s;
    }
    w *= 2.0 * pi / (k * big_k);
    let mut logform = 0.0;
    let mut n = 1usize;
    while n <= terms {
        let qn = q.powi(n as i32);
        let s = (pi * n as f64 * x / (2.0 * big_k)).sin();
        logform += (qn - qn * qn) / (1.0 + qn * qn * qn) * s * s / n as f64;
        n += 2;
    }
    logform *= 8.0;
    Ok((w, logform))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::central_diff;
    use crate::qseries::{a_real, phi_exp};

    #[test]
    fn period_routes_agree_and_kprime_imaginary() {
        let p = w_periods(2.0).unwrap();
        assert!(p.period_k > 0.0);
        assert!(
            p.period_k_prime.re.abs() <= 1e-9 * p.period_k_prime.norm(),
            "Re K' = {}",
            p.period_k_prime.re
        );
        assert!(p.period_k_prime.im > 0.0);
        // exp(2 pi i K' / 6K) reproduces the signature-3 nome
        let q_periods =
            (C::new(0.0, 2.0 * std::f64::consts::PI) * p.period_k_prime / (6.0 * p.period_k)).exp();
        let q = sig3_nome(2.0).unwrap();
        assert!(
            (q_periods - C::new(q, 0.0)).norm() < 1e-9,
            "{q_periods} vs {q}"
        );
    }

    #[test]
    fn period_decreases_in_k() {
        let k2 = w_periods(2.0).unwrap().period_k;
        let k3 = w_periods(3.0).unwrap().period_k;
        assert!(k3 < k2, "K(3) = {k3} not below K(2) = {k2}");
    }

    #[test]
    fn w_at_quarter_period_is_one() {
        let p = w_periods(2.0).unwrap();
        let w = w_curve(p.period_k, 2.0).unwrap();
        assert!((w - 1.0).abs() < 1e-9, "w(K) = {w}");
    }

    #[test]
    fn w_vanishes_quadratically_at_origin() {
        // w(x) ~ (1-k)^2 x^2 as x -> 0
        let k = 2.0;
        for x in [1e-3, 2e-3] {
            let w = w_curve(x, k).unwrap();
            assert!(
                (w / (x * x) - 1.0).abs() < 1e-2,
                "w({x})/x^2 = {}",
                w / (x * x)
            );
        }
    }

    #[test]
    fn differential_equation_residual() {
        let k = 2.0;
        let p = w_periods(k).unwrap();
        for i in 1..=10 {
            let x = p.period_k * i as f64 / 11.0;
            let w = w_curve(x, k).unwrap();
            let dw = central_diff(|t| w_curve(t, k).unwrap(), x, 1e-4);
            let lhs = dw * dw;
            let rhs = 4.0 * w * ((1.0 - k) * (1.0 - k) - w * (1.0 - k * w) * (1.0 - k * w));
            assert!((lhs - rhs).abs() <= 1e-6 * (1.0 + lhs.abs()), "x = {x}");
        }
    }

    #[test]
    fn fourier_route_consistency() {
        let k = 2.0;
        let p = w_periods(k).unwrap();
        let (w_k, logform_k) = w_fourier(p.period_k, k, 200).unwrap();
        assert!((w_k - 1.0).abs() < 1e-10, "fourier w(K) = {w_k}");
        // log((3k-1)/(k-1)) = log 5 at k = 2
        assert!(
            (logform_k - 5.0f64.ln()).abs() < 1e-10,
            "logform(K) = {logform_k}"
        );
        let x = 0.6 * p.period_k;
        let (w_f, logform) = w_fourier(x, k, 200).unwrap();
        let w_p = w_curve(x, k).unwrap();
        assert!((w_f - w_p).abs() < 1e-8, "{w_f} vs {w_p}");
        let direct = (1.0 - 2.0 * k / (1.0 - k) * w_p).ln();
        assert!((logform - direct).abs() < 1e-8, "{logform} vs {direct}");
    }

    #[test]
    fn nome_links_to_theta_multiplier_and_a() {
        // 1 + 2p = phi^2(q)/phi^2(q^3) and 2K = -pi a(-q) at k = 2
        let k = 2.0;
        let q = sig3_nome(k).unwrap();
        let p = 0.5 * (-1.0 + ((3.0 * k - 1.0) / (k - 1.0)).sqrt());
        let t = -q.ln();
        let ratio = (phi_exp(t) / phi_exp(3.0 * t)).powi(2);
        assert!((1.0 + 2.0 * p - ratio).abs() < 1e-10, "multiplier {ratio}");
        let params = w_periods(k).unwrap();
        let lhs = 2.0 * params.period_k;
        let rhs = -std::f64::consts::PI * a_real(-q).unwrap();
        assert!((lhs - rhs).abs() < 1e-9, "2K = {lhs} vs -pi a(-q) = {rhs}");
    }
}
