//! Complete elliptic integrals, Jacobi elliptic functions and the complete
//! integral of the third kind.
//!
//! The parameter convention is alpha = k^2 throughout: K(alpha) is the
//! quarter period attached to modulus k = sqrt(alpha).

mod wcurve;
mod weierstrass;

pub use wcurve::{
    invariants, sig3_nome, w_curve, w_curve_derivative, w_fourier, w_periods, WCurveParams,
};
pub use weierstrass::{wp, wp_with_derivative};

use crate::error::{Error, Result};

/// Complete data attached to a Legendre modulus.
#[derive(Clone, Copy, Debug)]
pub struct ModulusParams {
    pub alpha: f64,
    pub big_k: f64,
    pub big_k_prime: f64,
    /// nome = exp(-pi K'/K)
    pub nome: f64,
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..60 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= 1e-16 * an {
            return 0.5 * (an + bn);
        }
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// K(alpha) = pi / (2 AGM(1, sqrt(1-alpha))).
pub fn complete_k(alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) && alpha != 0.0 {
        return Err(Error::domain(format!(
            "complete_k needs 0 <= alpha < 1, got {alpha}"
        )));
    }
    Ok(std::f64::consts::FRAC_PI_2 / agm(1.0, (1.0 - alpha).sqrt()))
}

/// K, K' and the nome for alpha in (0,1).
pub fn modulus_params(alpha: f64) -> Result<ModulusParams> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "modulus_params needs 0 < alpha < 1, got {alpha}"
        )));
    }
    let big_k = complete_k(alpha)?;
    let big_k_prime = complete_k(1.0 - alpha)?;
    Ok(ModulusParams {
        alpha,
        big_k,
        big_k_prime,
        nome: (-std::f64::consts::PI * big_k_prime / big_k).exp(),
    })
}

/// Jacobi sn, cn, dn by the descending AGM recursion.
pub fn jacobi(u: f64, alpha: f64) -> Result<(f64, f64, f64)> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "jacobi needs 0 < alpha < 1, got {alpha}"
        )));
    }
    if u == 0.0 {
        return Ok((0.0, 1.0, 1.0));
    }
    let mut a = vec![1.0f64];
    let mut c = vec![alpha.sqrt()];
    let mut b = (1.0 - alpha).sqrt();
    while c.last().unwrap().abs() > 1e-16 * a.last().unwrap() {
        let an = a.last().unwrap();
        let cn = 0.5 * (an - b);
        let bn = (an * b).sqrt();
        let anew = 0.5 * (an + b);
        a.push(anew);
        c.push(cn);
        b = bn;
        if a.len() > 60 {
            break;
        }
    }
    let n = a.len() - 1;
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for i in (1..=n).rev() {
        phi = 0.5 * (phi + ((c[i] / a[i]) * phi.sin()).asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    // dn never vanishes on the real axis (it lives in [sqrt(1-alpha), 1]),
    // so the defining relation is the stable route to it
    let dn = ((1.0 - alpha * sn * sn).max(0.0)).sqrt();
    Ok((sn, cn, dn))
}

// --- Carlson symmetric forms ----------------------------------------------

const CARLSON_TOL: f64 = 1.0e-3;

/// Carlson R_F(x, y, z), non-negative arguments with at most one zero.
pub fn carlson_rf(mut x: f64, mut y: f64, mut z: f64) -> f64 {
    let mut mu;
    let (mut dx, mut dy, mut dz);
    loop {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        mu = (x + y + z) / 3.0;
        dx = 1.0 - x / mu;
        dy = 1.0 - y / mu;
        dz = 1.0 - z / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()) < CARLSON_TOL {
            break;
        }
    }
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / mu.sqrt()
}

/// Carlson R_C(x, y) for y > 0.
fn carlson_rc(mut x: f64, mut y: f64) -> f64 {
    let mut mu;
    let mut s;
    loop {
        let lam = 2.0 * x.sqrt() * y.sqrt() + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        mu = (x + 2.0 * y) / 3.0;
        s = (y - mu) / mu;
        if s.abs() < CARLSON_TOL {
            break;
        }
    }
    (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) / mu.sqrt()
}

/// Carlson R_J(x, y, z, p) for p > 0.
pub fn carlson_rj(mut x: f64, mut y: f64, mut z: f64, mut p: f64) -> f64 {
    let mut sum = 0.0;
    let mut fac = 1.0;
    let mut mu;
    let (mut dx, mut dy, mut dz, mut dp);
    loop {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        let alpha = (p * (sx + sy + sz) + sx * sy * sz).powi(2);
        let beta = p * (p + lam) * (p + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        mu = 0.2 * (x + y + z + 2.0 * p);
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
        dp = (mu - p) / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()).max(dp.abs()) < CARLSON_TOL {
            break;
        }
    }
    let ea = dx * (dy + dz) + dy * dz;
    let eb = dx * dy * dz;
    let ec = dp * dp;
    let ed = ea - 3.0 * ec;
    let ee = eb + 2.0 * dp * (ea - ec);
    const C1: f64 = 3.0 / 14.0;
    const C2: f64 = 1.0 / 3.0;
    const C3: f64 = 3.0 / 22.0;
    const C4: f64 = 3.0 / 26.0;
    const C5: f64 = 0.75 * C3;
    const C6: f64 = 1.5 * C4;
    const C7: f64 = 0.5 * C2;
    const C8: f64 = C3 + C3;
    3.0 * sum
        + fac
            * (1.0
                + ed * (-C1 + C5 * ed - C6 * ee)
                + eb * (C7 + dp * (-C8 + dp * C4))
                + dp * ea * (C2 - dp * C3)
                - C2 * dp * ec)
            / (mu * mu.sqrt())
}

/// Complete elliptic integral of the third kind
/// Pi(n, alpha) = int_0^(pi/2) dtheta / ((1 - n sin^2) sqrt(1 - alpha sin^2)).
pub fn ell_pi3(n: f64, alpha: f64) -> Result<f64> {
    if n >= 1.0 {
        return Err(Error::domain(format!(
            "Pi(n, alpha) needs n < 1 (principal value not supported), got n = {n}"
        )));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "Pi(n, alpha) needs 0 < alpha < 1, got alpha = {alpha}"
        )));
    }
    let kc2 = 1.0 - alpha;
    Ok(carlson_rf(0.0, kc2, 1.0) + n / 3.0 * carlson_rj(0.0, kc2, 1.0, 1.0 - n))
}

/// The combination of third-kind integrals that collapses to pi/4:
/// -K - (1-sqrt(a))^2/(2 sqrt(a)) Pi(sqrt(a), a) + (1+sqrt(a))^2/(2 sqrt(a)) Pi(-sqrt(a), a).
pub fn h_alpha(alpha: f64) -> Result<f64> {
    let k = complete_k(alpha)?;
    let sa = alpha.sqrt();
    let pi_plus = ell_pi3(sa, alpha)?;
    let pi_minus = ell_pi3(-sa, alpha)?;
    Ok(-k - (1.0 - sa) * (1.0 - sa) / (2.0 * sa) * pi_plus
        + (1.0 + sa) * (1.0 + sa) / (2.0 * sa) * pi_minus)
}

/// Truncated Fourier expansion of cn^2 u dn^2 u / (1 - alpha sn^4 u):
/// pi/4K + (pi/K) sum_{n>=1} q^n/(1+q^(2n)) cos(2 pi n u / K)
///       + (pi/(sqrt(alpha) K)) sum_{n>=0} q^(n+1/2)/(1+q^(2n+1)) cos(pi (2n+1) u / K).
pub fn fourier_cn2dn2(u: f64, params: &ModulusParams, terms: usize) -> f64 {
    let k = params.big_k;
    let q = params.nome;
    let pi = std::f64::consts::PI;
    let mut s = pi / (4.0 * k);
    for n in 1..=terms {
        let qn = q.powi(n as i32);
        s += pi / k * qn / (1.0 + qn * qn) * (2.0 * pi * n as f64 * u / k).cos();
    }
    for n in 0..terms {
        let qh = q.powf(n as f64 + 0.5);
        let q2n1 = q.powi(2 * n as i32 + 1);
        s += pi / (params.alpha.sqrt() * k) * qh / (1.0 + q2n1)
            * (pi * (2 * n + 1) as f64 * u / k).cos();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeo::pfq_eval;
    use std::f64::consts::PI;

    #[test]
    fn k_limits_and_symmetry() {
        assert!((complete_k(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((complete_k(1e-12).unwrap() - PI / 2.0).abs() < 1e-12);
        // alpha = 1/2 forces K = K', so nome = e^-pi
        let p = modulus_params(0.5).unwrap();
        assert!((p.nome - (-PI).exp()).abs() < 1e-13, "nome {}", p.nome);
    }

    #[test]
    fn k_matches_hypergeometric_series() {
        let alpha = 0.3;
        let k = complete_k(alpha).unwrap();
        let series = PI / 2.0 * pfq_eval(&[0.5, 0.5], &[1.0], alpha).unwrap();
        assert!((k - series).abs() < 1e-12, "{k} vs {series}");
    }

    #[test]
    fn jacobi_special_points() {
        let alpha = 0.4;
        let (sn, cn, dn) = jacobi(0.0, alpha).unwrap();
        assert_eq!((sn, cn, dn), (0.0, 1.0, 1.0));
        let k = complete_k(alpha).unwrap();
        let (sn, _, dn) = jacobi(k, alpha).unwrap();
        assert!((sn - 1.0).abs() < 1e-12, "sn(K) = {sn}");
        assert!((dn - (1.0 - alpha).sqrt()).abs() < 1e-12, "dn(K) = {dn}");
    }

    #[test]
    fn jacobi_pythagorean_identities() {
        let mut state = 0x243f6a8885a308d3u64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let alpha = 0.02 + 0.96 * rnd();
            let u = 3.0 * (rnd() - 0.5);
            let (sn, cn, dn) = jacobi(u, alpha).unwrap();
            assert!(
                (sn * sn + cn * cn - 1.0).abs() < 1e-12,
                "sn2+cn2 at {u},{alpha}"
            );
            assert!(
                (dn * dn + alpha * sn * sn - 1.0).abs() < 1e-12,
                "dn2+a sn2 at {u},{alpha}"
            );
        }
    }

    #[test]
    fn pi3_reduces_to_k_and_elementary() {
        let alpha = 0.37;
        assert!((ell_pi3(0.0, alpha).unwrap() - complete_k(alpha).unwrap()).abs() < 1e-12);
        // Pi(n, 0) = pi / (2 sqrt(1-n))
        for n in [-0.5, 0.25, 0.8] {
            let v = carlson_rf(0.0, 1.0, 1.0) + n / 3.0 * carlson_rj(0.0, 1.0, 1.0, 1.0 - n);
            assert!((v - PI / (2.0 * (1.0 - n).sqrt())).abs() < 1e-12, "n={n}");
        }
        assert!(ell_pi3(1.0, alpha).is_err());
    }

    #[test]
    fn third_kind_combination_is_quarter_pi() {
        for alpha in [0.1, 0.3, 0.7] {
            let h = h_alpha(alpha).unwrap();
            assert!((h - PI / 4.0).abs() < 1e-9, "alpha={alpha}: {h}");
        }
    }

    #[test]
    fn fourier_expansion_matches_jacobi_ratio() {
        let alpha = 0.5;
        let p = modulus_params(alpha).unwrap();
        for frac in [0.3, 0.7] {
            let u = frac * p.big_k;
            let (sn, cn, dn) = jacobi(u, alpha).unwrap();
            let lhs = cn * cn * dn * dn / (1.0 - alpha * sn.powi(4));
            let rhs = fourier_cn2dn2(u, &p, 400);
            assert!((lhs - rhs).abs() < 1e-10, "u = {frac} K: {lhs} vs {rhs}");
        }
    }
}
