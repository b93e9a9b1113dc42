//! Weierstrass P-function by Laurent expansion plus repeated duplication.

use num_complex::Complex64;

use crate::error::{Error, Result};

type C = Complex64;

/// Laurent coefficients c_k of P(z) = z^-2 + sum_{k>=2} c_k z^(2k-2),
/// truncated at degree 20 (k <= 11).
fn laurent_coeffs(g2: f64, g3: f64) -> [f64; 12] {
    let mut c = [0.0f64; 12];
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for k in 4..12 {
        let mut s = 0.0;
        for m in 2..=(k - 2) {
            s += c[m] * c[k - m];
        }
        c[k] = 3.0 * s / ((2 * k + 1) as f64 * (k - 3) as f64);
    }
    c
}

/// P(z) and P'(z) for complex z away from lattice points.
pub fn wp_with_derivative(z: C, g2: f64, g3: f64) -> Result<(C, C)> {
    if z.norm() == 0.0 {
        return Err(Error::domain("P(z) has a pole at z = 0"));
    }
    let c = laurent_coeffs(g2, g3);
    // Halve until the Laurent series at w = z / 2^m is safely convergent;
    // the last-term check below re-doubles m if it is not.
    let mut m = 0u32;
    let mut w = z;
    while w.norm() > 0.5 {
        w *= 0.5;
        m += 1;
    }
    loop {
        let w2 = w * w;
        let mut p = 1.0 / w2;
        let mut dp = -2.0 / (w2 * w);
        let mut pow = w2; // w^(2k-2) for k = 2
        let mut last = 0.0;
        for (k, &ck) in c.iter().enumerate().skip(2) {
            let term = ck * pow;
            p += term;
            dp += (2 * k - 2) as f64 * ck * pow / w;
            last = term.norm();
            pow *= w2;
        }
        if last > 1e-17 * p.norm() && m < 40 {
            w *= 0.5;
            m += 1;
            continue;
        }
        // duplicate m times: P(2z) = A^2 - 2P, A = P''/(2P'), P'' = 6P^2 - g2/2
        for _ in 0..m {
            let n = 6.0 * p * p - 0.5 * g2;
            if dp.norm() == 0.0 {
                return Err(Error::domain(
                    "P' vanished during duplication (half-lattice point)",
                ));
            }
            let a = n / (2.0 * dp);
            let da = (12.0 * p * dp * dp - n * n) / (2.0 * dp * dp);
            let p2 = a * a - 2.0 * p;
            let dp2 = a * da - dp;
            p = p2;
            dp = dp2;
        }
        if !p.is_finite() || p.norm() > 1e12 {
            return Err(Error::domain(format!(
                "z = {z} is too close to a lattice point (|P| overflow)"
            )));
        }
        return Ok((p, dp));
    }
}

/// P(z) alone.
pub fn wp(z: C, g2: f64, g3: f64) -> Result<C> {
    wp_with_derivative(z, g2, g3).map(|(p, _)| p)
}
