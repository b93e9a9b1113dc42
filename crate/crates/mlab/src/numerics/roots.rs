//! Closed-form roots of complex polynomials of degree <= 4.
//!
//! Quadratics, cubics (Cardano) and quartics (Ferrari resolvent) are solved
//! in closed form and then polished with a few Newton steps on the original
//! polynomial.  Roots are returned sorted lexicographically by (re, im) so
//! results are deterministic.

use crate::error::{Error, Result};
use num_complex::Complex64;

type C = Complex64;

/// All roots (with multiplicity) of `c[0] + c[1] X + ... + c[n] X^n`,
/// for n <= 4.  The leading coefficient must be nonzero.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() {
        return Err(Error::domain("poly_roots: empty coefficient list"));
    }
    let degree = coeffs.len() - 1;
    if degree > 4 {
        return Err(Error::domain(format!(
            "poly_roots supports degree <= 4, got {degree}"
        )));
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let lead = coeffs[degree];
    if lead.norm() == 0.0 || lead.norm() < 1e-300 * scale {
        return Err(Error::domain(format!(
            "poly_roots: degenerate leading coefficient {lead} at degree {degree}"
        )));
    }

    // Monic normalization.
    let a: Vec<C> = coeffs[..degree].iter().map(|c| c / lead).collect();

    let mut roots = match degree {
        0 => Vec::new(),
        1 => vec![-a[0]],
        2 => quadratic(a[1], a[0]),
        3 => cubic(a[2], a[1], a[0]),
        4 => quartic(a[3], a[2], a[1], a[0]),
        _ => unreachable!(),
    };

    for r in roots.iter_mut() {
        *r = polish(coeffs, *r);
    }
    roots.sort_by(|p, q| {
        p.re.partial_cmp(&q.re)
            .unwrap()
            .then(p.im.partial_cmp(&q.im).unwrap())
    });
    Ok(roots)
}

/// Roots of X^2 + bX + c, numerically stable variant.
fn quadratic(b: C, c: C) -> Vec<C> {
    let d = (b * b - 4.0 * c).sqrt();
    // Pick the sign that avoids cancellation in -b -+ d.
    let q = if (b.conj() * d).re >= 0.0 {
        -0.5 * (b + d)
    } else {
        -0.5 * (b - d)
    };
    if q.norm() == 0.0 {
        vec![C::new(0.0, 0.0), -b]
    } else {
        vec![q, c / q]
    }
}

/// Roots of X^3 + aX^2 + bX + c (Cardano).
fn cubic(a: C, b: C, c: C) -> Vec<C> {
    // Depress: X = y - a/3, y^3 + py + q = 0
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    if p.norm() == 0.0 && q.norm() == 0.0 {
        return vec![-shift; 3];
    }
    let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    // Choose the branch with larger magnitude for numerical safety.
    let u3 = {
        let cand1 = -q / 2.0 + disc;
        let cand2 = -q / 2.0 - disc;
        if cand1.norm() >= cand2.norm() {
            cand1
        } else {
            cand2
        }
    };
    let u = u3.powf(1.0 / 3.0);
    let omega = C::new(-0.5, 0.75f64.sqrt());
    let mut out = Vec::with_capacity(3);
    for k in 0..3 {
        let uk = u * omega.powu(k);
        let y = if uk.norm() > 0.0 {
            uk - p / (3.0 * uk)
        } else {
            C::new(0.0, 0.0)
        };
        out.push(y - shift);
    }
    out
}

/// Roots of X^4 + aX^3 + bX^2 + cX + d (Ferrari).
fn quartic(a: C, b: C, c: C, d: C) -> Vec<C> {
    // Depress: X = y - a/4, y^4 + p y^2 + q y + r = 0
    let shift = a / 4.0;
    let a2 = a * a;
    let p = b - 3.0 * a2 / 8.0;
    let q = c - a * b / 2.0 + a2 * a / 8.0;
    let r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

    let mut out = Vec::with_capacity(4);
    if q.norm() < 1e-14 * (1.0 + p.norm() + r.norm()) {
        // Biquadratic: z^2 + p z + r with z = y^2.
        for z in quadratic(p, r) {
            let s = z.sqrt();
            out.push(s - shift);
            out.push(-s - shift);
        }
        return out;
    }
    // Resolvent cubic m^3 + 2p m^2 + (p^2 - 4r) m - q^2 = 0; any nonzero root
    // m gives the factorization (y^2 + sy + beta)(y^2 - sy + gamma), s^2 = m.
    let ms = cubic(2.0 * p, p * p - 4.0 * r, -q * q);
    let m = ms
        .into_iter()
        .max_by(|x, y| x.norm().partial_cmp(&y.norm()).unwrap())
        .unwrap();
    let s = m.sqrt();
    let beta = 0.5 * (p + m - q / s);
    let gamma = 0.5 * (p + m + q / s);
    for y in quadratic(s, beta) {
        out.push(y - shift);
    }
    for y in quadratic(-s, gamma) {
        out.push(y - shift);
    }
    out
}

/// A few Newton iterations on the original polynomial.
fn polish(coeffs: &[Complex64], mut x: C) -> C {
    for _ in 0..4 {
        let mut v = C::new(0.0, 0.0);
        let mut dv = C::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            dv = dv * x + v;
            v = v * x + c;
        }
        if dv.norm() == 0.0 {
            break;
        }
        let step = v / dv;
        x -= step;
        if step.norm() <= 1e-16 * (1.0 + x.norm()) {
            break;
        }
    }
    x
}
