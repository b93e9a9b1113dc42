//! Richardson-extrapolated central differences.

/// Fourth-order derivative estimate of `f` at `x` with base step `h`.
///
/// One Richardson step on the central difference: exact for polynomials of
/// degree <= 4 up to rounding.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let d = |step: f64| (f(x + step) - f(x - step)) / (2.0 * step);
    let coarse = d(h);
    let fine = d(0.5 * h);
    (4.0 * fine - coarse) / 3.0
}
