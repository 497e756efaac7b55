//! Scalar root finding: bisection with a secant polish.

use crate::{Error, Result};

/// Root of a continuous `g` inside a sign-changing bracket, to |g| <= 1e-12.
pub fn solve_scalar_root<F: Fn(f64) -> f64>(g: F, bracket: (f64, f64)) -> Result<f64> {
    let (mut a, mut b) = bracket;
    if !(a < b) {
        return Err(Error::Bracket(format!("invalid bracket ({a}, {b})")));
    }
    let mut fa = g(a);
    let mut fb = g(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(Error::Bracket(format!(
            "no sign change on ({a}, {b}): g = {fa:.3e}, {fb:.3e}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let fm = g(mid);
        if fm == 0.0 || (b - a) < f64::EPSILON * mid.abs().max(1.0) {
            a = mid;
            fa = fm;
            break;
        }
        if fa * fm < 0.0 {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    // secant polish from the bracket endpoints
    let mut x0 = a;
    let mut f0 = fa;
    let mut x1 = b;
    let mut f1 = fb;
    for _ in 0..4 {
        if (f1 - f0).abs() < f64::MIN_POSITIVE {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = g(x2);
        if f1.abs() <= 1e-13 {
            break;
        }
    }
    let root = if f1.abs() <= f0.abs() { x1 } else { x0 };
    let res = g(root).abs();
    if res > 1e-12 {
        return Err(Error::NonConvergence(format!(
            "root residual |g| = {res:.3e} > 1e-12"
        )));
    }
    Ok(root)
}

/// Largest root of `g` in `(a, b)`: the bracket is scanned from the top on
/// `scan` points and the first sign-changing subinterval is solved. Callers
/// approaching a resonance from high frequency want this root.
pub fn solve_largest_root<F: Fn(f64) -> f64>(g: F, bracket: (f64, f64), scan: usize) -> Result<f64> {
    let (a, b) = bracket;
    if !(a < b) || scan < 2 {
        return Err(Error::Bracket(format!(
            "invalid bracket ({a}, {b}) or scan {scan}"
        )));
    }
    let h = (b - a) / scan as f64;
    let mut hi = b;
    let mut f_hi = g(hi);
    for i in (0..scan).rev() {
        let lo = a + i as f64 * h;
        let f_lo = g(lo);
        if f_hi == 0.0 {
            return Ok(hi);
        }
        if f_lo * f_hi < 0.0 {
            return solve_scalar_root(&g, (lo, hi));
        }
        hi = lo;
        f_hi = f_lo;
    }
    Err(Error::Bracket(format!(
        "no sign change found scanning ({a}, {b}) with {scan} points"
    )))
}
