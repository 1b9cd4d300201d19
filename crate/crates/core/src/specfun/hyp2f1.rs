//! Gauss hypergeometric function 2F1 for the real parameter ranges the
//! continuum-energy formulas need.
//!
//! Regimes: terminating series when `a` or `b` is a nonpositive integer,
//! direct series for |z| <= 1/2, Pfaff transform for z in [-1, -1/2),
//! the z -> 1-z connection formula for z in (1/2, 1) and the Gauss sum at
//! z = 1. Everything else is rejected rather than extrapolated.

use super::gamma::{gamma, is_nonpositive_integer};
use crate::error::{Error, Result};

const MAX_TERMS: usize = 4000;

fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let denom = (c + kf) * (kf + 1.0);
        if denom == 0.0 {
            return Err(Error::domain(format!(
                "2F1 series hit zero denominator (c = {c}, k = {k})"
            )));
        }
        term *= (a + kf) * (b + kf) / denom * z;
        sum += term;
        if term == 0.0 || term.abs() < 1e-17 * sum.abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::domain(format!(
        "2F1 series did not converge for a={a}, b={b}, c={c}, z={z}"
    )))
}

fn terminating(a: f64, b: f64, c: f64, z: f64, n: u32) -> Result<f64> {
    if is_nonpositive_integer(c) && (-c.round() as u32) < n {
        return Err(Error::domain(format!(
            "2F1: c = {c} is a nonpositive integer reached before the series terminates"
        )));
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..n {
        let kf = f64::from(k);
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
    }
    Ok(sum)
}

/// 2F1(a, b; c; z) on |z| <= 1 (z = 1 requires termination or c-a-b > 0).
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite() && z.is_finite()) {
        return Err(Error::domain("2F1: non-finite argument"));
    }

    // Terminating fast path: polynomial of degree min(-a, -b).
    let na = is_nonpositive_integer(a).then(|| -a.round() as u32);
    let nb = is_nonpositive_integer(b).then(|| -b.round() as u32);
    if let Some(n) = match (na, nb) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    } {
        return terminating(a, b, c, z, n);
    }

    if is_nonpositive_integer(c) {
        return Err(Error::domain(format!(
            "2F1: c = {c} is a nonpositive integer and the series does not terminate"
        )));
    }
    if z.abs() > 1.0 {
        return Err(Error::domain(format!("2F1: |z| = {} > 1", z.abs())));
    }

    if z == 1.0 {
        // Gauss summation, convergent for c - a - b > 0.
        let s = c - a - b;
        if s <= 0.0 {
            return Err(Error::domain(format!(
                "2F1 at z=1 diverges: c-a-b = {s} <= 0"
            )));
        }
        return Ok(gamma(c) * gamma(s) / (gamma(c - a) * gamma(c - b)));
    }

    if z.abs() <= 0.5 {
        return series(a, b, c, z);
    }

    if z < 0.0 {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)); the new
        // argument lies in (1/3, 1/2] for z in [-1, -1/2).
        let w = z / (z - 1.0);
        return Ok((1.0 - z).powf(-a) * series(a, c - b, c, w)?);
    }

    // z in (1/2, 1): connection formula in 1-z; needs c-a-b non-integer.
    let s = c - a - b;
    if (s - s.round()).abs() < 1e-9 {
        return Err(Error::unsupported(format!(
            "2F1 with z in (1/2,1) and integer c-a-b = {s} (logarithmic case)"
        )));
    }
    let w = 1.0 - z;
    let first = gamma(c) * gamma(s) / (gamma(c - a) * gamma(c - b))
        * series(a, b, 1.0 - s, w)?;
    let second = w.powf(s) * gamma(c) * gamma(-s) / (gamma(a) * gamma(b))
        * series(c - a, c - b, 1.0 + s, w)?;
    Ok(first + second)
}
