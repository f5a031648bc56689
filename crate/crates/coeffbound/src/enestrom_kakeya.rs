//! Classical Eneström–Kakeya annulus localisation and the quantitative
//! growth envelopes for polynomials with positive non-increasing
//! coefficients.

use num_complex::Complex64;
use num_traits::Signed;

use crate::polykernel::{rational_to_f64, Polynomial, RationalPoly};
use crate::{Error, Result};

/// Relative slack allowed when checking monotonicity of double-precision
/// coefficient data. Exact-rational profiles are checked with zero tolerance.
const MONOTONE_SLACK: f64 = 1e-14;

/// Consecutive-coefficient ratio extremes of a positive non-increasing
/// coefficient sequence: r = min Q, R = max Q with
/// Q = { a_ν / a_{ν+1} : 0 ≤ ν < n }.
#[derive(Debug, Clone)]
pub struct EKProfile {
    pub coeffs: Vec<f64>,
    pub r: f64,
    pub big_r: f64,
}

fn profile_from_reals(coeffs: Vec<f64>) -> Result<EKProfile> {
    if coeffs.len() < 2 {
        return Err(Error::EkHypothesisFails(
            "need degree >= 1 for a ratio set".into(),
        ));
    }
    let mut r = f64::INFINITY;
    let mut big_r = 0.0f64;
    for w in coeffs.windows(2) {
        let q = w[0] / w[1];
        r = r.min(q);
        big_r = big_r.max(q);
    }
    Ok(EKProfile { coeffs, r, big_r })
}

/// Ratio extremes of p, after checking the EK hypothesis (real, positive,
/// non-increasing coefficients) with 1e-14 relative slack.
pub fn ek_profile(p: &Polynomial) -> Result<EKProfile> {
    let coeffs = p.coeffs();
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let mut reals = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs.iter().enumerate() {
        if c.im.abs() > MONOTONE_SLACK * scale {
            return Err(Error::EkHypothesisFails(format!(
                "coefficient {k} is not real"
            )));
        }
        if c.re <= 0.0 {
            return Err(Error::EkHypothesisFails(format!(
                "coefficient {k} is not positive"
            )));
        }
        reals.push(c.re);
    }
    for (k, w) in reals.windows(2).enumerate() {
        if w[1] > w[0] * (1.0 + MONOTONE_SLACK) {
            return Err(Error::EkHypothesisFails(format!(
                "coefficients increase at index {k}"
            )));
        }
    }
    profile_from_reals(reals)
}

/// Exact-rational variant of [`ek_profile`]; monotonicity is checked with
/// zero tolerance.
pub fn ek_profile_rational(p: &RationalPoly) -> Result<EKProfile> {
    let coeffs = p.coeffs();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_positive() {
            return Err(Error::EkHypothesisFails(format!(
                "coefficient {k} is not positive"
            )));
        }
    }
    for (k, w) in coeffs.windows(2).enumerate() {
        if w[1] > w[0] {
            return Err(Error::EkHypothesisFails(format!(
                "coefficients increase at index {k}"
            )));
        }
    }
    profile_from_reals(coeffs.iter().map(rational_to_f64).collect())
}

/// True iff every root modulus lies in [r - tol, R + tol].
pub fn ek_annulus_check(p: &Polynomial, roots: &[Complex64], tol: f64) -> Result<bool> {
    let profile = ek_profile(p)?;
    Ok(roots
        .iter()
        .all(|z| z.norm() >= profile.r - tol && z.norm() <= profile.big_r + tol))
}

/// Bracket for |p(z)| inside the annulus:
/// a_0·(r-|z|)/|r-z| ≤ |p(z)| ≤ a_0·(r+|z|)/|r-z| for |z| ≤ r, z ≠ r.
pub fn ek_envelope_inner(profile: &EKProfile, z: Complex64) -> Result<(f64, f64)> {
    let r = profile.r;
    if (z - Complex64::new(r, 0.0)).norm() == 0.0 {
        return Err(Error::SingularPoint);
    }
    if z.norm() > r {
        return Err(Error::InvalidArgument("|z| > r in inner envelope".into()));
    }
    let a0 = profile.coeffs[0];
    let denom = (Complex64::new(r, 0.0) - z).norm();
    Ok((a0 * (r - z.norm()) / denom, a0 * (r + z.norm()) / denom))
}

/// Bracket for |p(z)| outside the annulus:
/// a_n|z|^n·(|z|-R)/|z-R| ≤ |p(z)| ≤ a_n|z|^n·(R+|z|)/|R-z| for |z| ≥ R, z ≠ R.
pub fn ek_envelope_outer(profile: &EKProfile, z: Complex64) -> Result<(f64, f64)> {
    let big_r = profile.big_r;
    if (z - Complex64::new(big_r, 0.0)).norm() == 0.0 {
        return Err(Error::SingularPoint);
    }
    if z.norm() < big_r {
        return Err(Error::InvalidArgument("|z| < R in outer envelope".into()));
    }
    let n = profile.coeffs.len() - 1;
    let lead = profile.coeffs[n] * z.norm().powi(n as i32);
    let denom = (z - Complex64::new(big_r, 0.0)).norm();
    Ok((
        lead * (z.norm() - big_r) / denom,
        lead * (big_r + z.norm()) / denom,
    ))
}

/// Guaranteed lower bound 1 + 1/(2n+1) on the moduli of the roots of P_n.
pub fn pole_distance_bound(n: usize) -> f64 {
    assert!(n >= 1);
    1.0 + 1.0 / (2.0 * n as f64 + 1.0)
}

/// Decay envelope K·n²·(1+1/(4n))^{-ν} for the Taylor coefficients of f_n.
pub fn decay_envelope(n: usize, nu: usize, k: f64) -> f64 {
    assert!(n >= 1 && k > 0.0);
    k * (n * n) as f64 * (1.0 + 1.0 / (4.0 * n as f64)).powi(-(nu as i32))
}
