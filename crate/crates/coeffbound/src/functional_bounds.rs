//! User-facing bound calculators: Newman's bound, the generalized periodic
//! and anti-periodic weight-vector bounds with sharp witnesses, the
//! coefficient-pair inequality, and the combined upper bound.

use num_complex::Complex64;
use num_traits::Zero;

use crate::interpolation::{
    extremal_witness, functional_norm, root_set, solve_weights, EvalFunctional, Sign,
};
use crate::polykernel::{Polynomial, SUP_NORM_TOL};
use crate::{Error, Result};

/// A functional on C[X]^{<d} given by its action t_ν on the monomials.
#[derive(Debug, Clone)]
pub struct WeightVector {
    pub d: usize,
    pub entries: Vec<Complex64>,
}

impl WeightVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        WeightVector {
            d: entries.len(),
            entries,
        }
    }

    pub fn from_reals(entries: &[f64]) -> Self {
        WeightVector::new(entries.iter().map(|&t| Complex64::new(t, 0.0)).collect())
    }

    /// Apply the functional to f: Σ t_ν·coeff_ν(f).
    pub fn apply(&self, f: &Polynomial) -> Complex64 {
        (0..self.d).map(|k| self.entries[k] * f.coeff(k)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMethod {
    Newman,
    ThmPlus,
    ThmMinus,
    Combined,
}

/// A bound value together with the weight decomposition and, when sharp,
/// an extremal witness polynomial of sup-norm one that attains it.
#[derive(Debug, Clone)]
pub struct BoundCertificate {
    pub value: f64,
    pub method: BoundMethod,
    pub weights: Option<EvalFunctional>,
    pub witness: Option<Polynomial>,
    pub sharp: bool,
}

/// Kahan-compensated sum; keeps root-of-unity sums honest at the 1e-12
/// agreement targets for D up to ~150 terms.
fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Newman's exact value of M_{n-1,2n}: 1/2 + (1/n)·Σ_{ω^n=-1} 1/|ω-1|,
/// computed by the real closed form with |ω-1| = 2·sin(π(2k+1)/(2n)).
pub fn newman_bound(n: usize) -> f64 {
    assert!(n >= 1);
    let sum = kahan_sum(
        (0..n).map(|k| 1.0 / (std::f64::consts::PI * (2 * k + 1) as f64 / (2.0 * n as f64)).sin()),
    );
    0.5 + sum / (2.0 * n as f64)
}

fn certified_bound(
    t_full: WeightVector,
    sign: Sign,
    n: usize,
    method: BoundMethod,
) -> Result<BoundCertificate> {
    let set = root_set(n, sign);
    let ell = solve_weights(&t_full, &set)?;
    let value = functional_norm(&ell)?;
    let witness = if ell.weights.iter().all(|u| u.is_zero()) {
        None
    } else {
        Some(extremal_witness(&ell)?)
    };
    Ok(BoundCertificate {
        value,
        method,
        sharp: witness.is_some(),
        weights: Some(ell),
        witness,
    })
}

/// Sharp bound for the anti-periodically extended weight vector
/// (t_{n+ν} = -t_ν mod 2n): value (1/n)·Σ_{ω^n=-1} |Σ_{ν<n} t_ν/ω^ν|,
/// attained by a witness of degree ≤ 2n-2.
pub fn bound_plus(t_half: &[Complex64], d: usize) -> Result<BoundCertificate> {
    let n = t_half.len();
    if n == 0 || d < 2 * n - 1 {
        return Err(Error::NormNotCertified { d, n });
    }
    let entries: Vec<Complex64> = (0..d)
        .map(|nu| {
            let base = t_half[nu % n];
            if (nu / n).is_multiple_of(2) {
                base
            } else {
                -base
            }
        })
        .collect();
    certified_bound(
        WeightVector::new(entries),
        Sign::Plus,
        n,
        BoundMethod::ThmPlus,
    )
}

/// Sharp bound for the periodically extended weight vector (period n):
/// value (1/n)·Σ_{ω^n=1} |Σ_{ν<n} t_ν/ω^ν|, attained by a witness of
/// degree ≤ 2n-2.
pub fn bound_minus(t_half: &[Complex64], d: usize) -> Result<BoundCertificate> {
    let n = t_half.len();
    if n == 0 || d < 2 * n - 1 {
        return Err(Error::NormNotCertified { d, n });
    }
    let entries: Vec<Complex64> = (0..d).map(|nu| t_half[nu % n]).collect();
    certified_bound(
        WeightVector::new(entries),
        Sign::Minus,
        n,
        BoundMethod::ThmMinus,
    )
}

/// lhs = |a_k| + |a_{n+k}|, rhs = ‖f‖_∞; the inequality lhs ≤ rhs holds
/// for every f of degree < 2n + k.
pub fn cute_inequality_check(f: &Polynomial, k: usize, n: usize) -> Result<(f64, f64)> {
    if k >= n {
        return Err(Error::InvalidArgument("requires 0 <= k < n".into()));
    }
    if f.deg().is_some_and(|deg| deg >= 2 * n + k) {
        return Err(Error::InvalidArgument(
            "degree too large: requires deg f < 2n + k".into(),
        ));
    }
    let lhs = f.coeff(k).norm() + f.coeff(n + k).norm();
    let rhs = f.sup_norm_circle(SUP_NORM_TOL);
    Ok((lhs, rhs))
}

/// Even summation order D for the combined bound: d itself when d is even,
/// otherwise d+1 (the weight vector is padded with t_d = 0).
pub fn combined_order(d: usize) -> usize {
    if d.is_multiple_of(2) {
        d
    } else {
        d + 1
    }
}

/// The combined (generally non-sharp) upper bound
/// (1/D)·Σ_{ω^D=1} |Σ_{ν<d} t_ν/ω^ν| with D = combined_order(d).
pub fn combined_bound(t: &WeightVector) -> BoundCertificate {
    let value = if t.d == 1 {
        // the space is constants and the functional is t_0·a_0
        t.entries[0].norm()
    } else {
        let d_order = combined_order(t.d);
        let sum = kahan_sum((0..d_order).map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d_order as f64;
            let inner: Complex64 = (0..t.d)
                .map(|nu| t.entries[nu] * Complex64::from_polar(1.0, -theta * nu as f64))
                .sum();
            inner.norm()
        }));
        sum / d_order as f64
    };
    BoundCertificate {
        value,
        method: BoundMethod::Combined,
        weights: None,
        witness: None,
        sharp: false,
    }
}

/// The combined bound computed through the periodic/anti-periodic split
/// t = t_+ + t_- and the triangle inequality; agrees with
/// [`combined_bound`] and exists as the independent second route.
pub fn combined_bound_via_split(t: &WeightVector) -> Result<f64> {
    if t.d == 1 {
        return Ok(t.entries[0].norm());
    }
    let d_order = combined_order(t.d);
    let n = d_order / 2;
    let entry = |nu: usize| {
        if nu < t.d {
            t.entries[nu]
        } else {
            Complex64::zero()
        }
    };
    let t_plus: Vec<Complex64> = (0..n).map(|nu| (entry(nu) + entry(nu + n)) / 2.0).collect();
    let t_minus: Vec<Complex64> = (0..n).map(|nu| (entry(nu) - entry(nu + n)) / 2.0).collect();
    let d_eff = t.d.max(2 * n - 1);
    let periodic = bound_minus(&t_plus, d_eff)?;
    let anti = bound_plus(&t_minus, d_eff)?;
    Ok(periodic.value + anti.value)
}

/// C_{n,d}: the combined bound for t = (1_{×(n+1)}, 0_{×(d-n-1)}), the
/// upper bound on Shapiro's M_{n,d}.
pub fn shapiro_c(n: usize, d: usize) -> f64 {
    assert!(n < d);
    let mut entries = vec![0.0; d];
    for e in entries.iter_mut().take(n + 1) {
        *e = 1.0;
    }
    combined_bound(&WeightVector::from_reals(&entries)).value
}
