//! Roots-of-unity node sets, their Lagrange interpolators, the partition
//! identity, and the evaluation-functional norm engine with constructive
//! extremal witnesses.

use num_complex::Complex64;
use num_traits::Zero;

use crate::functional_bounds::WeightVector;
use crate::polykernel::Polynomial;
use crate::{Error, Result};

/// Which sign is chosen in ω^n ± 1 = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// Ω = { ω : ω^n + 1 = 0 }
    Plus,
    /// Ω = { ω : ω^n - 1 = 0 }
    Minus,
}

/// The n solutions of X^n ± 1 = 0, with nodes computed from exact angles.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub n: usize,
    pub sign: Sign,
    pub nodes: Vec<Complex64>,
}

impl RootSet {
    fn node_angle(&self, k: usize) -> f64 {
        match self.sign {
            Sign::Minus => std::f64::consts::TAU * k as f64 / self.n as f64,
            Sign::Plus => std::f64::consts::PI * (2 * k + 1) as f64 / self.n as f64,
        }
    }

    /// Exact-angle power node_k^e, avoiding iterated multiplication.
    fn node_pow(&self, k: usize, e: i64) -> Complex64 {
        Complex64::from_polar(1.0, self.node_angle(k) * e as f64)
    }

    pub fn node_index(&self, omega: Complex64) -> Result<usize> {
        self.nodes
            .iter()
            .position(|&w| (w - omega).norm() < 1e-12)
            .ok_or(Error::NotANode)
    }
}

pub fn root_set(n: usize, sign: Sign) -> RootSet {
    assert!(n >= 1);
    let mut set = RootSet {
        n,
        sign,
        nodes: Vec::with_capacity(n),
    };
    set.nodes = (0..n)
        .map(|k| Complex64::from_polar(1.0, set.node_angle(k)))
        .collect();
    set
}

/// A functional ℓ = Σ u_ω·Ev_ω on C[X]^{<d}.
#[derive(Debug, Clone)]
pub struct EvalFunctional {
    pub omega_set: RootSet,
    pub weights: Vec<Complex64>,
    pub d: usize,
}

impl EvalFunctional {
    pub fn apply(&self, f: &Polynomial) -> Complex64 {
        self.omega_set
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&w, &u)| u * f.eval(w))
            .sum()
    }
}

/// Lagrange interpolator for the node with index `idx`, expanded via the
/// closed form L = ±(X^n ± 1)/(ω - X)·ω/n: the quotient of X^n ± 1 by
/// (X - ω) has coefficients ω^{n-1-k}, so coefficient k of L is
/// ±ω^{n-k}/n with '+' for the minus node set.
pub fn lagrange_by_index(omega_set: &RootSet, idx: usize) -> Polynomial {
    let n = omega_set.n;
    let s = match omega_set.sign {
        Sign::Minus => 1.0,
        Sign::Plus => -1.0,
    };
    Polynomial::new(
        (0..n)
            .map(|k| omega_set.node_pow(idx, (n - k) as i64) * (s / n as f64))
            .collect(),
    )
}

/// Lagrange interpolator L_{Ω,ω}; errors if ω is not a node.
pub fn lagrange(omega_set: &RootSet, omega: Complex64) -> Result<Polynomial> {
    Ok(lagrange_by_index(omega_set, omega_set.node_index(omega)?))
}

/// Σ_ω |L_{Ω,ω}(z)|² for |z| = 1; equals 1 by the partition identity.
pub fn partition_check(omega_set: &RootSet, z: Complex64) -> Result<f64> {
    if (z.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::OffCircleInput);
    }
    Ok((0..omega_set.n)
        .map(|k| lagrange_by_index(omega_set, k).eval(z).norm_sqr())
        .sum())
}

/// Evaluates both sides of the node-product identities and the partial
/// fraction identity at z; returns the maximum absolute discrepancy.
///
/// Checked identities, with the upper sign for the plus node set:
///   ∓n/ω       = Π_{ϖ≠ω} (ω-ϖ)                       (each node)
///   ∓(n-1)n/ω² = 2·Σ_{ξ≠ω} Π_{ϖ≠ω,ξ} (ω-ϖ)           (each node)
///   Σ_ω ω/(z-ω)² = ∓ n²z^{n-1}/(z^n±1)²              (at z)
pub fn identity_suite(omega_set: &RootSet, z: Complex64) -> Result<f64> {
    let n = omega_set.n;
    let nodes = &omega_set.nodes;
    if nodes.iter().any(|&w| (w - z).norm() < 1e-12) {
        return Err(Error::PoleAtNode);
    }
    let s = match omega_set.sign {
        Sign::Plus => -1.0,
        Sign::Minus => 1.0,
    };
    let mut worst = 0.0f64;

    for (i, &w) in nodes.iter().enumerate() {
        let mut prod = Complex64::new(1.0, 0.0);
        for (j, &v) in nodes.iter().enumerate() {
            if j != i {
                prod *= w - v;
            }
        }
        let lhs = omega_set.node_pow(i, -1) * (s * n as f64);
        worst = worst.max((lhs - prod).norm());

        let mut acc = Complex64::zero();
        for (j, _) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut inner = Complex64::new(1.0, 0.0);
            for (k, &v) in nodes.iter().enumerate() {
                if k != i && k != j {
                    inner *= w - v;
                }
            }
            acc += inner;
        }
        let lhs = omega_set.node_pow(i, -2) * (s * ((n - 1) * n) as f64);
        worst = worst.max((lhs - acc * 2.0).norm());
    }

    let lhs: Complex64 = nodes.iter().map(|&w| w / ((z - w) * (z - w))).sum();
    let zn = z.powu(n as u32);
    let denom = match omega_set.sign {
        Sign::Plus => zn + 1.0,
        Sign::Minus => zn - 1.0,
    };
    let rhs = z.powu(n as u32 - 1) * (s * (n * n) as f64) / (denom * denom);
    worst = worst.max((lhs - rhs).norm());

    Ok(worst)
}

/// ‖ℓ‖ = Σ|u_ω| on C[X]^{<d}; certified only for d ≥ 2n-1.
pub fn functional_norm(ell: &EvalFunctional) -> Result<f64> {
    let n = ell.omega_set.n;
    if ell.d < 2 * n - 1 {
        return Err(Error::NormNotCertified { d: ell.d, n });
    }
    Ok(ell.weights.iter().map(|u| u.norm()).sum())
}

/// The norm-attaining polynomial f = Σ* (conj(u_ω)/|u_ω|)·L²_{Ω,ω}, with
/// terms for vanishing weights omitted. Degree ≤ 2n-2, sup-norm 1.
pub fn extremal_witness(ell: &EvalFunctional) -> Result<Polynomial> {
    let n = ell.omega_set.n;
    if ell.d < 2 * n - 1 {
        return Err(Error::NormNotCertified { d: ell.d, n });
    }
    if ell.weights.iter().all(|u| u.norm() == 0.0) {
        return Err(Error::AllWeightsZero);
    }
    let mut f = Polynomial::zero();
    for (k, &u) in ell.weights.iter().enumerate() {
        if u.norm() == 0.0 {
            continue;
        }
        let l = lagrange_by_index(&ell.omega_set, k);
        f = f.add(&l.mul(&l).scale(u.conj() / u.norm()));
    }
    Ok(f)
}

/// Σ_ω ω^ν by direct evaluation. Closed form: ε_{Ω,ν}·n if n | ν, else 0,
/// with ε = 1 for the minus set and (-1)^{ν/n} for the plus set.
pub fn orthogonality(omega_set: &RootSet, nu: i64) -> Complex64 {
    (0..omega_set.n).map(|k| omega_set.node_pow(k, nu)).sum()
}

/// Solves Σ_ω u_ω ω^κ = t_κ (0 ≤ κ < d) by the closed form
/// u_ω = (1/n)·Σ_{ν<n} t_ν/ω^ν, after checking that t has the
/// (anti)periodic structure the node-set sign requires.
pub fn solve_weights(t: &WeightVector, omega_set: &RootSet) -> Result<EvalFunctional> {
    let n = omega_set.n;
    let d = t.d;
    let scale = t
        .entries
        .iter()
        .map(|c| c.norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    for nu in 0..d {
        let base = t.entries[nu % n];
        let expect = match omega_set.sign {
            Sign::Minus => base,
            Sign::Plus => {
                if (nu / n).is_multiple_of(2) {
                    base
                } else {
                    -base
                }
            }
        };
        if (t.entries[nu] - expect).norm() > 1e-12 * scale {
            return Err(Error::IncompatibleWeightVector(format!(
                "entry {nu} breaks the required periodicity pattern"
            )));
        }
    }
    let weights: Vec<Complex64> = (0..n)
        .map(|k| {
            let mut acc = Complex64::zero();
            for nu in 0..n.min(d) {
                acc += t.entries[nu] * omega_set.node_pow(k, -(nu as i64));
            }
            acc / n as f64
        })
        .collect();
    Ok(EvalFunctional {
        omega_set: omega_set.clone(),
        weights,
        d,
    })
}
