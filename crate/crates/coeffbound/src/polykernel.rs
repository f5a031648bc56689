//! Polynomial arithmetic over complex doubles and exact rationals,
//! evaluation, sup-norm estimation on the unit circle, and truncated
//! power-series inversion.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type ComplexScalar = Complex64;

/// Default relative tolerance for [`Polynomial::sup_norm_circle`].
pub const SUP_NORM_TOL: f64 = 1e-10;

/// Dense complex-coefficient polynomial, coefficients indexed by degree.
///
/// The zero polynomial is stored as an empty coefficient vector; otherwise
/// the trailing coefficient is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::new(vec![Complex64::one()])
    }

    /// X^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::zero(); k + 1];
        coeffs[k] = Complex64::one();
        Polynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of X^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_else(Complex64::zero)
    }

    /// Horner evaluation at z.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, &c)| c * (k as f64 + 1.0))
                .collect(),
        )
    }

    /// Coefficient sequence reversed with respect to the stored degree:
    /// X^deg · p(1/X).
    pub fn reverse(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.coeffs.len() + other.coeffs.len() - 1;
        poly_mul_truncated(self, other, terms)
    }

    /// Estimate of max_{|z|=1} |p(z)| with relative accuracy `tol`.
    ///
    /// Evaluates |p|^2 at N = max(4096, 64·(deg+1)) equispaced circle points
    /// and refines each local maximum by golden-section search; |p(e^{iθ})|^2
    /// is a trigonometric polynomial of degree ≤ deg, so the oversampling
    /// isolates every local maximum. The estimate never undershoots a
    /// sampled value.
    pub fn sup_norm_circle(&self, tol: f64) -> f64 {
        let Some(deg) = self.deg() else {
            return 0.0;
        };
        if deg == 0 {
            return self.coeffs[0].norm();
        }
        let n = 4096usize.max(64 * (deg + 1));
        let step = std::f64::consts::TAU / n as f64;
        let abs2 = |theta: f64| self.eval(Complex64::from_polar(1.0, theta)).norm_sqr();
        let samples: Vec<f64> = (0..n).map(|j| abs2(j as f64 * step)).collect();

        let mut best = 0.0f64;
        let target_width = tol / deg as f64;
        for j in 0..n {
            let prev = samples[(j + n - 1) % n];
            let next = samples[(j + 1) % n];
            let here = samples[j];
            if here >= prev && here >= next {
                // local maximum on the sample grid; refine on the bracketing arc
                let lo = (j as f64 - 1.0) * step;
                let hi = (j as f64 + 1.0) * step;
                let refined = golden_section_max(&abs2, lo, hi, target_width);
                best = best.max(refined.max(here));
            }
        }
        best.sqrt()
    }
}

fn golden_section_max(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, width: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let mut fa = f(a);
    let mut fb = f(b);
    while hi - lo > width {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = f(a);
        }
    }
    fa.max(fb)
}

/// Coefficient-wise convolution truncated to X^{terms-1}.
pub fn poly_mul_truncated(p: &Polynomial, q: &Polynomial, terms: usize) -> Polynomial {
    if p.is_zero() || q.is_zero() || terms == 0 {
        return Polynomial::zero();
    }
    let len = terms.min(p.coeffs.len() + q.coeffs.len() - 1);
    let mut out = vec![Complex64::zero(); len];
    for (i, &a) in p.coeffs.iter().enumerate() {
        if i >= len {
            break;
        }
        for (j, &b) in q.coeffs.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += a * b;
        }
    }
    Polynomial::new(out)
}

/// Truncated multiplicative inverse: returns q with (p·q) ≡ 1 mod X^terms.
///
/// Standard recurrence q_0 = 1/p_0, q_m = -(1/p_0)·Σ_{k≥1} p_k q_{m-k}.
pub fn series_invert(p: &Polynomial, terms: usize) -> Result<Polynomial> {
    let p0 = p.coeff(0);
    if p0.is_zero() {
        return Err(Error::NonInvertibleSeries);
    }
    let inv0 = Complex64::one() / p0;
    let mut q = Vec::with_capacity(terms);
    q.push(inv0);
    for m in 1..terms {
        let mut acc = Complex64::zero();
        for k in 1..=m.min(p.coeffs.len().saturating_sub(1)) {
            acc += p.coeffs[k] * q[m - k];
        }
        q.push(-inv0 * acc);
    }
    Ok(Polynomial::new(q))
}

/// Trapezoidal approximation of (1/2πi)∮ f(z)·kernel(z)/z^{n+1} dz, i.e.
/// the coefficient of z^n in f·kernel. Exact (up to rounding) as long as
/// `samples` exceeds deg f + deg kernel + n.
pub fn contour_coeff_sum(
    f: &Polynomial,
    kernel: &Polynomial,
    n: usize,
    samples: usize,
) -> Result<Complex64> {
    if f.is_zero() || kernel.is_zero() {
        return Ok(Complex64::zero());
    }
    let required = f.deg().unwrap_or(0) + kernel.deg().unwrap_or(0) + n;
    if samples <= required {
        return Err(Error::Aliasing { samples, required });
    }
    let mut acc = Complex64::zero();
    for j in 0..samples {
        let theta = std::f64::consts::TAU * j as f64 / samples as f64;
        let z = Complex64::from_polar(1.0, theta);
        let zn = Complex64::from_polar(1.0, -theta * n as f64);
        acc += f.eval(z) * kernel.eval(z) * zn;
    }
    Ok(acc / samples as f64)
}

/// Dense polynomial with exact rational coefficients; the oracle twin of
/// [`Polynomial`] used for P_n and its series.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn reverse(&self) -> RationalPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        RationalPoly::new(coeffs)
    }

    pub fn mul_truncated(&self, other: &RationalPoly, terms: usize) -> RationalPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() || terms == 0 {
            return RationalPoly::new(Vec::new());
        }
        let len = terms.min(self.coeffs.len() + other.coeffs.len() - 1);
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }

    pub fn series_invert(&self, terms: usize) -> Result<RationalPoly> {
        let p0 = self.coeff(0);
        if p0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = p0.recip();
        let mut q = Vec::with_capacity(terms);
        q.push(inv0.clone());
        for m in 1..terms {
            let mut acc = BigRational::zero();
            for k in 1..=m.min(self.coeffs.len().saturating_sub(1)) {
                acc += &self.coeffs[k] * &q[m - k];
            }
            q.push(-&inv0 * acc);
        }
        Ok(RationalPoly::new(q))
    }

    pub fn to_complex(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(rational_to_f64(c), 0.0))
                .collect(),
        )
    }
}

/// Round a big rational to the nearest f64.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back to a scaled division for very large operands
        let (num, den) = (r.numer(), r.denom());
        let shift = (num.bits() as i64 - den.bits() as i64).max(0);
        let q = BigRational::new(num.clone(), den.clone() << shift as u64);
        q.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

/// A rational function stored as a numerator/denominator pair of polynomials.
#[derive(Debug, Clone)]
pub struct RationalPolynomialPair {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl RationalPolynomialPair {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Self {
        assert!(!denominator.is_zero(), "denominator must be nonzero");
        RationalPolynomialPair {
            numerator,
            denominator,
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.numerator.eval(z) / self.denominator.eval(z)
    }
}
