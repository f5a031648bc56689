//! Complex root finding by Aberth–Ehrlich simultaneous iteration, plus the
//! minimal-root-modulus diagnostics for P_n.

use num_complex::Complex64;
use num_traits::Zero;

use crate::landau::p_n;
use crate::polykernel::Polynomial;
use crate::{Error, Result};

const CORRECTION_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 500;

/// All roots of a polynomial with per-root residuals.
#[derive(Debug, Clone)]
pub struct RootReport {
    /// Roots sorted by (modulus, phase); length equals the degree.
    pub roots: Vec<Complex64>,
    /// |p(root)| for each reported root.
    pub residuals: Vec<f64>,
    pub min_modulus: f64,
}

/// Aberth–Ehrlich iteration from perturbed-circle initial guesses, with one
/// Newton polishing step per root. Deterministic iteration order and fixed
/// golden-angle phase offsets keep the output reproducible.
pub fn find_roots(p: &Polynomial) -> Result<RootReport> {
    let deg = match p.deg() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "root finding needs degree >= 1".into(),
            ))
        }
    };

    // factor out roots at the origin so the initial radius is well defined
    let mut zeros_at_origin = 0usize;
    while p.coeff(zeros_at_origin).is_zero() {
        zeros_at_origin += 1;
    }
    let reduced = Polynomial::new(p.coeffs()[zeros_at_origin..].to_vec());
    let m = deg - zeros_at_origin;

    let mut roots = vec![Complex64::zero(); zeros_at_origin];
    if m >= 1 {
        roots.extend(aberth(&reduced, m)?);
    }

    let mut residuals: Vec<f64> = roots.iter().map(|&z| p.eval(z).norm()).collect();
    sort_roots(&mut roots, &mut residuals);
    let min_modulus = roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    Ok(RootReport {
        roots,
        residuals,
        min_modulus,
    })
}

fn sort_roots(roots: &mut [Complex64], residuals: &mut [f64]) {
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| {
        let ka = (roots[a].norm(), roots[a].arg());
        let kb = (roots[b].norm(), roots[b].arg());
        ka.partial_cmp(&kb).unwrap()
    });
    let r: Vec<Complex64> = order.iter().map(|&i| roots[i]).collect();
    let s: Vec<f64> = order.iter().map(|&i| residuals[i]).collect();
    roots.copy_from_slice(&r);
    residuals.copy_from_slice(&s);
}

fn aberth(p: &Polynomial, deg: usize) -> Result<Vec<Complex64>> {
    let dp = p.derivative();
    let radius = (p.coeff(0).norm() / p.coeff(deg).norm()).powf(1.0 / deg as f64);

    // golden-angle phase offsets break any root symmetry in the guesses
    const GOLDEN: f64 = 0.618_033_988_749_894_8;
    let mut z: Vec<Complex64> = (0..deg)
        .map(|j| {
            let frac = (j as f64 * GOLDEN + 0.25).fract();
            Complex64::from_polar(radius, std::f64::consts::TAU * frac)
        })
        .collect();

    let scale = p.coeffs().iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut max_correction = 0.0f64;
        for i in 0..deg {
            let pi = p.eval(z[i]);
            let dpi = dp.eval(z[i]);
            let newton = if dpi.is_zero() { pi } else { pi / dpi };
            let mut repel = Complex64::zero();
            for j in 0..deg {
                if j != i {
                    repel += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repel;
            let correction = if denom.is_zero() {
                newton
            } else {
                newton / denom
            };
            z[i] -= correction;
            max_correction = max_correction.max(correction.norm());
        }
        if max_correction < CORRECTION_TOL {
            converged = true;
            break;
        }
    }

    // one Newton polishing step per root
    for zi in z.iter_mut() {
        let dpi = dp.eval(*zi);
        if !dpi.is_zero() {
            *zi -= p.eval(*zi) / dpi;
        }
    }

    if !converged {
        let residuals: Vec<f64> = z.iter().map(|&w| p.eval(w).norm()).collect();
        // accept anyway when polishing has already met the residual target
        if residuals.iter().any(|&r| r > 1e-9 * scale * deg as f64) {
            let mut roots = z;
            let mut res = residuals;
            sort_roots(&mut roots, &mut res);
            let min_modulus = roots.iter().map(|w| w.norm()).fold(f64::INFINITY, f64::min);
            return Err(Error::NonConvergence(Box::new(RootReport {
                roots,
                residuals: res,
                min_modulus,
            })));
        }
    }
    Ok(z)
}

/// r(n): the minimal root modulus of P_n.
pub fn r_of_n(n: usize) -> Result<f64> {
    assert!(n >= 1);
    Ok(find_roots(&p_n(n))?.min_modulus)
}

/// Lower bound 1 + 1/(2n+1), the Vieta-derived upper bound (2√(πn))^{1/n},
/// and the computed r(n).
pub fn root_bound_report(n: usize) -> Result<(f64, f64, f64)> {
    assert!(n >= 2);
    let lower = crate::enestrom_kakeya::pole_distance_bound(n);
    let upper = (2.0 * (std::f64::consts::PI * n as f64).sqrt()).powf(1.0 / n as f64);
    let r = r_of_n(n)?;
    Ok((lower, upper, r))
}
