//! Randomized identity and bracket suites, runnable from the CLI.
//!
//! Each suite draws deterministic samples from a fixed seed, checks a
//! contract from the bound machinery, and reports the worst residual seen
//! together with the first counterexample, if any.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enestrom_kakeya::{ek_envelope_inner, ek_envelope_outer, ek_profile};
use crate::functional_bounds::{bound_minus, bound_plus};
use crate::interpolation::{partition_check, root_set, Sign};
use crate::landau::{binom_half, p_n_rational};
use crate::polykernel::{rational_to_f64, Polynomial, SUP_NORM_TOL};
use crate::rootfind::find_roots;

const SEED: u64 = 0x1f2e_3d4c_5b6a_7988;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub pass: bool,
    pub max_residual: f64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    fn ok(name: &'static str, max_residual: f64) -> Self {
        SuiteReport {
            name,
            pass: true,
            max_residual,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, max_residual: f64, counterexample: String) -> Self {
        SuiteReport {
            name,
            pass: false,
            max_residual,
            counterexample: Some(counterexample),
        }
    }
}

fn unit_circle_point(rng: &mut impl Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.gen::<f64>() * std::f64::consts::TAU)
}

/// Σ|L|² = 1 on the circle, all n ≤ 25, both signs, 1000 points each.
pub fn suite_partition() -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst = 0.0f64;
    for sign in [Sign::Plus, Sign::Minus] {
        for n in 1..=25usize {
            let set = root_set(n, sign);
            for _ in 0..1000 {
                let z = unit_circle_point(&mut rng);
                let sum = partition_check(&set, z).expect("on-circle sample");
                let residual = (sum - 1.0).abs();
                worst = worst.max(residual);
                if residual >= 1e-11 {
                    return SuiteReport::fail(
                        "partition",
                        residual,
                        format!("n = {n}, sign = {sign:?}, z = {z}"),
                    );
                }
            }
        }
    }
    SuiteReport::ok("partition", worst)
}

fn random_monotone_poly(rng: &mut impl Rng) -> Polynomial {
    let deg = rng.gen_range(1..=12usize);
    let mut coeffs = Vec::with_capacity(deg + 1);
    let mut a = rng.gen_range(0.5..4.0f64);
    for _ in 0..=deg {
        coeffs.push(a);
        a *= rng.gen_range(0.3..1.0f64);
    }
    Polynomial::from_real(&coeffs)
}

/// Quantitative EK brackets over 500 random monotone profiles, 100
/// admissible points each (inner and outer), plus the annulus property.
pub fn suite_ek() -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut worst = 0.0f64;
    for trial in 0..500 {
        let p = random_monotone_poly(&mut rng);
        let profile = ek_profile(&p).expect("constructed monotone");
        for _ in 0..100 {
            let radius = profile.r * rng.gen::<f64>() * 0.999;
            let z = Complex64::from_polar(radius, rng.gen::<f64>() * std::f64::consts::TAU);
            let (lo, hi) = ek_envelope_inner(&profile, z).expect("inside the annulus");
            let v = p.eval(z).norm();
            let violation = (lo - v).max(v - hi).max(0.0);
            worst = worst.max(violation);
            if violation > 1e-12 * (1.0 + v) {
                return SuiteReport::fail(
                    "ek",
                    violation,
                    format!("inner, trial {trial}, z = {z}"),
                );
            }

            let radius = profile.big_r * (1.0 + rng.gen::<f64>() * 3.0) + 1e-9;
            let z = Complex64::from_polar(radius, rng.gen::<f64>() * std::f64::consts::TAU);
            let (lo, hi) = ek_envelope_outer(&profile, z).expect("outside the annulus");
            let v = p.eval(z).norm();
            let violation = (lo - v).max(v - hi).max(0.0);
            worst = worst.max(violation);
            if violation > 1e-12 * (1.0 + v) {
                return SuiteReport::fail(
                    "ek",
                    violation,
                    format!("outer, trial {trial}, z = {z}"),
                );
            }
        }
        if trial % 10 == 0 {
            // annulus property via the root finder
            if let Ok(report) = find_roots(&p) {
                for &z in &report.roots {
                    let inside = z.norm() >= profile.r - 1e-8 && z.norm() <= profile.big_r + 1e-8;
                    if !inside {
                        return SuiteReport::fail(
                            "ek",
                            z.norm(),
                            format!("root {z} escapes the annulus, trial {trial}"),
                        );
                    }
                }
            }
        }
    }
    SuiteReport::ok("ek", worst)
}

/// Node-product and partial-fraction identities on random off-node points.
pub fn suite_identities() -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut worst = 0.0f64;
    for sign in [Sign::Plus, Sign::Minus] {
        for n in 1..=15usize {
            let set = root_set(n, sign);
            for _ in 0..20 {
                let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                if set.nodes.iter().any(|&w| (w - z).norm() < 1e-6) {
                    continue;
                }
                let residual = crate::interpolation::identity_suite(&set, z).expect("off-node");
                worst = worst.max(residual);
                if residual >= 1e-8 {
                    return SuiteReport::fail(
                        "identities",
                        residual,
                        format!("n = {n}, sign = {sign:?}, z = {z}"),
                    );
                }
            }
        }
    }
    SuiteReport::ok("identities", worst)
}

/// Vieta product and root simplicity for P_n.
pub fn suite_vieta() -> SuiteReport {
    let mut worst = 0.0f64;
    for n in 1..=40usize {
        let report = match find_roots(&p_n_rational(n).to_complex()) {
            Ok(r) => r,
            Err(e) => return SuiteReport::fail("vieta", f64::NAN, format!("n = {n}: {e}")),
        };
        let prod: f64 = report.roots.iter().map(|z| z.norm()).product();
        let expect = 1.0 / rational_to_f64(&binom_half(n).abs());
        let residual = (prod / expect - 1.0).abs();
        worst = worst.max(residual);
        if residual >= 1e-8 {
            return SuiteReport::fail("vieta", residual, format!("n = {n}"));
        }
        for (i, &a) in report.roots.iter().enumerate() {
            for &b in &report.roots[i + 1..] {
                if (a - b).norm() <= 1e-6 {
                    return SuiteReport::fail(
                        "vieta",
                        (a - b).norm(),
                        format!("n = {n}: roots {a} and {b} nearly coincide"),
                    );
                }
            }
        }
    }
    SuiteReport::ok("vieta", worst)
}

/// Head identity of P_n²: coefficients 0..n all exactly 1.
pub fn suite_pn_squared() -> SuiteReport {
    for n in 1..=40usize {
        let p = p_n_rational(n);
        let sq = p.mul_truncated(&p, n + 1);
        for k in 0..=n {
            if sq.coeff(k) != BigRational::from_integer(1.into()) {
                return SuiteReport::fail(
                    "pnsquared",
                    f64::NAN,
                    format!("n = {n}, coefficient {k} differs from 1"),
                );
            }
        }
    }
    SuiteReport::ok("pnsquared", 0.0)
}

/// Random sharp certificates: witness attains the certified value with
/// sup-norm 1, for both extension patterns.
pub fn suite_witness(trials: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut worst = 0.0f64;
    for trial in 0..trials {
        let n = rng.gen_range(1..=12usize);
        let d = 2 * n - 1 + rng.gen_range(0..4usize);
        let t_half: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let plus = rng.gen::<bool>();
        let cert = if plus {
            bound_plus(&t_half, d)
        } else {
            bound_minus(&t_half, d)
        }
        .expect("d >= 2n-1 by construction");
        let Some(witness) = cert.witness.as_ref() else {
            continue; // all weights vanished; nothing to attain
        };
        let ell = cert.weights.as_ref().expect("weights recorded");
        let attained = ell.apply(witness).norm();
        let supnorm = witness.sup_norm_circle(SUP_NORM_TOL);
        let residual = (attained - cert.value).abs().max((supnorm - 1.0).abs());
        worst = worst.max(residual);
        if residual >= 1e-9 {
            return SuiteReport::fail(
                "witness",
                residual,
                format!("trial {trial}: n = {n}, d = {d}, plus = {plus}"),
            );
        }
        if witness.deg().is_some_and(|deg| deg > 2 * n - 2) {
            return SuiteReport::fail(
                "witness",
                f64::NAN,
                format!("trial {trial}: witness degree exceeds 2n-2"),
            );
        }
    }
    SuiteReport::ok("witness", worst)
}

pub fn run_suites(selector: &str) -> Vec<SuiteReport> {
    let mut out = Vec::new();
    let all = selector == "all";
    if all || selector == "partition" {
        out.push(suite_partition());
    }
    if all || selector == "ek" {
        out.push(suite_ek());
    }
    if all || selector == "identities" {
        out.push(suite_identities());
    }
    if all || selector == "vieta" {
        out.push(suite_vieta());
    }
    if all || selector == "pnsquared" {
        out.push(suite_pn_squared());
    }
    if all || selector == "witness" {
        out.push(suite_witness(200));
    }
    out
}
