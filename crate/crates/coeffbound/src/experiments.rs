//! Reproduction of the numerical experiments: the C_{n,d} < L_n grid,
//! pole/zero tables for f_n, and the near-extremal convergence table.

use rayon::prelude::*;

use crate::functional_bounds::shapiro_c;
use crate::landau::{landau_bound, near_extremal};
use crate::rootfind::find_roots;
use crate::Result;

/// Tolerance for calling C < L strict; L is evaluated in exact rationals
/// and rounded once, so borderline cells stay stable across platforms.
pub const STRICTNESS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellClass {
    /// n = 0 or n = d-1, where the maximum is trivially 1.
    Trivial,
    /// d = 2n+2: covered exactly by Newman's theorem.
    NewmanKnown,
    Open,
}

impl CellClass {
    pub fn label(self) -> &'static str {
        match self {
            CellClass::Trivial => "trivial",
            CellClass::NewmanKnown => "newman_known",
            CellClass::Open => "open",
        }
    }
}

/// One (d, n) cell of the comparison grid.
#[derive(Debug, Clone)]
pub struct GridCell {
    pub d: usize,
    pub n: usize,
    pub c: f64,
    pub l: f64,
    pub improved: bool,
    pub classification: CellClass,
}

fn classify(d: usize, n: usize) -> CellClass {
    if n == 0 || n + 1 == d {
        CellClass::Trivial
    } else if d == 2 * n + 2 {
        CellClass::NewmanKnown
    } else {
        CellClass::Open
    }
}

fn grid_cell(d: usize, n: usize, l: f64) -> GridCell {
    let c = shapiro_c(n, d);
    GridCell {
        d,
        n,
        c,
        l,
        improved: c < l - STRICTNESS_TOL,
        classification: classify(d, n),
    }
}

/// All cells 0 ≤ n < d ≤ dmax, ordered by (d, n).
pub fn figure1_grid(dmax: usize) -> Vec<GridCell> {
    assert!(dmax >= 2);
    let landau: Vec<f64> = (0..dmax).map(|n| landau_bound(n).value_float).collect();
    let mut cells = Vec::new();
    for d in 2..=dmax {
        for (n, &l) in landau.iter().enumerate().take(d) {
            cells.push(grid_cell(d, n, l));
        }
    }
    cells
}

/// Parallel variant of [`figure1_grid`]; result assembly stays ordered by
/// (d, n), so both routes produce identical output.
pub fn figure1_grid_parallel(dmax: usize, jobs: usize) -> Vec<GridCell> {
    assert!(dmax >= 2);
    let landau: Vec<f64> = (0..dmax).map(|n| landau_bound(n).value_float).collect();
    let pairs: Vec<(usize, usize)> = (2..=dmax)
        .flat_map(|d| (0..d).map(move |n| (d, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        pairs
            .par_iter()
            .map(|&(d, n)| grid_cell(d, n, landau[n]))
            .collect()
    })
}

/// One pole of f_n (a root of P_n) and the matching reciprocal zero.
#[derive(Debug, Clone)]
pub struct PoleZeroRow {
    pub phase_deg: f64,
    pub pole_modulus: f64,
    pub zero_modulus: f64,
}

/// Moduli and phases of the poles of f_n (roots of P_n) together with the
/// reciprocal zero moduli, sorted by (modulus, phase).
pub fn fig2_table(n: usize) -> Result<Vec<PoleZeroRow>> {
    assert!(n >= 1);
    let report = find_roots(&crate::landau::p_n(n))?;
    Ok(report
        .roots
        .iter()
        .map(|z| PoleZeroRow {
            phase_deg: z.arg().to_degrees(),
            pole_modulus: z.norm(),
            zero_modulus: 1.0 / z.norm(),
        })
        .collect())
}

/// Convergence row: head-coefficient-sum ratio against L_n at truncation d,
/// with the heuristic envelope n³·exp(-d/(5n)) alongside.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub d: usize,
    pub ratio: f64,
    pub envelope: f64,
}

pub fn thm21_convergence(n: usize, d_list: &[usize]) -> Vec<ConvergenceRow> {
    let l = landau_bound(n).value_float;
    d_list
        .iter()
        .map(|&d| {
            assert!(d > n);
            let ne = near_extremal(n, d);
            ConvergenceRow {
                d,
                ratio: ne.coeff_sum_head.norm() / l,
                envelope: (n * n * n) as f64 * (-(d as f64) / (5.0 * n as f64)).exp(),
            }
        })
        .collect()
}

/// CSV rendering (UTF-8, LF, header row, '.' decimal separator).
pub fn grid_to_csv(cells: &[GridCell], precision: usize) -> String {
    let mut out = String::from("d,n,C,L,improved,classification\n");
    for cell in cells {
        out.push_str(&format!(
            "{},{},{:.p$},{:.p$},{},{}\n",
            cell.d,
            cell.n,
            cell.c,
            cell.l,
            cell.improved,
            cell.classification.label(),
            p = precision
        ));
    }
    out
}

pub fn grid_to_json(cells: &[GridCell]) -> String {
    let array: Vec<serde_json::Value> = cells
        .iter()
        .map(|cell| {
            serde_json::json!({
                "d": cell.d,
                "n": cell.n,
                "c": cell.c,
                "l": cell.l,
                "improved": cell.improved,
                "classification": cell.classification.label(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&array).expect("grid serialization")
}

/// Minimal static SVG scatter of the improved cells, grey classes for
/// trivial and Newman-covered cells.
pub fn grid_to_svg(cells: &[GridCell]) -> String {
    let dmax = cells.iter().map(|c| c.d).max().unwrap_or(2);
    let unit = 8usize;
    let margin = 30usize;
    let size = margin * 2 + unit * (dmax + 1);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"{margin}\" y=\"{margin}\" width=\"{w}\" height=\"{w}\" \
         fill=\"none\" stroke=\"black\"/>\n",
        w = unit * (dmax + 1)
    ));
    for cell in cells.iter().filter(|c| c.improved) {
        let x = margin + unit * cell.d;
        let y = margin + unit * (dmax + 1 - cell.n) - unit;
        let fill = match cell.classification {
            CellClass::Open => "#555555",
            CellClass::NewmanKnown | CellClass::Trivial => "#bbbbbb",
        };
        out.push_str(&format!(
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{unit}\" height=\"{unit}\" fill=\"{fill}\" \
             stroke=\"black\" stroke-width=\"0.5\"><title>d={d}, n={n}</title></rect>\n",
            d = cell.d,
            n = cell.n
        ));
    }
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"10\">d</text>\n",
        size - margin / 2,
        size - margin
    ));
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"10\">n</text>\n",
        margin / 2,
        margin
    ));
    out.push_str("</svg>\n");
    out
}
