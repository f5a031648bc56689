//! Command-line surface for the bound calculators and experiments.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use coeffbound::experiments::{
    fig2_table, figure1_grid, figure1_grid_parallel, grid_to_csv, grid_to_json, grid_to_svg,
    thm21_convergence,
};
use coeffbound::functional_bounds::{
    bound_minus, bound_plus, combined_bound, newman_bound, shapiro_c, BoundCertificate,
    WeightVector,
};
use coeffbound::landau::{landau_bound, taylor_f_n};
use coeffbound::verify::run_suites;

#[derive(Parser)]
#[command(
    name = "coeffbound",
    version,
    about = "Coefficient-sum bounds for unit-disk polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Args)]
struct Output {
    /// Output path; standard output when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Decimal digits printed for floating-point values
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Landau bound L_n
    Landau {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Newman's exact value of M_{n-1,2n}
    Newman {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Combined upper bound C_{n,d} for the head coefficient sum
    ShapiroC {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Bound for a weight vector, sharp (plus/minus) or combined
    Bound {
        /// Comma-separated weight entries, e.g. "1,1,0" or "1,0.5+0.5i"
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        d: usize,
        /// Use the combined (non-sharp) bound over the full vector
        #[arg(long, conflicts_with_all = ["sign", "n"])]
        combined: bool,
        #[arg(long, requires = "n")]
        sign: Option<SignArg>,
        /// Node count for the sharp bounds; t then holds the n half-entries
        #[arg(long, requires = "sign")]
        n: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// The C_{n,d} vs L_n comparison grid for 0 <= n < d <= dmax
    Grid {
        #[arg(long)]
        dmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Worker threads for grid cells; env COEFFBOUND_JOBS supplies the default
        #[arg(long, env = "COEFFBOUND_JOBS", default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Taylor coefficients b_{n,nu} of the Landau extremizer
    Taylor {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Pole/zero table of f_n (roots of P_n and reciprocals)
    Roots {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Near-extremal convergence table at the given truncations
    Converge {
        #[arg(long)]
        n: usize,
        /// Comma-separated truncation degrees, e.g. "10,20,50,100,200"
        #[arg(long)]
        d: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run a randomized property suite; exits 1 on any failure
    Verify {
        /// partition | ek | identities | vieta | pnsquared | witness | all
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    if let Ok(re) = s.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    if let Some(im) = s.strip_suffix('i') {
        // pure imaginary, or a+bi / a-bi split at the last interior sign
        let im = im.trim();
        if im.is_empty() || im == "+" || im == "-" {
            return Ok(Complex64::new(0.0, if im == "-" { -1.0 } else { 1.0 }));
        }
        if let Ok(v) = im.parse::<f64>() {
            return Ok(Complex64::new(0.0, v));
        }
        for (idx, ch) in im.char_indices().rev() {
            if idx > 0 && (ch == '+' || ch == '-') && !im[..idx].ends_with(['e', 'E']) {
                let re: f64 = im[..idx].parse().map_err(|e| format!("{s}: {e}"))?;
                let imag_str = &im[idx..];
                let imag = if imag_str == "+" || imag_str == "-" {
                    format!("{imag_str}1").parse::<f64>()
                } else {
                    imag_str.parse::<f64>()
                }
                .map_err(|e| format!("{s}: {e}"))?;
                return Ok(Complex64::new(re, imag));
            }
        }
    }
    Err(format!("cannot parse '{s}' as a complex number"))
}

fn parse_weights(spec: &str) -> Result<Vec<Complex64>, String> {
    spec.split(',').map(parse_complex).collect()
}

fn emit(output: &Output, text: &str) -> std::io::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

fn certificate_json(cert: &BoundCertificate) -> serde_json::Value {
    let method = match cert.method {
        coeffbound::functional_bounds::BoundMethod::Newman => "newman",
        coeffbound::functional_bounds::BoundMethod::ThmPlus => "thm_plus",
        coeffbound::functional_bounds::BoundMethod::ThmMinus => "thm_minus",
        coeffbound::functional_bounds::BoundMethod::Combined => "combined",
    };
    serde_json::json!({
        "value": cert.value,
        "method": method,
        "sharp": cert.sharp,
        "weights": cert.weights.as_ref().map(|ell| {
            ell.weights.iter().copied().map(complex_json).collect::<Vec<_>>()
        }),
        "witness_coefficients": cert.witness.as_ref().map(|w| {
            w.coeffs().iter().copied().map(complex_json).collect::<Vec<_>>()
        }),
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Landau { n, output } => {
            let bound = landau_bound(n);
            let text = format!(
                "{}/{} = {:.p$}\n",
                bound.value_exact.numer(),
                bound.value_exact.denom(),
                bound.value_float,
                p = output.precision as usize
            );
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::Newman { n, output } => {
            if n < 1 {
                return Err("newman requires n >= 1".into());
            }
            let text = format!("{:.p$}\n", newman_bound(n), p = output.precision as usize);
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::ShapiroC { n, d, output } => {
            if n >= d {
                return Err("shapiro-c requires n < d".into());
            }
            let text = format!("{:.p$}\n", shapiro_c(n, d), p = output.precision as usize);
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::Bound {
            t,
            d,
            combined,
            sign,
            n,
            output,
        } => {
            if d == 0 {
                return Err("bound requires d >= 1".into());
            }
            let entries = parse_weights(&t)?;
            let cert = match (combined, sign) {
                (false, Some(sign)) => {
                    let n = n.expect("clap enforces --n with --sign");
                    if entries.len() != n {
                        return Err(format!(
                            "sharp bound needs exactly n = {n} half-entries, got {}",
                            entries.len()
                        ));
                    }
                    match sign {
                        SignArg::Plus => bound_plus(&entries, d),
                        SignArg::Minus => bound_minus(&entries, d),
                    }
                    .map_err(|e| e.to_string())?
                }
                _ => {
                    if entries.len() != d {
                        return Err(format!(
                            "combined bound needs exactly d = {d} entries, got {}",
                            entries.len()
                        ));
                    }
                    combined_bound(&WeightVector::new(entries))
                }
            };
            let json = serde_json::to_string_pretty(&certificate_json(&cert))
                .expect("certificate serialization");
            emit(&output, &format!("{json}\n")).map_err(|e| e.to_string())?;
        }
        Command::Grid {
            dmax,
            format,
            jobs,
            output,
        } => {
            if dmax < 2 {
                return Err("grid requires dmax >= 2".into());
            }
            let cells = if jobs > 1 {
                figure1_grid_parallel(dmax, jobs)
            } else {
                figure1_grid(dmax)
            };
            let text = match format {
                Format::Csv => grid_to_csv(&cells, output.precision as usize),
                Format::Json => grid_to_json(&cells),
                Format::Svg => grid_to_svg(&cells),
            };
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::Taylor { n, m, output } => {
            if n < 1 || m < 1 {
                return Err("taylor requires n >= 1 and m >= 1".into());
            }
            let table = taylor_f_n(n, m);
            let mut text = String::from("nu,b\n");
            for (nu, b) in table.coeffs.iter().enumerate() {
                text.push_str(&format!("{nu},{b:.p$}\n", p = output.precision as usize));
            }
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::Roots { n, output } => {
            if n < 1 {
                return Err("roots requires n >= 1".into());
            }
            let rows = fig2_table(n).map_err(|e| e.to_string())?;
            let p = output.precision as usize;
            let mut text = String::from("phase_deg,pole_modulus,zero_modulus\n");
            for row in rows {
                text.push_str(&format!(
                    "{:.p$},{:.p$},{:.p$}\n",
                    row.phase_deg, row.pole_modulus, row.zero_modulus
                ));
            }
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::Converge { n, d, output } => {
            if n < 1 {
                return Err("converge requires n >= 1".into());
            }
            let d_list: Vec<usize> = d
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            if d_list.iter().any(|&dv| dv <= n) {
                return Err("converge requires every d > n".into());
            }
            let rows = thm21_convergence(n, &d_list);
            let p = output.precision as usize;
            let mut text = String::from("d,ratio,one_minus_ratio,envelope\n");
            for row in rows {
                text.push_str(&format!(
                    "{},{:.p$},{:.3e},{:.3e}\n",
                    row.d,
                    row.ratio,
                    1.0 - row.ratio,
                    row.envelope
                ));
            }
            emit(&output, &text).map_err(|e| e.to_string())?;
        }
        Command::Verify { suite } => {
            let known = [
                "partition",
                "ek",
                "identities",
                "vieta",
                "pnsquared",
                "witness",
                "all",
            ];
            if !known.contains(&suite.as_str()) {
                return Err(format!("unknown suite '{suite}'; one of {known:?}"));
            }
            let reports = run_suites(&suite);
            let mut failed = false;
            for report in &reports {
                let status = if report.pass { "pass" } else { "FAIL" };
                println!(
                    "{:<12} {}  max residual {:.3e}",
                    report.name, status, report.max_residual
                );
                if let Some(ce) = &report.counterexample {
                    println!("    counterexample: {ce}");
                }
                failed |= !report.pass;
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
