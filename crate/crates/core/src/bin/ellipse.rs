use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ellipse_cf::harness::{self, GroundTruth, DEFAULT_MATCH_ORDER, DEFAULT_TOL};
use ellipse_cf::perturb::sensitivity;
use ellipse_cf::series::DEFAULT_ORDER;
use ellipse_cf::{
    coefficient_gap, e_coefficients, perimeter, solve_radicand_correction, viscovatov, Approximant,
    EllipseAxes, PerturbationSpec,
};

#[derive(Parser)]
#[command(
    name = "ellipse",
    about = "Exact continued-fraction analysis of ellipse perimeter approximations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CfDisplay {
    Normalized,
    Integer4,
}

#[derive(Subcommand)]
enum Command {
    /// Exact coefficients of E(x).
    Coeffs {
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = CoeffFormat::Text)]
        format: CoeffFormat,
    },
    /// Partial numerators of the continued fraction of E(x).
    Cf {
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = CfDisplay::Normalized)]
        display: CfDisplay,
    },
    /// Number of leading series terms an approximant shares with E(x).
    MatchDepth {
        #[arg(long)]
        method: String,
        #[arg(long, default_value_t = DEFAULT_MATCH_ORDER)]
        max_order: usize,
    },
    /// Solve for the radicand correction k that turns R2 into A1.
    SolveK {
        /// Power of the monomial k x^m added inside the radical.
        #[arg(long, default_value_t = 4)]
        m: usize,
        /// Coefficient to match; defaults to m + 1.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Relative errors against the truncated series over a grid, as CSV.
    Sweep {
        #[arg(long, default_value = "0:0.99:0.01")]
        grid: String,
        #[arg(long, default_value = "r1,r2,cantrell,a1,a2")]
        methods: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        terms: usize,
    },
    /// Perimeter of one ellipse.
    Perimeter {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long, default_value = "all")]
        method: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

/// Split a method list on commas. Arguments of `cantrell:p,k` and
/// `cf:depth,tail` also contain commas, so a piece that does not start with
/// a letter continues the previous method.
fn parse_methods(list: &str) -> Result<Vec<Approximant>> {
    let mut names: Vec<String> = Vec::new();
    for piece in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let continues = !piece.starts_with(|c: char| c.is_ascii_alphabetic());
        match names.last_mut() {
            Some(last) if continues => {
                last.push(',');
                last.push_str(piece);
            }
            _ => names.push(piece.to_string()),
        }
    }
    if names.is_empty() {
        bail!("no methods given");
    }
    names
        .iter()
        .map(|n| n.parse::<Approximant>().map_err(Into::into))
        .collect()
}

/// Six significant digits.
fn sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    if (-4..6).contains(&mag) {
        format!("{:.*}", (5 - mag).max(0) as usize, v)
    } else {
        format!("{v:.5e}")
    }
}

fn run(cli: Cli) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Coeffs { terms, format } => {
            let e = e_coefficients(terms)?;
            match format {
                CoeffFormat::Text => {
                    for (n, c) in e.coefficients().iter().enumerate() {
                        writeln!(stdout, "c_{n} = {c}")?;
                    }
                }
                CoeffFormat::Csv => {
                    writeln!(stdout, "n,coefficient")?;
                    for (n, c) in e.coefficients().iter().enumerate() {
                        writeln!(stdout, "{n},{c}")?;
                    }
                }
            }
        }
        Command::Cf { depth, display } => {
            let cf = viscovatov(&e_coefficients(depth + 1)?, depth)?;
            match display {
                CfDisplay::Normalized => {
                    for (i, a) in cf.partial_numerators().iter().enumerate() {
                        writeln!(stdout, "a_{} = {a}", i + 1)?;
                    }
                    writeln!(stdout, "E(x) = {}", cf.display_normalized())?;
                }
                CfDisplay::Integer4 => {
                    for (i, b) in cf.integer4_numerators().iter().enumerate() {
                        writeln!(stdout, "b_{} = {b}", i + 1)?;
                    }
                    writeln!(stdout, "E(x) = {}", cf.display_integer4())?;
                }
            }
        }
        Command::MatchDepth { method, max_order } => {
            let m: Approximant = method.parse()?;
            let depth = harness::match_depth(&m, max_order)?;
            writeln!(
                stdout,
                "{m}: matches {depth} leading terms of E(x) (checked through x^{})",
                max_order - 1
            )?;
        }
        Command::SolveK { m, n } => {
            let spec = PerturbationSpec::new(Approximant::R2, m, n.unwrap_or(m + 1))?;
            let n = spec.target_order();
            let target = e_coefficients(n + 2)?;
            let gap = coefficient_gap(&target, &Approximant::R2, n)?;
            let sol = solve_radicand_correction(&spec, &target)?;
            writeln!(stdout, "Delta = {gap}")?;
            writeln!(stdout, "slope = {}", sensitivity(&spec)?)?;
            writeln!(stdout, "k = {}", sol.k)?;
            writeln!(stdout, "radicand = 4 - 3x + ({})x^{m}", sol.k)?;
            writeln!(
                stdout,
                "{:>3}  {:>20}  {:>20}  {:>20}  match",
                "j", "E", "R2", "corrected"
            )?;
            for (j, t, b, c) in &sol.table {
                let ok = if t == c { "yes" } else { "no" };
                writeln!(stdout, "{j:>3}  {t:>20}  {b:>20}  {c:>20}  {ok}")?;
            }
            writeln!(stdout, "matched terms: {}", sol.matched_terms())?;
        }
        Command::Sweep {
            grid,
            methods,
            out,
            terms,
        } => {
            let grid = harness::parse_grid(&grid)?;
            let methods = parse_methods(&methods)?;
            let report = harness::sweep(&grid, &methods, terms)?;
            if report.endpoint_warning {
                eprintln!(
                    "warning: {terms}-term ground truth has truncation error above {:e} on part of the grid",
                    harness::TRUNCATION_WARNING
                );
            }
            harness::emit_csv(&report, &out)?;
            writeln!(
                stdout,
                "{:<16} {:>14} {:>8}",
                "method", "max relerr", "at x"
            )?;
            for (m, s) in report.summaries() {
                writeln!(
                    stdout,
                    "{:<16} {:>14} {:>8}",
                    m.label(),
                    sig6(s.max_relative_error),
                    s.argmax_x
                )?;
            }
            writeln!(
                stdout,
                "wrote {} rows to {}",
                report.grid.len(),
                out.display()
            )?;
        }
        Command::Perimeter { a, b, method, tol } => {
            let axes = EllipseAxes::new(a, b)?;
            let x = axes.x();
            writeln!(
                stdout,
                "a = {}, b = {}, x = {}",
                axes.a(),
                axes.b(),
                sig6(x)
            )?;
            let truth = GroundTruth::default();
            if truth.endpoint_warning(x) {
                eprintln!(
                    "warning: x = {x} is close to 1; the {DEFAULT_ORDER}-term series is truncated by up to {:e} (relative)",
                    truth.truncation_bound(x)
                );
            }
            if method == "all" {
                let quad = harness::quadrature_perimeter(axes.a(), axes.b(), tol)
                    .context("quadrature cross-check")?;
                let mut methods = vec![Approximant::SeriesTruncation(DEFAULT_ORDER)];
                methods.extend(Approximant::benchmark_set());
                writeln!(
                    stdout,
                    "{:<12} {:>20} {:>14}",
                    "method", "perimeter", "relerr vs quad"
                )?;
                for m in &methods {
                    let p = perimeter(&axes, m)?;
                    writeln!(
                        stdout,
                        "{:<12} {:>20.15} {:>14}",
                        m.label(),
                        p,
                        sig6(harness::relative_error(p, quad.value))
                    )?;
                }
                writeln!(
                    stdout,
                    "{:<12} {:>20.15}  (est. error {:e}, {} evaluations)",
                    "quadrature", quad.value, quad.estimated_error, quad.evaluations
                )?;
                writeln!(
                    stdout,
                    "{:<12} {:>20.15}",
                    "pi(a+b)",
                    PI * (axes.a() + axes.b())
                )?;
            } else {
                let m: Approximant = method.parse()?;
                writeln!(stdout, "{} {:.15}", m.label(), perimeter(&axes, &m)?)?;
            }
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        // a closed pipe (`ellipse coeffs | head`) is not an error
        if let Some(io) = e.downcast_ref::<std::io::Error>() {
            if io.kind() == std::io::ErrorKind::BrokenPipe {
                return;
            }
        }
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_lists_with_embedded_commas() {
        let m = parse_methods("r1,cantrell:0.3,10,cf:4,-183/800,a2").unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m[1], Approximant::Cantrell { p: 0.3, k: 10.0 });
        assert_eq!(m[2].to_string(), "cf:4,-183/800");
        assert_eq!(m[3], Approximant::A2);
        assert!(parse_methods("").is_err());
        assert!(parse_methods("r9").is_err());
    }

    #[test]
    fn six_digits() {
        assert_eq!(sig6(9.688448220547674), "9.68845");
        assert_eq!(sig6(3.414481156912103e-4), "0.000341448");
        assert_eq!(sig6(7.5e-6), "7.50000e-6");
    }
}
