use rayon::prelude::*;

use crate::approximants::{series_of, Approximant};
use crate::error::{Error, Result};
use crate::series::{e_coefficients, horner, DEFAULT_ORDER};

/// Beyond this many terms the exact coefficients get expensive (thousands
/// of digits each); longer truncations use the float recurrence instead.
const EXACT_TERMS_LIMIT: usize = 256;

/// Relative truncation error above which the ground truth is flagged.
pub const TRUNCATION_WARNING: f64 = 1e-12;

/// E_N(x): the first `terms` coefficients of E summed in double precision.
#[derive(Clone, Debug)]
pub struct GroundTruth {
    coefficients: Vec<f64>,
}

impl GroundTruth {
    pub fn new(terms: usize) -> Result<Self> {
        if terms == 0 {
            return Err(Error::EmptySeries);
        }
        let coefficients = if terms <= EXACT_TERMS_LIMIT {
            e_coefficients(terms)?.to_f64_vec()
        } else {
            let mut exact = e_coefficients(EXACT_TERMS_LIMIT)?.to_f64_vec();
            for n in EXACT_TERMS_LIMIT..terms {
                let r = (2 * n - 3) as f64 / (2 * n) as f64;
                exact.push(exact[n - 1] * r * r);
            }
            exact
        };
        Ok(Self { coefficients })
    }

    /// Upper bound on the relative truncation error at `x`:
    /// c_N x^N / (1 - x), since the c_n decrease and E(x) >= 1.
    pub fn truncation_bound(&self, x: f64) -> f64 {
        let n = self.coefficients.len();
        if x >= 1.0 {
            return f64::INFINITY;
        }
        let last = self.coefficients[n - 1];
        let r = (2 * n - 3) as f64 / (2 * n) as f64;
        last * r * r * x.powi(n as i32) / (1.0 - x)
    }

    /// True when the truncation error at `x` may exceed 1e-12.
    pub fn endpoint_warning(&self, x: f64) -> bool {
        self.truncation_bound(x) > TRUNCATION_WARNING
    }

    pub fn terms(&self) -> usize {
        self.coefficients.len()
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain(x));
        }
        Ok(horner(&self.coefficients, x))
    }
}

impl Default for GroundTruth {
    fn default() -> Self {
        Self::new(DEFAULT_ORDER).expect("nonzero term count")
    }
}

pub fn ground_truth(x: f64, terms: usize) -> Result<f64> {
    GroundTruth::new(terms)?.eval(x)
}

/// True when the 50-term truncation error at `x` may exceed 1e-12
/// (from about x = 0.75 upward).
pub fn endpoint_warning(x: f64) -> bool {
    GroundTruth::default().endpoint_warning(x)
}

pub fn relative_error(value: f64, truth: f64) -> f64 {
    (value - truth).abs() / truth
}

#[derive(Clone, Debug, PartialEq)]
pub struct MethodColumn {
    pub method: Approximant,
    pub values: Vec<f64>,
    pub relative_errors: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MethodSummary {
    pub max_relative_error: f64,
    pub argmax_x: f64,
}

impl MethodColumn {
    /// First maximum wins ties.
    pub fn summary(&self, grid: &[f64]) -> MethodSummary {
        let (i, max) = self.relative_errors.iter().copied().enumerate().fold(
            (0, f64::NEG_INFINITY),
            |(bi, bm), (i, r)| if r > bm { (i, r) } else { (bi, bm) },
        );
        MethodSummary {
            max_relative_error: max,
            argmax_x: grid[i],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub grid: Vec<f64>,
    pub truth: Vec<f64>,
    pub truth_terms: usize,
    pub columns: Vec<MethodColumn>,
    /// Some grid point lies above the endpoint warning threshold.
    pub endpoint_warning: bool,
}

impl SweepReport {
    pub fn column(&self, method: &Approximant) -> Option<&MethodColumn> {
        self.columns.iter().find(|c| &c.method == method)
    }

    pub fn summaries(&self) -> Vec<(Approximant, MethodSummary)> {
        self.columns
            .iter()
            .map(|c| (c.method.clone(), c.summary(&self.grid)))
            .collect()
    }
}

/// Inclusive grid `start, start + step, ..., end`.
pub fn linear_grid(start: f64, end: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(end >= start) || !start.is_finite() || !end.is_finite() {
        return Err(Error::InvalidGrid(format!("{start}:{end}:{step}")));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    // Snap to 12 decimals so 0.35 is 0.35, not 35 * 0.01.
    Ok((0..=count)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .collect())
}

/// Parse `START:END:STEP`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::InvalidGrid(spec.to_string());
    if parts.len() != 3 {
        return Err(bad());
    }
    let p: Vec<f64> = parts
        .iter()
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    linear_grid(p[0], p[1], p[2])
}

/// The default benchmark grid 0.00, 0.01, ..., 0.99.
pub fn default_grid() -> Vec<f64> {
    (0..100).map(|i| i as f64 / 100.0).collect()
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("empty grid".into()));
    }
    if let Some(x) = grid.iter().find(|x| !(0.0..1.0).contains(*x)) {
        return Err(Error::InvalidGrid(format!("{x} outside [0, 1)")));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid(
            "grid must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Evaluate every method at every grid point against E_N. Points are
/// evaluated in parallel; the result does not depend on scheduling.
pub fn sweep(grid: &[f64], methods: &[Approximant], truth_terms: usize) -> Result<SweepReport> {
    validate_grid(grid)?;
    let truth_fn = GroundTruth::new(truth_terms)?;
    let truth: Vec<f64> = grid
        .iter()
        .map(|&x| truth_fn.eval(x))
        .collect::<Result<_>>()?;
    let columns = methods
        .iter()
        .map(|m| {
            let evaluator = m.evaluator()?;
            let values: Vec<f64> = grid
                .par_iter()
                .map(|&x| evaluator.eval(x))
                .collect::<Result<_>>()?;
            let relative_errors = values
                .iter()
                .zip(&truth)
                .map(|(&v, &t)| relative_error(v, t))
                .collect();
            Ok(MethodColumn {
                method: m.clone(),
                values,
                relative_errors,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SweepReport {
        endpoint_warning: grid.iter().any(|&x| truth_fn.endpoint_warning(x)),
        grid: grid.to_vec(),
        truth,
        truth_terms,
        columns,
    })
}

pub const DEFAULT_MATCH_ORDER: usize = 12;

/// Number of leading coefficients the approximant shares with E, checked up
/// to `max_order` coefficients.
pub fn match_depth(approx: &Approximant, max_order: usize) -> Result<usize> {
    let s = series_of(approx, max_order)?;
    let e = e_coefficients(max_order)?;
    Ok(s.coefficients()
        .iter()
        .zip(e.coefficients())
        .take_while(|(a, b)| a == b)
        .count())
}

/// (E(x) - f(x)) / E(x) from the exact difference series, free of the
/// cancellation that makes direct subtraction useless for tiny x. Only
/// meaningful where `order` terms converge well (small x).
pub fn series_relative_error(approx: &Approximant, x: f64, order: usize) -> Result<f64> {
    let e = e_coefficients(order)?;
    let diff = e.sub(&series_of(approx, order)?);
    Ok(diff.eval(x).abs() / e.eval(x))
}
