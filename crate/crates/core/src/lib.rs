//! Exact reconstruction of Ramanujan's ellipse perimeter approximations.
//!
//! The perimeter of an ellipse with semi-axes `a >= b` is `pi (a + b) E(x)`
//! with `x = ((a - b)/(a + b))^2` and
//! `E(x) = sum_n (C(2n, n) / ((2n - 1) 4^n))^2 x^n`. This crate expands E
//! exactly over the rationals, turns it into a continued fraction, rebuilds
//! the closed forms R1 and R2 from periodic tails, derives the improved
//! forms A1 (radicand perturbation) and A2 (constant tail), and benchmarks
//! all of them against a 50-term ground truth and an adaptive quadrature
//! oracle.

// `!(v > 0.0)` is used on purpose so NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approximants;
pub mod confrac;
pub mod error;
pub mod harness;
pub mod perturb;
pub mod rational;
pub mod series;

pub use approximants::{
    cantrell_perimeter, eval_a1, eval_a2, eval_cantrell, eval_r1, eval_r2, perimeter, series_of,
    x_param, Approximant, EllipseAxes,
};
pub use confrac::{cf_eval, cf_to_series, periodic_tail, viscovatov, ContinuedFraction, TailSpec};
pub use error::{Error, Result};
pub use perturb::{
    coefficient_gap, solve_radicand_correction, PerturbationSpec, RadicandCorrection,
};
pub use rational::Rational;
pub use series::{
    e_coefficients, series_eval, series_mul, series_reciprocal, series_sqrt, sqrt_one_minus_x,
    PowerSeries,
};
