//! Generalized continued fractions in the normalized form
//!
//! ```text
//! 1 + a1 x / (1 + a2 x / (1 + a3 x / (1 + ...)))
//! ```
//!
//! built from a power series by repeated invert-and-subtract (Viscovatov's
//! algorithm), with bottom-up evaluation and exact re-expansion.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::PowerSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    partial_numerators: Vec<Rational>,
}

/// A constant partial numerator `c` repeated forever from `start_index`
/// (1-based) onward.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TailSpec {
    constant: Rational,
    start_index: usize,
}

impl TailSpec {
    pub fn new(constant: Rational, start_index: usize) -> Result<Self> {
        if constant.is_zero() {
            return Err(Error::ZeroTailConstant);
        }
        Ok(Self {
            constant,
            start_index: start_index.max(1),
        })
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn start_index(&self) -> usize {
        self.start_index
    }

    /// Value of the infinite tail at `x`, see [`periodic_tail`].
    pub fn eval(&self, x: f64) -> Result<f64> {
        periodic_tail(&self.constant, x)
    }

    /// Exact series of the tail value T(x) = (-1 + sqrt(1 + 4cx)) / 2.
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        let four_c = &self.constant * &Rational::integer(4);
        let disc = PowerSeries::from_polynomial(&[Rational::one(), four_c], order)?;
        let root = disc.sqrt()?;
        let half = Rational::new(1, 2)?;
        Ok(root.sub(&PowerSeries::one(order)?).scale(&half))
    }
}

impl ContinuedFraction {
    pub fn new(partial_numerators: Vec<Rational>) -> Result<Self> {
        if partial_numerators.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        Ok(Self { partial_numerators })
    }

    pub fn partial_numerators(&self) -> &[Rational] {
        &self.partial_numerators
    }

    pub fn depth(&self) -> usize {
        self.partial_numerators.len()
    }

    /// Prefix of length `depth` (clamped to at least 1).
    pub fn truncate(&self, depth: usize) -> ContinuedFraction {
        let d = depth.clamp(1, self.depth());
        Self {
            partial_numerators: self.partial_numerators[..d].to_vec(),
        }
    }

    /// Append `count` copies of `c`.
    pub fn extend_constant(&self, c: &Rational, count: usize) -> ContinuedFraction {
        let mut partial_numerators = self.partial_numerators.clone();
        partial_numerators.extend(std::iter::repeat_n(c.clone(), count));
        Self { partial_numerators }
    }

    /// Number of leading series coefficients the re-expansion reproduces
    /// when the fraction came from [`viscovatov`].
    pub fn trusted_terms(&self) -> usize {
        self.depth() + 1
    }

    pub fn eval(&self, x: f64, tail: f64) -> Result<f64> {
        cf_eval(self, x, tail)
    }

    pub fn to_series(&self, order: usize) -> Result<PowerSeries> {
        cf_to_series(self, order)
    }

    /// `1 + (1/4)x/(1 + (-1/16)x/(1 + ...))`
    pub fn display_normalized(&self) -> String {
        let mut s = String::from("1");
        for a in &self.partial_numerators {
            let _ = write!(s, " + ({a})x/(1");
        }
        s.push_str(" + ...");
        s.push_str(&")".repeat(self.depth()));
        s
    }

    /// Equivalent form with every denominator 4: the first layer's numerator
    /// is scaled by 4, deeper layers by 16. Negative numerators are shown as
    /// subtraction, e.g. `1 + x/(4 - x/(4 - 3x/(4 - ...)))`.
    pub fn display_integer4(&self) -> String {
        let four = Rational::integer(4);
        let sixteen = Rational::integer(16);
        let mut s = String::from("1");
        for (i, a) in self.partial_numerators.iter().enumerate() {
            let scaled = if i == 0 { a * &four } else { a * &sixteen };
            let (op, mag) = if scaled.is_negative() {
                ("-", -scaled)
            } else {
                ("+", scaled)
            };
            let coeff = if mag.is_one() {
                String::new()
            } else if mag.denom() == &num_bigint::BigInt::from(1) {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let _ = write!(s, " {op} {coeff}x/(4");
        }
        s.push_str(" - ...");
        s.push_str(&")".repeat(self.depth()));
        s
    }

    /// Numerators of the integer-4 display: `4 a1, 16 a2, 16 a3, ...`.
    pub fn integer4_numerators(&self) -> Vec<Rational> {
        self.partial_numerators
            .iter()
            .enumerate()
            .map(|(i, a)| a * &Rational::integer(if i == 0 { 4 } else { 16 }))
            .collect()
    }
}

/// Partial numerators a_1..a_depth of a series with constant term 1.
///
/// Each step takes a_n as the linear coefficient of S_{n-1} and forms
/// S_n = a_n x / (S_{n-1} - 1), which costs one order of accuracy. The input
/// therefore needs order > depth.
pub fn viscovatov(s: &PowerSeries, depth: usize) -> Result<ContinuedFraction> {
    if depth == 0 {
        return Err(Error::EmptyContinuedFraction);
    }
    if !s.coefficients()[0].is_one() {
        return Err(Error::ConstantTermNotOne(s.coefficients()[0].to_string()));
    }
    if s.order() <= depth {
        return Err(Error::InsufficientOrder {
            depth,
            order: s.order(),
        });
    }
    let mut current = s.clone();
    let mut partial_numerators = Vec::with_capacity(depth);
    for index in 1..=depth {
        let a = current.coefficients()[1].clone();
        if a.is_zero() {
            return Err(Error::TerminatesEarly { index });
        }
        partial_numerators.push(a.clone());
        if index == depth {
            break;
        }
        // (S - 1)/x has constant term a; divide by a, then invert.
        let remainder = PowerSeries::new(current.coefficients()[1..].to_vec())?.scale(&a.recip()?);
        current = remainder.reciprocal()?;
    }
    ContinuedFraction::new(partial_numerators)
}

/// Exact expansion of the finite fraction (tail 0) to `order` coefficients.
pub fn cf_to_series(cf: &ContinuedFraction, order: usize) -> Result<PowerSeries> {
    cf_to_series_with_tail(cf, &PowerSeries::constant(Rational::zero(), order)?)
}

/// Exact expansion with the innermost denominator `1 + tail`, where `tail`
/// is itself a series (for example a periodic tail).
pub fn cf_to_series_with_tail(cf: &ContinuedFraction, tail: &PowerSeries) -> Result<PowerSeries> {
    let order = tail.order();
    let one = PowerSeries::one(order)?;
    let mut value = one.add(tail);
    for a in cf.partial_numerators().iter().rev() {
        value = one.add(&value.reciprocal()?.shift_up(1).scale(a));
    }
    Ok(value)
}

/// Bottom-up evaluation with innermost denominator `1 + tail`.
pub fn cf_eval(cf: &ContinuedFraction, x: f64, tail: f64) -> Result<f64> {
    let mut value = 1.0 + tail;
    for a in cf.partial_numerators().iter().rev() {
        if value == 0.0 {
            return Err(Error::ContinuedFractionPole { x });
        }
        value = 1.0 + a.to_f64() * x / value;
    }
    Ok(value)
}

/// Root of T^2 + T - c x = 0 that vanishes at x = 0:
/// T = (-1 + sqrt(1 + 4 c x)) / 2, the value of c x / (1 + c x / (1 + ...)).
pub fn periodic_tail(c: &Rational, x: f64) -> Result<f64> {
    let discriminant = 1.0 + 4.0 * c.to_f64() * x;
    if discriminant < 0.0 {
        return Err(Error::ComplexTail { discriminant });
    }
    Ok((discriminant.sqrt() - 1.0) / 2.0)
}
