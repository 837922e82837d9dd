//! Truncated formal power series over exact rationals.
//!
//! Every binary operation truncates to the smaller order of its inputs, so a
//! result never claims more accuracy than the least accurate operand.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default truncation, matching the 50-term ground truth.
pub const DEFAULT_ORDER: usize = 50;

/// `coefficients[n]` is the coefficient of `x^n`; `order()` is the number of
/// stored coefficients and is always at least 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coefficients: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coefficients })
    }

    /// Polynomial padded (or truncated) to `order` coefficients.
    pub fn from_polynomial(coefficients: &[Rational], order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        let coefficients = (0..order)
            .map(|n| coefficients.get(n).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Ok(Self { coefficients })
    }

    pub fn constant(c: Rational, order: usize) -> Result<Self> {
        Self::from_polynomial(&[c], order)
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::constant(Rational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<Rational> {
        self.coefficients
    }

    /// Coefficient of `x^n`, or `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coefficients.get(n)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptySeries);
        }
        Ok(Self {
            coefficients: self.coefficients[..order.min(self.order())].to_vec(),
        })
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        Self { coefficients }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a - b)
            .collect();
        Self { coefficients }
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        Self {
            coefficients: self.coefficients.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`, keeping the same order.
    pub fn shift_up(&self, k: usize) -> PowerSeries {
        let n = self.order();
        let coefficients = (0..n)
            .map(|i| {
                if i < k {
                    Rational::zero()
                } else {
                    self.coefficients[i - k].clone()
                }
            })
            .collect();
        Self { coefficients }
    }

    /// Divide by `x^k`. The first `k` coefficients must be zero; the order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<PowerSeries> {
        if k >= self.order() {
            return Err(Error::EmptySeries);
        }
        debug_assert!(self.coefficients[..k].iter().all(Rational::is_zero));
        Ok(Self {
            coefficients: self.coefficients[k..].to_vec(),
        })
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let coefficients = (0..n)
            .map(|k| {
                (0..=k)
                    .map(|i| &self.coefficients[i] * &other.coefficients[k - i])
                    .sum()
            })
            .collect();
        Self { coefficients }
    }

    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let a0 = &self.coefficients[0];
        let inv0 = a0.recip().map_err(|_| Error::NonInvertible)?;
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let acc: Rational = (1..=k).map(|i| &self.coefficients[i] * &out[k - i]).sum();
            out.push(-(acc * &inv0));
        }
        Ok(Self { coefficients: out })
    }

    /// Square root on the branch with positive constant term. The constant
    /// term must be a positive rational with a rational square root.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        let a0 = &self.coefficients[0];
        let root0 = match a0.sqrt() {
            Some(r) if r.is_positive() => r,
            _ => return Err(Error::NonRationalBranchPoint(a0.to_string())),
        };
        let inv_two_root0 = (&root0 * &Rational::integer(2)).recip()?;
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(root0);
        for k in 1..n {
            let cross: Rational = (1..k).map(|i| &out[i] * &out[k - i]).sum();
            out.push((&self.coefficients[k] - &cross) * &inv_two_root0);
        }
        Ok(Self { coefficients: out })
    }

    /// Horner evaluation in double precision.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coefficients.iter().map(Rational::to_f64).collect()
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coefficients).finish()
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "({mag})x")?,
                _ => write!(f, "({mag})x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

/// Evaluate a polynomial given by f64 coefficients with Horner's scheme.
pub fn horner(coefficients: &[f64], x: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Coefficients of E(x), the normalized ellipse perimeter P / (pi (a + b)) as
/// a series in x = ((a - b)/(a + b))^2:
/// c_n = (C(2n, n) / ((2n - 1) 4^n))^2, with c_0 = 1.
///
/// Uses the ratio c_n / c_{n-1} = ((2n - 3) / (2n))^2.
pub fn e_coefficients(n_terms: usize) -> Result<PowerSeries> {
    if n_terms == 0 {
        return Err(Error::EmptySeries);
    }
    let mut coefficients = Vec::with_capacity(n_terms);
    let mut c = Rational::one();
    coefficients.push(c.clone());
    for n in 1..n_terms as i64 {
        let ratio = Rational::new(2 * n - 3, 2 * n)?;
        c = c * (&ratio * &ratio);
        coefficients.push(c.clone());
    }
    PowerSeries::new(coefficients)
}

/// Binomial series of (1 - x)^{1/2}.
pub fn sqrt_one_minus_x(n_terms: usize) -> Result<PowerSeries> {
    if n_terms == 0 {
        return Err(Error::EmptySeries);
    }
    // binom(1/2, n) (-1)^n = binom(1/2, n-1) (-1)^{n-1} * (n - 3/2) / n
    let mut coefficients = Vec::with_capacity(n_terms);
    let mut c = Rational::one();
    coefficients.push(c.clone());
    for n in 1..n_terms as i64 {
        c = c * Rational::new(2 * n - 3, 2 * n)?;
        coefficients.push(c.clone());
    }
    PowerSeries::new(coefficients)
}

pub fn series_mul(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    a.mul(b)
}

pub fn series_reciprocal(a: &PowerSeries) -> Result<PowerSeries> {
    a.reciprocal()
}

pub fn series_sqrt(a: &PowerSeries) -> Result<PowerSeries> {
    a.sqrt()
}

pub fn series_eval(a: &PowerSeries, x: f64) -> f64 {
    a.eval(x)
}
