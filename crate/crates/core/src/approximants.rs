//! Closed-form perimeter approximants in the variable x = ((a - b)/(a + b))^2.
//!
//! Every approximant f satisfies f(0) = 1 and estimates E(x), so the
//! perimeter is `pi (a + b) f(x)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::confrac::{cf_eval, cf_to_series_with_tail, viscovatov, ContinuedFraction, TailSpec};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::{e_coefficients, horner, PowerSeries};

pub const CANTRELL_P: f64 = 0.410;
pub const CANTRELL_K: f64 = 74.0;

/// Radicand constant in A2: sqrt(1 - 0.915 x).
pub fn a2_radicand_slope() -> Rational {
    Rational::new(183, 200).expect("nonzero")
}

/// Semi-axes, normalized so that `a >= b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseAxes {
    a: f64,
    b: f64,
}

impl EllipseAxes {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a < 0.0 || b < 0.0 {
            return Err(Error::InvalidAxes { a, b });
        }
        if a == 0.0 && b == 0.0 {
            return Err(Error::DegeneratePoint);
        }
        let (a, b) = if a >= b { (a, b) } else { (b, a) };
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn x(&self) -> f64 {
        let u = (self.a - self.b) / (self.a + self.b);
        u * u
    }
}

/// x = ((a - b)/(a + b))^2, in [0, 1].
pub fn x_param(axes: &EllipseAxes) -> f64 {
    axes.x()
}

fn check_domain(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(x))
    }
}

/// R1(x) = 3 - sqrt(4 - x)
pub fn eval_r1(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(3.0 - (4.0 - x).sqrt())
}

/// R2(x) = 1 + 3x / (10 + sqrt(4 - 3x))
pub fn eval_r2(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(1.0 + 3.0 * x / (10.0 + (4.0 - 3.0 * x).sqrt()))
}

/// A1(x) = 1 + 192x / (640 + sqrt(16384 - 12288x - 18x^4)), which is R2 with
/// the radicand perturbed by -(9/2048) x^4 and scaled by 64.
pub fn eval_a1(x: f64) -> Result<f64> {
    check_domain(x)?;
    let x2 = x * x;
    let radicand = 16384.0 - 12288.0 * x - 18.0 * x2 * x2;
    Ok(1.0 + 192.0 * x / (640.0 + radicand.sqrt()))
}

/// A2(x) = (P + Q S) / (R + U S) with S = sqrt(1 - 0.915x) and
/// P = 128 - 48x - 15x^2, Q = 128 - 6x^2, R = 128 - 80x + 3x^2, U = 128 - 32x.
pub fn eval_a2(x: f64) -> Result<f64> {
    check_domain(x)?;
    let s = (1.0 - 0.915 * x).sqrt();
    let p = horner(&[128.0, -48.0, -15.0], x);
    let q = horner(&[128.0, 0.0, -6.0], x);
    let r = horner(&[128.0, -80.0, 3.0], x);
    let u = horner(&[128.0, -32.0], x);
    Ok((p + q * s) / (r + u * s))
}

fn cantrell_g(x: f64, p: f64, k: f64) -> f64 {
    let h = (k + 1.0) / 2.0;
    let l = (k - 1.0) / 2.0;
    p + (1.0 - 2.0 * p) / (k + 1.0) * (h * h - l * l * x).sqrt()
}

/// Cantrell's formula in normalized form:
/// C(x) = 4/pi - ((4 - pi)/(2 pi)) (1 - x) / g(x),
/// g(x) = p + ((1 - 2p)/(k + 1)) sqrt(((k + 1)/2)^2 - ((k - 1)/2)^2 x).
pub fn eval_cantrell(x: f64, p: f64, k: f64) -> Result<f64> {
    check_domain(x)?;
    if !(k > 0.0) {
        return Err(Error::CantrellDenominator(f64::NAN));
    }
    let g = cantrell_g(x, p, k);
    if !(g > 0.0) {
        return Err(Error::CantrellDenominator(g));
    }
    Ok(4.0 / PI - (4.0 - PI) / (2.0 * PI) * (1.0 - x) / g)
}

/// Cantrell's perimeter in its original two-axis form:
/// 4(a + b) - 2(4 - pi) ab / f, f = p(a + b) + ((1 - 2p)/(k + 1)) sqrt((a + kb)(ka + b)).
pub fn cantrell_perimeter(axes: &EllipseAxes, p: f64, k: f64) -> Result<f64> {
    let (a, b) = (axes.a(), axes.b());
    let f = p * (a + b) + (1.0 - 2.0 * p) / (k + 1.0) * ((a + k * b) * (k * a + b)).sqrt();
    if !(f > 0.0) {
        return Err(Error::CantrellDenominator(f / (a + b)));
    }
    Ok(4.0 * (a + b) - 2.0 * (4.0 - PI) * a * b / f)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Approximant {
    /// First `n` terms of E(x).
    SeriesTruncation(usize),
    R1,
    R2,
    Cantrell {
        p: f64,
        k: f64,
    },
    A1,
    A2,
    /// Exact Viscovatov numerators a_1..a_depth of E, closed by an optional
    /// infinite constant tail starting at a_{depth+1}.
    CfTruncation {
        depth: usize,
        tail: Option<TailSpec>,
    },
}

impl Approximant {
    pub fn cantrell() -> Self {
        Self::Cantrell {
            p: CANTRELL_P,
            k: CANTRELL_K,
        }
    }

    pub fn cf_truncation(depth: usize, tail_constant: Option<Rational>) -> Result<Self> {
        if depth == 0 {
            return Err(Error::EmptyContinuedFraction);
        }
        let tail = match tail_constant {
            Some(c) if !c.is_zero() => Some(TailSpec::new(c, depth + 1)?),
            _ => None,
        };
        Ok(Self::CfTruncation { depth, tail })
    }

    /// The five approximants compared in the benchmark.
    pub fn benchmark_set() -> Vec<Approximant> {
        vec![Self::R1, Self::R2, Self::cantrell(), Self::A1, Self::A2]
    }

    /// Name usable as a CSV column (no commas).
    pub fn label(&self) -> String {
        self.to_string().replace(',', "_")
    }

    pub fn has_exact_expansion(&self) -> bool {
        !matches!(self, Self::Cantrell { .. })
    }

    pub fn evaluator(&self) -> Result<Evaluator> {
        Ok(match self {
            Self::SeriesTruncation(n) => {
                Evaluator::Polynomial(e_coefficients((*n).max(1))?.to_f64_vec())
            }
            Self::R1 => Evaluator::R1,
            Self::R2 => Evaluator::R2,
            Self::Cantrell { p, k } => Evaluator::Cantrell { p: *p, k: *k },
            Self::A1 => Evaluator::A1,
            Self::A2 => Evaluator::A2,
            Self::CfTruncation { depth, tail } => Evaluator::ContinuedFraction {
                cf: e_continued_fraction(*depth)?,
                tail: checked_tail(*depth, tail)?.cloned(),
            },
        })
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.evaluator()?.eval(x)
    }
}

fn checked_tail(depth: usize, tail: &Option<TailSpec>) -> Result<Option<&TailSpec>> {
    match tail {
        Some(t) if t.start_index() != depth + 1 => Err(Error::InvalidPerturbation(format!(
            "tail must start at a_{}, got a_{}",
            depth + 1,
            t.start_index()
        ))),
        _ => Ok(tail.as_ref()),
    }
}

fn e_continued_fraction(depth: usize) -> Result<ContinuedFraction> {
    viscovatov(&e_coefficients(depth + 1)?, depth)
}

/// An approximant with any precomputation done, ready for repeated
/// evaluation.
#[derive(Clone, Debug)]
pub enum Evaluator {
    Polynomial(Vec<f64>),
    R1,
    R2,
    Cantrell {
        p: f64,
        k: f64,
    },
    A1,
    A2,
    ContinuedFraction {
        cf: ContinuedFraction,
        tail: Option<TailSpec>,
    },
}

impl Evaluator {
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Self::Polynomial(c) => {
                check_domain(x)?;
                Ok(horner(c, x))
            }
            Self::R1 => eval_r1(x),
            Self::R2 => eval_r2(x),
            Self::Cantrell { p, k } => eval_cantrell(x, *p, *k),
            Self::A1 => eval_a1(x),
            Self::A2 => eval_a2(x),
            Self::ContinuedFraction { cf, tail } => {
                check_domain(x)?;
                let t = match tail {
                    Some(t) => t.eval(x)?,
                    None => 0.0,
                };
                cf_eval(cf, x, t)
            }
        }
    }
}

impl fmt::Display for Approximant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SeriesTruncation(n) => write!(f, "series:{n}"),
            Self::R1 => write!(f, "r1"),
            Self::R2 => write!(f, "r2"),
            Self::Cantrell { p, k } if *p == CANTRELL_P && *k == CANTRELL_K => {
                write!(f, "cantrell")
            }
            Self::Cantrell { p, k } => write!(f, "cantrell:{p},{k}"),
            Self::A1 => write!(f, "a1"),
            Self::A2 => write!(f, "a2"),
            Self::CfTruncation { depth, tail: None } => write!(f, "cf:{depth}"),
            Self::CfTruncation {
                depth,
                tail: Some(t),
            } => write!(f, "cf:{depth},{}", t.constant()),
        }
    }
}

impl FromStr for Approximant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownApproximant(s.to_string());
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let parse_f64 = |v: &str| v.trim().parse::<f64>().map_err(|_| unknown());
        match (name.to_ascii_lowercase().as_str(), args) {
            ("r1", None) => Ok(Self::R1),
            ("r2", None) => Ok(Self::R2),
            ("a1", None) => Ok(Self::A1),
            ("a2", None) => Ok(Self::A2),
            ("cantrell", None) => Ok(Self::cantrell()),
            ("cantrell", Some(a)) => {
                let (p, k) = a.split_once(',').ok_or_else(unknown)?;
                Ok(Self::Cantrell {
                    p: parse_f64(p)?,
                    k: parse_f64(k)?,
                })
            }
            ("series", a) => {
                let n = match a {
                    Some(a) => a.trim().parse::<usize>().map_err(|_| unknown())?,
                    None => crate::series::DEFAULT_ORDER,
                };
                if n == 0 {
                    return Err(unknown());
                }
                Ok(Self::SeriesTruncation(n))
            }
            ("cf", Some(a)) => {
                let (depth, tail) = match a.split_once(',') {
                    Some((d, t)) => (d, Some(t.parse::<Rational>()?)),
                    None => (a, None),
                };
                let depth = depth.trim().parse::<usize>().map_err(|_| unknown())?;
                Self::cf_truncation(depth, tail)
            }
            _ => Err(unknown()),
        }
    }
}

/// R2-family expansion 1 + 3x / (10 + sqrt(radicand)); the radicand's
/// constant term must have a rational square root.
pub fn r2_family_series(radicand: &PowerSeries) -> Result<PowerSeries> {
    let order = radicand.order();
    let ten = PowerSeries::constant(Rational::integer(10), order)?;
    let denominator = ten.add(&radicand.sqrt()?);
    let fraction = denominator
        .reciprocal()?
        .shift_up(1)
        .scale(&Rational::integer(3));
    Ok(PowerSeries::one(order)?.add(&fraction))
}

fn poly(coeffs: &[i64], order: usize) -> Result<PowerSeries> {
    let c: Vec<Rational> = coeffs.iter().map(|&n| Rational::integer(n)).collect();
    PowerSeries::from_polynomial(&c, order)
}

/// Exact rational expansion of an approximant to `order` coefficients.
pub fn series_of(approx: &Approximant, order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(Error::EmptySeries);
    }
    match approx {
        Approximant::SeriesTruncation(n) => {
            let e = e_coefficients((*n).min(order).max(1))?;
            PowerSeries::from_polynomial(e.coefficients(), order)
        }
        Approximant::R1 => {
            let root = poly(&[4, -1], order)?.sqrt()?;
            Ok(poly(&[3], order)?.sub(&root))
        }
        Approximant::R2 => r2_family_series(&poly(&[4, -3], order)?),
        Approximant::A1 => {
            let root = poly(&[16384, -12288, 0, 0, -18], order)?.sqrt()?;
            let denominator = poly(&[640], order)?.add(&root);
            let fraction = denominator
                .reciprocal()?
                .shift_up(1)
                .scale(&Rational::integer(192));
            Ok(PowerSeries::one(order)?.add(&fraction))
        }
        Approximant::A2 => {
            let radicand =
                PowerSeries::from_polynomial(&[Rational::one(), -a2_radicand_slope()], order)?;
            let s = radicand.sqrt()?;
            let numerator =
                poly(&[128, -48, -15], order)?.add(&poly(&[128, 0, -6], order)?.mul(&s));
            let denominator = poly(&[128, -80, 3], order)?.add(&poly(&[128, -32], order)?.mul(&s));
            Ok(numerator.mul(&denominator.reciprocal()?))
        }
        Approximant::CfTruncation { depth, tail } => {
            let cf = e_continued_fraction(*depth)?;
            let tail_series = match checked_tail(*depth, tail)? {
                Some(t) => t.series(order)?,
                None => PowerSeries::constant(Rational::zero(), order)?,
            };
            cf_to_series_with_tail(&cf, &tail_series)
        }
        Approximant::Cantrell { .. } => Err(Error::NoExactExpansion(approx.to_string())),
    }
}

/// pi (a + b) f(x) for the chosen approximant.
pub fn perimeter(axes: &EllipseAxes, approx: &Approximant) -> Result<f64> {
    Ok(PI * (axes.a() + axes.b()) * approx.eval(axes.x())?)
}
