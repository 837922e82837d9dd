//! Radicand perturbation of the R2 family.
//!
//! R2(x) = 1 + 3x / (10 + sqrt(4 - 3x)) first disagrees with E(x) at x^5.
//! Adding k x^m inside the radical shifts the x^(m+1) coefficient and leaves
//! every lower one untouched, so a single exact k closes the gap.

use crate::approximants::{r2_family_series, series_of, Approximant};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::PowerSeries;

#[derive(Clone, Debug, PartialEq)]
pub struct PerturbationSpec {
    base: Approximant,
    monomial_order: usize,
    target_order: usize,
}

impl PerturbationSpec {
    /// `base` must be R2 or A1 (an R2-family member with a polynomial
    /// radicand); the perturbation adds `k x^monomial_order` to it.
    pub fn new(base: Approximant, monomial_order: usize, target_order: usize) -> Result<Self> {
        if !matches!(base, Approximant::R2 | Approximant::A1) {
            return Err(Error::InvalidPerturbation(format!(
                "{base} has no polynomial radicand"
            )));
        }
        if monomial_order == 0 {
            return Err(Error::InvalidPerturbation(
                "monomial order must be at least 1".into(),
            ));
        }
        Ok(Self {
            base,
            monomial_order,
            target_order,
        })
    }

    /// R2 perturbed at x^m, matched at x^(m+1) (the outer 3x shifts by one).
    pub fn r2_family(monomial_order: usize) -> Result<Self> {
        Self::new(Approximant::R2, monomial_order, monomial_order + 1)
    }

    pub fn base(&self) -> &Approximant {
        &self.base
    }

    pub fn monomial_order(&self) -> usize {
        self.monomial_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// Radicand of the unscaled base form, e.g. 4 - 3x for R2.
    pub fn base_radicand(&self, order: usize) -> Result<PowerSeries> {
        let mut c = vec![Rational::integer(4), Rational::integer(-3)];
        if self.base == Approximant::A1 {
            c.extend([Rational::zero(), Rational::zero(), Rational::new(-9, 2048)?]);
        }
        PowerSeries::from_polynomial(&c, order)
    }

    /// Expansion of 1 + 3x / (10 + sqrt(base radicand + k x^m)).
    pub fn perturbed_series(&self, k: &Rational, order: usize) -> Result<PowerSeries> {
        let bump = PowerSeries::constant(k.clone(), order)?.shift_up(self.monomial_order);
        r2_family_series(&self.base_radicand(order)?.add(&bump))
    }

    fn coefficient_at(&self, k: &Rational) -> Result<Rational> {
        let n = self.target_order;
        Ok(self.perturbed_series(k, n + 1)?.coefficients()[n].clone())
    }
}

/// Result of [`solve_radicand_correction`].
#[derive(Clone, Debug, PartialEq)]
pub struct RadicandCorrection {
    /// Value added to the x^m radicand coefficient.
    pub k: Rational,
    /// d c_n / d k (exact; c_n is affine in k).
    pub slope: Rational,
    /// The x^n coefficient before correction.
    pub baseline: Rational,
    /// Rows `(j, target_j, base_j, corrected_j)` for j = 0..=n+1.
    pub table: Vec<(usize, Rational, Rational, Rational)>,
}

impl RadicandCorrection {
    /// Number of leading coefficients where the corrected form equals the target.
    pub fn matched_terms(&self) -> usize {
        self.table.iter().take_while(|(_, t, _, c)| t == c).count()
    }
}

fn coefficient(s: &PowerSeries, n: usize) -> Result<&Rational> {
    s.coeff(n).ok_or(Error::InsufficientOrder {
        depth: n,
        order: s.order(),
    })
}

/// `target_n - approx_n`, both exact.
pub fn coefficient_gap(target: &PowerSeries, approx: &Approximant, n: usize) -> Result<Rational> {
    let t = coefficient(target, n)?;
    let s = series_of(approx, n + 1)?;
    Ok(t - coefficient(&s, n)?)
}

/// Slope of the x^n coefficient with respect to k, measured exactly as
/// c_n(1) - c_n(0).
pub fn sensitivity(spec: &PerturbationSpec) -> Result<Rational> {
    Ok(spec.coefficient_at(&Rational::one())? - spec.coefficient_at(&Rational::zero())?)
}

/// Exact k such that the perturbed form's x^n coefficient equals the
/// target's. c_n(k) is affine in k at the matched order, so two exact
/// samples determine it; a third sample guards the affine assumption and the
/// result is re-expanded to confirm.
pub fn solve_radicand_correction(
    spec: &PerturbationSpec,
    target: &PowerSeries,
) -> Result<RadicandCorrection> {
    let (m, n) = (spec.monomial_order, spec.target_order);
    if target.order() <= n {
        return Err(Error::InsufficientOrder {
            depth: n,
            order: target.order(),
        });
    }
    let c0 = spec.coefficient_at(&Rational::zero())?;
    let c1 = spec.coefficient_at(&Rational::one())?;
    let cm1 = spec.coefficient_at(&-Rational::one())?;
    let slope = &c1 - &c0;
    if slope.is_zero() {
        return Err(Error::ZeroSensitivity { m, n });
    }
    if &c0 - &cm1 != slope {
        return Err(Error::NonAffine { m, n });
    }
    let k = (&target.coefficients()[n] - &c0).checked_div(&slope)?;

    let order = (n + 2).min(target.order());
    let base = spec.perturbed_series(&Rational::zero(), order)?;
    let corrected = spec.perturbed_series(&k, order)?;
    if corrected.coefficients()[n] != target.coefficients()[n] {
        return Err(Error::NonAffine { m, n });
    }
    let table = (0..order)
        .map(|j| {
            (
                j,
                target.coefficients()[j].clone(),
                base.coefficients()[j].clone(),
                corrected.coefficients()[j].clone(),
            )
        })
        .collect();
    Ok(RadicandCorrection {
        k,
        slope,
        baseline: c0,
        table,
    })
}
