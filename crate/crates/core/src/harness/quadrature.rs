use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-13;
const MAX_EVALUATIONS: usize = 2_000_000;
const MAX_DEPTH: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub estimated_error: f64,
    pub evaluations: usize,
}

struct Simpson<'f, F: Fn(f64) -> f64> {
    f: &'f F,
    evaluations: usize,
    estimated_error: f64,
}

impl<F: Fn(f64) -> f64> Simpson<'_, F> {
    fn eval(&mut self, t: f64) -> f64 {
        self.evaluations += 1;
        (self.f)(t)
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm);
        let frm = self.eval(rm);
        let h = b - a;
        let left = h / 12.0 * (fa + 4.0 * flm + fm);
        let right = h / 12.0 * (fm + 4.0 * frm + fb);
        let diff = left + right - whole;
        if depth >= MAX_DEPTH || self.evaluations >= MAX_EVALUATIONS || diff.abs() <= 15.0 * eps {
            self.estimated_error += diff.abs() / 15.0;
            return left + right + diff / 15.0;
        }
        self.refine(a, m, fa, flm, fm, left, eps / 2.0, depth + 1)
            + self.refine(m, b, fm, frm, fb, right, eps / 2.0, depth + 1)
    }
}

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance
/// `eps`, with Richardson correction on each accepted panel.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    eps: f64,
) -> Result<QuadratureResult> {
    let mut s = Simpson {
        f,
        evaluations: 0,
        estimated_error: 0.0,
    };
    // Seed with 8 panels so symmetric integrands cannot fool the first test.
    let panels = 8;
    let h = (b - a) / panels as f64;
    let mut value = 0.0;
    for i in 0..panels {
        let lo = a + h * i as f64;
        let hi = if i + 1 == panels { b } else { lo + h };
        let flo = s.eval(lo);
        let fmid = s.eval(0.5 * (lo + hi));
        let fhi = s.eval(hi);
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        value += s.refine(lo, hi, flo, fmid, fhi, whole, eps / panels as f64, 0);
    }
    if s.evaluations >= MAX_EVALUATIONS || s.estimated_error > eps {
        return Err(Error::QuadratureBudget {
            tol: eps,
            value,
            estimated_error: s.estimated_error,
            evaluations: s.evaluations,
        });
    }
    Ok(QuadratureResult {
        value,
        estimated_error: s.estimated_error,
        evaluations: s.evaluations,
    })
}

/// Perimeter 4 * integral_0^{pi/2} sqrt(a^2 sin^2 t + b^2 cos^2 t) dt, to
/// relative tolerance `tol`. A flat ellipse (one axis zero) returns 4 * the
/// other axis exactly.
pub fn quadrature_perimeter(a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(a.is_finite() && b.is_finite()) || a < 0.0 || b < 0.0 {
        return Err(Error::InvalidAxes { a, b });
    }
    if a + b == 0.0 {
        return Err(Error::DegeneratePoint);
    }
    if a == 0.0 || b == 0.0 {
        return Ok(QuadratureResult {
            value: 4.0 * (a + b),
            estimated_error: 0.0,
            evaluations: 0,
        });
    }
    let (a2, b2) = (a * a, b * b);
    let integrand = |t: f64| {
        let (s, c) = t.sin_cos();
        (a2 * s * s + b2 * c * c).sqrt()
    };
    // The quarter arc lies between max(a, b) and a + b, so tol * max(a, b)
    // is a conservative absolute target for 4 * tol * perimeter / 4.
    let eps = tol * a.max(b);
    let q = adaptive_simpson(&integrand, 0.0, FRAC_PI_2, eps).map_err(|e| match e {
        Error::QuadratureBudget {
            value,
            estimated_error,
            evaluations,
            ..
        } => Error::QuadratureBudget {
            tol,
            value: 4.0 * value,
            estimated_error: 4.0 * estimated_error,
            evaluations,
        },
        e => e,
    })?;
    Ok(QuadratureResult {
        value: 4.0 * q.value,
        estimated_error: 4.0 * q.estimated_error,
        evaluations: q.evaluations,
    })
}
