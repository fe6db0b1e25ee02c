//! Numerical oracle for `∫₀^∞ P/Q dz`, the complete elliptic integral
//! `G(a, b)`, and exact real-root certificates for denominators.
//!
//! Both integrals are mapped to `θ ∈ [0, π/2]` (for the half line through
//! `z = tan θ`) and evaluated with adaptive composite Gauss–Legendre panels.
//! Tolerances are absolute.

mod certificate;
mod gauss;

pub(crate) use certificate::exact_polynomial;
pub use certificate::{certify_polynomial, has_real_zero, no_real_root_certificate, RootCertificate};

use crate::error::{Error, Result};
use crate::exactpoly::RationalFunction;
use crate::real::Real;
use gauss::{panel, ORDER};

pub const DEFAULT_TOL: f64 = 1e-12;

const START_DEPTH: u32 = 2;
const MAX_DEPTH: u32 = 24;

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: Real,
    pub est_error: f64,
    pub evaluations: usize,
}

/// Adaptive integration of `f(sin θ, cos θ)` over `[0, π/2]`.
///
/// A panel is accepted when its estimate and the sum over its two halves
/// differ by at most its share of `tol`; the halves are kept.
pub fn integrate_quarter_period(f: impl Fn(&Real, &Real) -> Real, tol: f64, prec: usize) -> Result<QuadratureResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut evaluations = 0usize;
    let mut estimate = |depth: u32, index: u64| {
        evaluations += ORDER;
        panel(prec, depth, index).iter().fold(Real::zero(prec), |acc, n| &acc + &(&n.weight * &f(&n.sin, &n.cos)))
    };
    let mut stack: Vec<(u32, u64, Real)> =
        (0..1u64 << START_DEPTH).rev().map(|i| (START_DEPTH, i, estimate(START_DEPTH, i))).collect();
    let mut value = Real::zero(prec);
    let mut est_error = 0.0;
    // differences this small are rounding noise: refining cannot shrink them
    let noise = 2f64.powi(16 - prec.min(1000) as i32);
    while let Some((depth, index, whole)) = stack.pop() {
        let left = estimate(depth + 1, 2 * index);
        let right = estimate(depth + 1, 2 * index + 1);
        let halves = &left + &right;
        let diff = (&whole - &halves).abs().to_f64();
        let share = tol / (1u64 << depth) as f64;
        if diff <= share {
            value += &halves;
            est_error += diff;
        } else if depth >= MAX_DEPTH || diff <= noise * halves.abs().to_f64() || !diff.is_finite() {
            let best = stack.iter().fold(&value + &halves, |acc, (_, _, v)| &acc + v);
            return Err(Error::Accuracy {
                message: format!("tolerance {tol:e} not reached at {prec}-bit precision"),
                best_estimate: best.to_decimal_string(),
            });
        } else {
            stack.push((depth + 1, 2 * index + 1, right));
            stack.push((depth + 1, 2 * index, left));
        }
    }
    Ok(QuadratureResult { value, est_error, evaluations })
}

fn degree(c: &[Real]) -> Option<usize> {
    c.iter().rposition(|x| !x.is_zero())
}

/// `∫₀^∞ P(z)/Q(z) dz` for ascending coefficient lists `num`, `den`.
///
/// Requires `deg Q ≥ deg P + 2` and `Q > 0` on `[0, ∞)`; the latter is
/// certified exactly before any node is evaluated. The working precision is
/// the largest precision among the coefficients.
pub fn integrate_halfline(num: &[Real], den: &[Real], tol: f64) -> Result<QuadratureResult> {
    let n = degree(den).ok_or_else(|| Error::Domain("zero denominator".into()))?;
    let m = match degree(num) {
        Some(m) => m,
        None => {
            let prec = den[0].precision();
            return Ok(QuadratureResult { value: Real::zero(prec), est_error: 0.0, evaluations: 0 });
        }
    };
    if n < m + 2 {
        return Err(Error::Domain(format!("integral diverges at infinity: deg num = {m}, deg den = {n}")));
    }
    match no_real_root_certificate(&den[..=n]) {
        RootCertificate::CertifiedPositive => {}
        RootCertificate::CertifiedRoot(roots) => {
            let (lo, hi) = &roots[0];
            return Err(Error::RealRoot(format!(
                "{} root(s) on [0, ∞), the first in ({}, {}]",
                roots.len(),
                lo.to_sci(12),
                hi.to_sci(12)
            )));
        }
        RootCertificate::Inconclusive(why) => {
            return Err(Error::Domain(format!("no positivity certificate for the denominator: {why}")))
        }
    }
    let prec = num.iter().chain(den).map(Real::precision).max().unwrap_or(crate::real::DEFAULT_PRECISION);
    let (p, q) = (&num[..=m], &den[..=n]);
    // P(tan θ)/Q(tan θ)·sec²θ = Σ pₖ sᵏ cⁿ⁻²⁻ᵏ / Σ qₖ sᵏ cⁿ⁻ᵏ
    let f = |s: &Real, c: &Real| {
        let mut sp = vec![Real::one(prec)];
        let mut cp = vec![Real::one(prec)];
        for k in 1..=n {
            sp.push(&sp[k - 1] * s);
            cp.push(&cp[k - 1] * c);
        }
        let top = p.iter().enumerate().fold(Real::zero(prec), |acc, (k, a)| &acc + &(a * &(&sp[k] * &cp[n - 2 - k])));
        let bottom = q.iter().enumerate().fold(Real::zero(prec), |acc, (k, a)| &acc + &(a * &(&sp[k] * &cp[n - k])));
        top / bottom
    };
    integrate_quarter_period(f, tol, prec)
}

/// `∫_ℝ R(x) dx` for a real rational function with no real poles, computed as
/// `∫₀^∞ (R(z) + R(−z)) dz`.
pub fn integrate_real_line(r: &RationalFunction, tol: f64, prec: usize) -> Result<QuadratureResult> {
    if !r.is_real() {
        return Err(Error::Domain("integrand has non-real coefficients".into()));
    }
    if has_real_zero(r.den())? {
        return Err(Error::RealRoot("pole on the real line".into()));
    }
    let (n, d) = (r.num(), r.den());
    let sym_num = &(n * &d.reflect()) + &(&n.reflect() * d);
    let sym_den = d * &d.reflect();
    let to_reals =
        |c: Vec<num_rational::BigRational>| -> Vec<Real> { c.iter().map(|x| Real::from_rational(x, prec)).collect() };
    let num = to_reals(sym_num.real_coeffs()?);
    let den = to_reals(sym_den.real_coeffs()?);
    if num.is_empty() {
        return Ok(QuadratureResult { value: Real::zero(prec), est_error: 0.0, evaluations: 0 });
    }
    integrate_halfline(&num, &den, tol)
}

/// `G(a, b) = ∫₀^{π/2} dθ / √(a² cos²θ + b² sin²θ)`.
#[allow(non_snake_case)]
pub fn elliptic_G(a: &Real, b: &Real, tol: f64) -> Result<QuadratureResult> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Domain(format!("G(a, b) needs a, b > 0, got ({a}, {b})")));
    }
    let prec = a.precision().max(b.precision());
    let (a2, b2) = (a * a, b * b);
    let f = |s: &Real, c: &Real| Real::one(prec) / (&(&a2 * &(c * c)) + &(&b2 * &(s * s))).sqrt();
    integrate_quarter_period(f, tol, prec)
}
