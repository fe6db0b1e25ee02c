//! The arithmetic-geometric mean `(a, b) ↦ ((a + b)/2, √(ab))`.
//!
//! Its limit satisfies `G(a, b) = π / (2·AGM(a, b))`, where `G` is the complete
//! elliptic integral computed by [`crate::quadrature::elliptic_G`].

use crate::error::{Error, Result};
use crate::real::Real;

const MAX_STEPS: usize = 200;

#[derive(Clone, Debug)]
pub struct AgmTrace {
    /// `(a₀, b₀), (a₁, b₁), …`; the input pair comes first.
    pub pairs: Vec<(Real, Real)>,
    pub limit: Real,
}

impl AgmTrace {
    pub fn steps(&self) -> usize {
        self.pairs.len() - 1
    }

    /// `|aₙ − bₙ|` along the trace.
    pub fn gaps(&self) -> Vec<Real> {
        self.pairs.iter().map(|(a, b)| (a - b).abs()).collect()
    }

    /// Checks `|aₙ₊₁ − bₙ₊₁| ≤ (aₙ − bₙ)² / (8·min(a₀, b₀))` at every step,
    /// up to a few ulps of `max(a₀, b₀)`.
    pub fn quadratic_bound_holds(&self) -> bool {
        let (a0, b0) = &self.pairs[0];
        let prec = a0.precision();
        let eight_min = &Real::from_i64(8, prec) * &a0.clone().min(b0.clone());
        let slack = &a0.clone().max(b0.clone()) * &Real::from_f64(2f64.powi(4 - prec as i32), prec);
        let gaps = self.gaps();
        gaps.windows(2).all(|g| g[1] <= &(&(&g[0] * &g[0]) / &eight_min) + &slack)
    }

    /// `π / (2·AGM(a, b))`.
    pub fn elliptic_value(&self) -> Real {
        let prec = self.limit.precision();
        &Real::pi(prec) / &(&Real::from_i64(2, prec) * &self.limit)
    }
}

/// Iterates until `|a − b| < tol`; the limit is then `(a + b)/2`.
pub fn agm(a: &Real, b: &Real, tol: f64) -> Result<AgmTrace> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Domain(format!("AGM needs positive arguments, got ({a}, {b})")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let prec = a.precision().max(b.precision());
    let two = Real::from_i64(2, prec);
    let mut pairs = vec![(a.with_precision(prec), b.with_precision(prec))];
    loop {
        let (x, y) = pairs.last().unwrap();
        if (x - y).abs().to_f64() < tol {
            let limit = &(x + y) / &two;
            return Ok(AgmTrace { pairs, limit });
        }
        let next = (&(x + y) / &two, (x * y).sqrt());
        if pairs.len() > MAX_STEPS || (next.0 == *x && next.1 == *y) {
            return Err(Error::Accuracy {
                message: format!("|a − b| stalled above {tol:e} at {prec}-bit precision"),
                best_estimate: next.0.to_decimal_string(),
            });
        }
        pairs.push(next);
    }
}
