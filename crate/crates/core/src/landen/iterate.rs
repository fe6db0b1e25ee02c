use std::fmt;
use std::str::FromStr;

use super::normalize::normalize;
use super::state::LandenState;
use super::{step_geometric, step_theorem, LandenStep};
use crate::error::{Error, Result};
use crate::exactpoly::Polynomial;
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// Exact direct image under `π`, then normalization.
    #[default]
    Geometric,
    /// Closed-form coefficient map.
    Theorem,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Geometric => "geometric",
            Algorithm::Theorem => "theorem",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geometric" => Ok(Algorithm::Geometric),
            "theorem" => Ok(Algorithm::Theorem),
            other => Err(Error::Parse(format!("unknown algorithm {other:?} (expected geometric or theorem)"))),
        }
    }
}

pub fn step(s: &LandenState, algorithm: Algorithm) -> Result<LandenStep> {
    match algorithm {
        Algorithm::Geometric => step_geometric(s),
        Algorithm::Theorem => step_theorem(s),
    }
}

#[derive(Clone, Debug)]
pub struct IterationTrace {
    /// `x₀, x₁, …`
    pub states: Vec<LandenState>,
    /// `residuals[n]` is the residual of `states[n]`.
    pub residuals: Vec<Real>,
    /// `L`, set on convergence.
    pub limit: Option<Real>,
    pub converged: bool,
    /// Product of the factors carried out of the integral, including any
    /// normalization of the original integrand.
    pub factor_product: Real,
    pub algorithm: Algorithm,
}

impl IterationTrace {
    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }

    pub fn last(&self) -> &LandenState {
        self.states.last().unwrap()
    }

    /// `U = L·π/2`.
    pub fn value(&self) -> Option<Real> {
        self.limit.as_ref().map(|l| {
            let prec = l.precision();
            &(l * &Real::pi(prec)) / &Real::from_i64(2, prec)
        })
    }

    /// Least-squares slope of `log r_{n+1}` against `log r_n` over the last
    /// `pairs` consecutive pairs of nonzero residuals. About 2 for quadratic decay.
    pub fn decay_order(&self, pairs: usize) -> Option<f64> {
        let logs: Vec<f64> = self.residuals.iter().map(Real::to_f64).take_while(|r| *r > 0.0).map(f64::ln).collect();
        if pairs == 0 || logs.len() < pairs + 1 {
            return None;
        }
        let tail = &logs[logs.len() - pairs - 1..];
        let xs = &tail[..pairs];
        let ys = &tail[1..];
        let n = pairs as f64;
        let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
        let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        (sxx > 0.0).then(|| sxy / sxx)
    }
}

fn coherent(s: &LandenState, tol: f64) -> bool {
    let r = s.rescaled_b();
    let mean = r.iter().fold(Real::zero(s.precision()), |acc, x| &acc + x).to_f64() / r.len() as f64;
    s.residual().to_f64() < tol && s.b_spread().to_f64() <= tol * mean.abs().max(1.0)
}

fn mean_rescaled_b(s: &LandenState) -> Real {
    let r = s.rescaled_b();
    let n = Real::from_u64(r.len() as u64, s.precision());
    &r.iter().fold(Real::zero(s.precision()), |acc, x| &acc + x) / &n
}

/// Applies Landen steps until the `a`-coordinates are within `tol` of the
/// binomial limit and the rescaled `b`-coordinates agree within `tol`
/// (relative once they exceed 1), or until `max_iter` steps.
///
/// A trace that runs out of steps is returned with `converged = false`.
pub fn iterate(s0: &LandenState, tol: f64, max_iter: usize, algorithm: Algorithm) -> Result<IterationTrace> {
    iterate_with_factor(s0, Real::one(s0.precision()), tol, max_iter, algorithm)
}

/// Normalizes `∫₀^∞ num/den` and iterates from the normalized state.
pub fn iterate_integrand(
    num: &Polynomial,
    den: &Polynomial,
    prec: usize,
    tol: f64,
    max_iter: usize,
    algorithm: Algorithm,
) -> Result<IterationTrace> {
    let r = normalize(num, den, prec)?;
    iterate_with_factor(&r.state, r.factor, tol, max_iter, algorithm)
}

fn iterate_with_factor(
    s0: &LandenState,
    factor: Real,
    tol: f64,
    max_iter: usize,
    algorithm: Algorithm,
) -> Result<IterationTrace> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut trace = IterationTrace {
        states: vec![s0.clone()],
        residuals: vec![s0.residual()],
        limit: None,
        converged: false,
        factor_product: factor,
        algorithm,
    };
    loop {
        let current = trace.last();
        if coherent(current, tol) {
            trace.limit = Some(&mean_rescaled_b(current) * &trace.factor_product);
            trace.converged = true;
            return Ok(trace);
        }
        if trace.steps() >= max_iter {
            return Ok(trace);
        }
        let next = step(current, algorithm)?;
        trace.factor_product = &trace.factor_product * &next.factor;
        trace.residuals.push(next.state.residual());
        trace.states.push(next.state);
    }
}
