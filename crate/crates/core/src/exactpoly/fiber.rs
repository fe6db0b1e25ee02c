//! Sums and products over the two roots of a quadratic fiber
//! `z² − e1(w)·z + e2 = 0`, carried out in the ring `K[w][z]/(z² − e1 z + e2)`.
//!
//! Every element of that ring is `α + β·z` with `α, β ∈ K[w]`. The conjugate
//! (the same expression at the other root) is `(α + β·e1) − β·z`, so
//!
//! * the norm `A(z₁)·A(z₂) = α² + αβ·e1 + β²·e2`, and
//! * the trace `A(z₁) + A(z₂) = 2α + β·e1`
//!
//! are polynomials in `w`. No radicals ever appear.

use super::poly::Polynomial;
use super::rational::RationalFunction;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// The quadratic `z² − e1·z + e2` whose roots form the fiber over `w`.
#[derive(Clone, Debug)]
pub struct QuadraticFiber {
    e1: Polynomial,
    e2: Polynomial,
}

/// `α + β·z` in the quotient ring.
#[derive(Clone, Debug, PartialEq)]
struct FiberElement {
    alpha: Polynomial,
    beta: Polynomial,
}

impl QuadraticFiber {
    /// `e1` is the sum of the roots, `e2` their product.
    pub fn new(e1: Polynomial, e2: ExactScalar) -> Self {
        Self { e1, e2: Polynomial::constant(e2) }
    }

    pub fn root_sum(&self) -> &Polynomial {
        &self.e1
    }

    pub fn root_product(&self) -> &Polynomial {
        &self.e2
    }

    /// Reduces a polynomial in `z` with constant coefficients modulo the fiber quadratic.
    fn reduce(&self, p: &Polynomial) -> FiberElement {
        // Horner in the quotient ring: (x0 + x1 z)·z = −e2·x1 + (x0 + e1·x1) z.
        let mut alpha = Polynomial::zero();
        let mut beta = Polynomial::zero();
        for c in p.coeffs().iter().rev() {
            let next_alpha = &(-&self.e2) * &beta;
            let next_beta = &alpha + &(&self.e1 * &beta);
            alpha = &next_alpha + &Polynomial::constant(c.clone());
            beta = next_beta;
        }
        FiberElement { alpha, beta }
    }

    fn conjugate(&self, x: &FiberElement) -> FiberElement {
        FiberElement { alpha: &x.alpha + &(&x.beta * &self.e1), beta: -&x.beta }
    }

    fn mul(&self, x: &FiberElement, y: &FiberElement) -> FiberElement {
        // z² = e1 z − e2
        let bb = &x.beta * &y.beta;
        FiberElement {
            alpha: &(&x.alpha * &y.alpha) - &(&bb * &self.e2),
            beta: &(&(&x.alpha * &y.beta) + &(&x.beta * &y.alpha)) + &(&bb * &self.e1),
        }
    }

    fn trace(&self, x: &FiberElement) -> Polynomial {
        &(&x.alpha + &x.alpha) + &(&x.beta * &self.e1)
    }

    fn norm(&self, x: &FiberElement) -> Result<Polynomial> {
        let c = self.mul(x, &self.conjugate(x));
        if !c.beta.is_zero() {
            return Err(Error::Invariant("fiber norm left a non-symmetric residue".into()));
        }
        Ok(c.alpha)
    }

    /// `P(z₁)·P(z₂)` as a polynomial in `w`.
    pub fn norm_of(&self, p: &Polynomial) -> Result<Polynomial> {
        self.norm(&self.reduce(p))
    }

    /// `P(z₁) + P(z₂)` as a polynomial in `w`.
    pub fn trace_of(&self, p: &Polynomial) -> Polynomial {
        self.trace(&self.reduce(p))
    }

    /// `S(z₁) + S(z₂)` as a reduced rational function of `w`.
    ///
    /// Multiplies numerator and denominator of `S(z₁)` by the conjugate of the
    /// denominator, so the sum becomes `Tr(A·conj B) / N(B)`.
    pub fn sum_over_fiber(&self, s: &RationalFunction) -> Result<RationalFunction> {
        let a = self.reduce(s.num());
        let b = self.reduce(s.den());
        let norm = self.norm(&b)?;
        if norm.is_zero() {
            return Err(Error::Domain("the denominator vanishes identically on the fiber".into()));
        }
        let cross = self.mul(&a, &self.conjugate(&b));
        RationalFunction::new(self.trace(&cross), norm)
    }
}

/// `Σ S(zᵢ)` over the roots of `z² − e1(w)·z + e2`, as a rational function of `w`.
pub fn symmetric_fiber_sum(s: &RationalFunction, e1: &Polynomial, e2: &ExactScalar) -> Result<RationalFunction> {
    QuadraticFiber::new(e1.clone(), e2.clone()).sum_over_fiber(s)
}
