use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Polynomial;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};

/// A rational function `num/den` in canonical form: `gcd(num, den) = 1` and
/// `den` monic. Two equal functions therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
        let lc = den.leading().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.inv()?;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self { num: p, den: Polynomial::one() }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    /// The identity function `x`.
    pub fn x() -> Self {
        Self::from_polynomial(Polynomial::x())
    }

    /// The Möbius map `(a·x + b)/(c·x + d)`.
    pub fn mobius(a: ExactScalar, b: ExactScalar, c: ExactScalar, d: ExactScalar) -> Result<Self> {
        Self::new(Polynomial::new(vec![b, a]), Polynomial::new(vec![d, c]))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `max(deg num, deg den)`; the zero function has degree 0.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    /// Value at `x`, or `None` at a pole.
    pub fn evaluate(&self, x: &ExactScalar) -> Option<ExactScalar> {
        let d = self.den.evaluate(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.evaluate(x) / &d)
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(self.num.reflect(), self.den.reflect()).expect("nonzero denominator")
    }

    pub fn is_even(&self) -> bool {
        &self.reflect() == self
    }

    pub fn is_odd(&self) -> bool {
        self.reflect() == -self
    }

    /// `self(inner(x))`.
    ///
    /// With `self = N/D`, `m = max(deg N, deg D)` and `inner = F/G`, the
    /// composite is `Σ n_k F^k G^(m−k) / Σ d_k F^k G^(m−k)`.
    pub fn compose(&self, inner: &RationalFunction) -> Result<Self> {
        let m = self.degree();
        let f_pows: Vec<Polynomial> = (0..=m).map(|k| inner.num.pow(k as u32)).collect();
        let g_pows: Vec<Polynomial> = (0..=m).map(|k| inner.den.pow(k as u32)).collect();
        let homogenize = |p: &Polynomial| {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Polynomial::zero(), |acc, (k, c)| &acc + &(&f_pows[k] * &g_pows[m - k]).scale(c))
        };
        let den = homogenize(&self.den);
        if den.is_zero() {
            return Err(Error::Domain("composition lands on a pole identically".into()));
        }
        Self::new(homogenize(&self.num), den)
    }

    pub fn display_in(&self, var: &str) -> String {
        let num = self.num.display_in(var);
        if self.den.is_one() {
            return num;
        }
        let wrap = |s: String, p: &Polynomial| {
            let single_term = p.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
            if single_term && !s.starts_with('-') && !s.contains('/') {
                s
            } else {
                format!("({s})")
            }
        };
        format!("{}/{}", wrap(num, &self.num), wrap(self.den.display_in(var), &self.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    /// Panics when dividing by the zero function; use [`RationalFunction::inv`] to check.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}
