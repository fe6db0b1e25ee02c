use std::fmt;

use crate::error::Result;
use crate::exactpoly::{Polynomial, RationalFunction};
use crate::quadrature::has_real_zero;

/// Name of the coordinate a form is written in. Informational only: it is
/// used for display, and the operations here relabel their outputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    Z,
    W,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::Z => "z",
            Variable::W => "w",
        }
    }
}

/// Behaviour under `τ(z) = −z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// The meromorphic 1-form `R(x) dx` on the Riemann sphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalOneForm {
    coefficient: RationalFunction,
    var: Variable,
}

impl RationalOneForm {
    pub fn new(coefficient: RationalFunction, var: Variable) -> Self {
        Self { coefficient, var }
    }

    pub fn in_z(coefficient: RationalFunction) -> Self {
        Self::new(coefficient, Variable::Z)
    }

    pub fn in_w(coefficient: RationalFunction) -> Self {
        Self::new(coefficient, Variable::W)
    }

    pub fn from_parts(num: Polynomial, den: Polynomial, var: Variable) -> Result<Self> {
        Ok(Self::new(RationalFunction::new(num, den)?, var))
    }

    pub fn zero(var: Variable) -> Self {
        Self::new(RationalFunction::zero(), var)
    }

    pub fn coefficient(&self) -> &RationalFunction {
        &self.coefficient
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn degree(&self) -> usize {
        self.coefficient.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// `dz` is odd, so the form is even exactly when `R` is odd.
    pub fn parity(&self) -> Parity {
        if self.coefficient.is_odd() {
            Parity::Even
        } else if self.coefficient.is_even() {
            Parity::Odd
        } else {
            Parity::Neither
        }
    }

    /// Convergent over ℝ: no real poles, and `deg den ≥ deg num + 2` so that
    /// the form is regular at infinity as well.
    pub fn is_integrable_over_reals(&self) -> Result<bool> {
        let num_deg = self.coefficient.num().degree();
        let den_deg = self.coefficient.den().degree().unwrap_or(0);
        let decays = num_deg.is_none_or(|n| den_deg >= n + 2);
        Ok(decays && !has_real_zero(self.coefficient.den())?)
    }

    /// `f*(R(x)dx) = R(f(x))·f'(x) dx`.
    pub fn pullback(&self, map: &RationalFunction, var: Variable) -> Result<Self> {
        let composed = self.coefficient.compose(map)?;
        Ok(Self::new(&composed * &map.derivative(), var))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.coefficient + &other.coefficient, self.var)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.coefficient, self.var)
    }
}

impl fmt::Display for RationalOneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.name();
        let r = self.coefficient.display_in(v);
        if self.coefficient.den().is_one()
            && self.coefficient.num().coeffs().iter().filter(|c| !c.is_zero()).count() > 1
        {
            write!(f, "({r}) d{v}")
        } else {
            write!(f, "{r} d{v}")
        }
    }
}
