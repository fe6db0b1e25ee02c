//! Laurent model of `F_*` for `F(z) = z^m` on an annulus `1/R < |z| < R`.
//!
//! A form is stored as `φ = (Σ_{|k|≤K} a_k z^k) dz/z`. Then `F_*` keeps every
//! `m`-th coefficient, the residue term `a₀ dz/z` is fixed, and the weighted
//! norm `‖φ‖ = |a₀| + Σ_{k≥1} (|a_k| + |a_{−k}|) R^k` of what remains decays
//! like `R^{1−2ⁿ}` under `n` applications of `F_*` with `m = 2`.

use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Clone, Debug)]
pub struct LaurentForm {
    /// `coeffs[k + order] = a_k`.
    coeffs: Vec<Real>,
    radius: Real,
    order: usize,
}

/// One line of [`LaurentForm::superconvergence_probe`].
#[derive(Clone, Debug)]
pub struct ProbeStep {
    pub n: u32,
    /// `‖F_*ⁿφ − a₀ dz/z‖`.
    pub distance: Real,
    /// `R^{1−2ⁿ}·‖φ‖`.
    pub bound: Real,
    pub within_bound: bool,
}

impl LaurentForm {
    /// `coeffs` lists `a_{−K}, …, a_K`; its length must be odd.
    pub fn new(coeffs: Vec<Real>, radius: Real) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::Domain("Laurent table needs 2K + 1 coefficients".into()));
        }
        if radius <= Real::one(radius.precision()) {
            return Err(Error::Domain("annulus radius must exceed 1".into()));
        }
        let order = coeffs.len() / 2;
        Ok(Self { coeffs, radius, order })
    }

    /// Builds the table from `a(k)` for `−K ≤ k ≤ K`.
    pub fn from_fn(order: usize, radius: Real, a: impl Fn(i64) -> Real) -> Result<Self> {
        let k = order as i64;
        Self::new((-k..=k).map(a).collect(), radius)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn radius(&self) -> &Real {
        &self.radius
    }

    pub fn coefficient(&self, k: i64) -> Real {
        let idx = k + self.order as i64;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Real::zero(self.radius.precision())
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// `a₀ = (2πi)⁻¹ ∮ φ`.
    pub fn residue(&self) -> Real {
        self.coefficient(0)
    }

    pub fn norm(&self) -> Real {
        let mut total = self.residue().abs();
        let mut weight = Real::one(self.radius.precision());
        for k in 1..=self.order as i64 {
            weight = &weight * &self.radius;
            let pair = &self.coefficient(k).abs() + &self.coefficient(-k).abs();
            total = &total + &(&pair * &weight);
        }
        total
    }

    /// `(Σ a_{mk} z^k) dz/z`, truncated at order `⌊K/m⌋`. For `m = 2` this is `F_*`.
    pub fn decimate(&self, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain("decimation factor must be at least 2".into()));
        }
        let order = self.order / m;
        let stride = m as i64;
        Self::from_fn(order, self.radius.clone(), |k| self.coefficient(stride * k))
    }

    /// The form with its residue term `a₀ dz/z` removed.
    pub fn without_residue(&self) -> Self {
        let mut out = self.clone();
        out.coeffs[self.order] = Real::zero(self.radius.precision());
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.radius != other.radius {
            return Err(Error::Domain("forms live on different annuli".into()));
        }
        let order = self.order.max(other.order);
        Self::from_fn(order, self.radius.clone(), |k| &self.coefficient(k) + &other.coefficient(k))
    }

    pub fn scale(&self, c: &Real) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect(), radius: self.radius.clone(), order: self.order }
    }

    /// `‖F_*ⁿφ − a₀ dz/z‖` for `n = 1..=steps`, each checked against `R^{1−2ⁿ}·‖φ‖`.
    pub fn superconvergence_probe(&self, steps: u32) -> Result<Vec<ProbeStep>> {
        let norm = self.norm();
        let prec = self.radius.precision();
        let mut current = self.clone();
        let mut out = Vec::with_capacity(steps as usize);
        for n in 1..=steps {
            current = current.decimate(2)?;
            let distance = current.without_residue().norm();
            let exponent = Real::from_i64(1 - (1i64 << n), prec);
            let bound = &self.radius.powf(&exponent) * &norm;
            let within_bound = distance <= bound;
            out.push(ProbeStep { n, distance, bound, within_bound });
        }
        Ok(out)
    }
}
