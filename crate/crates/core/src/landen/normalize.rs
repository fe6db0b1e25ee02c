use super::state::LandenState;
use crate::error::{Error, Result};
use crate::exactpoly::Polynomial;
use crate::real::Real;
use num_traits::Signed;

/// Extra bits carried while taking roots.
pub(crate) const GUARD_BITS: usize = 32;

#[derive(Clone, Debug)]
pub struct NormalizationResult {
    pub state: LandenState,
    /// The substitution `z = λx`.
    pub lambda: Real,
    /// `∫₀^∞ input = factor · ∫₀^∞ state`.
    pub factor: Real,
}

impl NormalizationResult {
    /// The state with `factor` absorbed into the numerator.
    pub fn folded(&self) -> LandenState {
        let b = self.state.b().iter().map(|x| x * &self.factor).collect();
        LandenState::trusted(self.state.a().to_vec(), b).expect("same shape")
    }
}

/// Rescales an even integrand `num/den` so that its denominator becomes
/// `x^{2p} + a₁x^{2p−2} + … + 1`.
///
/// With `den = Σ cₖ zᵏ` of degree `2p`, `λ = (c₀/c_{2p})^{1/(2p)}` and
/// `factor = λ/c₀`; the numerator coefficients are only rescaled by powers of `λ`.
pub fn normalize(num: &Polynomial, den: &Polynomial, prec: usize) -> Result<NormalizationResult> {
    let r = normalize_unchecked(num, den, prec)?;
    LandenState::new(r.state.a().to_vec(), r.state.b().to_vec())?;
    Ok(r)
}

/// [`normalize`] for ascending real coefficient lists.
pub fn normalize_coeffs(num: &[Real], den: &[Real]) -> Result<NormalizationResult> {
    let prec = num.iter().chain(den).map(Real::precision).max().unwrap_or(crate::real::DEFAULT_PRECISION);
    let exact = |c: &[Real]| {
        crate::quadrature::exact_polynomial(c).ok_or_else(|| Error::Domain("non-finite coefficient".into()))
    };
    normalize(&exact(num)?, &exact(den)?, prec)
}

pub(crate) fn normalize_unchecked(num: &Polynomial, den: &Polynomial, prec: usize) -> Result<NormalizationResult> {
    if !den.is_even() || !num.is_even() {
        return Err(Error::Domain("the integrand must be even".into()));
    }
    let c = den.real_coeffs()?;
    let n = num.real_coeffs()?;
    let deg = c.len().saturating_sub(1);
    if deg < 2 {
        return Err(Error::Domain("denominator must have degree at least 2".into()));
    }
    let p = deg / 2;
    if n.len() > 2 * p - 1 {
        return Err(Error::Domain(format!(
            "numerator degree {} is too large for a denominator of degree {deg}",
            n.len() - 1
        )));
    }
    if !c[0].is_positive() || !c[deg].is_positive() {
        return Err(Error::Domain("denominator needs positive leading and constant coefficients".into()));
    }
    let work = prec + GUARD_BITS;
    let q = |x: &num_rational::BigRational| Real::from_rational(x, work);
    let c0 = q(&c[0]);
    let lambda = (&c0 / &q(&c[deg])).nth_root(deg as u32);
    let powers: Vec<Real> = std::iter::successors(Some(Real::one(work)), |x| Some(x * &lambda)).take(deg + 1).collect();
    let a = (1..p).map(|i| (&q(&c[2 * (p - i)]) * &powers[2 * (p - i)] / &c0).with_precision(prec)).collect();
    let b = (0..p)
        .map(|i| {
            let k = 2 * (p - 1 - i);
            match n.get(k) {
                Some(x) => (&q(x) * &powers[k]).with_precision(prec),
                None => Real::zero(prec),
            }
        })
        .collect();
    let factor = (&lambda / &c0).with_precision(prec);
    Ok(NormalizationResult { state: LandenState::trusted(a, b)?, lambda: lambda.with_precision(prec), factor })
}
