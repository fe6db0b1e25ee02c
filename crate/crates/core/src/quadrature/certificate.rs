//! Exact real-root certificates. Coefficients are converted to exact dyadic
//! rationals and roots are counted with a Sturm sequence, so double roots
//! (where the polynomial touches zero without changing sign) are still caught.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::exactpoly::sturm::{cauchy_bound, SturmSequence};
use crate::exactpoly::{ExactScalar, Polynomial};
use crate::real::Real;

/// Outcome of [`no_real_root_certificate`].
#[derive(Clone, Debug)]
pub enum RootCertificate {
    /// No root on `[0, ∞)` and the polynomial is positive there.
    CertifiedPositive,
    /// Isolating intervals `(lo, hi]` for the roots found on `[0, ∞)`.
    CertifiedRoot(Vec<(Real, Real)>),
    /// No certificate could be produced; callers treat this as failure.
    Inconclusive(String),
}

impl RootCertificate {
    pub fn is_positive(&self) -> bool {
        matches!(self, RootCertificate::CertifiedPositive)
    }
}

/// Exact polynomial with the given ascending real coefficients.
pub(crate) fn exact_polynomial(coeffs: &[Real]) -> Option<Polynomial> {
    let c: Option<Vec<ExactScalar>> = coeffs.iter().map(|x| x.to_rational().map(ExactScalar::real)).collect();
    c.map(Polynomial::new)
}

/// Decides whether `den` (ascending coefficients) is positive on `[0, ∞)`.
pub fn no_real_root_certificate(den: &[Real]) -> RootCertificate {
    let Some(p) = exact_polynomial(den) else {
        return RootCertificate::Inconclusive("non-finite coefficient".into());
    };
    match certify_polynomial(&p) {
        Ok(c) => c,
        Err(e) => RootCertificate::Inconclusive(e.to_string()),
    }
}

/// Same as [`no_real_root_certificate`] for an exact real polynomial.
pub fn certify_polynomial(p: &Polynomial) -> Result<RootCertificate> {
    if p.is_zero() {
        return Ok(RootCertificate::Inconclusive("zero polynomial".into()));
    }
    let c = p.real_coeffs()?;
    let prec = crate::real::DEFAULT_PRECISION;
    let zero = BigRational::zero();
    if c[0].is_zero() {
        return Ok(RootCertificate::CertifiedRoot(vec![(Real::zero(prec), Real::zero(prec))]));
    }
    let sturm = SturmSequence::new(p)?;
    let bound = cauchy_bound(p)?;
    let width = BigRational::new(BigInt::from(1), BigInt::from(1u64 << 40)) * &bound;
    let roots = sturm.isolate_roots(&zero, &bound, &width);
    if !roots.is_empty() {
        let roots =
            roots.iter().map(|(lo, hi)| (Real::from_rational(lo, prec), Real::from_rational(hi, prec))).collect();
        return Ok(RootCertificate::CertifiedRoot(roots));
    }
    if c[0].is_negative() {
        return Ok(RootCertificate::Inconclusive("polynomial is negative on [0, ∞)".into()));
    }
    Ok(RootCertificate::CertifiedPositive)
}

/// Whether `p` has a zero on the real line. Complex coefficients are allowed:
/// a real zero must be a common root of the real and imaginary parts.
pub fn has_real_zero(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    let (re, im) = p.split_real_imag();
    let g = if im.is_zero() { re.monic() } else { re.gcd(&im) };
    if g.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let bound = cauchy_bound(&g)?;
    Ok(SturmSequence::new(&g)?.count_roots(&-bound.clone(), &bound) > 0)
}
