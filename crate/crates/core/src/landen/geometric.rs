use super::normalize::normalize_unchecked;
use super::state::LandenState;
use super::LandenStep;
use crate::error::{Error, Result};
use crate::exactpoly::Polynomial;
use crate::pushforward::{branch_fiber, pi_star, RationalOneForm};
use crate::real::Real;

/// `π_*(num/den dz) = N(w)/D(w) dw` with `D(w) = den(z₁)·den(z₂)` the norm of
/// the denominator over the fiber, so that `deg D = deg den`.
pub fn pushforward_pair(num: &Polynomial, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let form = RationalOneForm::from_parts(num.clone(), den.clone(), crate::pushforward::Variable::Z)?;
    let image = pi_star(&form)?;
    let d = branch_fiber().norm_of(den)?;
    let r = image.coefficient();
    let cofactor = d.divmod(r.den())?;
    if !cofactor.1.is_zero() {
        return Err(Error::Invariant("reduced denominator does not divide the fiber norm".into()));
    }
    Ok((r.num() * &cofactor.0, d))
}

/// One Landen step through the exact direct image, followed by normalization.
pub fn step_geometric(s: &LandenState) -> Result<LandenStep> {
    let (n, d) = pushforward_pair(&s.exact_numerator(), &s.exact_denominator())?;
    let r = normalize_unchecked(&n, &d, s.precision())?;
    Ok(LandenStep { state: r.folded(), factor: Real::one(s.precision()) })
}
