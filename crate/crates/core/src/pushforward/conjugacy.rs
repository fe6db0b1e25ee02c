//! A second, independent route to `π_*` through the conjugacy
//! `M∘π∘M⁻¹ = F` with `M(z) = (z + i)/(z − i)` and `F(u) = u²`.
//!
//! For a biholomorphism `h`, `h_* = (h⁻¹)*`, so
//! `π_* = (M⁻¹)_* F_* M_* = M* ∘ F_* ∘ (M⁻¹)*`.

use super::form::{RationalOneForm, Variable};
use crate::error::Result;
use crate::exactpoly::{ExactScalar, Polynomial, RationalFunction};

/// `M(z) = (z + i)/(z − i)`.
pub fn mobius() -> RationalFunction {
    let one = ExactScalar::one();
    let i = ExactScalar::i();
    RationalFunction::mobius(one.clone(), i.clone(), one, -i).expect("nonzero denominator")
}

/// `M⁻¹(u) = i(u + 1)/(u − 1)`.
pub fn mobius_inverse() -> RationalFunction {
    let one = ExactScalar::one();
    let i = ExactScalar::i();
    RationalFunction::mobius(i.clone(), i, one.clone(), -one).expect("nonzero denominator")
}

/// `F(u) = u²`.
pub fn square_map() -> RationalFunction {
    RationalFunction::from(Polynomial::from_ints(&[0, 0, 1]))
}

/// `F_*` for `F(u) = u²`.
///
/// The sections are `±√v`, so `F_*(R du) = (R(√v) − R(−√v))/(2√v) dv`. Writing
/// the odd part of `R` as `u·O(u²)` this is exactly `O(v) dv`.
pub fn square_pushforward(form: &RationalOneForm) -> Result<RationalOneForm> {
    let r = form.coefficient();
    let (n, d) = (r.num(), r.den());
    let (n_ref, d_ref) = (n.reflect(), d.reflect());
    let odd_num = &(n * &d_ref) - &(&n_ref * d);
    let even_den = (d * &d_ref).scale(&ExactScalar::from_int(2));
    let (_, odd_over_u) = odd_num.even_odd_parts();
    let (den_in_v, _) = even_den.even_odd_parts();
    Ok(RationalOneForm::new(RationalFunction::new(odd_over_u, den_in_v)?, form.var()))
}

/// `π_*φ` computed as `M*(F_*((M⁻¹)*φ))`.
pub fn conjugacy_pi_star(form: &RationalOneForm) -> Result<RationalOneForm> {
    let on_circle_model = form.pullback(&mobius_inverse(), Variable::Z)?;
    let pushed = square_pushforward(&on_circle_model)?;
    pushed.pullback(&mobius(), Variable::W)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pushforward::pistar::branch_map;

    #[test]
    fn conjugates_pi_to_squaring() {
        let composite = mobius().compose(&branch_map()).unwrap().compose(&mobius_inverse()).unwrap();
        assert_eq!(composite, square_map());
    }

    #[test]
    fn square_pushforward_of_monomials() {
        // F_*(u du) = dv, F_*(u² du) = 0, F_*(u³ du) = v dv
        let f = |k: usize| {
            let r = RationalFunction::from(Polynomial::monomial(ExactScalar::one(), k));
            square_pushforward(&RationalOneForm::in_z(r)).unwrap()
        };
        assert_eq!(f(1).coefficient(), &RationalFunction::one());
        assert!(f(2).is_zero());
        assert_eq!(f(3).coefficient(), &RationalFunction::x());
    }

    #[test]
    fn cauchy_form_through_conjugacy() {
        let phi =
            RationalOneForm::from_parts(Polynomial::from_ints(&[1]), Polynomial::from_ints(&[1, 0, 1]), Variable::Z)
                .unwrap();
        let image = conjugacy_pi_star(&phi).unwrap();
        assert_eq!(image.coefficient(), phi.coefficient());
    }

    #[test]
    fn z_dz_through_conjugacy() {
        let phi = RationalOneForm::in_z(RationalFunction::x());
        let image = conjugacy_pi_star(&phi).unwrap();
        assert_eq!(image.coefficient(), &RationalFunction::from(Polynomial::from_ints(&[0, 4])));
    }
}
