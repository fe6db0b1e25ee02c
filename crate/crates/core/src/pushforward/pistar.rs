use super::form::{RationalOneForm, Variable};
use crate::error::Result;
use crate::exactpoly::{ExactScalar, Polynomial, QuadraticFiber, RationalFunction};

/// `π(z) = (z² − 1)/(2z)`.
pub fn branch_map() -> RationalFunction {
    RationalFunction::new(Polynomial::from_ints(&[-1, 0, 1]), Polynomial::from_ints(&[0, 2]))
        .expect("nonzero denominator")
}

/// The fiber of `π` over `w`: the roots of `z² − 2w·z − 1`.
pub fn branch_fiber() -> QuadraticFiber {
    QuadraticFiber::new(Polynomial::from_ints(&[0, 2]), ExactScalar::from_int(-1))
}

/// Direct image `π_*φ`.
///
/// With sections `z₁(w), z₂(w)` of `π`, `π_*(R dz) = Σ R(zᵢ)·zᵢ'(w) dw`, and
/// `zᵢ' = 1/π'(zᵢ) = 2zᵢ²/(zᵢ² + 1)`. The sum is symmetric in the two roots,
/// so it is eliminated exactly over the fiber.
pub fn pi_star(form: &RationalOneForm) -> Result<RationalOneForm> {
    let inverse_derivative =
        RationalFunction::new(Polynomial::from_ints(&[0, 0, 2]), Polynomial::from_ints(&[1, 0, 1]))?;
    let summand = form.coefficient() * &inverse_derivative;
    let image = branch_fiber().sum_over_fiber(&summand)?;
    Ok(RationalOneForm::in_w(image))
}

/// Pullback `π*ψ`: substitutes `w = (z² − 1)/(2z)`, `dw = (z² + 1)/(2z²) dz`.
pub fn pullback_pi(form: &RationalOneForm) -> Result<RationalOneForm> {
    form.pullback(&branch_map(), Variable::Z)
}

/// The two involutions commuting with `π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `τ(z) = −z`, which satisfies `π∘τ = τ∘π`.
    Tau,
    /// `ι(z) = −1/z`, the deck transformation: `π∘ι = π`.
    Iota,
}

impl Involution {
    pub fn map(self) -> RationalFunction {
        match self {
            Involution::Tau => RationalFunction::from(Polynomial::from_ints(&[0, -1])),
            Involution::Iota => RationalFunction::new(Polynomial::from_ints(&[-1]), Polynomial::from_ints(&[0, 1]))
                .expect("nonzero denominator"),
        }
    }
}

/// `τ*(R dz) = −R(−z) dz`, `ι*(R dz) = R(−1/z)·z⁻² dz`.
pub fn involution_pullback(form: &RationalOneForm, which: Involution) -> Result<RationalOneForm> {
    form.pullback(&which.map(), form.var())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn form(num: &[i64], den: &[i64]) -> RationalOneForm {
        RationalOneForm::from_parts(p(num), p(den), Variable::Z).unwrap()
    }

    #[test]
    fn z_dz_pushes_to_4w_dw() {
        let image = pi_star(&form(&[0, 1], &[1])).unwrap();
        assert_eq!(image.coefficient(), &RationalFunction::from(p(&[0, 4])));
    }

    #[test]
    fn dz_pushes_to_2dw() {
        // d(σ₊ + σ₋) = d(2w)
        let image = pi_star(&form(&[1], &[1])).unwrap();
        assert_eq!(image.coefficient(), &RationalFunction::from(p(&[2])));
    }

    #[test]
    fn cauchy_form_is_fixed() {
        let phi = form(&[1], &[1, 0, 1]);
        assert_eq!(pi_star(&phi).unwrap().with_var(Variable::Z), phi);
    }

    #[test]
    fn pullback_of_cauchy_form_doubles_it() {
        let psi = RationalOneForm::from_parts(p(&[1]), p(&[1, 0, 1]), Variable::W).unwrap();
        assert_eq!(pullback_pi(&psi).unwrap(), form(&[2], &[1, 0, 1]));
    }

    #[test]
    fn pullback_of_dw_and_w_dw() {
        let dw = RationalOneForm::from_parts(p(&[1]), p(&[1]), Variable::W).unwrap();
        assert_eq!(pullback_pi(&dw).unwrap(), form(&[1, 0, 1], &[0, 0, 2]));
        let w_dw = RationalOneForm::from_parts(p(&[0, 1]), p(&[1]), Variable::W).unwrap();
        assert_eq!(pullback_pi(&w_dw).unwrap(), form(&[-1, 0, 0, 0, 1], &[0, 0, 0, 4]));
    }

    #[test]
    fn involutions_on_cauchy_form() {
        let phi = form(&[1], &[1, 0, 1]);
        assert_eq!(involution_pullback(&phi, Involution::Tau).unwrap(), phi.neg());
        assert_eq!(involution_pullback(&phi, Involution::Iota).unwrap(), phi);
    }

    #[test]
    fn deck_antiinvariant_form_pushes_to_zero() {
        let phi = form(&[0, 1], &[1, 0, 0, 0, 1]);
        assert_eq!(involution_pullback(&phi, Involution::Iota).unwrap(), phi.neg());
        assert!(pi_star(&phi).unwrap().is_zero());
    }
}
