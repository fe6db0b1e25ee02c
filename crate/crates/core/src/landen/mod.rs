//! Normalized even integrands and the Landen step.
//!
//! The step sends `P(z)/Q(z) dz` to its direct image under `π(z) = (z² − 1)/(2z)`
//! and rescales the result back to a monic, unit-constant denominator. Two
//! independent implementations are provided: [`step_geometric`] (exact
//! algebra) and [`step_theorem`] (closed-form coefficient map). Both fold all
//! constants into the numerator, so `∫₀^∞` is unchanged and the returned factor is 1.

mod geometric;
mod iterate;
mod normalize;
mod state;
mod theorem;

pub use geometric::{pushforward_pair, step_geometric};
pub use iterate::{iterate, iterate_integrand, step, Algorithm, IterationTrace};
pub use normalize::{normalize, normalize_coeffs, NormalizationResult};
pub use state::{binomial, LandenState};
pub use theorem::{step_theorem, step_theorem_with_intermediates, theorem_intermediates, LandenStepIntermediates};

use crate::real::Real;

/// Result of one step: `∫₀^∞ before = factor · ∫₀^∞ state`.
#[derive(Clone, Debug)]
pub struct LandenStep {
    pub state: LandenState,
    pub factor: Real,
}
