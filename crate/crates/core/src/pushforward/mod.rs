//! Direct images of rational 1-forms under `π(z) = (z² − 1)/(2z)` and under
//! `F(z) = z²`, with the structural identities they satisfy:
//!
//! * `π*π_*φ = φ + ι*φ` for the deck involution `ι(z) = −1/z`;
//! * `π_*φ = 0` exactly when `ι*φ = −φ`;
//! * `τ*π_* = π_*τ*` for `τ(z) = −z`, so odd forms push to odd forms;
//! * `∫_ℝ π_*φ = ∫_ℝ φ` when `φ` has no poles on the extended real line.

mod conjugacy;
mod form;
mod laurent;
mod pistar;

pub use conjugacy::{conjugacy_pi_star, mobius, mobius_inverse, square_map, square_pushforward};
pub use form::{Parity, RationalOneForm, Variable};
pub use laurent::{LaurentForm, ProbeStep};
pub use pistar::{branch_fiber, branch_map, involution_pullback, pi_star, pullback_pi, Involution};
