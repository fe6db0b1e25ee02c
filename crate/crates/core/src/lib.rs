//! Rational Landen transformations.
//!
//! Integrals `∫₀^∞ P(z)/Q(z) dz` of even rational functions are invariant under
//! the direct image of the 1-form `P/Q dz` by the degree-two map
//! `π(z) = (z² − 1)/(2z)`. After rescaling the denominator to be monic with
//! constant term 1, iterating that direct image drives the coefficients to
//! `(C(p,1), …, C(p,p−1); C(p−1,0)·L, …, C(p−1,p−1)·L)` with
//! `L = (2/π)·∫₀^∞ P/Q dz`, and the number of correct digits roughly doubles
//! every step.
//!
//! Modules:
//!
//! * [`exactpoly`]: exact algebra over `Q(i)`, fiber sums without radicals.
//! * [`pushforward`]: direct images of rational 1-forms, the Möbius conjugacy
//!   cross-check, and Laurent-coefficient decimation.
//! * [`landen`]: normalization, the two interchangeable Landen steps, iteration.
//! * [`quadrature`]: independent numerical oracle and real-root certificate.
//! * [`agm`]: the classical arithmetic-geometric mean.
//! * [`cli`]: job specifications and structured reports behind the `ratlanden` binary.

pub mod agm;
pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod landen;
pub mod pushforward;
pub mod quadrature;
pub mod real;

pub use error::{Error, ErrorCategory, Result};
pub use real::{Real, DEFAULT_PRECISION};
