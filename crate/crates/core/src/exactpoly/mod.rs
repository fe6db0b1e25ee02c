//! Exact polynomial and rational-function arithmetic over the Gaussian
//! rationals, plus elimination over the two-point fibers of a quadratic.

mod fiber;
mod modp;
mod poly;
mod rational;
mod scalar;
pub mod sturm;

pub use fiber::{symmetric_fiber_sum, QuadraticFiber};
pub use poly::Polynomial;
pub use rational::RationalFunction;
pub use scalar::{parse_rational, ExactScalar};
