//! Adaptive quadrature on [0, ∞), and the root certificate that guards it.

use rational_landen::cli::parse_polynomial;
use rational_landen::quadrature::{certify_polynomial, integrate_halfline};
use rational_landen::{Real, Result};

pub fn run() -> Result<()> {
    let r = |x: f64| Real::from_f64(x, 128);
    // 1/(z⁴ + z² + 1), ascending
    let q = integrate_halfline(&[r(1.0)], &[r(1.0), r(0.0), r(1.0), r(0.0), r(1.0)], 1e-20)?;
    println!("∫ 1/(z⁴+z²+1) = {} ({} evaluations, error ≈ {:.1e})", q.value.to_sci(25), q.evaluations, q.est_error);
    println!("π/(2√3)        = {}", (&Real::pi(128) / &(&r(2.0) * &r(3.0).sqrt())).to_sci(25));

    for den in ["z^4+z^2+1", "z^3-3*z+3", "z^3-3*z+1"] {
        println!("{den:>12}: {:?}", certify_polynomial(&parse_polynomial(den)?)?);
    }
    match integrate_halfline(&[r(1.0)], &[r(-2.0), r(0.0), r(1.0)], 1e-10) {
        Err(e) => println!("1/(z²−2): {e}"),
        Ok(q) => println!("unexpected value {}", q.value),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
