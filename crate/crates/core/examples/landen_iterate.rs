//! ∫₀^∞ z⁴/(z⁶ + 1) dz = π/3 by iterating Landen steps.

use rational_landen::cli::parse_polynomial;
use rational_landen::landen::{iterate_integrand, Algorithm};
use rational_landen::{Real, Result};

pub fn run() -> Result<()> {
    let trace = iterate_integrand(
        &parse_polynomial("z^4")?,
        &parse_polynomial("z^6+1")?,
        256,
        1e-40,
        12,
        Algorithm::Geometric,
    )?;
    for (n, r) in trace.residuals.iter().enumerate() {
        println!("n = {n}  residual = {}", r.to_sci(6));
    }
    let u = trace.value().expect("converged");
    let pi3 = &Real::pi(256) / &Real::from_i64(3, 256);
    println!("U = {}", u.to_sci(40));
    println!("|U − π/3| = {}", (&u - &pi3).abs().to_sci(3));
    if let Some(order) = trace.decay_order(4) {
        println!("fitted decay order {order:.3}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
