//! Decimating a Laurent table: what is left beyond the residue shrinks like R^{1−2ⁿ}.

use rational_landen::pushforward::LaurentForm;
use rational_landen::{Real, Result};

pub fn run() -> Result<()> {
    let prec = 128;
    // coefficients of 1/(1 − z/2) − 1 + 1/(1 − 1/(2z)), a sample form on 1/2 < |z| < 2
    let half = Real::from_f64(0.5, prec);
    let phi = LaurentForm::from_fn(64, Real::from_f64(1.5, prec), |k| half.powi(k.unsigned_abs() as u32))?;
    println!("‖φ‖ = {}", phi.norm().to_sci(10));
    for step in phi.superconvergence_probe(5)? {
        println!(
            "n = {}  distance {}  bound {}  {}",
            step.n,
            step.distance.to_sci(6),
            step.bound.to_sci(6),
            if step.within_bound { "ok" } else { "VIOLATED" }
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
