//! The arithmetic-geometric mean and the elliptic integral it evaluates.

use rational_landen::agm::agm;
use rational_landen::quadrature::elliptic_G;
use rational_landen::{Real, Result};

pub fn run() -> Result<()> {
    let a = Real::one(256);
    let b = (&a / &Real::from_i64(2, 256)).sqrt();
    let trace = agm(&a, &b, 1e-60)?;
    for (n, gap) in trace.gaps().iter().enumerate() {
        println!("n = {n}  |a − b| = {}", gap.to_sci(5));
    }
    println!("AGM(1, 1/√2)  = {}", trace.limit.to_sci(50));
    println!("quadratic bound holds: {}", trace.quadratic_bound_holds());
    let g = elliptic_G(&a, &b, 1e-30)?;
    println!("π/(2·AGM)     = {}", trace.elliptic_value().to_sci(30));
    println!("G by quadrature = {}", g.value.to_sci(30));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
