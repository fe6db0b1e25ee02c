//! Direct images under π(z) = (z² − 1)/(2z) of a few even forms.

use rational_landen::cli::parse_polynomial;
use rational_landen::pushforward::{pi_star, RationalOneForm, Variable};
use rational_landen::Result;

pub fn run() -> Result<()> {
    for (num, den) in [("1", "z^2+1"), ("3", "2*z^2+5"), ("z^2+1", "z^4+z^2+1"), ("z^4", "z^6+1"), ("z", "z^4+1")] {
        let phi = RationalOneForm::from_parts(parse_polynomial(num)?, parse_polynomial(den)?, Variable::Z)?;
        let image = pi_star(&phi)?;
        println!("{phi:<28} ↦  {image}");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
