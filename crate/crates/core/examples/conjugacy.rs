//! The direct image computed two ways, plus the deck and kernel identities.

use rational_landen::cli::parse_polynomial;
use rational_landen::pushforward::{
    conjugacy_pi_star, involution_pullback, pi_star, pullback_pi, Involution, RationalOneForm, Variable,
};
use rational_landen::Result;

pub fn run() -> Result<()> {
    let phi = RationalOneForm::from_parts(
        parse_polynomial("z^3 - 2*z + 5")?,
        parse_polynomial("z^4 + 3*z + 7")?,
        Variable::Z,
    )?;
    let direct = pi_star(&phi)?;
    let via_squaring = conjugacy_pi_star(&phi)?;
    println!("φ            = {phi}");
    println!("π_*φ         = {direct}");
    println!("M⁻¹_* F_* M_* φ agrees: {}", direct == via_squaring);

    let lhs = pullback_pi(&direct)?;
    let rhs = phi.add(&involution_pullback(&phi, Involution::Iota)?);
    println!("π*π_*φ = φ + ι*φ: {}", lhs == rhs);

    // ι*φ = −φ exactly when π_*φ = 0
    for (num, den) in [("z", "z^4+1"), ("z", "1")] {
        let f = RationalOneForm::from_parts(parse_polynomial(num)?, parse_polynomial(den)?, Variable::Z)?;
        let anti = involution_pullback(&f, Involution::Iota)? == f.neg();
        println!("{f}: ι*φ = −φ is {anti}, π_*φ = {}", pi_star(&f)?);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
