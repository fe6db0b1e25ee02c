//! One Landen step on a degree-six state, with the intermediate quantities of the closed-form map.

use rational_landen::landen::{step_geometric, step_theorem_with_intermediates, LandenState};
use rational_landen::Result;

pub fn run() -> Result<()> {
    let s = LandenState::from_f64(&[0.7, 2.5], &[1.25, 0.5, 3.0], 128)?;
    let (t, m) = step_theorem_with_intermediates(&s)?;
    let g = step_geometric(&s)?;
    println!("Q(1) = {}", m.q1.to_sci(20));
    for (j, d) in m.d.iter().enumerate() {
        println!("d{} = {}", j + 1, d.to_sci(20));
    }
    for (name, state) in [("closed form", &t.state), ("direct image", &g.state)] {
        println!("{name:>12}: a = {:?}", state.a().iter().map(|x| x.to_sci(16)).collect::<Vec<_>>());
        println!("{:>12}  b = {:?}", "", state.b().iter().map(|x| x.to_sci(16)).collect::<Vec<_>>());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
