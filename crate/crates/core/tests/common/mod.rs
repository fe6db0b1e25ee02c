#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rational_landen::exactpoly::{ExactScalar, Polynomial};
use rational_landen::landen::LandenState;
use rational_landen::pushforward::{RationalOneForm, Variable};
use rational_landen::Real;

pub const PREC: usize = 128;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> ExactScalar {
    ExactScalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn scalar(rng: &mut ChaCha8Rng, complex: bool) -> ExactScalar {
    let re = small_rational(rng);
    if complex && rng.gen_bool(0.5) {
        re + small_rational(rng) * ExactScalar::i()
    } else {
        re
    }
}

/// A polynomial of exact degree `deg`.
pub fn poly(rng: &mut ChaCha8Rng, deg: usize, complex: bool) -> Polynomial {
    let mut c: Vec<ExactScalar> = (0..deg).map(|_| scalar(rng, complex)).collect();
    let mut lead = scalar(rng, complex);
    while lead.is_zero() {
        lead = scalar(rng, complex);
    }
    c.push(lead);
    Polynomial::new(c)
}

/// A rational form whose coefficient has degree at most `max_deg`.
pub fn form(rng: &mut ChaCha8Rng, max_deg: usize, complex: bool) -> RationalOneForm {
    loop {
        let (dn, dd) = (rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg));
        let n = poly(rng, dn, complex);
        let d = poly(rng, dd, complex);
        let f = RationalOneForm::from_parts(n, d, Variable::Z).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// A real form with no poles on the extended real line.
pub fn regular_form(rng: &mut ChaCha8Rng) -> RationalOneForm {
    let mut den = Polynomial::one();
    for _ in 0..rng.gen_range(1..=3) {
        let r = small_rational(rng);
        let mut s = small_rational(rng);
        while s.is_zero() {
            s = small_rational(rng);
        }
        // (z − r)² + s²
        let q = Polynomial::new(vec![&(&r * &r) + &(&s * &s), -(&r + &r), ExactScalar::one()]);
        den = &den * &q;
    }
    let deg = den.degree().unwrap() - 2;
    let dn = rng.gen_range(0..=deg);
    let num = poly(rng, dn, false);
    RationalOneForm::from_parts(num, den, Variable::Z).unwrap()
}

pub fn real(x: f64) -> Real {
    Real::from_f64(x, PREC)
}

/// A certified state with `a` drawn from `(a_lo, a_hi)` and `b` from `(0.1, 5)`.
pub fn state_in(rng: &mut ChaCha8Rng, p: usize, a_lo: f64, a_hi: f64) -> LandenState {
    loop {
        let a = (1..p).map(|_| real(rng.gen_range(a_lo..a_hi))).collect();
        let b = (0..p).map(|_| real(rng.gen_range(0.1..5.0))).collect();
        if let Ok(s) = LandenState::new(a, b) {
            return s;
        }
    }
}

pub fn state(rng: &mut ChaCha8Rng, p: usize) -> LandenState {
    state_in(rng, p, 0.1, 8.0)
}

/// Largest relative coordinate difference between two states of the same `p`.
pub fn state_distance(s: &LandenState, t: &LandenState) -> f64 {
    s.a()
        .iter()
        .chain(s.b())
        .zip(t.a().iter().chain(t.b()))
        .map(|(x, y)| rational_landen::real::relative_diff(x, y, 1e-30))
        .fold(0.0, f64::max)
}

/// Every point of `{1, 2, 3}^na × {1, 2}^nb`.
pub fn grid(na: usize, nb: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = vec![(vec![], vec![])];
    for _ in 0..na {
        out = out
            .into_iter()
            .flat_map(|(a, b)| {
                (1..=3).map(move |v| {
                    let mut a = a.clone();
                    a.push(v);
                    (a, b.clone())
                })
            })
            .collect();
    }
    for _ in 0..nb {
        out = out
            .into_iter()
            .flat_map(|(a, b)| {
                (1..=2).map(move |v| {
                    let mut b = b.clone();
                    b.push(v);
                    (a.clone(), b)
                })
            })
            .collect();
    }
    out
}
