//! The Landen step as an explicit coefficient map.
//!
//! With `Q(z) = Σ aⱼ z^{2(p−j)}` (`a₀ = a_p = 1`), `P(z) = Σ bⱼ z^{2(p−1−j)}`,
//! and `aⱼ = 0`, `bⱼ = 0` outside their ranges:
//!
//! ```text
//! d_{p+1−j} = Σ_{k=0}^{j} a_{p−k} a_{j−k}              0 ≤ j ≤ p−1
//! d₁        = ½ Σ_{k=0}^{p} a_k²
//! c_j       = Σ_{k=0}^{p−1} b_k a_{p−j+k}               0 ≤ j ≤ 2p−1
//! α(0)      = 1 + Σ_{k=1}^{p} d_k
//! α(i)      = 2^{2i−1} Σ_{k=1}^{p+1−i} ((k+i−1)/i)·C(k+2i−2, k−1)·d_{k+i}
//! ```
//!
//! The new denominator has `2·α(i) / (2^{2i} Q(1)^{2−2i/p})` as its
//! coefficient of `z^{2i}` and the new numerator has
//! `Q(1)^{(2i+1)/p−2} Σ_{k=0}^{p−1−i} (c_k + c_{2p−1−k})·C(p−1−k+i, 2i)` as its
//! coefficient of `z^{2i}`. Then `∫₀^∞ P/Q = ∫₀^∞ P⁺/Q⁺`.

use super::normalize::GUARD_BITS;
use super::state::{binomial, LandenState};
use super::LandenStep;
use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Clone, Debug)]
pub struct LandenStepIntermediates {
    /// `d₁, …, d_{p+1}`.
    pub d: Vec<Real>,
    /// `c₀, …, c_{2p−1}`.
    pub c: Vec<Real>,
    /// `α(0), …, α(p)`.
    pub alpha: Vec<Real>,
    pub q1: Real,
}

pub fn theorem_intermediates(s: &LandenState) -> Result<LandenStepIntermediates> {
    let p = s.p();
    let work = s.precision() + GUARD_BITS;
    let zero = Real::zero(work);
    let a_full: Vec<Real> = s.full_a().iter().map(|x| x.with_precision(work)).collect();
    let b_full: Vec<Real> = s.b().iter().map(|x| x.with_precision(work)).collect();
    let a = |j: i64| if (0..=p as i64).contains(&j) { a_full[j as usize].clone() } else { zero.clone() };
    let b = |j: i64| if (0..p as i64).contains(&j) { b_full[j as usize].clone() } else { zero.clone() };
    let pi = p as i64;

    let mut d = vec![zero.clone(); p + 2];
    for j in 0..pi {
        d[(pi + 1 - j) as usize] = (0..=j).fold(zero.clone(), |acc, k| &acc + &(&a(pi - k) * &a(j - k)));
    }
    let half = Real::from_f64(0.5, work);
    d[1] = &half * &(0..=pi).fold(zero.clone(), |acc, k| &acc + &(&a(k) * &a(k)));

    let c: Vec<Real> =
        (0..2 * pi).map(|j| (0..pi).fold(zero.clone(), |acc, k| &acc + &(&b(k) * &a(pi - j + k)))).collect();

    let mut alpha = vec![(1..=p).fold(Real::one(work), |acc, k| &acc + &d[k])];
    for i in 1..=p {
        let sum = (1..=p + 1 - i).fold(zero.clone(), |acc, k| {
            let weight = Real::from_u64(((k + i - 1) as u64) * binomial(k + 2 * i - 2, k - 1), work)
                / Real::from_u64(i as u64, work);
            &acc + &(&weight * &d[k + i])
        });
        alpha.push(&Real::from_u64(1u64 << (2 * i - 1), work) * &sum);
    }

    let q1 = s.q_at_one().with_precision(work);
    Ok(LandenStepIntermediates { d: d[1..].to_vec(), c, alpha, q1 })
}

/// One Landen step through the closed-form coefficient map.
pub fn step_theorem(s: &LandenState) -> Result<LandenStep> {
    step_theorem_with_intermediates(s).map(|(step, _)| step)
}

pub fn step_theorem_with_intermediates(s: &LandenState) -> Result<(LandenStep, LandenStepIntermediates)> {
    let p = s.p();
    let prec = s.precision();
    let m = theorem_intermediates(s)?;
    if !m.q1.is_positive() {
        return Err(Error::Domain(format!("Q(1) = {} must be positive", m.q1)));
    }
    let work = m.q1.precision();
    let q1_sq = &m.q1 * &m.q1;
    // r = Q(1)^{1/p}; fractional powers become r^k / Q(1)²
    let r = m.q1.nth_root(p as u32);
    let two = Real::from_i64(2, work);
    let a_asc: Vec<Real> = (0..=p)
        .map(|i| &(&two * &m.alpha[i]) * &r.powi(2 * i as u32) / &(&Real::from_u64(1u64 << (2 * i), work) * &q1_sq))
        .collect();
    let b_asc: Vec<Real> = (0..p)
        .map(|i| {
            let sum = (0..p - i).fold(Real::zero(work), |acc, k| {
                let pair = &m.c[k] + &m.c[2 * p - 1 - k];
                &acc + &(&pair * &Real::from_u64(binomial(p - 1 - k + i, 2 * i), work))
            });
            &sum * &r.powi(2 * i as u32 + 1) / &q1_sq
        })
        .collect();
    let a = (1..p).map(|j| a_asc[p - j].with_precision(prec)).collect();
    let b = (0..p).map(|j| b_asc[p - 1 - j].with_precision(prec)).collect();
    let state = LandenState::trusted(a, b)?;
    Ok((LandenStep { state, factor: Real::one(prec) }, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_intermediates() {
        // (z² + 1)³: Q(1) = 8, α(0) = Q(1)²/2
        let s = LandenState::limit(3, &Real::one(128));
        let (_, m) = step_theorem_with_intermediates(&s).unwrap();
        assert_eq!(m.q1.to_f64(), 8.0);
        assert_eq!(m.alpha[0].to_f64(), 32.0);
        assert_eq!(m.d.len(), 4);
        assert_eq!(m.c.len(), 6);
    }

    #[test]
    fn sextic_map() {
        let (a1, a2, b0, b1, b2) = (0.7, 2.5, 1.25, -0.5, 3.0);
        let s = LandenState::from_f64(&[a1, a2], &[b0, b1, b2], 128).unwrap();
        let t = step_theorem(&s).unwrap().state;
        let q: f64 = a1 + a2 + 2.0;
        let expect_a = [(a1 + a2 + 6.0) / q.powf(2.0 / 3.0), (a1 * a2 + 5.0 * a1 + 5.0 * a2 + 9.0) / q.powf(4.0 / 3.0)];
        let expect_b = [
            (b0 + b2) / q.powf(1.0 / 3.0),
            (b0 * (a2 + 3.0) + 2.0 * b1 + b2 * (a1 + 3.0)) / q,
            (b0 + b1 + b2) / q.powf(2.0 / 3.0),
        ];
        for (x, y) in t.a().iter().zip(expect_a).chain(t.b().iter().zip(expect_b)) {
            assert!((x.to_f64() - y).abs() < 1e-14, "{x} vs {y}");
        }
    }

    #[test]
    fn nonpositive_q1_is_a_domain_error() {
        // z⁴ − 2.5z² + 1 has real roots, so build the state without the certificate
        let s = LandenState::trusted(vec![Real::from_f64(-2.5, 128)], vec![Real::one(128); 2]).unwrap();
        assert!(matches!(step_theorem(&s), Err(Error::Domain(_))));
    }
}
