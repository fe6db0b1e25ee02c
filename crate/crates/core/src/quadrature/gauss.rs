//! Gauss–Legendre nodes at arbitrary precision and the panel cache on `[0, π/2]`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::real::Real;

/// Points per panel.
pub(crate) const ORDER: usize = 20;

/// Nodes `xᵢ ∈ (−1, 1)` and weights `wᵢ` of the `n`-point rule.
pub(crate) fn legendre_rule(n: usize, prec: usize) -> Vec<(Real, Real)> {
    let work = prec + 32;
    let one = Real::one(work);
    let two = Real::from_i64(2, work);
    let tiny = Real::from_i64(2, work).powf(&Real::from_i64(8 - work as i64, work));
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Real::from_f64(guess, work);
        let mut dp = one.clone();
        for _ in 0..200 {
            let (p, p_prev) = legendre(n, &x);
            let denom = &(&x * &x) - &one;
            dp = &Real::from_u64(n as u64, work) * &(&(&x * &p) - &p_prev) / denom;
            let dx = &p / &dp;
            x = &x - &dx;
            if dx.abs() < tiny {
                let (p, p_prev) = legendre(n, &x);
                let denom = &(&x * &x) - &one;
                dp = &Real::from_u64(n as u64, work) * &(&(&x * &p) - &p_prev) / denom;
                break;
            }
        }
        let w = &two / &(&(&one - &(&x * &x)) * &(&dp * &dp));
        out.push((x.with_precision(prec), w.with_precision(prec)));
    }
    out
}

/// `(P_n(x), P_{n−1}(x))` by the three-term recurrence.
fn legendre(n: usize, x: &Real) -> (Real, Real) {
    let prec = x.precision();
    let mut prev = Real::one(prec);
    let mut cur = x.clone();
    for k in 1..n {
        let kk = Real::from_u64(k as u64, prec);
        let next = &(&(&Real::from_u64(2 * k as u64 + 1, prec) * x) * &cur) - &(&kk * &prev);
        prev = cur;
        cur = next / Real::from_u64(k as u64 + 1, prec);
    }
    (cur, prev)
}

/// A quadrature node on `[0, π/2]` with `sin θ`, `cos θ` and the scaled weight.
pub(crate) struct Node {
    pub sin: Real,
    pub cos: Real,
    pub weight: Real,
}

type PanelKey = (usize, u32, u64);
type Rule = Rc<Vec<(Real, Real)>>;

thread_local! {
    static RULES: RefCell<HashMap<usize, Rule>> = RefCell::new(HashMap::new());
    static PANELS: RefCell<HashMap<PanelKey, Rc<Vec<Node>>>> = RefCell::new(HashMap::new());
}

fn rule(prec: usize) -> Rule {
    RULES.with(|r| r.borrow_mut().entry(prec).or_insert_with(|| Rc::new(legendre_rule(ORDER, prec))).clone())
}

/// Nodes of panel `index` among the `2^depth` equal panels of `[0, π/2]`.
pub(crate) fn panel(prec: usize, depth: u32, index: u64) -> Rc<Vec<Node>> {
    let key = (prec, depth, index);
    if let Some(hit) = PANELS.with(|p| p.borrow().get(&key).cloned()) {
        return hit;
    }
    let work = prec + 16;
    let width = &Real::pi(work) / &Real::from_u64(1u64 << (depth + 1), work);
    let half = &width / &Real::from_i64(2, work);
    let mid = &(&width * &Real::from_u64(index, work)) + &half;
    let nodes: Vec<Node> = rule(work)
        .iter()
        .map(|(x, w)| {
            let theta = &mid + &(&half * x);
            Node {
                sin: theta.sin().with_precision(prec),
                cos: theta.cos().with_precision(prec),
                weight: (&half * w).with_precision(prec),
            }
        })
        .collect();
    let nodes = Rc::new(nodes);
    PANELS.with(|p| p.borrow_mut().insert(key, nodes.clone()));
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let r = legendre_rule(6, 128);
        // ∫_{−1}^{1} x¹⁰ dx = 2/11
        let s = r.iter().fold(Real::zero(128), |acc, (x, w)| &acc + &(w * &x.powi(10)));
        assert!((s.to_f64() - 2.0 / 11.0).abs() < 1e-15);
        let total = r.iter().fold(Real::zero(128), |acc, (_, w)| &acc + w);
        assert!((total.to_f64() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn panels_cover_the_quarter_period() {
        let total = (0..4).fold(Real::zero(128), |acc, i| panel(128, 2, i).iter().fold(acc, |a, n| &a + &n.weight));
        assert!((total.to_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }
}
