//! Exact real-root counting for polynomials with rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Sturm chain of the square-free part of a real polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Vec<BigRational>>,
}

fn eval(c: &[BigRational], x: &BigRational) -> BigRational {
    c.iter().rev().fold(BigRational::zero(), |acc, a| acc * x + a)
}

/// Cauchy bound `1 + max|cᵢ| / |lead|`: every root has modulus below it.
pub fn cauchy_bound(p: &Polynomial) -> Result<BigRational> {
    let c = p.real_coeffs()?;
    let lead = c.last().ok_or_else(|| Error::Domain("zero polynomial has no root bound".into()))?;
    let max = c[..c.len() - 1].iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero);
    Ok(BigRational::one() + max / lead.abs())
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::Domain("Sturm sequence of the zero polynomial".into()));
        }
        if !p.is_real() {
            return Err(Error::Domain("Sturm sequence needs real coefficients".into()));
        }
        let g = p.gcd(&p.derivative());
        let square_free = p.exact_div(&g)?;
        let mut chain = vec![square_free.clone(), square_free.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divmod(&chain[n - 1])?;
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        let chain = chain.iter().map(|q| q.real_coeffs()).collect::<Result<_>>()?;
        Ok(Self { chain })
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|c| {
                let v = eval(c, x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }

    /// Disjoint intervals `(lo, hi]` of width at most `width`, one per root in `(a, b]`.
    pub fn isolate_roots(
        &self,
        a: &BigRational,
        b: &BigRational,
        width: &BigRational,
    ) -> Vec<(BigRational, BigRational)> {
        let mut out = Vec::new();
        let mut stack = vec![(a.clone(), b.clone())];
        let two = BigRational::from_integer(BigInt::from(2));
        while let Some((lo, hi)) = stack.pop() {
            let n = self.count_roots(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 && &(&hi - &lo) <= width {
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / &two;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    #[test]
    fn counts_distinct_roots() {
        // (z² − 1)(z² − 4) has roots ±1, ±2
        let p = Polynomial::from_ints(&[4, 0, -5, 0, 1]);
        let s = SturmSequence::new(&p).unwrap();
        assert_eq!(s.count_roots(&q("0"), &q("3")), 2);
        assert_eq!(s.count_roots(&q("-3"), &q("3")), 4);
        assert_eq!(s.count_roots(&q("3/2"), &q("3")), 1);
    }

    #[test]
    fn double_roots_are_seen() {
        // (z² − 1)² does not change sign, yet has roots at ±1
        let p = Polynomial::from_ints(&[1, 0, -2, 0, 1]);
        let s = SturmSequence::new(&p).unwrap();
        assert_eq!(s.count_roots(&q("0"), &q("2")), 1);
    }

    #[test]
    fn isolates_roots() {
        let p = Polynomial::from_ints(&[4, 0, -5, 0, 1]);
        let s = SturmSequence::new(&p).unwrap();
        let roots = s.isolate_roots(&q("0"), &q("3"), &q("1/1000"));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].0 < q("1") && q("1") <= roots[0].1);
        assert!(roots[1].0 < q("2") && q("2") <= roots[1].1);
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        let p = Polynomial::from_ints(&[4, 0, -5, 0, 1]);
        assert_eq!(cauchy_bound(&p).unwrap(), q("6"));
    }
}
