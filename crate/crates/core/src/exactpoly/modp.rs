//! Reduction of Q(i) polynomials modulo a prime `p ≡ 1 (mod 4)`, where `i`
//! maps to a square root of −1. Used to detect coprime pairs cheaply.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::poly::Polynomial;
use super::scalar::ExactScalar;

const P: u64 = 998_244_353;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

fn sqrt_minus_one() -> u64 {
    // 3 generates the multiplicative group
    pow_mod(3, (P - 1) / 4)
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced residue")
}

fn rational_mod(q: &num_rational::BigRational) -> Option<u64> {
    let d = int_mod(q.denom());
    if d == 0 {
        return None;
    }
    Some(int_mod(q.numer()) * inv_mod(d) % P)
}

fn scalar_mod(c: &ExactScalar, j: u64) -> Option<u64> {
    let re = rational_mod(&c.re)?;
    let im = rational_mod(&c.im)?;
    Some((re + im * j) % P)
}

/// Image in F_p[x], ascending. `None` if a denominator vanishes or the
/// degree drops.
fn reduce(p: &Polynomial, j: u64) -> Option<Vec<u64>> {
    let v: Vec<u64> = p.coeffs().iter().map(|c| scalar_mod(c, j)).collect::<Option<_>>()?;
    if v.last().is_some_and(|&c| c == 0) {
        return None;
    }
    Some(v)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem(mut a: Vec<u64>, b: &[u64]) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db]);
    while a.len() > db {
        let top = a.len() - 1;
        let q = a[top] * lead_inv % P;
        if q != 0 {
            for (k, &bk) in b.iter().enumerate() {
                let idx = top - db + k;
                a[idx] = (a[idx] + P - q * bk % P) % P;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// True when the pair is certainly coprime over Q(i). A `false` answer is
/// inconclusive.
pub(crate) fn certainly_coprime(a: &Polynomial, b: &Polynomial) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let j = sqrt_minus_one();
    let (Some(mut x), Some(mut y)) = (reduce(a, j), reduce(b, j)) else {
        return false;
    };
    while !y.is_empty() {
        let r = rem(x, &y);
        x = y;
        y = r;
    }
    debug_assert!(!x.is_empty());
    x.len() == 1 && !x[0].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_minus_one() {
        let j = sqrt_minus_one();
        assert_eq!(j * j % P, P - 1);
    }

    #[test]
    fn detects_coprime_and_shared_factor() {
        let a = Polynomial::from_ints(&[-1, 0, 1]);
        let b = Polynomial::from_ints(&[2, 1]);
        assert!(certainly_coprime(&a, &b));
        let c = Polynomial::from_ints(&[1, 1]);
        assert!(!certainly_coprime(&a, &c));
        // z² + 1 and z − i share a factor only over Q(i)
        let d = Polynomial::new(vec![-&ExactScalar::i(), ExactScalar::one()]);
        assert!(!certainly_coprime(&Polynomial::from_ints(&[1, 0, 1]), &d));
    }
}
