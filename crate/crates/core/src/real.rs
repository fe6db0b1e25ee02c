//! Configurable-precision real numbers.
//!
//! [`Real`] wraps an [`astro_float::BigFloat`] and carries its own precision.
//! Binary operations run at the larger precision of the two operands, so a
//! computation seeded at 128 bits stays at 128 bits without threading a
//! context through every call. Transcendental functions share a per-thread
//! constants cache.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint, Sign as IntSign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = Word::BITS as usize;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// A real number with a fixed binary precision.
#[derive(Clone)]
pub struct Real {
    value: BigFloat,
    prec: usize,
}

impl Real {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        Self { value, prec }
    }

    pub fn zero(prec: usize) -> Self {
        Self::wrap(BigFloat::from_word(0, prec), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_i64(n, prec), prec)
    }

    pub fn from_u64(n: u64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_u64(n, prec), prec)
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_f64(x, prec), prec)
    }

    /// Exact conversion of an integer, rounded once to `prec` bits.
    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        let (sign, mag) = n.clone().into_parts();
        if mag.is_zero() {
            return Self::zero(prec);
        }
        let exact = bigfloat_from_biguint(&mag);
        let mut value = if sign == IntSign::Minus { exact.neg() } else { exact };
        // Rounds to the target precision; a no-op when it already fits.
        let _ = value.set_precision(prec, RM);
        Self::wrap(value, prec)
    }

    /// Nearest `prec`-bit value to an exact rational.
    pub fn from_rational(q: &BigRational, prec: usize) -> Self {
        if q.denom() == &BigInt::from(1) {
            return Self::from_bigint(q.numer(), prec);
        }
        let (sn, mn) = q.numer().clone().into_parts();
        if mn.is_zero() {
            return Self::zero(prec);
        }
        let (_, md) = q.denom().clone().into_parts();
        let n = bigfloat_from_biguint(&mn);
        let d = bigfloat_from_biguint(&md);
        let mut value = n.div(&d, prec, RM);
        if sn == IntSign::Minus {
            value.inv_sign();
        }
        Self::wrap(value, prec)
    }

    /// The exact dyadic rational this value represents, or `None` for NaN/inf.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.value.is_zero() {
            return Some(BigRational::zero());
        }
        let (words, _, sign, exp, _) = self.value.as_raw_parts()?;
        let mantissa = biguint_from_words(words);
        let shift = exp as i64 - (words.len() * WORD_BITS) as i64;
        let mut q = BigRational::from_integer(BigInt::from(mantissa));
        let two = BigInt::from(2);
        if shift >= 0 {
            q *= BigRational::from_integer(num_traits::pow(two, shift as usize));
        } else {
            q /= BigRational::from_integer(num_traits::pow(two, (-shift) as usize));
        }
        if sign == Sign::Neg {
            q = -q;
        }
        Some(q)
    }

    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.value.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if self.value.is_zero() {
            return 0.0;
        }
        let (words, _, sign, exp, _) = self.value.as_raw_parts().expect("finite value");
        let top = *words.last().expect("nonempty mantissa") as f64;
        let magnitude = top * 2f64.powi(exp - WORD_BITS as i32);
        if sign == Sign::Neg {
            -magnitude
        } else {
            magnitude
        }
    }

    pub fn pi(prec: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(prec, RM)), prec)
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(s: &str, prec: usize) -> Option<Self> {
        let value = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, prec, RM, cc));
        (!value.is_nan()).then(|| Self::wrap(value, prec))
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Rounds (or widens) to a new precision.
    pub fn with_precision(&self, prec: usize) -> Self {
        let mut value = self.value.clone();
        let _ = value.set_precision(prec, RM);
        Self::wrap(value, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.value.is_nan() || self.value.is_inf())
    }

    pub fn is_positive(&self) -> bool {
        !self.value.is_zero() && self.value.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        !self.value.is_zero() && self.value.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.prec, RM), self.prec)
    }

    pub fn ln(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.ln(self.prec, RM, cc)), self.prec)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.exp(self.prec, RM, cc)), self.prec)
    }

    pub fn sin(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.sin(self.prec, RM, cc)), self.prec)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.cos(self.prec, RM, cc)), self.prec)
    }

    pub fn tan(&self) -> Self {
        Self::wrap(with_consts(|cc| self.value.tan(self.prec, RM, cc)), self.prec)
    }

    pub fn powi(&self, n: u32) -> Self {
        Self::wrap(self.value.powi(n as usize, self.prec, RM), self.prec)
    }

    /// Real power `self^e` for positive `self`.
    pub fn powf(&self, e: &Real) -> Self {
        let prec = self.prec.max(e.prec);
        Self::wrap(with_consts(|cc| self.value.pow(&e.value, prec, RM, cc)), prec)
    }

    /// Positive `n`-th root of a positive number, polished by one Newton step.
    pub fn nth_root(&self, n: u32) -> Self {
        assert!(n > 0, "zeroth root");
        if n == 1 || self.is_zero() {
            return self.clone();
        }
        if n == 2 {
            return self.sqrt();
        }
        let guess = (self.ln() / Real::from_u64(n as u64, self.prec)).exp();
        // x <- x - (x^n - a) / (n x^(n-1))
        let nr = Real::from_u64(n as u64, self.prec);
        let xn1 = guess.powi(n - 1);
        &guess - &((&(&xn1 * &guess) - self) / (&nr * &xn1))
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Decimal rendering with the full precision of the value.
    pub fn to_decimal_string(&self) -> String {
        if self.value.is_zero() {
            return "0".to_string();
        }
        with_consts(|cc| self.value.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }

    /// Short rendering with `digits` significant decimal digits.
    pub fn to_sci(&self, digits: usize) -> String {
        let digits = digits.max(1);
        let q = match self.to_rational() {
            Some(q) if !q.is_zero() && digits > 15 => q,
            _ => return format!("{:.*e}", digits - 1, self.to_f64()),
        };
        let ten = BigRational::from_integer(BigInt::from(10));
        let magnitude = q.abs();
        // estimate the decimal exponent, then correct it by at most one
        let mut e10 = self.abs().to_f64().log10().floor() as i64;
        let scaled = |e: i64| {
            let shift = digits as i64 - 1 - e;
            let factor = num_traits::pow(ten.clone(), shift.unsigned_abs() as usize);
            let m = if shift >= 0 { &magnitude * &factor } else { &magnitude / &factor };
            m.round().to_integer()
        };
        let limit = num_traits::pow(BigInt::from(10), digits);
        let mut m = scaled(e10);
        if m >= limit {
            e10 += 1;
            m = scaled(e10);
        } else if m < &limit / BigInt::from(10) {
            e10 -= 1;
            m = scaled(e10);
        }
        let text = m.to_string();
        let sign = if q.is_negative() { "-" } else { "" };
        let (lead, rest) = text.split_at(1);
        if rest.is_empty() {
            format!("{sign}{lead}e{e10}")
        } else {
            format!("{sign}{lead}.{rest}e{e10}")
        }
    }
}

fn bigfloat_from_biguint(n: &BigUint) -> BigFloat {
    let mut words: Vec<Word> = n.to_u64_digits().into_iter().map(|d| d as Word).collect();
    let bits = n.bits() as usize;
    // Left-align so the most significant bit of the top word is set.
    let pad = words.len() * WORD_BITS - bits;
    if pad > 0 {
        let mut carry: Word = 0;
        for w in words.iter_mut() {
            let next = *w >> (WORD_BITS - pad);
            *w = (*w << pad) | carry;
            carry = next;
        }
    }
    BigFloat::from_words(&words, Sign::Pos, bits as i32)
}

fn biguint_from_words(words: &[Word]) -> BigUint {
    let digits: Vec<u64> = words.to_vec();
    let mut out = BigUint::zero();
    for d in digits.iter().rev() {
        out = (out << 64u32) + BigUint::from(*d);
    }
    out
}

macro_rules! binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a> $trait<&'a Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: &'a Real) -> Real {
                let prec = self.prec.max(rhs.prec);
                Real::wrap(self.value.$inner(&rhs.value, prec, RM), prec)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &'a Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Real> for &'a Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl AddAssign<&Real> for Real {
    fn add_assign(&mut self, rhs: &Real) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Real> for Real {
    fn sub_assign(&mut self, rhs: &Real) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Real> for Real {
    fn mul_assign(&mut self, rhs: &Real) {
        *self = &*self * rhs;
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.value), self.prec)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.value), self.prec)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({}, {} bits)", self.to_decimal_string(), self.prec)
    }
}

/// Relative distance `|x - y| / max(|x|, |y|, floor)`.
pub fn relative_diff(x: &Real, y: &Real, floor: f64) -> f64 {
    let prec = x.precision().max(y.precision());
    let scale = x.abs().max(y.abs()).max(Real::from_f64(floor, prec));
    ((x - y).abs() / scale).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_scientific_rendering() {
        let third = &Real::one(256) / &Real::from_i64(3, 256);
        assert_eq!(third.to_sci(30), "3.33333333333333333333333333333e-1");
        let x = Real::from_i64(-99999, 256);
        assert_eq!(x.to_sci(20), "-9.9999000000000000000e4");
        let pi = Real::pi(256);
        assert_eq!(pi.to_sci(40), "3.141592653589793238462643383279502884197e0");
        assert_eq!(Real::from_f64(0.5, 64).to_sci(3), "5.00e-1");
    }

    const P: usize = DEFAULT_PRECISION;

    #[test]
    fn rational_round_trip_is_exact_for_dyadics() {
        for s in ["3/8", "-5/1024", "123456789012345678901234567890", "0"] {
            let q: BigRational = s.parse().unwrap();
            let r = Real::from_rational(&q, P);
            assert_eq!(r.to_rational().unwrap(), q, "{s}");
        }
    }

    #[test]
    fn from_rational_rounds_to_nearest() {
        let q: BigRational = "1/3".parse().unwrap();
        let r = Real::from_rational(&q, P);
        let err = (r.to_rational().unwrap() - &q).abs() / &q;
        let bound = BigRational::new(1.into(), num_traits::pow(BigInt::from(2), P - 1));
        assert!(err <= bound);
    }

    #[test]
    fn to_f64_matches_simple_values() {
        assert_eq!(Real::from_f64(0.375, P).to_f64(), 0.375);
        assert_eq!(Real::from_i64(-7, P).to_f64(), -7.0);
        assert!((Real::pi(P).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn nth_root_inverts_power() {
        let x = Real::from_f64(7.25, P);
        for n in 1..9u32 {
            let back = x.nth_root(n).powi(n);
            assert!(relative_diff(&back, &x, 1.0) < 1e-36, "n = {n}");
        }
    }

    #[test]
    fn precision_is_max_of_operands() {
        let a = Real::from_i64(1, 64);
        let b = Real::from_i64(3, 192);
        assert_eq!((&a / &b).precision(), 192);
    }

    #[test]
    fn parse_decimal() {
        let x = Real::parse("1e-30", P).unwrap();
        assert!((x.to_f64() - 1e-30).abs() < 1e-45);
        assert!(Real::parse("abc", P).is_none());
    }
}
