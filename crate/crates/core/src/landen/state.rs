use crate::error::{Error, Result};
use crate::exactpoly::Polynomial;
use crate::quadrature::{certify_polynomial, integrate_halfline, QuadratureResult, RootCertificate};
use crate::real::Real;

/// `C(n, k)` as an exact integer.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// The normalized integrand
///
/// ```text
///        b₀ z^{2p−2} + b₁ z^{2p−4} + … + b_{p−1}
///   ─────────────────────────────────────────────── dz
///    z^{2p} + a₁ z^{2p−2} + … + a_{p−1} z² + 1
/// ```
///
/// on `[0, ∞)`. A state built through [`LandenState::new`] has a certified
/// denominator with no real zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LandenState {
    a: Vec<Real>,
    b: Vec<Real>,
}

impl LandenState {
    /// `a = [a₁, …, a_{p−1}]`, `b = [b₀, …, b_{p−1}]`.
    pub fn new(a: Vec<Real>, b: Vec<Real>) -> Result<Self> {
        let s = Self::trusted(a, b)?;
        match s.certificate() {
            RootCertificate::CertifiedPositive => Ok(s),
            RootCertificate::CertifiedRoot(roots) => Err(Error::RealRoot(format!(
                "denominator {} vanishes at {} real point(s), near z = ±{}",
                s.describe_denominator(),
                roots.len(),
                roots[0].1.sqrt().to_sci(10)
            ))),
            RootCertificate::Inconclusive(why) => {
                Err(Error::Domain(format!("cannot certify the denominator {}: {why}", s.describe_denominator())))
            }
        }
    }

    /// Shape checks only; used for images of certified states, which stay certified.
    pub(crate) fn trusted(a: Vec<Real>, b: Vec<Real>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::Domain("a Landen state needs p ≥ 1 numerator coefficients".into()));
        }
        if a.len() + 1 != b.len() {
            return Err(Error::Domain(format!(
                "p = {} needs {} denominator coefficients, got {}",
                b.len(),
                b.len() - 1,
                a.len()
            )));
        }
        if a.iter().chain(&b).any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite coefficient".into()));
        }
        let prec = a.iter().chain(&b).map(Real::precision).max().unwrap();
        let widen = |v: Vec<Real>| v.into_iter().map(|x| x.with_precision(prec)).collect();
        Ok(Self { a: widen(a), b: widen(b) })
    }

    pub fn from_f64(a: &[f64], b: &[f64], prec: usize) -> Result<Self> {
        let r = |v: &[f64]| v.iter().map(|&x| Real::from_f64(x, prec)).collect();
        Self::new(r(a), r(b))
    }

    /// `aᵢ = C(p, i)`, `bᵢ = C(p−1, i)·L`: the integrand `L/(z² + 1)`.
    pub fn limit(p: usize, l: &Real) -> Self {
        assert!(p >= 1, "p ≥ 1");
        let prec = l.precision();
        let a = (1..p).map(|i| Real::from_u64(binomial(p, i), prec)).collect();
        let b = (0..p).map(|i| l * &Real::from_u64(binomial(p - 1, i), prec)).collect();
        Self { a, b }
    }

    pub fn p(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[Real] {
        &self.a
    }

    pub fn b(&self) -> &[Real] {
        &self.b
    }

    pub fn precision(&self) -> usize {
        self.b[0].precision()
    }

    /// `[a₀, a₁, …, a_p]` with `a₀ = a_p = 1`.
    pub fn full_a(&self) -> Vec<Real> {
        let one = Real::one(self.precision());
        let mut v = vec![one.clone()];
        v.extend(self.a.iter().cloned());
        v.push(one);
        v
    }

    /// Ascending coefficients of the denominator in `z`.
    pub fn denominator_coeffs(&self) -> Vec<Real> {
        let p = self.p();
        let mut c = vec![Real::zero(self.precision()); 2 * p + 1];
        for (j, a) in self.full_a().into_iter().enumerate() {
            c[2 * (p - j)] = a;
        }
        c
    }

    /// Ascending coefficients of the numerator in `z`.
    pub fn numerator_coeffs(&self) -> Vec<Real> {
        let p = self.p();
        let mut c = vec![Real::zero(self.precision()); 2 * p - 1];
        for (j, b) in self.b.iter().enumerate() {
            c[2 * (p - 1 - j)] = b.clone();
        }
        c
    }

    fn exact(coeffs: &[Real]) -> Polynomial {
        crate::quadrature::exact_polynomial(coeffs).expect("finite coefficients")
    }

    /// Numerator as an exact polynomial (every coefficient is a dyadic rational).
    pub fn exact_numerator(&self) -> Polynomial {
        Self::exact(&self.numerator_coeffs())
    }

    pub fn exact_denominator(&self) -> Polynomial {
        Self::exact(&self.denominator_coeffs())
    }

    /// Positivity of the denominator on `[0, ∞)`, decided on `x = z²`.
    pub fn certificate(&self) -> RootCertificate {
        let deflated: Vec<Real> = self.full_a().into_iter().rev().collect();
        match certify_polynomial(&Self::exact(&deflated)) {
            Ok(c) => c,
            Err(e) => RootCertificate::Inconclusive(e.to_string()),
        }
    }

    /// `Q(1) = Σ aⱼ`.
    pub fn q_at_one(&self) -> Real {
        self.full_a().iter().fold(Real::zero(self.precision()), |acc, a| &acc + a)
    }

    /// `max |aᵢ − C(p, i)|`; zero when `p = 1`.
    pub fn residual(&self) -> Real {
        let p = self.p();
        let prec = self.precision();
        self.a
            .iter()
            .enumerate()
            .map(|(k, a)| (a - &Real::from_u64(binomial(p, k + 1), prec)).abs())
            .fold(Real::zero(prec), Real::max)
    }

    /// `bᵢ / C(p−1, i)`; all equal to `L` at the limit.
    pub fn rescaled_b(&self) -> Vec<Real> {
        let p = self.p();
        let prec = self.precision();
        self.b.iter().enumerate().map(|(i, b)| b / &Real::from_u64(binomial(p - 1, i), prec)).collect()
    }

    /// `max − min` of [`rescaled_b`](Self::rescaled_b).
    pub fn b_spread(&self) -> Real {
        let r = self.rescaled_b();
        let max = r.iter().cloned().reduce(Real::max).unwrap();
        let min = r.iter().cloned().reduce(Real::min).unwrap();
        &max - &min
    }

    /// Image under `z ↦ 1/z`, which reverses both coefficient lists and keeps the integral.
    pub fn reciprocal(&self) -> Self {
        Self { a: self.a.iter().rev().cloned().collect(), b: self.b.iter().rev().cloned().collect() }
    }

    /// `∫₀^∞` of the integrand, by quadrature.
    pub fn integrate(&self, tol: f64) -> Result<QuadratureResult> {
        integrate_halfline(&self.numerator_coeffs(), &self.denominator_coeffs(), tol)
    }

    fn describe_denominator(&self) -> String {
        let a: Vec<String> = self.a.iter().map(|x| x.to_sci(6)).collect();
        format!("with a = [{}]", a.join(", "))
    }
}
