use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ModoError, Result};
use crate::mpoly::{MPoly, Monomial, TermOrder};
use crate::scalar::Ring;
use crate::GaussianRational;

pub(crate) const MU: usize = 0;
pub(crate) const LAMBDA: usize = 1;

/// Polynomial in C[λ, μ] with C = Q(i).
///
/// Terms iterate μ-degree descending, then λ-degree descending; the
/// leading coefficient used for normalization is the one of the first
/// term in that order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly(pub(crate) MPoly<GaussianRational>);

impl BivarPoly {
    pub fn lambda() -> Self {
        BivarPoly(MPoly::var(LAMBDA))
    }

    pub fn mu() -> Self {
        BivarPoly(MPoly::var(MU))
    }

    pub fn constant(c: GaussianRational) -> Self {
        BivarPoly(MPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from(n))
    }

    /// Builds from `((deg_lambda, deg_mu), coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), GaussianRational)>>(it: I) -> Self {
        BivarPoly(MPoly::from_terms(
            it.into_iter()
                .map(|((dl, dm), c)| (Monomial::new(vec![dm, dl]), c)),
        ))
    }

    /// Univariate polynomial in λ from ascending coefficients.
    pub fn from_lambda_coeffs(coeffs: &[GaussianRational]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, c)| ((k as u32, 0), c.clone())))
    }

    /// `((deg_lambda, deg_mu), coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &GaussianRational)> {
        self.0
            .terms()
            .rev()
            .map(|(m, c)| ((m.exp(LAMBDA), m.exp(MU)), c))
    }

    pub fn coeff(&self, deg_lambda: u32, deg_mu: u32) -> GaussianRational {
        self.0.coeff(&Monomial::new(vec![deg_mu, deg_lambda]))
    }

    pub fn degree_lambda(&self) -> u32 {
        self.0.degree_in(LAMBDA)
    }

    pub fn degree_mu(&self) -> u32 {
        self.0.degree_in(MU)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.total_degree()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_constant()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        self.0.as_constant()
    }

    pub fn is_lambda_only(&self) -> bool {
        !self.0.contains_var(MU)
    }

    /// Coefficient of the first term in canonical order.
    pub fn leading_coeff(&self) -> GaussianRational {
        self.0.leading_coeff()
    }

    /// Normalized to leading coefficient one.
    pub fn monic(&self) -> Self {
        BivarPoly(self.0.monic())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        BivarPoly(self.0.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.0.div_exact(&d.0).map(BivarPoly)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Derivative with respect to μ.
    pub fn d_mu(&self) -> Self {
        BivarPoly(self.0.partial(MU))
    }

    /// Derivative with respect to λ.
    pub fn d_lambda(&self) -> Self {
        BivarPoly(self.0.partial(LAMBDA))
    }

    /// Coefficients in μ (index = μ-degree), each a polynomial in λ only.
    pub fn mu_coeffs(&self) -> Vec<BivarPoly> {
        self.0.to_univariate(MU).into_iter().map(BivarPoly).collect()
    }

    pub fn from_mu_coeffs(coeffs: &[BivarPoly]) -> Self {
        let inner: Vec<_> = coeffs.iter().map(|c| c.0.clone()).collect();
        BivarPoly(MPoly::from_univariate(MU, &inner))
    }

    /// Ascending λ-coefficients of a λ-only polynomial.
    pub fn lambda_coeffs(&self) -> Option<Vec<GaussianRational>> {
        if !self.is_lambda_only() {
            return None;
        }
        if self.is_zero() {
            return Some(Vec::new());
        }
        let d = self.degree_lambda();
        Some((0..=d).map(|k| self.coeff(k, 0)).collect())
    }

    /// Gcd of the μ-coefficients: the λ-only content.
    pub fn content_mu(&self) -> Self {
        BivarPoly(self.0.content(MU))
    }

    pub fn eval(&self, lambda0: &GaussianRational, mu0: &GaussianRational) -> GaussianRational {
        let mut v = vec![GaussianRational::zero(); 2];
        v[MU] = mu0.clone();
        v[LAMBDA] = lambda0.clone();
        self.0.eval(&v)
    }

    /// Substitute λ = value, leaving a polynomial in μ.
    pub fn eval_lambda(&self, value: &GaussianRational) -> Self {
        BivarPoly(self.0.eval_var(LAMBDA, value))
    }

    /// Canonical rendering, e.g. `mu^2 + 4*lambda^4`.
    pub fn render(&self) -> String {
        self.0.render(&var_name, TermOrder::Lex)
    }
}

pub(crate) fn var_name(i: usize) -> String {
    match i {
        MU => "mu".to_string(),
        LAMBDA => "lambda".to_string(),
        _ => format!("x{i}"),
    }
}

/// Monic gcd of two bivariate polynomials; fails when both are zero.
pub fn bp_gcd(a: &BivarPoly, b: &BivarPoly) -> Result<BivarPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(ModoError::BothZero);
    }
    Ok(BivarPoly(a.0.gcd(&b.0)))
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({})", self.render())
    }
}

impl PartialOrd for BivarPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Deterministic order: lower total degree first, then termwise in
/// canonical order.
impl Ord for BivarPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.degree_mu().cmp(&other.degree_mu()).reverse())
            .then_with(|| {
                let a: Vec<_> = self.terms().collect();
                let b: Vec<_> = other.terms().collect();
                a.cmp(&b)
            })
    }
}

impl Zero for BivarPoly {
    fn zero() -> Self {
        BivarPoly(MPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BivarPoly {
    fn one() -> Self {
        BivarPoly(MPoly::one())
    }
}

impl Neg for BivarPoly {
    type Output = Self;
    fn neg(self) -> Self {
        BivarPoly(-self.0)
    }
}

impl Add for BivarPoly {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        BivarPoly(self.0 + o.0)
    }
}

impl Sub for BivarPoly {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        BivarPoly(self.0 - o.0)
    }
}

impl Mul for BivarPoly {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        BivarPoly(&self.0 * &o.0)
    }
}

impl Ring for BivarPoly {
    fn from_bigint(n: &BigInt) -> Self {
        BivarPoly(MPoly::from_bigint(n))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }
    fn lam() -> BivarPoly {
        BivarPoly::lambda()
    }
    fn mu() -> BivarPoly {
        BivarPoly::mu()
    }
    fn k(c: GaussianRational) -> BivarPoly {
        BivarPoly::constant(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!((lam() + mu()) + (lam() - mu()), k(g(2, 0)) * lam());
        let h1 = mu() - k(g(0, 2)) * lam().pow(2);
        let h2 = mu() + k(g(0, 2)) * lam().pow(2);
        let f = h1 * h2;
        assert_eq!(f, mu().pow(2) + k(g(4, 0)) * lam().pow(4));
        assert_eq!(f.render(), "mu^2 + 4*lambda^4");
        assert!((BivarPoly::zero() * f).is_zero());
    }

    #[test]
    fn canonical_rendering() {
        let h1 = mu() - k(g(0, 2)) * lam().pow(2);
        assert_eq!(h1.render(), "mu - 2*i*lambda^2");
        let p = k(g(-1, 0)) * mu() * lam() + k(g(1, 1)) + lam().pow(3);
        assert_eq!(p.render(), "-mu*lambda + lambda^3 + (1+i)");
        assert_eq!(BivarPoly::zero().render(), "0");
    }

    #[test]
    fn gcd_examples() {
        let f = mu().pow(2) + k(g(4, 0)) * lam().pow(4);
        assert_eq!(bp_gcd(&f, &(k(g(2, 0)) * mu())).unwrap(), BivarPoly::one());
        let h = mu() - k(g(0, 2)) * lam().pow(2);
        let gg = mu() + k(g(0, 2)) * lam().pow(2);
        assert_eq!(bp_gcd(&h.pow(2), &(h.clone() * gg)).unwrap(), h);
        let p = k(g(3, 0)) * mu() + lam();
        assert_eq!(bp_gcd(&p, &BivarPoly::zero()).unwrap(), p.scale(&g(3, 0).inv_ref()));
        assert!(bp_gcd(&BivarPoly::zero(), &BivarPoly::zero()).is_err());
    }

    /// Every monic monomial `λ^a μ^b` with `a <= deg_λ, b <= deg_μ` that
    /// divides both, and no larger common divisor among them.
    #[test]
    fn gcd_against_monomial_trial_division() {
        let f = mu().pow(2) + k(g(4, 0)) * lam().pow(4);
        let other = k(g(2, 0)) * mu();
        let mut best = BivarPoly::one();
        for a in 0..=4u32 {
            for b in 0..=2u32 {
                let cand = lam().pow(a) * mu().pow(b);
                if cand.divides(&f) && cand.divides(&other) && cand.total_degree() > best.total_degree() {
                    best = cand;
                }
            }
        }
        assert_eq!(best, BivarPoly::one());
        assert_eq!(bp_gcd(&f, &other).unwrap(), best);
    }

    trait InvRef {
        fn inv_ref(&self) -> GaussianRational;
    }
    impl InvRef for GaussianRational {
        fn inv_ref(&self) -> GaussianRational {
            crate::scalar::Field::inv(self).unwrap()
        }
    }
}
