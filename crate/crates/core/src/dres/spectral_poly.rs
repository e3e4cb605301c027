use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diff_field::DiffField;
use crate::frac::Frac;
use crate::parser::render::{coeff_times, join_signed};
use crate::polyring::BivarPoly;
use crate::scalar::{Coeff, Derivation, Field, Ring};
use crate::GaussianRational;

/// Polynomial in λ, μ with coefficients in K. λ and μ are constants for
/// the derivation, which acts coefficientwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpectralPoly<C = GaussianRational> {
    // keyed (deg_mu, deg_lambda) so the last entry leads in μ-first lex
    terms: BTreeMap<(u32, u32), Frac<C>>,
}

impl<C: Coeff> SpectralPoly<C> {
    pub fn lambda() -> Self {
        Self::monomial(1, 0, Frac::one())
    }

    pub fn mu() -> Self {
        Self::monomial(0, 1, Frac::one())
    }

    pub fn constant(c: Frac<C>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(deg_lambda: u32, deg_mu: u32, c: Frac<C>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_mu, deg_lambda), c);
        }
        SpectralPoly { terms }
    }

    /// From `((deg_lambda, deg_mu), coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Frac<C>)>>(it: I) -> Self {
        let mut p = Self::zero();
        for ((dl, dm), c) in it {
            p.add_term((dm, dl), c);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: Frac<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `((deg_lambda, deg_mu), coefficient)`, μ-degree descending then
    /// λ-degree descending.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Frac<C>)> {
        self.terms.iter().rev().map(|(&(dm, dl), c)| ((dl, dm), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_lambda: u32, deg_mu: u32) -> Frac<C> {
        self.terms.get(&(deg_mu, deg_lambda)).cloned().unwrap_or_else(Frac::zero)
    }

    pub fn degree_mu(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_lambda(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Frac<C>) -> Frac<C>) -> Self {
        let mut p = Self::zero();
        for (k, c) in &self.terms {
            p.add_term(*k, f(c));
        }
        p
    }

    pub fn scale(&self, c: &Frac<C>) -> Self {
        self.map_coeffs(|a| a.clone() * c.clone())
    }

    /// Substitute λ = λ₀, μ = μ₀.
    pub fn eval(&self, lambda0: &Frac<C>, mu0: &Frac<C>) -> Frac<C> {
        let mut acc = Frac::zero();
        for (&(dm, dl), c) in &self.terms {
            acc = acc + c.clone() * lambda0.pow(dl) * mu0.pow(dm);
        }
        acc
    }

    /// Every coefficient has zero derivative.
    pub fn is_constant_for(&self, field: &DiffField<C>) -> bool {
        self.terms.values().all(|c| field.derive(c).is_zero())
    }

    pub fn render(&self, field: &DiffField<C>) -> String {
        join_signed(self.terms().map(|((dl, dm), c)| coeff_times(c, &monomial_string(dl, dm), field)))
    }
}

fn monomial_string(dl: u32, dm: u32) -> String {
    let p = |name: &str, e: u32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    match (dm, dl) {
        (0, 0) => String::new(),
        (0, _) => p("lambda", dl),
        (_, 0) => p("mu", dm),
        _ => format!("{}*{}", p("mu", dm), p("lambda", dl)),
    }
}

impl SpectralPoly<GaussianRational> {
    /// Coerce to C[λ, μ] when every coefficient lies in Q(i).
    pub fn to_bivar(&self) -> Option<BivarPoly> {
        let mut terms = Vec::new();
        for ((dl, dm), c) in self.terms() {
            terms.push(((dl, dm), c.as_constant()?));
        }
        Some(BivarPoly::from_terms(terms))
    }

    pub fn from_bivar(p: &BivarPoly) -> Self {
        Self::from_terms(p.terms().map(|(k, c)| (k, Frac::constant(c.clone()))))
    }
}

impl<C: Coeff> From<Frac<C>> for SpectralPoly<C> {
    fn from(c: Frac<C>) -> Self {
        Self::constant(c)
    }
}

impl<C: Coeff> Zero for SpectralPoly<C> {
    fn zero() -> Self {
        SpectralPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for SpectralPoly<C> {
    fn one() -> Self {
        Self::constant(Frac::one())
    }
}

impl<C: Coeff> Neg for SpectralPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        SpectralPoly { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<C: Coeff> Add for SpectralPoly<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (k, c) in o.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<C: Coeff> Sub for SpectralPoly<C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<C: Coeff> Mul for SpectralPoly<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut p = Self::zero();
        for (&(am, al), a) in &self.terms {
            for (&(bm, bl), b) in &o.terms {
                p.add_term((am + bm, al + bl), a.clone() * b.clone());
            }
        }
        p
    }
}

impl<C: Coeff> Ring for SpectralPoly<C> {
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(Frac::from_bigint(n))
    }

    /// Division by leading terms in μ-first lex order; exact or `None`.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (&(dm, dl), dc) = d.terms.iter().next_back()?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((&(rm, rl), rc)) = rem.terms.iter().next_back() {
            if rm < dm || rl < dl {
                return None;
            }
            let t = Self::monomial(rl - dl, rm - dm, rc.clone() * dinv.clone());
            rem = rem - t.clone() * d.clone();
            q = q + t;
        }
        Some(q)
    }
}

impl<C: Coeff> Derivation<SpectralPoly<C>> for DiffField<C> {
    fn derive(&self, a: &SpectralPoly<C>) -> SpectralPoly<C> {
        a.map_coeffs(|c| DiffField::derive(self, c))
    }
}
