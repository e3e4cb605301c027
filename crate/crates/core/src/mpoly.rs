//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Variables are plain indices; callers own the mapping to names. Terms are
//! kept in a `BTreeMap` keyed by [`Monomial`], whose derived ordering is
//! lexicographic with variable 0 most significant. That ordering defines
//! the leading term used by division, gcd and normalization.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{Coeff, Ring};

/// Exponent vector with trailing zeros trimmed, so `Vec` ordering equals
/// lexicographic ordering of the zero-padded vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize, exp: u32) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = exp;
        Monomial::new(v)
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    /// `self / other` when every exponent of `other` is dominated.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, e) in other.0.iter().enumerate() {
            if out[i] < *e {
                return None;
            }
            out[i] -= e;
        }
        Some(Monomial::new(out))
    }

    pub fn with_exp(&self, index: usize, exp: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() <= index {
            v.resize(index + 1, 0);
        }
        v[index] = exp;
        Monomial::new(v)
    }

    fn gcd_with(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().min(other.0.len());
        Monomial::new((0..n).map(|i| self.exp(i).min(other.exp(i))).collect())
    }
}

/// Printing order for terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    /// Descending lexicographic, variable 0 most significant.
    Lex,
    /// Descending total degree, ties broken by descending lex.
    Graded,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index, 1), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(it: I) -> Self {
        let mut p = MPoly { terms: BTreeMap::new() };
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one()))
        } else {
            None
        }
    }

    /// Leading term under the lex order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> C {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(C::zero)
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// Indices of variables that occur with positive exponent.
    pub fn vars(&self) -> Vec<usize> {
        let n = self.terms.keys().map(|m| m.exps().len()).max().unwrap_or(0);
        (0..n).filter(|&v| self.contains_var(v)).collect()
    }

    /// Formal partial derivative.
    pub fn partial(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(var);
            (e > 0).then(|| (m.with_exp(var, e - 1), c.clone() * C::from_i64(e as i64)))
        }))
    }

    pub fn pow(&self, e: u32) -> Self {
        Ring::pow(self, e)
    }

    /// Replace `var` by `value` everywhere.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let coeffs = self.to_univariate(var);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = acc * value.clone() + c.clone();
        }
        acc
    }

    /// Replace `var` by a constant.
    pub fn eval_var(&self, var: usize, value: &C) -> Self {
        self.substitute(var, &Self::constant(value.clone()))
    }

    /// Coefficients with respect to `var`, index = exponent. The returned
    /// polynomials no longer contain `var`.
    pub fn to_univariate(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            out[e].add_term(m.with_exp(var, 0), c.clone());
        }
        out
    }

    pub fn from_univariate(var: usize, coeffs: &[Self]) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            out = out + c.mul_monomial(&Monomial::var(var, e as u32));
        }
        out
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv()?));
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let dc_inv = dc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let m = rm.div(&dm)?;
            let c = rc * dc_inv.clone();
            q.add_term(m.clone(), c.clone());
            r = r - d.mul_monomial(&m).scale(&c);
        }
        Some(q)
    }

    /// Pseudo-remainder of `self` by `b` with respect to `var`, up to a
    /// nonzero factor free of `var`.
    fn pseudo_rem(&self, b: &Self, var: usize) -> Self {
        let db = b.degree_in(var);
        let lcb = b.to_univariate(var).pop().expect("nonzero divisor");
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lcr = r.to_univariate(var).pop().expect("nonzero");
            let shift = Monomial::var(var, dr - db);
            r = r * lcb.clone() - lcr * b.mul_monomial(&shift);
        }
        r
    }

    /// Gcd of the coefficients with respect to `var`.
    pub fn content(&self, var: usize) -> Self {
        let mut g = Self::zero();
        for c in self.to_univariate(var) {
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self, var: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content(var);
        self.div_exact(&c).expect("content divides")
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    ///
    /// Recursive primitive remainder sequences: the input is viewed as a
    /// univariate polynomial in its most significant variable with
    /// coefficients in the remaining ones.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        if self == other {
            return self.monic();
        }
        if self.num_terms() == 1 || other.num_terms() == 1 {
            let mut m = self.terms.keys().next().unwrap().clone();
            for k in self.terms.keys().chain(other.terms.keys()) {
                m = m.gcd_with(k);
            }
            return Self::term(m, C::one());
        }
        let var = {
            let mut vs = self.vars();
            vs.extend(other.vars());
            *vs.iter().min().expect("nonconstant")
        };
        let (a_in, b_in) = (self.contains_var(var), other.contains_var(var));
        if !a_in {
            return self.gcd(&other.content(var));
        }
        if !b_in {
            return other.gcd(&self.content(var));
        }
        let ca = self.content(var);
        let cb = other.content(var);
        let cg = ca.gcd(&cb);
        let mut a = self.div_exact(&ca).expect("content divides").monic();
        let mut b = other.div_exact(&cb).expect("content divides").monic();
        if a.degree_in(var) < b.degree_in(var) {
            std::mem::swap(&mut a, &mut b);
        }
        // constants are units, so each remainder is also made monic; without
        // it univariate sequences (content 1) grow their coefficients
        while !b.is_zero() {
            let r = a.pseudo_rem(&b, var);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part(var).monic() };
        }
        (cg * a.primitive_part(var)).monic()
    }

    /// Evaluate at a full assignment of constants (missing variables are 0).
    pub fn eval(&self, values: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exps().iter().enumerate() {
                if *e > 0 {
                    let v = values.get(i).cloned().unwrap_or_else(C::zero);
                    t = t * Ring::pow(&v, *e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Canonical text with the given variable names.
    pub fn render(&self, names: &dyn Fn(usize) -> String, order: TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &C)> = self.terms.iter().rev().collect();
        if order == TermOrder::Graded {
            terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        }
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative_like();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&render_term(&abs, m, names));
        }
        out
    }
}

/// `c*x^a*y^b` with the unit coefficient suppressed.
pub(crate) fn render_term<C: Coeff>(c: &C, m: &Monomial, names: &dyn Fn(usize) -> String) -> String {
    let mut s = String::new();
    let mono: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(i, e)| if *e == 1 { names(i) } else { format!("{}^{}", names(i), e) })
        .collect();
    let coeff = if c.needs_parens() { format!("({c})") } else { c.to_string() };
    if mono.is_empty() {
        return coeff;
    }
    if !c.is_one() {
        let _ = write!(s, "{coeff}*");
    }
    s.push_str(&mono.join("*"));
    s
}

impl<C: Coeff> Zero for MPoly<C> {
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for MPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coeff> Neg for MPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coeff> Add for MPoly<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Coeff> Sub for MPoly<C> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<C: Coeff> Mul for MPoly<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<C: Coeff> Mul<&MPoly<C>> for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, o: &MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Ring for MPoly<C> {
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(C::from_bigint(n))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }
}
