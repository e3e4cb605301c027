use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::bivar::BivarPoly;
use crate::error::{ModoError, Result};
use crate::scalar::Ring;
use crate::GaussianRational;

/// Target ring for evaluating `Σ a_ij λ^i μ^j` at a pair `(X, Y)`.
///
/// The ring object carries whatever context its elements need (operator
/// size, derivation), so elements themselves stay plain values.
pub trait EvalRing {
    type Elem: Clone;
    type Scalar;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: &Self::Scalar, a: &Self::Elem) -> Self::Elem;

    /// `Some(commutes)` when the ring can decide it, `None` otherwise.
    fn commute(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<bool> {
        None
    }
}

/// Q(i) itself as an evaluation target.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScalarRing;

impl EvalRing for ScalarRing {
    type Elem = GaussianRational;
    type Scalar = GaussianRational;

    fn zero(&self) -> GaussianRational {
        GaussianRational::zero()
    }
    fn one(&self) -> GaussianRational {
        GaussianRational::one()
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a.clone() + b.clone()
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a * b
    }
    fn scale(&self, c: &GaussianRational, a: &GaussianRational) -> GaussianRational {
        c * a
    }
    fn commute(&self, _a: &GaussianRational, _b: &GaussianRational) -> Option<bool> {
        Some(true)
    }
}

/// Any commutative [`Ring`] evaluates polynomials with coefficients in it.
#[derive(Debug, Clone, Copy, Default)]
pub struct CommutativeRing<R>(std::marker::PhantomData<R>);

impl<R: Ring> CommutativeRing<R> {
    pub fn new() -> Self {
        CommutativeRing(std::marker::PhantomData)
    }
}

impl<R: Ring> EvalRing for CommutativeRing<R> {
    type Elem = R;
    type Scalar = R;

    fn zero(&self) -> R {
        R::zero()
    }
    fn one(&self) -> R {
        R::one()
    }
    fn add(&self, a: &R, b: &R) -> R {
        a.clone() + b.clone()
    }
    fn mul(&self, a: &R, b: &R) -> R {
        a.clone() * b.clone()
    }
    fn scale(&self, c: &R, a: &R) -> R {
        c.clone() * a.clone()
    }
    fn commute(&self, _a: &R, _b: &R) -> Option<bool> {
        Some(true)
    }
}

/// Horner evaluation in μ with precomputed powers of `x`.
///
/// `terms` are `((deg_lambda, deg_mu), coefficient)`. The product order is
/// `a_ij * X^i * Y^j`, which only matters for non-commuting inputs.
pub fn eval_terms<R: EvalRing>(
    terms: &[((u32, u32), R::Scalar)],
    x: &R::Elem,
    y: &R::Elem,
    ring: &R,
) -> R::Elem {
    if terms.is_empty() {
        return ring.zero();
    }
    let mut by_mu: BTreeMap<u32, Vec<(u32, &R::Scalar)>> = BTreeMap::new();
    let mut max_lambda = 0;
    for ((i, j), c) in terms {
        by_mu.entry(*j).or_default().push((*i, c));
        max_lambda = max_lambda.max(*i);
    }
    let mut xpow = vec![ring.one()];
    for k in 1..=max_lambda as usize {
        let next = ring.mul(&xpow[k - 1], x);
        xpow.push(next);
    }
    let coeff_at = |j: u32| -> R::Elem {
        let mut acc = ring.zero();
        if let Some(list) = by_mu.get(&j) {
            for (i, c) in list {
                acc = ring.add(&acc, &ring.scale(c, &xpow[*i as usize]));
            }
        }
        acc
    };
    let top = *by_mu.keys().next_back().expect("nonempty");
    let mut acc = coeff_at(top);
    for j in (0..top).rev() {
        acc = ring.add(&ring.mul(&acc, y), &coeff_at(j));
    }
    acc
}

/// `g(X, Y)` for commuting `X`, `Y`. Fails with `NONCOMMUTING_ARGUMENTS`
/// when the ring can check commutativity and the check fails.
pub fn bp_eval_commuting<R: EvalRing<Scalar = GaussianRational>>(
    g: &BivarPoly,
    x: &R::Elem,
    y: &R::Elem,
    ring: &R,
) -> Result<R::Elem> {
    if ring.commute(x, y) == Some(false) {
        return Err(ModoError::NoncommutingArguments);
    }
    let terms: Vec<_> = g.terms().map(|(k, c)| (k, c.clone())).collect();
    Ok(eval_terms(&terms, x, y, ring))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_examples() {
        let g = BivarPoly::lambda() * BivarPoly::mu();
        let v = bp_eval_commuting(&g, &2.into(), &3.into(), &ScalarRing).unwrap();
        assert_eq!(v, GaussianRational::from(6));
        let h = BivarPoly::lambda() - BivarPoly::mu();
        let v = bp_eval_commuting(&h, &5.into(), &5.into(), &ScalarRing).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn agrees_with_pointwise_evaluation() {
        let g = BivarPoly::mu().pow(3) * BivarPoly::lambda()
            + BivarPoly::lambda().pow(4).scale(&GaussianRational::from_ints(0, 3))
            + BivarPoly::from_int(-7);
        let (x, y) = (GaussianRational::from_ints(1, 2), GaussianRational::from_ratio(-3, 5));
        let v = bp_eval_commuting(&g, &x, &y, &ScalarRing).unwrap();
        assert_eq!(v, g.eval(&x, &y));
    }
}
