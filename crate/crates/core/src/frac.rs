//! Reduced fractions of multivariate polynomials.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ModoError, Result};
use crate::mpoly::{MPoly, TermOrder};
use crate::scalar::{Coeff, Field, Ring, TrySqrt};
use crate::GaussianRational;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// Zero is `0 / 1`. Which variables the polynomials range over (a rational
/// function generator or jet variables) is decided by the owning
/// [`DiffField`](crate::DiffField); arithmetic does not need it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<C = GaussianRational> {
    num: MPoly<C>,
    den: MPoly<C>,
}

impl<C: Coeff> Frac<C> {
    pub fn new(num: MPoly<C>, den: MPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(ModoError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MPoly<C>, den: MPoly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.inv().expect("nonzero denominator");
            return Frac { num: num.scale(&inv), den: MPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Frac { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            Frac { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: MPoly<C>) -> Self {
        Frac { num: p, den: MPoly::one() }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn var(index: usize) -> Self {
        Self::from_poly(MPoly::var(index))
    }

    pub fn num(&self) -> &MPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<C> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv().ok_or(ModoError::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    /// Apply `f` to numerator and denominator and renormalize.
    pub fn map_parts(&self, f: impl Fn(&MPoly<C>) -> MPoly<C>) -> Result<Self> {
        Self::new(f(&self.num), f(&self.den))
    }

    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        let num = self.num.render(names, TermOrder::Graded);
        if self.den.is_one() {
            return num;
        }
        let den = self.den.render(names, TermOrder::Graded);
        let num = if self.num.num_terms() > 1 || self.num.leading_coeff().needs_parens() {
            format!("({num})")
        } else {
            num
        };
        let den_simple = self.den.num_terms() == 1 && self.den.terms().next().unwrap().0.exps().iter().filter(|e| **e > 0).count() == 1;
        if den_simple {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }
}

impl<C: Coeff> Zero for Frac<C> {
    fn zero() -> Self {
        Frac { num: MPoly::zero(), den: MPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Coeff> One for Frac<C> {
    fn one() -> Self {
        Frac { num: MPoly::one(), den: MPoly::one() }
    }
}

impl<C: Coeff> Neg for Frac<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Frac { num: -self.num, den: self.den }
    }
}

impl<C: Coeff> Add for Frac<C> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Frac { num: self.num + o.num, den: self.den };
            }
            return Self::normalized(self.num + o.num, self.den);
        }
        let num = &self.num * &o.den + &o.num * &self.den;
        Self::normalized(num, &self.den * &o.den)
    }
}

impl<C: Coeff> Sub for Frac<C> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<C: Coeff> Mul for Frac<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Frac { num: &self.num * &o.num, den: self.den };
        }
        // cross-cancel so the product is already reduced
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = o.den.div_exact(&g1).expect("gcd divides");
        let c = o.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading_coeff();
        if lc.is_one() {
            Frac { num, den }
        } else {
            Self::normalized(num, den)
        }
    }
}

impl<C: Coeff> Div for Frac<C> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.checked_div(&o).expect("division by zero field element")
    }
}

impl<C: Coeff> Ring for Frac<C> {
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(C::from_bigint(n))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other).ok()
    }
}

impl<C: Coeff> Field for Frac<C> {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
}

impl<C: Coeff> TrySqrt for Frac<C> {
    /// Only constants are handled.
    fn try_sqrt(&self) -> Option<Self> {
        self.as_constant()?.try_sqrt().map(Self::constant)
    }
}
