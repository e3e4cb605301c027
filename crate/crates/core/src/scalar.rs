//! Algebraic contracts shared by every coefficient type.
//!
//! The polynomial, matrix and operator layers are written against these
//! traits rather than a concrete number type. `BigRational` and
//! [`GaussianRational`](crate::GaussianRational) are the exact scalar
//! fields; fractions and spectral polynomials build on top of them.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// `Some(q)` with `q * other == self` when `other` divides `self`.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

/// Exact square roots where they exist.
pub trait TrySqrt: Sized {
    fn try_sqrt(&self) -> Option<Self>;
}

/// Scalar coefficient of a multivariate polynomial.
///
/// Besides field arithmetic this carries the total order used for
/// deterministic output and the hooks the printer needs.
pub trait Coeff: Field + Ord + Hash + Display + TrySqrt {
    /// Print with a pulled-out minus sign (`- 2*x` rather than `+ -2*x`).
    fn is_negative_like(&self) -> bool;
    /// The printed form is a sum and needs parentheses as a factor.
    fn needs_parens(&self) -> bool;
}

/// A derivation acting on elements of `R`.
pub trait Derivation<R> {
    fn derive(&self, a: &R) -> R;

    fn derive_n(&self, a: &R, n: usize) -> R
    where
        R: Clone,
    {
        let mut out = a.clone();
        for _ in 0..n {
            out = self.derive(&out);
        }
        out
    }
}

/// The zero derivation: every element is a constant.
#[derive(Debug, Clone, Copy, Default)]
pub struct Constants;

impl<R: Ring> Derivation<R> for Constants {
    fn derive(&self, _a: &R) -> R {
        R::zero()
    }
}

impl Ring for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Square root of a non-negative integer when it is a perfect square.
pub(crate) fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl TrySqrt for BigRational {
    fn try_sqrt(&self) -> Option<Self> {
        let n = int_sqrt(self.numer())?;
        let d = int_sqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }
}

impl Coeff for BigRational {
    fn is_negative_like(&self) -> bool {
        self.is_negative()
    }

    fn needs_parens(&self) -> bool {
        false
    }
}

/// Formats a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}
