//! Exact Gaussian rationals `a + b*i` with `a, b` in Q.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{fmt_rational, Coeff, Field, Ring, TrySqrt};

/// An element of Q(i). Both parts are kept as reduced `BigRational`s, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::lcm(self.re.denom().clone(), self.im.denom().clone())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_im = |f: &mut fmt::Formatter<'_>, im: &BigRational| -> fmt::Result {
            if im.is_one() {
                write!(f, "i")
            } else {
                fmt_rational(im, f)?;
                write!(f, "*i")
            }
        };
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            return write_im(f, &self.im.abs());
        }
        if self.im.is_negative() {
            write!(f, "-")?;
        }
        write_im(f, &self.im.abs())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Self::new(re, im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        GaussianRational::new(re, im)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for GaussianRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero Gaussian rational")
    }
}

impl Ring for GaussianRational {
    fn from_bigint(n: &BigInt) -> Self {
        Self::real(BigRational::from_integer(n.clone()))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl TrySqrt for GaussianRational {
    /// Exact square root in Q(i). The returned root has positive real
    /// part, or zero real part and non-negative imaginary part.
    fn try_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let zero = BigRational::zero();
        if self.im.is_zero() {
            return if self.re.is_negative() {
                (-self.re.clone()).try_sqrt().map(|r| Self::new(zero, r))
            } else {
                self.re.try_sqrt().map(|r| Self::new(r, zero))
            };
        }
        // (x + iy)^2 = a + ib  =>  x^2 = (a + |z|)/2, y = b / (2x)
        let modulus = self.norm().try_sqrt()?;
        let two = BigRational::from_integer(2.into());
        let x2 = (&self.re + &modulus) / &two;
        let x = x2.try_sqrt()?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&two * &x);
        let root = Self::new(x, y);
        debug_assert_eq!(&root * &root, *self);
        Some(root)
    }
}

impl Coeff for GaussianRational {
    fn is_negative_like(&self) -> bool {
        if self.im.is_zero() {
            self.re.is_negative()
        } else if self.re.is_zero() {
            self.im.is_negative()
        } else {
            false
        }
    }

    fn needs_parens(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::real(q)
    }
}
