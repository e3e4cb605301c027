//! Matrix differential operators `Σ A_j D^j` with `D A = A D + A'`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diff_field::DiffField;
use crate::error::{ModoError, Result};
use crate::frac::Frac;
use crate::matrix::Matrix;
use crate::polyring::{eval_terms, BivarPoly, EvalRing};
use crate::scalar::{Coeff, Derivation, Ring};
use crate::GaussianRational;

/// Coefficient-left normal form; `coeffs[j]` multiplies `D^j`. The zero
/// operator has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Operator<R> {
    size: usize,
    coeffs: Vec<Matrix<R>>,
}

fn binomials(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

impl<R: Ring> Operator<R> {
    pub fn zero(size: usize) -> Self {
        Operator { size, coeffs: Vec::new() }
    }

    pub fn identity(size: usize) -> Self {
        Self::constant(Matrix::identity(size))
    }

    /// `I·D`.
    pub fn d(size: usize) -> Self {
        Self::from_coeffs(size, vec![Matrix::zeros(size), Matrix::identity(size)]).expect("sizes agree")
    }

    pub fn constant(m: Matrix<R>) -> Self {
        let size = m.size();
        Self::from_coeffs(size, vec![m]).expect("sizes agree")
    }

    pub fn from_coeffs(size: usize, mut coeffs: Vec<Matrix<R>>) -> Result<Self> {
        if coeffs.iter().any(|c| c.size() != size) {
            return Err(ModoError::DimensionMismatch("coefficient sizes differ".into()));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(Operator { size, coeffs })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Order; the zero operator has order 0.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Matrix<R>] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Matrix<R> {
        self.coeffs.get(j).cloned().unwrap_or_else(|| Matrix::zeros(self.size))
    }

    pub fn leading(&self) -> Option<&Matrix<R>> {
        self.coeffs.last()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.size != o.size {
            return Err(ModoError::DimensionMismatch(format!(
                "operators of size {} and {}",
                self.size, o.size
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_coeffs(self.size, (0..n).map(|j| self.coeff(j) + o.coeff(j)).collect())
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Operator { size: self.size, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    /// `C·P`: every coefficient multiplied on the left.
    pub fn left_mul(&self, c: &Matrix<R>) -> Self {
        Self::from_coeffs(self.size, self.coeffs.iter().map(|a| c * a).collect()).expect("sizes agree")
    }

    /// Multiply every coefficient by a scalar (entrywise).
    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.size, self.coeffs.iter().map(|a| a.scale(c)).collect()).expect("sizes agree")
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Operator<S> {
        Operator::from_coeffs(self.size, self.coeffs.iter().map(|a| a.map(&f)).collect()).expect("sizes agree")
    }

    /// `P·Q` via `D^k A = Σ_j C(k,j) A^{(j)} D^{k-j}`.
    pub fn mul<D: Derivation<R>>(&self, o: &Self, d: &D) -> Result<Self> {
        self.check(o)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(self.size));
        }
        let p = self.order();
        let q = o.order();
        // derivs[k][j] = (B_k)^{(j)}
        let derivs: Vec<Vec<Matrix<R>>> = o
            .coeffs
            .iter()
            .map(|b| {
                let mut v = vec![b.clone()];
                for j in 1..=p {
                    let next = v[j - 1].derive(d);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = vec![Matrix::zeros(self.size); p + q + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let binom = binomials(i);
            for (k, dk) in derivs.iter().enumerate() {
                for (j, bj) in dk.iter().enumerate().take(i + 1) {
                    if bj.is_zero() {
                        continue;
                    }
                    let term = (a * bj).scale(&R::from_bigint(&binom[j]));
                    let slot = i - j + k;
                    out[slot] = out[slot].clone() + term;
                }
            }
        }
        Self::from_coeffs(self.size, out)
    }

    pub fn commutator<D: Derivation<R>>(&self, o: &Self, d: &D) -> Result<Self> {
        self.mul(o, d)?.try_sub(&o.mul(self, d)?)
    }

    pub fn pow<D: Derivation<R>>(&self, e: u32, d: &D) -> Self {
        let mut out = Self::identity(self.size);
        for _ in 0..e {
            out = out.mul(self, d).expect("same size");
        }
        out
    }

    /// Apply to a vector of ring elements: `Σ A_j (v^{(j)})`.
    pub fn apply<D: Derivation<R>>(&self, v: &[R], d: &D) -> Vec<R> {
        let mut out = vec![R::zero(); self.size];
        let mut dv = v.to_vec();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                dv = dv.iter().map(|x| d.derive(x)).collect();
            }
            for (o, x) in out.iter_mut().zip(a.mul_vec(&dv)) {
                *o = o.clone() + x;
            }
        }
        out
    }
}

type OpPair<C> = (Operator<Frac<C>>, Operator<Frac<C>>);

/// Operators over `K` as an evaluation target, with a commutation cache.
///
/// With `unchecked` set, commutativity is not verified and `g(X, Y)` is
/// formed as `Σ a_ij X^i Y^j` in that order.
pub struct ModoRing<'a, C: Coeff = GaussianRational> {
    field: &'a DiffField<C>,
    size: usize,
    unchecked: bool,
    cache: RwLock<HashMap<OpPair<C>, bool>>,
}

impl<'a, C: Coeff> ModoRing<'a, C> {
    pub fn new(field: &'a DiffField<C>, size: usize) -> Self {
        ModoRing { field, size, unchecked: false, cache: RwLock::new(HashMap::new()) }
    }

    pub fn unchecked(field: &'a DiffField<C>, size: usize) -> Self {
        ModoRing { unchecked: true, ..Self::new(field, size) }
    }

    pub fn field(&self) -> &DiffField<C> {
        self.field
    }

    pub fn commutes(&self, a: &Operator<Frac<C>>, b: &Operator<Frac<C>>) -> Result<bool> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(*v);
        }
        let v = a.commutator(b, self.field)?.is_zero();
        self.cache.write().expect("cache lock").insert(key, v);
        Ok(v)
    }
}

impl<C: Coeff> EvalRing for ModoRing<'_, C> {
    type Elem = Operator<Frac<C>>;
    type Scalar = Frac<C>;

    fn zero(&self) -> Self::Elem {
        Operator::zero(self.size)
    }
    fn one(&self) -> Self::Elem {
        Operator::identity(self.size)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.try_add(b).expect("same size")
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b, self.field).expect("same size")
    }
    fn scale(&self, c: &Frac<C>, a: &Self::Elem) -> Self::Elem {
        a.scale(c)
    }
    fn commute(&self, a: &Self::Elem, b: &Self::Elem) -> Option<bool> {
        if self.unchecked {
            None
        } else {
            self.commutes(a, b).ok()
        }
    }
}

/// `Σ c_ij L^i B^j` for coefficients in K. Coefficients must be
/// differential constants for the result to be independent of ordering;
/// callers pass constant coefficients only.
pub fn op_eval_terms<C: Coeff>(
    terms: &[((u32, u32), Frac<C>)],
    l: &Operator<Frac<C>>,
    b: &Operator<Frac<C>>,
    ring: &ModoRing<'_, C>,
) -> Result<Operator<Frac<C>>> {
    if l.size() != b.size() || l.size() != ring.size {
        return Err(ModoError::DimensionMismatch("operator sizes differ".into()));
    }
    if ring.commute(l, b) == Some(false) {
        return Err(ModoError::NoncommutingPair);
    }
    Ok(eval_terms(terms, l, b, ring))
}

/// `g(L, B)`; refuses non-commuting pairs unless the ring is unchecked.
pub fn op_eval_poly(
    g: &BivarPoly,
    l: &Operator<Frac<GaussianRational>>,
    b: &Operator<Frac<GaussianRational>>,
    ring: &ModoRing<'_, GaussianRational>,
) -> Result<Operator<Frac<GaussianRational>>> {
    let terms: Vec<_> = g.terms().map(|(k, c)| (k, Frac::constant(c.clone()))).collect();
    op_eval_terms(&terms, l, b, ring)
}

/// `PQ − QP`.
pub fn modo_commutator<C: Coeff>(
    p: &Operator<Frac<C>>,
    q: &Operator<Frac<C>>,
    field: &DiffField<C>,
) -> Result<Operator<Frac<C>>> {
    p.commutator(q, field)
}

pub fn modo_mul<C: Coeff>(
    p: &Operator<Frac<C>>,
    q: &Operator<Frac<C>>,
    field: &DiffField<C>,
) -> Result<Operator<Frac<C>>> {
    p.mul(q, field)
}

impl<R: Ring> Zero for Operator<R> {
    /// Size-less zero; only useful as an additive identity placeholder.
    fn zero() -> Self {
        Operator { size: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> std::ops::Add for Operator<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.size == 0 {
            return o;
        }
        if o.size == 0 {
            return self;
        }
        self.try_add(&o).expect("operator size mismatch")
    }
}
