//! Square matrices over a commutative ring, with entrywise derivation.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{ModoError, Result};
use crate::scalar::{Derivation, Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<R> {
    n: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![R::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(ModoError::DimensionMismatch("matrix must be square and nonempty".into()));
        }
        Ok(Matrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> std::result::Result<S, E>) -> std::result::Result<Matrix<S>, E> {
        Ok(Matrix { n: self.n, data: self.data.iter().map(f).collect::<std::result::Result<_, _>>()? })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| c.clone() * e.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn derive<D: Derivation<R>>(&self, d: &D) -> Self {
        self.map(|e| d.derive(e))
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(R::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let n = self.n - 1;
        Self::from_fn(n, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }

    /// Cofactor expansion for n ≤ 4, fraction-free Bareiss beyond.
    pub fn det(&self) -> R {
        if self.n <= 4 {
            self.det_laplace()
        } else {
            self.det_bareiss()
        }
    }

    fn det_laplace(&self) -> R {
        match self.n {
            0 => R::one(),
            1 => self.data[0].clone(),
            2 => self[(0, 0)].clone() * self[(1, 1)].clone() - self[(0, 1)].clone() * self[(1, 0)].clone(),
            _ => {
                let mut acc = R::zero();
                for j in 0..self.n {
                    let a = &self[(0, j)];
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.clone() * self.minor(0, j).det_laplace();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Bareiss elimination; every division is exact in an integral domain.
    pub fn det_bareiss(&self) -> R {
        let n = self.n;
        let mut a = self.clone();
        let mut sign = false;
        let mut prev = R::one();
        for k in 0..n.saturating_sub(1) {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return R::zero();
                };
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, |i, j| {
            let c = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.clone() * other.clone() - other.clone() * self.clone()
    }
}

impl<R: Field> Matrix<R> {
    pub fn inv(&self) -> Result<Self> {
        let d = self.det();
        let dinv = d.inv().ok_or(ModoError::SingularMatrix)?;
        Ok(self.adjugate().scale(&dinv))
    }

    /// Null space basis by Gauss–Jordan elimination, taking the first
    /// nonzero pivot in each column. Returns (rank, basis).
    pub fn kernel(&self) -> (usize, Vec<Vec<R>>) {
        let n = self.n;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&i| !a[(i, col)].is_zero()) else { continue };
            for j in 0..n {
                a.data.swap(row * n + j, p * n + j);
            }
            let inv = a[(row, col)].inv().expect("nonzero pivot");
            for j in 0..n {
                a[(row, j)] = a[(row, j)].clone() * inv.clone();
            }
            for i in 0..n {
                if i != row && !a[(i, col)].is_zero() {
                    let factor = a[(i, col)].clone();
                    for j in 0..n {
                        let v = a[(i, j)].clone() - factor.clone() * a[(row, j)].clone();
                        a[(i, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let rank = pivots.len();
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![R::zero(); n];
            v[free] = R::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(r, free)].clone();
            }
            basis.push(v);
        }
        (rank, basis)
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.n + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.n + j]
    }
}

impl<R: Ring> Add for Matrix<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        Matrix { n: self.n, data: self.data.into_iter().zip(o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<R: Ring> Sub for Matrix<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        Matrix { n: self.n, data: self.data.into_iter().zip(o.data).map(|(a, b)| a - b).collect() }
    }
}

impl<R: Ring> Neg for Matrix<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Matrix { n: self.n, data: self.data.into_iter().map(|a| -a).collect() }
    }
}

impl<R: Ring> Mul for Matrix<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<R: Ring> Mul<&Matrix<R>> for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, o: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        let n = self.n;
        let mut out: Matrix<R> = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::MPoly;
    use crate::{DiffField, Frac, GaussianRational as Q};
    use num_traits::{One, Zero};

    type F = Frac<Q>;

    fn c(re: i64, im: i64) -> F {
        F::constant(Q::from_ints(re, im))
    }

    /// Leibniz expansion over all permutations.
    fn det_perm(m: &Matrix<F>) -> F {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.size();
        let mut acc = F::zero();
        for p in perms(n) {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            let mut t = F::one();
            for i in 0..n {
                t = t * m[(i, p[i])].clone();
            }
            acc = if inv % 2 == 0 { acc + t } else { acc - t };
        }
        acc
    }

    #[test]
    fn det_examples() {
        assert!(Matrix::<F>::identity(3).det().is_one());
        let a1 = Matrix::diag(vec![c(0, 1), c(0, -1)]);
        assert_eq!(a1.det(), c(1, 0));
        assert_eq!(a1.inv().unwrap(), Matrix::diag(vec![c(0, -1), c(0, 1)]));
        let x = F::var(0);
        let m = Matrix::from_fn(5, |i, j| {
            let base = c((i * 3 + j * j) as i64 % 7 - 3, (i + j) as i64 % 3 - 1);
            if i == j { base + x.clone() } else { base }
        });
        assert_eq!(m.det_bareiss(), det_perm(&m));
        assert_eq!(m.det_laplace(), det_perm(&m));
        assert_eq!(m.clone() * m.inv().unwrap(), Matrix::identity(5));
    }

    #[test]
    fn derive_entrywise() {
        let k = DiffField::ratfunc("x", MPoly::one()).unwrap();
        let x = F::var(0);
        let m = Matrix::diag(vec![x.clone(), x.clone() * x.clone()]);
        assert_eq!(m.derive(&k), Matrix::diag(vec![c(1, 0), c(2, 0) * x]));
        assert!(Matrix::<F>::scalar(2, c(3, 1)).derive(&k).is_zero());
    }

    #[test]
    fn kernel_basis() {
        let m = Matrix::from_rows(vec![vec![c(1, 0), c(2, 0)], vec![c(2, 0), c(4, 0)]]).unwrap();
        let (rank, basis) = m.kernel();
        assert_eq!(rank, 1);
        assert_eq!(basis, vec![vec![c(-2, 0), c(1, 0)]]);
        assert!(m.mul_vec(&basis[0]).iter().all(|e| e.is_zero()));
        let (rank, basis) = Matrix::<F>::identity(2).kernel();
        assert_eq!((rank, basis.len()), (2, 0));
        assert_eq!(Matrix::<F>::zeros(2).kernel().1.len(), 2);
    }
}
