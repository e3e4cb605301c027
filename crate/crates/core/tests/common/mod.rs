#![allow(dead_code)]

use modo_core::mpoly::MPoly;
use modo_core::parser::parse_element;
use modo_core::{
    fixtures, DiffField, Frac, GaussianRational, Matrix, Modo, Operator, Ring, SpectralPoly,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = GaussianRational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn g(re: i64, im: i64) -> Q {
    Q::from_ints(re, im)
}

pub fn c(re: i64, im: i64) -> Frac {
    Frac::constant(g(re, im))
}

pub fn xfield() -> DiffField {
    DiffField::ratfunc("x", MPoly::one()).unwrap()
}

pub fn x() -> Frac {
    Frac::var(0)
}

pub fn rand_gauss(r: &mut ChaCha8Rng, bound: i64) -> Q {
    g(r.gen_range(-bound..=bound), r.gen_range(-bound..=bound))
}

pub fn rand_nonzero_gauss(r: &mut ChaCha8Rng, bound: i64) -> Q {
    loop {
        let q = rand_gauss(r, bound);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Polynomial in x of degree ≤ `deg` with small Gaussian-integer coefficients.
pub fn rand_xpoly(r: &mut ChaCha8Rng, deg: u32, bound: i64) -> Frac {
    (0..=deg).fold(Frac::zero(), |acc, k| acc + Frac::constant(rand_gauss(r, bound)) * x().pow(k))
}

pub fn rand_matrix(r: &mut ChaCha8Rng, n: usize, deg: u32, bound: i64) -> Matrix<Frac> {
    let rows = (0..n).map(|_| (0..n).map(|_| rand_xpoly(r, deg, bound)).collect()).collect();
    Matrix::from_rows(rows).unwrap()
}

pub fn rand_const_matrix(r: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix<Frac> {
    let rows = (0..n).map(|_| (0..n).map(|_| Frac::constant(rand_gauss(r, bound))).collect()).collect();
    Matrix::from_rows(rows).unwrap()
}

pub fn rand_invertible(r: &mut ChaCha8Rng, n: usize, deg: u32, bound: i64) -> Matrix<Frac> {
    loop {
        let m = rand_matrix(r, n, deg, bound);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// `A₀ + A₁ D` with invertible `A₁`.
pub fn rand_order_one(r: &mut ChaCha8Rng, n: usize) -> Modo {
    let a1 = rand_invertible(r, n, 1, 2);
    let a0 = rand_matrix(r, n, 1, 2);
    Operator::from_coeffs(n, vec![a0, a1]).unwrap()
}

/// `Σ c_k L^k` with constant `c_k`, `c_deg ≠ 0`.
pub fn poly_in(l: &Modo, cs: &[Q], field: &DiffField) -> Modo {
    let mut acc = Operator::zero(l.size());
    let mut p = Operator::identity(l.size());
    for (k, ck) in cs.iter().enumerate() {
        if k > 0 {
            p = p.mul(l, field).unwrap();
        }
        acc = acc.try_add(&p.scale(&Frac::constant(ck.clone()))).unwrap();
    }
    acc
}

pub fn rand_coeffs(r: &mut ChaCha8Rng, deg: usize) -> Vec<Q> {
    let mut cs: Vec<Q> = (0..deg).map(|_| rand_gauss(r, 3)).collect();
    cs.push(rand_nonzero_gauss(r, 3));
    cs
}

/// `R(λ) = Σ c_k λ^k`.
pub fn lambda_poly(cs: &[Q]) -> SpectralPoly {
    SpectralPoly::from_terms(cs.iter().enumerate().map(|(k, q)| ((k as u32, 0), Frac::constant(q.clone()))))
}

pub struct Instance {
    pub name: &'static str,
    pub field: DiffField,
    pub l: Modo,
    pub b: Modo,
}

pub fn akns_instances() -> Vec<Instance> {
    fixtures::NAMES
        .iter()
        .map(|n| {
            let cfg = fixtures::load(n).unwrap();
            let (l, b) = cfg.pair().unwrap();
            Instance { name: n, l: l.clone(), b: b.clone(), field: cfg.field.clone() }
        })
        .collect()
}

pub fn instance(name: &str) -> Instance {
    akns_instances().into_iter().find(|i| i.name == name).unwrap()
}

pub fn gauss_str(s: &str) -> Q {
    let bare = DiffField::diffpoly(&[], Vec::new()).unwrap();
    parse_element(s, &bare).unwrap().as_constant().unwrap()
}

/// Scalar operator `Σ s_k D^k` as its coefficient list.
pub type Scalar = Vec<Frac>;

/// Leibniz-rule product of scalar operators, written independently of
/// `Operator::mul`.
pub fn scalar_mul(p: &Scalar, q: &Scalar, field: &DiffField) -> Scalar {
    let mut out = vec![Frac::zero(); p.len() + q.len()];
    for (i, a) in p.iter().enumerate() {
        // D^i b = Σ_k C(i,k) b^{(k)} D^{i-k}
        for (j, b) in q.iter().enumerate() {
            let mut bk = b.clone();
            let mut binom: i64 = 1;
            for k in 0..=i {
                let term = a.clone() * Frac::from_i64(binom) * bk.clone();
                out[i - k + j] = out[i - k + j].clone() + term;
                bk = field.derive(&bk);
                binom = binom * (i - k) as i64 / (k + 1) as i64;
            }
        }
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Determinant by the permutation expansion.
pub fn det_leibniz<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = R::zero();
    permute(&mut perm, 0, &mut |p| {
        let mut sign = 1;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    sign = -sign;
                }
            }
        }
        let term = (0..n).fold(R::one(), |t, i| t * m[i][p[i]].clone());
        acc = if sign > 0 { acc.clone() + term } else { acc.clone() - term };
    });
    acc
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Classical differential resultant of `P` (order 1) and `Q` (order n):
/// determinant of the coefficient rows of `P, DP, …, D^{n-1}P, Q` in the
/// basis `1, D, …, D^n`.
pub fn sylvester_dres(p: &Scalar, q: &Scalar, field: &DiffField) -> Frac {
    let n = q.len() - 1;
    let d: Scalar = vec![Frac::zero(), Frac::one()];
    let mut rows = Vec::new();
    let mut dp = p.clone();
    for _ in 0..n {
        rows.push(dp.clone());
        dp = scalar_mul(&d, &dp, field);
    }
    rows.push(q.clone());
    let m: Vec<Vec<Frac>> = rows
        .into_iter()
        .map(|r| (0..=n).map(|k| r.get(k).cloned().unwrap_or_else(Frac::zero)).collect())
        .collect();
    det_leibniz(&m)
}

pub fn scalar_op(coeffs: &Scalar) -> Modo {
    Operator::from_coeffs(1, coeffs.iter().map(|a| Matrix::scalar(1, a.clone())).collect()).unwrap()
}
