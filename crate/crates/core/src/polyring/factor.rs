//! Square-free decomposition and the restricted factorizer for C[λ, μ].
//!
//! Supported class: after square-free decomposition every μ-primitive part
//! has μ-degree at most two, and every λ-only content factor has degree at
//! most four after removing Gaussian-rational roots. Anything else needs a
//! user-supplied factorization, which is verified by expansion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bivar::{bp_gcd, BivarPoly};
use crate::error::{ModoError, Result};
use crate::scalar::{Field, TrySqrt};
use crate::GaussianRational;

/// `unit * Π poly^mult`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub unit: GaussianRational,
    pub factors: Vec<(BivarPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> BivarPoly {
        self.factors
            .iter()
            .fold(BivarPoly::constant(self.unit.clone()), |acc, (p, k)| acc * p.pow(*k))
    }

    /// Product of the distinct factors.
    pub fn reduced(&self) -> BivarPoly {
        self.factors.iter().fold(BivarPoly::one(), |acc, (p, _)| acc * p.clone())
    }

    fn normalize(mut self) -> Self {
        let mut merged: BTreeMap<BivarPoly, u32> = BTreeMap::new();
        for (p, k) in self.factors.drain(..) {
            let lc = p.leading_coeff();
            self.unit = self.unit * crate::scalar::Ring::pow(&lc, k);
            *merged.entry(p.monic()).or_insert(0) += k;
        }
        self.factors = merged.into_iter().collect();
        self
    }
}

/// Yun's square-free decomposition with respect to the derivative `d`.
fn yun(f: &BivarPoly, d: impl Fn(&BivarPoly) -> BivarPoly) -> Vec<(BivarPoly, u32)> {
    let mut out = Vec::new();
    let fd = d(f);
    let a0 = bp_gcd(f, &fd).expect("nonzero");
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = fd.div_exact(&a0).expect("gcd divides");
    let mut dd = c - d(&b);
    let mut i = 1;
    while !b.is_constant() {
        let a = bp_gcd(&b, &dd).expect("nonzero");
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("gcd divides");
        let c = dd.div_exact(&a).expect("gcd divides");
        dd = c - d(&b);
        i += 1;
    }
    out
}

/// Square-free decomposition `f = unit * Π g_i^i` with pairwise coprime,
/// square-free, monic `g_i`.
pub fn bp_squarefree(f: &BivarPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(ModoError::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if !f.is_constant() {
        let content = f.content_mu();
        let pp = f.div_exact(&content).expect("content divides");
        if !content.is_constant() {
            factors.extend(yun(&content, BivarPoly::d_lambda));
        }
        if !pp.is_constant() {
            factors.extend(yun(&pp, BivarPoly::d_mu));
        }
    }
    let product = factors.iter().fold(BivarPoly::one(), |acc, (g, k)| acc * g.pow(*k));
    let unit = f
        .div_exact(&product)
        .and_then(|u| u.as_constant())
        .expect("square-free parts reconstruct f");
    Ok(Factorization { unit, factors }.normalize())
}

/// Square root of a univariate polynomial (ascending coefficients, no
/// trailing zeros) over any field with exact scalar square roots.
pub fn univariate_sqrt<C: Field + TrySqrt>(p: &[C]) -> Option<Vec<C>> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    let d = p.len() - 1;
    if d % 2 == 1 {
        return None;
    }
    let h = d / 2;
    let mut s = vec![C::zero(); h + 1];
    s[h] = p[d].try_sqrt()?;
    let two_lead = s[h].clone() + s[h].clone();
    for k in (0..h).rev() {
        let mut acc = p[h + k].clone();
        for i in (k + 1)..h {
            let j = h + k - i;
            if j > k && j < h {
                acc = acc - s[i].clone() * s[j].clone();
            }
        }
        s[k] = acc / two_lead.clone();
    }
    let mut sq = vec![C::zero(); d + 1];
    for (i, a) in s.iter().enumerate() {
        for (j, b) in s.iter().enumerate() {
            sq[i + j] = sq[i + j].clone() + a.clone() * b.clone();
        }
    }
    (sq == p).then_some(s)
}

/// Square root in Q(i)[λ] of a λ-only polynomial, if one exists.
pub fn bp_sqrt(p: &BivarPoly) -> Option<BivarPoly> {
    let coeffs = p.lambda_coeffs()?;
    univariate_sqrt(&coeffs).map(|s| BivarPoly::from_lambda_coeffs(&s))
}

/// Gaussian integer as a pair of `BigInt`s.
type Gi = (BigInt, BigInt);

fn gi_mul(a: &Gi, b: &Gi) -> Gi {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gi_norm(a: &Gi) -> BigInt {
    &a.0 * &a.0 + &a.1 * &a.1
}

/// Exact quotient in Z[i].
fn gi_div(a: &Gi, b: &Gi) -> Option<Gi> {
    let n = gi_norm(b);
    if n.is_zero() {
        return None;
    }
    let conj = (b.0.clone(), -b.1.clone());
    let p = gi_mul(a, &conj);
    if (&p.0 % &n).is_zero() && (&p.1 % &n).is_zero() {
        Some((&p.0 / &n, &p.1 / &n))
    } else {
        None
    }
}

fn to_gr(a: &Gi) -> GaussianRational {
    GaussianRational::new(
        BigRational::from_integer(a.0.clone()),
        BigRational::from_integer(a.1.clone()),
    )
}

const MAX_NORM_FOR_DIVISORS: u64 = 1 << 40;

/// All Gaussian-integer divisors of a nonzero `z`, or `None` when the norm
/// is too large to enumerate.
fn gi_divisors(z: &Gi) -> Option<Vec<Gi>> {
    let n = gi_norm(z);
    if n > BigInt::from(MAX_NORM_FOR_DIVISORS) {
        return None;
    }
    let n: u64 = n.try_into().ok()?;
    let mut int_divs = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            int_divs.push(k);
            if k * k != n {
                int_divs.push(n / k);
            }
        }
        k += 1;
    }
    let mut out = Vec::new();
    for m in int_divs {
        let mut x = 0u64;
        while x * x <= m {
            let rest = m - x * x;
            let y = rest.sqrt();
            if y * y == rest {
                let (xi, yi) = (x as i64, y as i64);
                for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let d: Gi = (BigInt::from(sx * xi), BigInt::from(sy * yi));
                    if gi_div(z, &d).is_some() && !out.contains(&d) {
                        out.push(d);
                    }
                }
            }
            x += 1;
        }
    }
    Some(out)
}

/// Scale to Gaussian-integer coefficients.
fn to_gaussian_integers(coeffs: &[GaussianRational]) -> Vec<Gi> {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    coeffs
        .iter()
        .map(|c| {
            let re = &c.re * BigRational::from_integer(l.clone());
            let im = &c.im * BigRational::from_integer(l.clone());
            (re.to_integer(), im.to_integer())
        })
        .collect()
}

fn horner(coeffs: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    coeffs
        .iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, c| acc * x.clone() + c.clone())
}

/// Divide by `(λ - r)`; coefficients ascending.
fn deflate(coeffs: &[GaussianRational], r: &GaussianRational) -> Vec<GaussianRational> {
    let n = coeffs.len() - 1;
    let mut q = vec![GaussianRational::zero(); n];
    let mut carry = GaussianRational::zero();
    for k in (0..n).rev() {
        carry = coeffs[k + 1].clone() + carry * r.clone();
        q[k] = carry.clone();
    }
    q
}

fn trim(mut v: Vec<GaussianRational>) -> Vec<GaussianRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Gaussian-rational roots via the rational root theorem over Z[i].
fn gaussian_roots(coeffs: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    let ints = to_gaussian_integers(coeffs);
    let a0 = &ints[0];
    let an = ints.last().expect("nonempty");
    let unsupported = || {
        ModoError::UnsupportedFactorization(format!(
            "{} (coefficients too large for root search)",
            BivarPoly::from_lambda_coeffs(coeffs)
        ))
    };
    let ps = gi_divisors(a0).ok_or_else(unsupported)?;
    let qs = gi_divisors(an).ok_or_else(unsupported)?;
    let mut roots = Vec::new();
    for p in &ps {
        for q in &qs {
            let r = to_gr(p) / to_gr(q);
            if !roots.contains(&r) && horner(coeffs, &r).is_zero() {
                roots.push(r);
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Split a root-free quartic with Gaussian-integer-reducible coefficients
/// into two quadratics, if possible.
fn split_quartic(coeffs: &[GaussianRational]) -> Option<(BivarPoly, BivarPoly)> {
    let ints = to_gaussian_integers(coeffs);
    let a4 = ints[4].clone();
    // y = a4 λ turns a4^3 p(y / a4) into a monic quartic over Z[i]
    let mut b: Vec<Gi> = Vec::with_capacity(4);
    let mut pow: Gi = (BigInt::one(), BigInt::zero());
    for k in (0..4).rev() {
        b.push(gi_mul(&ints[k], &pow));
        pow = gi_mul(&pow, &a4);
    }
    let (b3, b2, b1, b0) = (to_gr(&b[0]), to_gr(&b[1]), to_gr(&b[2]), to_gr(&b[3]));
    let monic_quadratic = |s: &GaussianRational, c: &GaussianRational| {
        let y = BivarPoly::lambda().scale(&to_gr(&a4));
        let q = y.pow(2) + y.scale(s) + BivarPoly::constant(c.clone());
        q.monic()
    };
    for cdiv in gi_divisors(&b[3])? {
        let c = to_gr(&cdiv);
        let e = b0.clone() / c.clone();
        let candidates: Vec<(GaussianRational, GaussianRational)> = if c != e {
            let s = (b1.clone() - c.clone() * b3.clone()) / (e.clone() - c.clone());
            vec![(s.clone(), b3.clone() - s)]
        } else {
            if c.clone() * b3.clone() != b1 {
                continue;
            }
            let four = GaussianRational::from(4);
            let disc = b3.clone() * b3.clone() - four * (b2.clone() - c.clone() - c.clone());
            match disc.try_sqrt() {
                Some(sq) => {
                    let two = GaussianRational::from(2);
                    let s = (b3.clone() + sq) / two;
                    vec![(s.clone(), b3.clone() - s)]
                }
                None => continue,
            }
        };
        for (s, t) in candidates {
            let ok_b2 = c.clone() + e.clone() + s.clone() * t.clone() == b2;
            let ok_b1 = s.clone() * e.clone() + c.clone() * t.clone() == b1;
            if ok_b2 && ok_b1 {
                let f1 = monic_quadratic(&s, &c);
                let f2 = monic_quadratic(&t, &e);
                let target = BivarPoly::from_lambda_coeffs(coeffs).monic();
                if (f1.clone() * f2.clone()).monic() == target {
                    return Some((f1, f2));
                }
            }
        }
    }
    None
}

/// Factor a λ-only polynomial into monic irreducibles over Q(i).
fn factor_lambda_only(p: &BivarPoly) -> Result<Vec<(BivarPoly, u32)>> {
    let mut coeffs = trim(p.lambda_coeffs().expect("lambda-only"));
    let mut out: Vec<(BivarPoly, u32)> = Vec::new();
    if coeffs.len() <= 1 {
        return Ok(out);
    }
    let lambda = BivarPoly::lambda;
    let mut zero_mult = 0;
    while coeffs[0].is_zero() {
        coeffs.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((lambda(), zero_mult));
    }
    if coeffs.len() > 1 {
        for r in gaussian_roots(&coeffs)? {
            let mut k = 0;
            while coeffs.len() > 1 && horner(&coeffs, &r).is_zero() {
                coeffs = deflate(&coeffs, &r);
                k += 1;
            }
            out.push((lambda() - BivarPoly::constant(r), k));
        }
    }
    let rest = BivarPoly::from_lambda_coeffs(&coeffs);
    match coeffs.len().saturating_sub(1) {
        0 => {}
        1..=3 => out.push((rest.monic(), 1)),
        4 => match split_quartic(&coeffs) {
            Some((a, b)) if a == b => out.push((a, 2)),
            Some((a, b)) => {
                out.push((a, 1));
                out.push((b, 1));
            }
            None => out.push((rest.monic(), 1)),
        },
        _ => {
            return Err(ModoError::UnsupportedFactorization(format!(
                "{rest} (root-free λ-factor of degree > 4)"
            )))
        }
    }
    Ok(out)
}

/// Factor a square-free, μ-primitive polynomial of μ-degree ≤ 2.
fn factor_mu_primitive(pp: &BivarPoly) -> Result<Vec<BivarPoly>> {
    match pp.degree_mu() {
        0 => Ok(Vec::new()),
        1 => Ok(vec![pp.monic()]),
        2 => {
            let cs = pp.mu_coeffs();
            let (c, b, a) = (&cs[0], &cs[1], &cs[2]);
            let disc = b.clone() * b.clone() - BivarPoly::from_int(4) * a.clone() * c.clone();
            match bp_sqrt(&disc) {
                None => Ok(vec![pp.monic()]),
                Some(s) => {
                    let lin = BivarPoly::from_int(2) * a.clone() * BivarPoly::mu() + b.clone() - s;
                    let h1 = lin
                        .div_exact(&lin.content_mu())
                        .expect("content divides")
                        .monic();
                    let h2 = pp
                        .div_exact(&h1)
                        .expect("linear factor divides its quadratic")
                        .monic();
                    Ok(vec![h1, h2])
                }
            }
        }
        d => Err(ModoError::UnsupportedFactorization(format!(
            "{pp} (square-free part of μ-degree {d})"
        ))),
    }
}

/// Factor `f` into monic irreducibles over Q(i) within the supported class.
pub fn bp_factor(f: &BivarPoly) -> Result<Factorization> {
    let sqf = bp_squarefree(f)?;
    let mut factors = Vec::new();
    for (g, mult) in &sqf.factors {
        let content = g.content_mu();
        let pp = g.div_exact(&content).expect("content divides");
        for (h, k) in factor_lambda_only(&content)? {
            factors.push((h, k * mult));
        }
        for h in factor_mu_primitive(&pp)? {
            factors.push((h, *mult));
        }
    }
    let product = factors.iter().fold(BivarPoly::one(), |acc, (g, k)| acc * g.pow(*k));
    let unit = f
        .div_exact(&product)
        .and_then(|u| u.as_constant())
        .expect("factors reconstruct f");
    Ok(Factorization { unit, factors }.normalize())
}

/// Check a user-supplied factorization of `f` by exact expansion.
pub fn verify_user_factorization(f: &BivarPoly, factors: &[(BivarPoly, u32)]) -> Result<Factorization> {
    if f.is_zero() {
        return Err(ModoError::ZeroPolynomial);
    }
    let mut unit = GaussianRational::one();
    let mut kept = Vec::new();
    for (p, k) in factors {
        if p.is_zero() || *k == 0 {
            return Err(ModoError::InvalidUserFactorization(format!("bad factor {p}^{k}")));
        }
        match p.as_constant() {
            Some(c) => unit = unit * crate::scalar::Ring::pow(&c, *k),
            None => kept.push((p.clone(), *k)),
        }
    }
    let product = kept.iter().fold(BivarPoly::constant(unit), |acc, (g, k)| acc * g.pow(*k));
    let quotient = f
        .div_exact(&product)
        .and_then(|u| u.as_constant())
        .ok_or_else(|| ModoError::InvalidUserFactorization(format!("product is not an associate of {f}")))?;
    Ok(Factorization {
        unit: quotient,
        factors: kept,
    }
    .normalize())
}

/// Whether `h` is irreducible by the μ-quadratic discriminant test.
pub fn discriminant_is_square(h: &BivarPoly) -> Option<bool> {
    if h.degree_mu() != 2 {
        return None;
    }
    let cs = h.mu_coeffs();
    let disc = cs[1].clone() * cs[1].clone() - BivarPoly::from_int(4) * cs[2].clone() * cs[0].clone();
    Some(bp_sqrt(&disc).is_some())
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
    fn k(re: i64, im: i64) -> BivarPoly {
        BivarPoly::constant(g(re, im))
    }

    fn h1() -> BivarPoly {
        mu() - k(0, 2) * lam().pow(2)
    }
    fn h2() -> BivarPoly {
        mu() + k(0, 2) * lam().pow(2)
    }

    #[test]
    fn squarefree_examples() {
        let f = h1().pow(2) * (mu() + lam());
        let sqf = bp_squarefree(&f).unwrap();
        assert_eq!(sqf.expand(), f);
        let mut fs = sqf.factors.clone();
        fs.sort();
        assert_eq!(fs, vec![(mu() + lam(), 1), (h1(), 2)]);

        let f = mu().pow(2) + k(4, 0) * lam().pow(4);
        let sqf = bp_squarefree(&f).unwrap();
        assert_eq!(sqf.factors, vec![(f.clone(), 1)]);

        let five = bp_squarefree(&k(5, 0)).unwrap();
        assert_eq!(five.unit, g(5, 0));
        assert!(five.factors.is_empty());
        assert!(bp_squarefree(&BivarPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_lambda_content() {
        let f = k(3, 0) * (lam() + k(1, 0)).pow(3) * (mu() - lam()).pow(2) * lam();
        let sqf = bp_squarefree(&f).unwrap();
        assert_eq!(sqf.expand(), f);
        assert_eq!(sqf.unit, g(3, 0));
        assert_eq!(sqf.reduced(), (lam() + k(1, 0)) * (mu() - lam()) * lam());
    }

    #[test]
    fn factor_example_7_2() {
        let f = mu().pow(2) + k(4, 0) * lam().pow(4);
        let fac = bp_factor(&f).unwrap();
        assert_eq!(fac.unit, g(1, 0));
        assert_eq!(fac.factors, vec![(h1(), 1), (h2(), 1)]);
        assert_eq!(fac.factors[0].0.render(), "mu - 2*i*lambda^2");
        assert_eq!(fac.factors[1].0.render(), "mu + 2*i*lambda^2");
    }

    #[test]
    fn factor_example_7_1_irreducible() {
        let q = lam().pow(2) - k(2, 0) * lam() + k(3, 0);
        let f = mu().pow(2) + k(4, 0) * (lam() + k(1, 0)).pow(2) * q;
        assert_eq!(f.render(), "mu^2 + 4*lambda^4 + 16*lambda + 12");
        let fac = bp_factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
        assert_eq!(discriminant_is_square(&f), Some(false));
    }

    #[test]
    fn factor_perfect_square_and_lambda_parts() {
        let fac = bp_factor(&(mu() - lam()).pow(2)).unwrap();
        assert_eq!(fac.factors, vec![(mu() - lam(), 2)]);

        // λ^2 + 1 = (λ - i)(λ + i) over Q(i)
        let p = (lam().pow(2) + k(1, 0)) * (mu() + k(2, 0));
        let fac = bp_factor(&p).unwrap();
        assert_eq!(fac.expand(), p);
        assert_eq!(fac.factors.len(), 3);

        // root-free quartic that splits into two quadratics
        let a = lam().pow(2) + k(2, 0);
        let b = lam().pow(2) + k(3, 0);
        let quartic = a.clone() * b.clone();
        let fac = bp_factor(&quartic).unwrap();
        assert_eq!(fac.factors, vec![(a, 1), (b, 1)]);

        let irr = lam().pow(4) - k(2, 0);
        assert_eq!(bp_factor(&irr).unwrap().factors, vec![(irr.clone(), 1)]);
    }

    #[test]
    fn factor_unsupported_and_user_hook() {
        let cubic = mu().pow(3) + lam();
        assert!(matches!(bp_factor(&cubic), Err(ModoError::UnsupportedFactorization(_))));
        let f = (mu() - lam()) * (mu().pow(3) + lam());
        let fac = verify_user_factorization(&f, &[(mu() - lam(), 1), (mu().pow(3) + lam(), 1)]).unwrap();
        assert_eq!(fac.expand(), f);
        let bad = verify_user_factorization(&f, &[(mu() - lam(), 2)]);
        assert!(matches!(bad, Err(ModoError::InvalidUserFactorization(_))));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(bp_sqrt(&(k(-16, 0) * lam().pow(4))), Some(k(0, 4) * lam().pow(2)));
        assert_eq!(bp_sqrt(&(lam().pow(2) + k(1, 0))), None);
        assert_eq!(bp_sqrt(&BivarPoly::zero()), Some(BivarPoly::zero()));
        assert_eq!(bp_sqrt(&mu()), None);
    }

    /// Exhaust every candidate square root with small Gaussian-integer
    /// coefficients of degree ≤ 1 and confirm none squares to λ²+1.
    #[test]
    fn sqrt_absent_oracle() {
        let target = lam().pow(2) + k(1, 0);
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        let s = k(a, b) * lam() + k(c, d);
                        assert_ne!(s.pow(2), target);
                    }
                }
            }
        }
    }
}
