//! Companion matrix, the p_j recursion, M(P, Q), the differential
//! resultant and the spectral curve.

mod spectral_poly;

use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use spectral_poly::SpectralPoly;

use crate::diff_field::DiffField;
use crate::error::{ModoError, Result};
use crate::frac::Frac;
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::operator::Operator;
use crate::polyring::BivarPoly;
use crate::scalar::{Coeff, Derivation, Field, Ring};
use crate::GaussianRational;

/// `N = -A₁⁻¹ A₀` for `P = A₀ + A₁ D`.
pub fn companion<C: Coeff>(p: &Operator<Frac<C>>) -> Result<Matrix<Frac<C>>> {
    if p.order() != 1 {
        return Err(ModoError::WrongOrder { expected: 1, found: p.order() });
    }
    let a1inv = p.coeff(1).inv().map_err(|_| ModoError::SingularLeadingCoefficient)?;
    Ok(-(&a1inv * &p.coeff(0)))
}

/// `p₀ = I`, `p_j = p_{j-1} N + p_{j-1}'`.
pub fn p_seq<R: Ring, D: Derivation<R>>(n: &Matrix<R>, upto: usize, d: &D) -> Vec<Matrix<R>> {
    let mut out = vec![Matrix::identity(n.size())];
    for j in 1..=upto {
        let prev = &out[j - 1];
        let next = prev * n + prev.derive(d);
        out.push(next);
    }
    out
}

/// `Σ B_j p_j(N)`.
pub fn m_from_coeffs<R: Ring, D: Derivation<R>>(bs: &[Matrix<R>], n: &Matrix<R>, d: &D) -> Matrix<R> {
    let size = n.size();
    if bs.is_empty() {
        return Matrix::zeros(size);
    }
    let ps = p_seq(n, bs.len() - 1, d);
    bs.iter().zip(&ps).fold(Matrix::zeros(size), |acc, (b, p)| acc + b * p)
}

/// `M(P, Q) = Σ B_j p_j(N)` with `N` the companion matrix of `P`.
pub fn m_matrix<C: Coeff>(
    p: &Operator<Frac<C>>,
    q: &Operator<Frac<C>>,
    field: &DiffField<C>,
) -> Result<Matrix<Frac<C>>> {
    if p.size() != q.size() {
        return Err(ModoError::DimensionMismatch("P and Q have different sizes".into()));
    }
    let n = companion(p)?;
    Ok(m_from_coeffs(q.coeffs(), &n, field))
}

/// `DRes(P, Q) = det M(P, Q)`.
pub fn dres<C: Coeff>(p: &Operator<Frac<C>>, q: &Operator<Frac<C>>, field: &DiffField<C>) -> Result<Frac<C>> {
    Ok(m_matrix(p, q, field)?.det())
}

/// Lcm of the denominators of `es`.
fn den_lcm<'a, C: Coeff + 'a>(es: impl Iterator<Item = &'a Frac<C>>) -> MPoly<C> {
    es.fold(MPoly::one(), |acc, e| {
        let d = e.den();
        if d.is_one() {
            return acc;
        }
        let g = acc.gcd(d);
        (&acc * d).div_exact(&g).expect("gcd divides")
    })
}

/// `M(L − λ, B − μ)` as `(P, d)` with `M = P / d` and `P` free of the
/// denominators of `L` and `B`.
///
/// With `δ` clearing `N` and `A₁⁻¹`, `p_j(N_λ) = P_j / δ^j` where
/// `P_j = P_{j-1} Ñ + δ P_{j-1}' − (j−1) δ' P_{j-1}` and `Ñ = δ N_λ`; this
/// keeps the recursion away from rational-function normalization.
fn spectral_matrix_cleared<C: Coeff>(
    l: &Operator<Frac<C>>,
    b: &Operator<Frac<C>>,
    field: &DiffField<C>,
) -> Result<(Matrix<SpectralPoly<C>>, Frac<C>)> {
    if l.size() != b.size() {
        return Err(ModoError::DimensionMismatch("L and B have different sizes".into()));
    }
    let size = l.size();
    let n = companion(l)?;
    let a1inv = l.coeff(1).inv().map_err(|_| ModoError::SingularLeadingCoefficient)?;
    let delta = Frac::from_poly(den_lcm(n.entries().iter().chain(a1inv.entries())));
    let beta = Frac::from_poly(den_lcm(b.coeffs().iter().flat_map(|m| m.entries())));
    let ddelta = field.derive(&delta);
    let lift = |m: &Matrix<Frac<C>>| m.map(|e| SpectralPoly::constant(e.clone()));
    let k = |c: &Frac<C>| SpectralPoly::constant(c.clone());
    // Ñ = δN + λ δA₁⁻¹
    let n_til = lift(&n.scale(&delta)) + lift(&a1inv.scale(&delta)).scale(&SpectralPoly::lambda());
    let order = b.order();
    let mut p = Matrix::identity(size);
    let mut sum: Matrix<SpectralPoly<C>> = Matrix::zeros(size);
    for (j, bj) in b.coeffs().iter().enumerate() {
        if j > 0 {
            let back = Frac::from_i64(j as i64 - 1) * ddelta.clone();
            p = &p * &n_til + p.derive(field).scale(&k(&delta)) - p.scale(&k(&back));
        }
        let weight = beta.clone() * delta.pow((order - j) as u32);
        sum = sum + &lift(&bj.scale(&weight)) * &p;
    }
    let d = beta * delta.pow(order as u32);
    let mu = SpectralPoly::mu().scale(&d);
    Ok((sum - Matrix::scalar(size, mu), d))
}

/// `M(L − λ, B − μ) = B₀ − μI + Σ_{j≥1} B_j p_j(N_λ)` over K[λ, μ],
/// `N_λ = −A₁⁻¹(A₀ − λI) = N + λA₁⁻¹`.
pub fn spectral_matrix<C: Coeff>(
    l: &Operator<Frac<C>>,
    b: &Operator<Frac<C>>,
    field: &DiffField<C>,
) -> Result<Matrix<SpectralPoly<C>>> {
    let (m, d) = spectral_matrix_cleared(l, b, field)?;
    let inv = d.inv().expect("nonzero denominator");
    Ok(m.map(|e| e.scale(&inv)))
}

/// Result of [`spectral_curve`].
#[derive(Clone, Debug)]
pub struct CurveReport {
    /// `f = det M(L − λ, B − μ)` over K[λ, μ].
    pub f: SpectralPoly,
    /// `f` as an element of C[λ, μ] when all coefficients lie in Q(i).
    pub f_constant: Option<BivarPoly>,
    pub commutator_is_zero: bool,
    pub constancy_verified: bool,
    pub ell: usize,
    pub order_b: usize,
    pub degree_mu: u32,
    pub degree_lambda: u32,
    pub leading_mu_coeff: Frac,
    /// Coefficient of `λ^{nℓ}` in `f`.
    pub leading_lambda_coeff: Frac,
    /// `det(B_n) det(A₁⁻¹)^n`.
    pub expected_lambda_coeff: Frac,
    pub degree_checks_pass: bool,
    pub warnings: Vec<String>,
}

impl CurveReport {
    pub fn render_f(&self, field: &DiffField) -> String {
        match &self.f_constant {
            Some(p) => p.render(),
            None => self.f.render(field),
        }
    }

    pub fn to_json(&self, field: &DiffField) -> Value {
        json!({
            "f": self.render_f(field),
            "f_in_constants": self.f_constant.is_some(),
            "commutator_is_zero": self.commutator_is_zero,
            "constancy_verified": self.constancy_verified,
            "ell": self.ell,
            "order_B": self.order_b,
            "degree_mu": self.degree_mu,
            "degree_lambda": self.degree_lambda,
            "leading_mu_coeff": field.render(&self.leading_mu_coeff),
            "leading_lambda_coeff": field.render(&self.leading_lambda_coeff),
            "expected_leading_lambda_coeff": field.render(&self.expected_lambda_coeff),
            "degree_checks_pass": self.degree_checks_pass,
            "warnings": self.warnings,
        })
    }
}

/// `f(λ, μ) = DRes(L − λ, B − μ)` with the constancy and degree checks.
pub fn spectral_curve(l: &Operator<Frac>, b: &Operator<Frac>, field: &DiffField) -> Result<CurveReport> {
    let (m, d) = spectral_matrix_cleared(l, b, field)?;
    let f = m.det().scale(&d.pow(l.size() as u32).inv().expect("nonzero denominator"));
    let commutator_is_zero = l.commutator(b, field)?.is_zero();
    let constancy = f.is_constant_for(field);
    let mut warnings = Vec::new();
    if commutator_is_zero && !constancy {
        let bad: Vec<String> = f
            .terms()
            .filter(|(_, c)| !field.derive(c).is_zero())
            .map(|((dl, dm), c)| format!("lambda^{dl}*mu^{dm}: {}", field.render(c)))
            .collect();
        return Err(ModoError::NonconstantCoefficients(bad.join("; ")));
    }
    if !commutator_is_zero {
        warnings.push("NONCOMMUTING_PAIR_WARNING: [L,B] is not zero; f is returned over K".to_string());
    }
    let ell = l.size();
    let n = b.order();
    let a1inv = l.coeff(1).inv().map_err(|_| ModoError::SingularLeadingCoefficient)?;
    let expected = b.coeff(n).det() * a1inv.det().pow(n as u32);
    let degree_mu = f.degree_mu();
    let degree_lambda = f.degree_lambda();
    let leading_mu = f.coeff(0, ell as u32);
    let leading_lambda = f.coeff((n * ell) as u32, 0);
    let sign = if ell % 2 == 0 { Frac::one() } else { -Frac::one() };
    let lambda_ok = if expected.is_zero() {
        (degree_lambda as usize) < n * ell || n == 0
    } else {
        degree_lambda as usize == n * ell && leading_lambda == expected
    };
    let degree_checks_pass = degree_mu as usize == ell && leading_mu == sign && lambda_ok;
    let f_constant = if constancy { f.to_bivar() } else { None };
    Ok(CurveReport {
        f,
        f_constant,
        commutator_is_zero,
        constancy_verified: constancy,
        ell,
        order_b: n,
        degree_mu,
        degree_lambda,
        leading_mu_coeff: leading_mu,
        leading_lambda_coeff: leading_lambda,
        expected_lambda_coeff: expected,
        degree_checks_pass,
        warnings,
    })
}

/// Entry of [`spectral_matrix`] specialised at a point.
pub fn spectral_matrix_at(
    l: &Operator<Frac>,
    b: &Operator<Frac>,
    lambda0: &GaussianRational,
    mu0: &GaussianRational,
    field: &DiffField,
) -> Result<Matrix<Frac>> {
    let size = l.size();
    let shift = |op: &Operator<Frac>, c: &GaussianRational| -> Result<Operator<Frac>> {
        op.try_sub(&Operator::constant(Matrix::scalar(size, Frac::constant(c.clone()))))
    };
    m_matrix(&shift(l, lambda0)?, &shift(b, mu0)?, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::MPoly;
    use crate::scalar::Constants;

    type F = Frac;

    fn c(re: i64, im: i64) -> F {
        F::constant(GaussianRational::from_ints(re, im))
    }

    fn xfield() -> DiffField {
        DiffField::ratfunc("x", MPoly::one()).unwrap()
    }

    #[test]
    fn companion_cases() {
        let a0 = Matrix::from_rows(vec![vec![c(1, 0), c(2, 0)], vec![c(0, 1), c(3, 0)]]).unwrap();
        let p = Operator::from_coeffs(2, vec![a0.clone(), Matrix::identity(2)]).unwrap();
        assert_eq!(companion(&p).unwrap(), -a0);
        let scalar_d = Operator::<F>::d(1);
        assert!(companion(&scalar_d).unwrap().is_zero());
        let q = Operator::<F>::identity(2);
        assert_eq!(companion(&q), Err(ModoError::WrongOrder { expected: 1, found: 0 }));
        let sing = Operator::from_coeffs(2, vec![Matrix::identity(2), Matrix::diag(vec![c(1, 0), c(0, 0)])]).unwrap();
        assert_eq!(companion(&sing), Err(ModoError::SingularLeadingCoefficient));
    }

    #[test]
    fn p_seq_cases() {
        let k = xfield();
        let x = F::var(0);
        let n = Matrix::diag(vec![x.clone(), c(1, 0)]);
        let ps = p_seq(&n, 2, &k);
        assert_eq!(ps[1], n);
        assert_eq!(ps[2], Matrix::diag(vec![x.clone() * x + c(1, 0), c(1, 0)]));
        let lam = Matrix::scalar(1, c(3, 0));
        let ps = p_seq(&lam, 4, &Constants);
        assert_eq!(ps[4], Matrix::scalar(1, c(81, 0)));
    }

    #[test]
    fn trivial_resultants() {
        let k = xfield();
        let x = F::var(0);
        let a0 = Matrix::from_rows(vec![vec![x.clone(), c(1, 0)], vec![c(0, 2), c(0, 0)]]).unwrap();
        let a1 = Matrix::from_rows(vec![vec![c(1, 0), x.clone()], vec![c(0, 0), c(2, 0)]]).unwrap();
        let p = Operator::from_coeffs(2, vec![a0, a1]).unwrap();
        assert!(m_matrix(&p, &p, &k).unwrap().is_zero());
        assert!(dres(&p, &p, &k).unwrap().is_zero());
        assert_eq!(dres(&p, &Operator::identity(2), &k).unwrap(), c(1, 0));
        let m = spectral_matrix(&p, &p, &k).unwrap();
        let diff = SpectralPoly::lambda() - SpectralPoly::mu();
        assert_eq!(m, Matrix::scalar(2, diff.clone()));
        assert_eq!(m.det(), diff.clone() * diff);
    }

    #[test]
    fn scalar_d_squared() {
        let k = xfield();
        let d = Operator::<F>::d(1);
        let d2 = d.pow(2, &k);
        let m = spectral_matrix(&d, &d2, &k).unwrap();
        assert_eq!(m[(0, 0)], SpectralPoly::lambda() * SpectralPoly::lambda() - SpectralPoly::mu());
        let rep = spectral_curve(&d, &d2, &k).unwrap();
        assert_eq!(rep.f_constant.unwrap().render(), "-mu + lambda^2");
        assert!(rep.degree_checks_pass);
    }
}
