//! Points of the spectral curve, common solutions at a point, the ratio
//! `φ = ψ₂/ψ₁` and the Riccati residual for AKNS-shaped pairs.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::diff_field::DiffField;
use crate::dres::{spectral_matrix, spectral_matrix_at, SpectralPoly};
use crate::error::{ModoError, Result};
use crate::frac::Frac;
use crate::matrix::Matrix;
use crate::operator::Operator;
use crate::polyring::BivarPoly;
use crate::scalar::Derivation;
use crate::GaussianRational;

type Op = Operator<Frac>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub lambda0: GaussianRational,
    pub mu0: GaussianRational,
}

impl CurvePoint {
    pub fn new(lambda0: GaussianRational, mu0: GaussianRational) -> Self {
        CurvePoint { lambda0, mu0 }
    }
}

pub fn on_curve(f: &BivarPoly, pt: &CurvePoint) -> bool {
    f.eval(&pt.lambda0, &pt.mu0).is_zero()
}

/// Same test for a curve with constant coefficients in K.
pub fn on_curve_k(f: &SpectralPoly, pt: &CurvePoint) -> bool {
    f.eval(&Frac::constant(pt.lambda0.clone()), &Frac::constant(pt.mu0.clone())).is_zero()
}

#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub matrix: Matrix<Frac>,
    pub rank: usize,
    pub vectors: Vec<Vec<Frac>>,
}

impl KernelBasis {
    pub fn nullity(&self) -> usize {
        self.vectors.len()
    }

    pub fn to_json(&self, field: &DiffField) -> Value {
        let vs: Vec<Vec<String>> = self
            .vectors
            .iter()
            .map(|v| v.iter().map(|e| field.render(e)).collect())
            .collect();
        json!({
            "rank": self.rank,
            "nullity": self.nullity(),
            "vectors": vs,
        })
    }
}

/// Null space of `M(L − λ₀, B − μ₀)` over K.
pub fn kernel_at_point(l: &Op, b: &Op, pt: &CurvePoint, field: &DiffField) -> Result<KernelBasis> {
    let m = spectral_matrix_at(l, b, &pt.lambda0, &pt.mu0, field)?;
    let (rank, vectors) = m.kernel();
    Ok(KernelBasis { matrix: m, rank, vectors })
}

/// `(num, den)` with `φ = num/den = −M₁₁/M₁₂`.
pub fn phi_ratio(l: &Op, b: &Op, field: &DiffField) -> Result<(SpectralPoly, SpectralPoly)> {
    if l.size() != 2 {
        return Err(ModoError::DimensionMismatch(format!("phi needs 2x2 operators, got {}", l.size())));
    }
    let m = spectral_matrix(l, b, field)?;
    let den = m[(0, 1)].clone();
    if den.is_zero() {
        return Err(ModoError::ZeroDenominatorEntry);
    }
    Ok((-m[(0, 0)].clone(), den))
}

/// `(u, v)` with `L = i[[D, u], [v, −D]]`.
pub fn akns_potentials(l: &Op) -> Result<(Frac, Frac)> {
    let i = Frac::constant(GaussianRational::i());
    if l.size() != 2 || l.order() != 1 {
        return Err(ModoError::NotAknsShape);
    }
    let a1 = l.coeff(1);
    let a0 = l.coeff(0);
    let expected = Matrix::diag(vec![i.clone(), -i.clone()]);
    if a1 != expected || !a0[(0, 0)].is_zero() || !a0[(1, 1)].is_zero() {
        return Err(ModoError::NotAknsShape);
    }
    let minus_i = -i;
    Ok((a0[(0, 1)].clone() * minus_i.clone(), a0[(1, 0)].clone() * minus_i))
}

/// `φ′ − uφ² − 2iλφ − v + u·f/M₁₂²` written over the common denominator
/// `M₁₂²`.
#[derive(Clone, Debug, PartialEq)]
pub struct RiccatiResidual {
    pub numerator: SpectralPoly,
    pub denominator: SpectralPoly,
}

impl RiccatiResidual {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

pub fn riccati_residual(l: &Op, b: &Op, field: &DiffField) -> Result<RiccatiResidual> {
    let (u, v) = akns_potentials(l)?;
    let (p, q) = phi_ratio(l, b, field)?;
    let f = spectral_matrix(l, b, field)?.det();
    let k = |c: &Frac| SpectralPoly::constant(c.clone());
    let two_i_lambda = SpectralPoly::monomial(1, 0, Frac::constant(GaussianRational::from_ints(0, 2)));
    let dp: SpectralPoly = Derivation::derive(field, &p);
    let dq: SpectralPoly = Derivation::derive(field, &q);
    // with φ = p/q: q²·(φ′ − uφ² − 2iλφ − v) + u·f
    let numerator = dp * q.clone() - p.clone() * dq - k(&u) * p.clone() * p.clone() - two_i_lambda * p * q.clone()
        - k(&v) * q.clone() * q.clone()
        + k(&u) * f;
    Ok(RiccatiResidual { numerator, denominator: q.clone() * q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::MPoly;
    use num_traits::One;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }
    fn c(re: i64, im: i64) -> Frac {
        Frac::constant(g(re, im))
    }

    fn ex72(field: &DiffField) -> (Op, Op) {
        let _ = field;
        let x = Frac::var(0);
        let i = c(0, 1);
        let l = Operator::from_coeffs(
            2,
            vec![
                Matrix::from_rows(vec![vec![c(0, 0), i.clone() * x.clone()], vec![c(0, 0), c(0, 0)]]).unwrap(),
                Matrix::diag(vec![i.clone(), -i.clone()]),
            ],
        )
        .unwrap();
        let b = Operator::from_coeffs(
            2,
            vec![
                Matrix::from_rows(vec![vec![c(0, 0), c(0, -1)], vec![c(0, 0), c(0, 0)]]).unwrap(),
                Matrix::from_rows(vec![vec![c(0, 0), c(0, -2) * x], vec![c(0, 0), c(0, 0)]]).unwrap(),
                Matrix::diag(vec![c(0, -2), c(0, 2)]),
            ],
        )
        .unwrap();
        (l, b)
    }

    #[test]
    fn points() {
        let f = BivarPoly::mu().pow(2) + BivarPoly::from_int(4) * BivarPoly::lambda().pow(4);
        assert!(on_curve(&f, &CurvePoint::new(g(0, 0), g(0, 0))));
        assert!(!on_curve(&f, &CurvePoint::new(g(1, 0), g(1, 0))));
        assert!(on_curve(&f, &CurvePoint::new(g(1, 0), g(0, 2))));
    }

    #[test]
    fn ex72_kernel_and_phi() {
        let k = DiffField::ratfunc("x", MPoly::one()).unwrap();
        let (l, b) = ex72(&k);
        let kb = kernel_at_point(&l, &b, &CurvePoint::new(g(0, 0), g(0, 0)), &k).unwrap();
        assert!(kb.nullity() >= 1);
        for v in &kb.vectors {
            assert!(kb.matrix.mul_vec(v).iter().all(|e| e.is_zero()));
        }
        let off = kernel_at_point(&l, &b, &CurvePoint::new(g(1, 0), g(1, 0)), &k).unwrap();
        assert_eq!(off.nullity(), 0);
        let (num, den) = phi_ratio(&l, &b, &k).unwrap();
        assert_eq!(num.render(&k), "mu - 2*i*lambda^2");
        assert_eq!(den.render(&k), "2*x*lambda + i");
        assert!(riccati_residual(&l, &b, &k).unwrap().is_zero());
    }

    #[test]
    fn same_operator_full_kernel() {
        let k = DiffField::ratfunc("x", MPoly::one()).unwrap();
        let (l, _) = ex72(&k);
        let kb = kernel_at_point(&l, &l, &CurvePoint::new(g(3, 1), g(3, 1)), &k).unwrap();
        assert_eq!(kb.nullity(), 2);
    }

    #[test]
    fn shape_check() {
        let k = DiffField::ratfunc("x", MPoly::one()).unwrap();
        let d = Operator::<Frac>::d(2);
        assert_eq!(riccati_residual(&d, &d, &k), Err(ModoError::NotAknsShape));
    }
}
