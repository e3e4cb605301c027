//! Burchnall–Chaundy polynomials, minimal exponents and the generator
//! of the BC ideal.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::diff_field::DiffField;
use crate::dres::{spectral_curve, CurveReport, SpectralPoly};
use crate::error::{ModoError, Result};
use crate::frac::Frac;
use crate::operator::{op_eval_terms, ModoRing, Operator};
use crate::parser::render_operator;
use crate::polyring::{bp_factor, univariate_sqrt, verify_user_factorization, BivarPoly};
use crate::scalar::{Field, Ring};

type Op = Operator<Frac>;

/// Where the factors of `f` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSource {
    Builtin,
    User,
    /// μ-quadratic split over K[λ] for curves with non-rational constant
    /// coefficients.
    Discriminant,
}

impl FactorSource {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorSource::Builtin => "builtin",
            FactorSource::User => "user",
            FactorSource::Discriminant => "discriminant",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BcFactor {
    pub poly: SpectralPoly,
    pub sigma: u32,
    pub r: u32,
}

#[derive(Clone, Debug)]
pub struct BCReport {
    pub f: SpectralPoly,
    pub f_is_bc: bool,
    pub f_red: SpectralPoly,
    pub unit: Frac,
    pub factors: Vec<BcFactor>,
    pub big_f: SpectralPoly,
    /// `(h_i, r_i)` for the components `C[λ,μ]/(h_i^{r_i})`.
    pub decomposition: Vec<(SpectralPoly, u32)>,
    /// `μ − R(λ)` when `B = R(L)`.
    pub trivial_case: Option<SpectralPoly>,
    pub source: FactorSource,
}

/// Canonical string of a spectral polynomial; Q(i) coefficients print the
/// same way as [`BivarPoly::render`].
pub fn render_poly(p: &SpectralPoly, field: &DiffField) -> String {
    match p.to_bivar() {
        Some(b) => b.render(),
        None => p.render(field),
    }
}

fn quotient(h: &SpectralPoly, r: u32, field: &DiffField) -> String {
    let hs = render_poly(h, field);
    if r == 1 {
        format!("C[lambda,mu]/({hs})")
    } else {
        format!("C[lambda,mu]/(({hs})^{r})")
    }
}

impl BCReport {
    pub fn decomposition_strings(&self, field: &DiffField) -> Vec<String> {
        self.decomposition.iter().map(|(h, r)| quotient(h, *r, field)).collect()
    }

    pub fn to_json(&self, field: &DiffField) -> Value {
        let factors: Vec<Value> = self
            .factors
            .iter()
            .map(|h| json!({ "poly": render_poly(&h.poly, field), "sigma": h.sigma, "r": h.r }))
            .collect();
        json!({
            "f": render_poly(&self.f, field),
            "f_is_bc": self.f_is_bc,
            "f_red": render_poly(&self.f_red, field),
            "unit": field.render(&self.unit),
            "factors": factors,
            "F": render_poly(&self.big_f, field),
            "decomposition": self.decomposition_strings(field),
            "trivial_case": self.trivial_case.as_ref().map(|h| render_poly(h, field)),
            "factorization": self.source.as_str(),
        })
    }
}

fn eval(g: &SpectralPoly, l: &Op, b: &Op, ring: &ModoRing<'_>) -> Result<Op> {
    let terms: Vec<_> = g.terms().map(|(k, c)| (k, c.clone())).collect();
    op_eval_terms(&terms, l, b, ring)
}

/// `g(L, B) = 0`.
pub fn is_bc(g: &SpectralPoly, l: &Op, b: &Op, field: &DiffField) -> Result<bool> {
    let ring = ModoRing::new(field, l.size());
    if !ring.commutes(l, b)? {
        return Err(ModoError::NoncommutingPair);
    }
    Ok(eval(g, l, b, &ring)?.is_zero())
}

pub fn is_bc_poly(g: &BivarPoly, l: &Op, b: &Op, field: &DiffField) -> Result<bool> {
    is_bc(&SpectralPoly::from_bivar(g), l, b, field)
}

fn product(ops: &[Op], exps: &[u32], size: usize, field: &DiffField) -> Result<Op> {
    let mut acc = Operator::identity(size);
    for (h, e) in ops.iter().zip(exps) {
        for _ in 0..*e {
            acc = acc.mul(h, field)?;
        }
    }
    Ok(acc)
}

/// Smallest `r_i ≤ σ_i` with the other exponents pinned at `σ`, followed by
/// a joint check of `Π h_i^{r_i}(L, B) = 0`.
pub fn minimal_exponents(factors: &[(SpectralPoly, u32)], l: &Op, b: &Op, field: &DiffField) -> Result<Vec<u32>> {
    let size = l.size();
    let ring = ModoRing::new(field, size);
    if !ring.commutes(l, b)? {
        return Err(ModoError::NoncommutingPair);
    }
    let hs: Vec<Op> = factors.iter().map(|(h, _)| eval(h, l, b, &ring)).collect::<Result<_>>()?;
    let sigma: Vec<u32> = factors.iter().map(|(_, s)| *s).collect();
    let mut r = Vec::with_capacity(factors.len());
    for i in 0..factors.len() {
        let mut exps = sigma.clone();
        let mut found = sigma[i];
        for k in 1..sigma[i] {
            exps[i] = k;
            if product(&hs, &exps, size, field)?.is_zero() {
                found = k;
                break;
            }
        }
        r.push(found);
    }
    if !product(&hs, &r, size, field)?.is_zero() {
        return Err(ModoError::JointMinimalityFailure);
    }
    Ok(r)
}

/// `R` with `B = R(L)` and differentially constant coefficients, if any.
pub fn polynomial_in_l(l: &Op, b: &Op, field: &DiffField) -> Option<Vec<Frac>> {
    if l.order() != 1 || l.size() != b.size() {
        return None;
    }
    let n = b.order();
    let mut lpow = vec![Operator::identity(l.size())];
    for k in 1..=n {
        lpow.push(lpow[k - 1].mul(l, field).ok()?);
    }
    let mut rest = b.clone();
    let mut coeffs = vec![Frac::zero(); n + 1];
    for k in (0..=n).rev() {
        if rest.is_zero() {
            break;
        }
        if rest.order() > k {
            return None;
        }
        if rest.order() < k {
            continue;
        }
        let target = rest.coeff(k);
        let lead = lpow[k].coeff(k);
        let pos = lead.entries().iter().position(|e| !e.is_zero())?;
        let c = target.entries()[pos].clone() * lead.entries()[pos].inv()?;
        if !field.derive(&c).is_zero() || lead.scale(&c) != target {
            return None;
        }
        rest = rest.try_sub(&lpow[k].scale(&c)).ok()?;
        coeffs[k] = c;
    }
    rest.is_zero().then_some(coeffs)
}

/// μ-quadratic factor split over K[λ] when the leading μ-coefficient is a
/// nonzero element of K. Returns `None` when the shape is out of reach.
fn split_over_k(f: &SpectralPoly) -> Option<(Frac, Vec<(SpectralPoly, u32)>)> {
    let dm = f.degree_mu();
    let lam_coeffs = |j: u32| -> Vec<Frac> {
        let mut v = vec![Frac::zero(); f.degree_lambda() as usize + 1];
        for ((dl, m), c) in f.terms() {
            if m == j {
                v[dl as usize] = c.clone();
            }
        }
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    };
    let lead = lam_coeffs(dm);
    if lead.len() != 1 {
        return None;
    }
    let a = lead[0].clone();
    let ainv = a.inv()?;
    let monic = f.scale(&ainv);
    match dm {
        1 => Some((a, vec![(monic, 1)])),
        2 => {
            let b = lam_coeffs(1);
            let c = lam_coeffs(0);
            let len = b.len().max(c.len()) * 2;
            let mut disc = vec![Frac::zero(); len + 1];
            for (i, x) in b.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    disc[i + j] = disc[i + j].clone() + x.clone() * y.clone();
                }
            }
            let four_a = Frac::from_i64(4) * a.clone();
            for (i, x) in c.iter().enumerate() {
                disc[i] = disc[i].clone() - four_a.clone() * x.clone();
            }
            while disc.last().is_some_and(|c| c.is_zero()) {
                disc.pop();
            }
            let Some(s) = univariate_sqrt(&disc) else {
                return Some((a, vec![(monic, 1)]));
            };
            // roots (−b ± s)/(2a)
            let half = (Frac::from_i64(2) * a.clone()).inv()?;
            let poly = |v: &[Frac]| SpectralPoly::from_terms(v.iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())));
            let bp = poly(&b);
            let sp = poly(&s);
            let h1 = SpectralPoly::mu() + (bp.clone() - sp.clone()).scale(&half);
            let h2 = SpectralPoly::mu() + (bp + sp).scale(&half);
            if h1 == h2 {
                Some((a, vec![(h1, 2)]))
            } else {
                Some((a, vec![(h1, 1), (h2, 1)]))
            }
        }
        _ => None,
    }
}

type Factored = (Frac, Vec<(SpectralPoly, u32)>, FactorSource);

fn factor_f(
    curve: &CurveReport,
    user: Option<&[(BivarPoly, u32)]>,
) -> Result<Factored> {
    match (&curve.f_constant, user) {
        (Some(f), Some(fs)) => {
            let fz = verify_user_factorization(f, fs)?;
            Ok((Frac::constant(fz.unit), lift(fz.factors), FactorSource::User))
        }
        (Some(f), None) => {
            let fz = bp_factor(f)?;
            Ok((Frac::constant(fz.unit), lift(fz.factors), FactorSource::Builtin))
        }
        (None, _) => match split_over_k(&curve.f) {
            Some((unit, fs)) => Ok((unit, fs, FactorSource::Discriminant)),
            None => Err(ModoError::UnsupportedFactorization(format!(
                "curve with non-rational coefficients of mu-degree {}",
                curve.f.degree_mu()
            ))),
        },
    }
}

fn lift(fs: Vec<(BivarPoly, u32)>) -> Vec<(SpectralPoly, u32)> {
    fs.into_iter().map(|(h, k)| (SpectralPoly::from_bivar(&h), k)).collect()
}

/// Spectral curve, BC test on `f`, factorization, minimal exponents and
/// the generator `F = Π h_i^{r_i}`.
pub fn bc_generator(l: &Op, b: &Op, field: &DiffField, user: Option<&[(BivarPoly, u32)]>) -> Result<BCReport> {
    let curve = spectral_curve(l, b, field)?;
    bc_generator_from_curve(&curve, l, b, field, user)
}

pub fn bc_generator_from_curve(
    curve: &CurveReport,
    l: &Op,
    b: &Op,
    field: &DiffField,
    user: Option<&[(BivarPoly, u32)]>,
) -> Result<BCReport> {
    if !curve.commutator_is_zero {
        return Err(ModoError::NoncommutingPair);
    }
    let ring = ModoRing::new(field, l.size());
    let at_pair = eval(&curve.f, l, b, &ring)?;
    if !at_pair.is_zero() {
        return Err(ModoError::ConjectureViolation { operator: render_operator(&at_pair, field) });
    }
    let (unit, factors, source) = factor_f(curve, user)?;
    let r = minimal_exponents(&factors, l, b, field)?;
    let f_red = factors.iter().fold(SpectralPoly::one(), |acc, (h, _)| acc * h.clone());
    let big_f = factors
        .iter()
        .zip(&r)
        .fold(SpectralPoly::one(), |acc, ((h, _), e)| acc * h.pow(*e));
    let trivial_case = polynomial_in_l(l, b, field).map(|rc| {
        let rl = SpectralPoly::from_terms(rc.into_iter().enumerate().map(|(k, c)| ((k as u32, 0), c)));
        SpectralPoly::mu() - rl
    });
    let decomposition = factors.iter().zip(&r).map(|((h, _), e)| (h.clone(), *e)).collect();
    let factors = factors
        .into_iter()
        .zip(r)
        .map(|((poly, sigma), r)| BcFactor { poly, sigma, r })
        .collect();
    Ok(BCReport {
        f: curve.f.clone(),
        f_is_bc: true,
        f_red,
        unit,
        factors,
        big_f,
        decomposition,
        trivial_case,
        source,
    })
}
