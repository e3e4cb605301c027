//! Differential coefficient fields: rational functions in one generator
//! with a prescribed derivative, or fractions of differential polynomials
//! modulo top-jet rewrite rules.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::{ModoError, Result};
use crate::frac::Frac;
use crate::mpoly::{MPoly, Monomial};
use crate::scalar::{Coeff, Derivation};
use crate::GaussianRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    RatFunc,
    DiffPoly,
}

/// `sym^(order) -> rhs`, with `rhs` a polynomial in jet variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule<C> {
    pub symbol: usize,
    pub order: u32,
    pub rhs: MPoly<C>,
}

enum Kind<C> {
    RatFunc {
        generator: String,
        derivative: MPoly<C>,
    },
    DiffPoly {
        symbols: Vec<String>,
        // threshold order per symbol and its (fully reduced) right-hand side
        rules: Vec<Option<(u32, MPoly<C>)>>,
        prolonged: RwLock<HashMap<(usize, u32), MPoly<C>>>,
    },
}

struct Inner<C> {
    kind: Kind<C>,
}

/// A differential field K. Cheap to clone; elements are plain [`Frac`]
/// values and the field is passed alongside them.
#[derive(Clone)]
pub struct DiffField<C = GaussianRational>(Arc<Inner<C>>);

impl<C: Coeff> DiffField<C> {
    /// Q(i)(g) with `g' = derivative(g)`; the generator is variable 0.
    pub fn ratfunc(generator: &str, derivative: MPoly<C>) -> Result<Self> {
        if derivative.vars().iter().any(|&v| v != 0) {
            return Err(ModoError::DimensionMismatch(
                "generator derivative must be a polynomial in the generator".into(),
            ));
        }
        Ok(DiffField(Arc::new(Inner {
            kind: Kind::RatFunc { generator: generator.to_string(), derivative },
        })))
    }

    /// Fractions of differential polynomials in `symbols`. Jet `(s, k)` is
    /// variable `k * symbols.len() + s`.
    pub fn diffpoly(symbols: &[&str], rules: Vec<Rule<C>>) -> Result<Self> {
        let n = symbols.len();
        let mut table: Vec<Option<(u32, MPoly<C>)>> = vec![None; n];
        for r in rules {
            if r.symbol >= n {
                return Err(ModoError::DimensionMismatch(format!("rule for unknown symbol {}", r.symbol)));
            }
            if table[r.symbol].is_some() {
                return Err(ModoError::DimensionMismatch(format!(
                    "two rules rewrite {}",
                    symbols[r.symbol]
                )));
            }
            if r.order == 0 {
                return Err(ModoError::DimensionMismatch("rule must rewrite a derivative".into()));
            }
            table[r.symbol] = Some((r.order, r.rhs));
        }
        let field = DiffField(Arc::new(Inner {
            kind: Kind::DiffPoly {
                symbols: symbols.iter().map(|s| s.to_string()).collect(),
                rules: table.clone(),
                prolonged: RwLock::new(HashMap::new()),
            },
        }));
        // reduce every right-hand side by the other rules, then check it
        // stays below its own threshold
        let mut reduced = table.clone();
        for (s, entry) in table.iter().enumerate() {
            if let Some((m, rhs)) = entry {
                let r = field.reduce_poly_bounded(rhs, 64)?;
                if r.vars().iter().any(|&v| v % n == s && (v / n) as u32 >= *m) {
                    return Err(ModoError::DimensionMismatch(format!(
                        "rule for {} is not solved for its top jet",
                        symbols[s]
                    )));
                }
                reduced[s] = Some((*m, r));
            }
        }
        Ok(DiffField(Arc::new(Inner {
            kind: Kind::DiffPoly {
                symbols: symbols.iter().map(|s| s.to_string()).collect(),
                rules: reduced,
                prolonged: RwLock::new(HashMap::new()),
            },
        })))
    }

    pub fn backend(&self) -> Backend {
        match &self.0.kind {
            Kind::RatFunc { .. } => Backend::RatFunc,
            Kind::DiffPoly { .. } => Backend::DiffPoly,
        }
    }

    /// Same underlying field (pointer identity).
    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn generator_name(&self) -> Option<&str> {
        match &self.0.kind {
            Kind::RatFunc { generator, .. } => Some(generator),
            Kind::DiffPoly { .. } => None,
        }
    }

    pub fn generator_derivative(&self) -> Option<&MPoly<C>> {
        match &self.0.kind {
            Kind::RatFunc { derivative, .. } => Some(derivative),
            Kind::DiffPoly { .. } => None,
        }
    }

    pub fn symbols(&self) -> &[String] {
        match &self.0.kind {
            Kind::RatFunc { .. } => &[],
            Kind::DiffPoly { symbols, .. } => symbols,
        }
    }

    pub fn rules(&self) -> Vec<Rule<C>> {
        match &self.0.kind {
            Kind::RatFunc { .. } => Vec::new(),
            Kind::DiffPoly { rules, .. } => rules
                .iter()
                .enumerate()
                .filter_map(|(s, r)| r.as_ref().map(|(m, rhs)| Rule { symbol: s, order: *m, rhs: rhs.clone() }))
                .collect(),
        }
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols().iter().position(|s| s == name)
    }

    pub fn jet_index(&self, symbol: usize, order: u32) -> usize {
        order as usize * self.symbols().len() + symbol
    }

    /// The generator as a field element (rational-function backend).
    pub fn generator(&self) -> Option<Frac<C>> {
        match &self.0.kind {
            Kind::RatFunc { .. } => Some(Frac::var(0)),
            Kind::DiffPoly { .. } => None,
        }
    }

    /// `symbol^(order)`, already reduced.
    pub fn jet(&self, symbol: usize, order: u32) -> Frac<C> {
        Frac::from_poly(self.jet_poly(symbol, order))
    }

    pub fn var_name(&self, index: usize) -> String {
        match &self.0.kind {
            Kind::RatFunc { generator, .. } => {
                if index == 0 {
                    generator.clone()
                } else {
                    format!("_{index}")
                }
            }
            Kind::DiffPoly { symbols, .. } => {
                let n = symbols.len();
                format!("{}{}", symbols[index % n], "'".repeat(index / n))
            }
        }
    }

    pub fn render(&self, a: &Frac<C>) -> String {
        a.render(&|i| self.var_name(i))
    }

    fn jet_poly(&self, symbol: usize, order: u32) -> MPoly<C> {
        match &self.0.kind {
            Kind::DiffPoly { rules, .. } => match &rules[symbol] {
                Some((m, _)) if order >= *m => self.prolonged(symbol, order),
                _ => MPoly::var(self.jet_index(symbol, order)),
            },
            Kind::RatFunc { .. } => unreachable!("jets only exist in the diffpoly backend"),
        }
    }

    fn prolonged(&self, symbol: usize, order: u32) -> MPoly<C> {
        let Kind::DiffPoly { rules, prolonged, .. } = &self.0.kind else { unreachable!() };
        if let Some(p) = prolonged.read().expect("cache lock").get(&(symbol, order)) {
            return p.clone();
        }
        let (m, rhs) = rules[symbol].as_ref().expect("rule exists");
        let p = if order == *m {
            rhs.clone()
        } else {
            self.derive_poly(&self.prolonged(symbol, order - 1))
        };
        prolonged.write().expect("cache lock").insert((symbol, order), p.clone());
        p
    }

    /// Derivative of a reduced polynomial, again reduced.
    pub fn derive_poly(&self, p: &MPoly<C>) -> MPoly<C> {
        match &self.0.kind {
            Kind::RatFunc { derivative, .. } => {
                if p.is_constant() {
                    MPoly::zero()
                } else {
                    &p.partial(0) * derivative
                }
            }
            Kind::DiffPoly { symbols, .. } => {
                let n = symbols.len();
                let mut out = MPoly::zero();
                for v in p.vars() {
                    let d = p.partial(v);
                    let next = self.jet_poly(v % n, (v / n) as u32 + 1);
                    out = out + &d * &next;
                }
                out
            }
        }
    }

    fn reduce_poly_bounded(&self, p: &MPoly<C>, max_rounds: usize) -> Result<MPoly<C>> {
        let Kind::DiffPoly { symbols, rules, .. } = &self.0.kind else {
            return Ok(p.clone());
        };
        let n = symbols.len();
        let mut cur = p.clone();
        for _ in 0..max_rounds {
            // innermost first: the highest reducible jet of the lowest order
            let target = cur.vars().into_iter().find(|&v| {
                matches!(&rules[v % n], Some((m, _)) if (v / n) as u32 >= *m)
            });
            let Some(v) = target else { return Ok(cur) };
            let (s, k) = (v % n, (v / n) as u32);
            let (m, rhs) = rules[s].as_ref().unwrap();
            let mut value = rhs.clone();
            for _ in *m..k {
                value = self.derive_poly_raw(&value);
            }
            cur = cur.substitute(v, &value);
        }
        Err(ModoError::DimensionMismatch("rewrite rules do not terminate".into()))
    }

    // jet shift without reduction, used while validating rules
    fn derive_poly_raw(&self, p: &MPoly<C>) -> MPoly<C> {
        let n = self.symbols().len();
        let mut out = MPoly::zero();
        for v in p.vars() {
            out = out + &p.partial(v) * &MPoly::var(v + n);
        }
        out
    }

    /// Normal form of a polynomial: no jet at or above its threshold.
    pub fn reduce_poly(&self, p: &MPoly<C>) -> MPoly<C> {
        match &self.0.kind {
            Kind::RatFunc { .. } => p.clone(),
            Kind::DiffPoly { symbols, rules, .. } => {
                let n = symbols.len();
                let mut cur = p.clone();
                loop {
                    let target = cur.vars().into_iter().find(|&v| {
                        matches!(&rules[v % n], Some((m, _)) if (v / n) as u32 >= *m)
                    });
                    let Some(v) = target else { return cur };
                    let value = self.prolonged(v % n, (v / n) as u32);
                    cur = cur.substitute(v, &value);
                }
            }
        }
    }

    pub fn reduce(&self, a: &Frac<C>) -> Frac<C> {
        match self.backend() {
            Backend::RatFunc => a.clone(),
            Backend::DiffPoly => {
                let num = self.reduce_poly(a.num());
                let den = self.reduce_poly(a.den());
                // a reduced denominator could only vanish if the input was
                // already zero modulo the rules
                Frac::new(num, den).unwrap_or_else(|_| Frac::zero())
            }
        }
    }

    /// Quotient rule on the reduced numerator and denominator.
    pub fn derive(&self, a: &Frac<C>) -> Frac<C> {
        if a.num().is_constant() && a.den().is_one() {
            return Frac::zero();
        }
        let a = self.reduce(a);
        let dn = self.derive_poly(a.num());
        if a.den().is_one() {
            return Frac::from_poly(dn);
        }
        let dd = self.derive_poly(a.den());
        let num = &dn * a.den() - a.num() * &dd;
        let den = a.den() * a.den();
        Frac::new(num, den).expect("nonzero denominator")
    }

    pub fn is_constant(&self, a: &Frac<C>) -> bool {
        self.derive(a).is_zero()
    }
}

impl<C: Coeff> Derivation<Frac<C>> for DiffField<C> {
    fn derive(&self, a: &Frac<C>) -> Frac<C> {
        DiffField::derive(self, a)
    }
}

impl<C: Coeff> fmt::Debug for DiffField<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::RatFunc { generator, derivative } => write!(
                f,
                "ratfunc d({generator}) = {}",
                derivative.render(&|_| generator.clone(), crate::mpoly::TermOrder::Graded)
            ),
            Kind::DiffPoly { symbols, .. } => {
                write!(f, "diffpoly vars={}", symbols.join(","))?;
                for r in self.rules() {
                    write!(
                        f,
                        "; rule {}{} = {}",
                        symbols[r.symbol],
                        "'".repeat(r.order as usize),
                        r.rhs.render(&|i| self.var_name(i), crate::mpoly::TermOrder::Graded)
                    )?;
                }
                Ok(())
            }
        }
    }
}

/// Monomial helper for building jet polynomials in tests and fixtures.
pub fn jet_monomial(nsyms: usize, jets: &[(usize, u32, u32)]) -> Monomial {
    let mut m = Monomial::one();
    for &(s, k, e) in jets {
        m = m.mul(&Monomial::var(k as usize * nsyms + s, e));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as Q;

    type F = Frac<Q>;

    fn c(re: i64, im: i64) -> F {
        F::constant(Q::from_ints(re, im))
    }

    pub(crate) fn nls() -> DiffField<Q> {
        // u'' = -2 u^2 v, v'' = -2 v^2 u with u = var 0, v = var 1
        let u = MPoly::<Q>::var(0);
        let v = MPoly::<Q>::var(1);
        let m2 = MPoly::constant(Q::from(-2));
        DiffField::diffpoly(
            &["u", "v"],
            vec![
                Rule { symbol: 0, order: 2, rhs: &(&m2 * &(&u * &u)) * &v },
                Rule { symbol: 1, order: 2, rhs: &(&m2 * &(&v * &v)) * &u },
            ],
        )
        .unwrap()
    }

    #[test]
    fn ratfunc_derivatives() {
        let k = DiffField::ratfunc("x", MPoly::one()).unwrap();
        let x = k.generator().unwrap();
        assert_eq!(k.derive(&(x.clone() * x.clone())), c(2, 0) * x.clone());
        let t_field = DiffField::ratfunc("t", MPoly::var(0).scale(&Q::from_ints(0, 2))).unwrap();
        let t = t_field.generator().unwrap();
        let tinv = c(1, 0) / t.clone();
        // (1/t)' = -t'/t^2 = -2i/t
        assert_eq!(t_field.derive(&tinv), c(0, -2) / t.clone());
        assert_eq!(tinv * t.clone() * t.clone(), t);
        assert!(k.derive(&c(3, 7)).is_zero());
    }

    #[test]
    fn nls_rewriting() {
        let k = nls();
        let u = k.jet(0, 0);
        let v = k.jet(1, 0);
        let u1 = k.jet(0, 1);
        let v1 = k.jet(1, 1);
        assert_eq!(k.derive(&u1), c(-2, 0) * u.clone() * u.clone() * v.clone());
        assert_eq!(k.reduce(&u1), u1);
        let u3 = k.jet(0, 3);
        let expect = c(-4, 0) * u.clone() * u1.clone() * v.clone() - c(2, 0) * u.clone() * u.clone() * v1.clone();
        assert_eq!(u3, expect);
        let raw = F::var(k.jet_index(0, 2)) * F::var(k.jet_index(1, 2));
        assert_eq!(
            k.reduce(&raw),
            c(4, 0) * u.clone().pow_n(3) * v.clone().pow_n(3)
        );
        assert_eq!(k.render(&u1), "u'");
    }

    #[test]
    fn first_integrals() {
        let k = nls();
        let (u, v, u1, v1) = (k.jet(0, 0), k.jet(1, 0), k.jet(0, 1), k.jet(1, 1));
        let i_a = u.clone() * u.clone() * v.clone() * v.clone() + u1.clone() * v1.clone();
        let i_b = c(0, -2) * v1 * u + c(0, 2) * u1 * v;
        assert!(k.derive(&i_a).is_zero());
        assert!(k.derive(&i_b).is_zero());
    }

    #[test]
    fn bad_rules_rejected() {
        let u2 = MPoly::<Q>::var(4);
        assert!(DiffField::diffpoly(&["u", "v"], vec![Rule { symbol: 0, order: 2, rhs: u2 }]).is_err());
        let ok = Rule { symbol: 0, order: 1, rhs: MPoly::<Q>::var(0) };
        assert!(DiffField::diffpoly(&["u"], vec![ok.clone(), ok]).is_err());
    }

    trait PowN {
        fn pow_n(self, n: u32) -> Self;
    }
    impl PowN for F {
        fn pow_n(self, n: u32) -> F {
            crate::scalar::Ring::pow(&self, n)
        }
    }
}
