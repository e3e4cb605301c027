//! Session configs and the expression evaluator.

use std::collections::HashMap;

use num_traits::Zero;

use super::ast::{parse_expr_tokens, BinOp, Cursor, Expr, ExprKind};
use super::error::{ParseError, ParseErrorKind};
use super::lexer::{lex, Pos, Tok};
use crate::diff_field::{DiffField, Rule};
use crate::dres::SpectralPoly;
use crate::frac::Frac;
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::operator::Operator;
use crate::polyring::BivarPoly;
use crate::scalar::{Field, Ring};
use crate::GaussianRational;

type Op = Operator<Frac>;

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Elem(Frac),
    /// Polynomial in λ, μ over K.
    Poly(SpectralPoly),
    /// Operator; size 1 for scalar operators.
    Op(Op),
}

fn err(kind: ParseErrorKind, pos: Pos, msg: impl Into<String>) -> ParseError {
    ParseError::new(kind, pos, msg)
}

fn syntax(pos: Pos, msg: impl Into<String>) -> ParseError {
    err(ParseErrorKind::Syntax, pos, msg)
}

/// Names that cannot be declared.
pub const RESERVED: &[&str] = &["i", "D", "lambda", "mu"];

pub struct Evaluator<'a> {
    pub field: &'a DiffField,
    pub lets: &'a HashMap<String, Value>,
}

fn embed(op: &Op, size: usize) -> Op {
    if op.size() == size {
        return op.clone();
    }
    let coeffs = op.coeffs().iter().map(|a| Matrix::scalar(size, a[(0, 0)].clone())).collect();
    Operator::from_coeffs(size, coeffs).expect("sizes agree")
}

impl Evaluator<'_> {
    pub fn eval(&self, e: &Expr) -> Result<Value, ParseError> {
        match &e.kind {
            ExprKind::Num(n) => Ok(Value::Elem(Frac::from_bigint(n))),
            ExprKind::Sym(name, primes) => self.symbol(name, *primes, e.pos),
            ExprKind::Neg(inner) => Ok(match self.eval(inner)? {
                Value::Elem(a) => Value::Elem(-a),
                Value::Poly(p) => Value::Poly(-p),
                Value::Op(o) => Value::Op(o.neg()),
            }),
            ExprKind::Bin(op, l, r) => {
                let a = self.eval(l)?;
                let b = self.eval(r)?;
                self.binary(*op, a, b, e.pos)
            }
            ExprKind::Pow(base, k) => {
                let b = self.eval(base)?;
                self.power(b, *k, e.pos)
            }
            ExprKind::Matrix(rows) => self.matrix(rows, e.pos),
        }
    }

    fn symbol(&self, name: &str, primes: u32, pos: Pos) -> Result<Value, ParseError> {
        let base = match name {
            "i" => Value::Elem(Frac::constant(GaussianRational::i())),
            "D" => Value::Op(Operator::d(1)),
            "lambda" => Value::Poly(SpectralPoly::lambda()),
            "mu" => Value::Poly(SpectralPoly::mu()),
            _ => {
                if let Some(v) = self.lets.get(name) {
                    v.clone()
                } else if self.field.generator_name() == Some(name) {
                    Value::Elem(self.field.generator().expect("ratfunc"))
                } else if let Some(s) = self.field.symbol_index(name) {
                    return Ok(Value::Elem(self.field.jet(s, primes)));
                } else {
                    return Err(err(ParseErrorKind::UndeclaredSymbol, pos, format!("undeclared symbol '{name}'")));
                }
            }
        };
        let mut v = base;
        for _ in 0..primes {
            v = match v {
                Value::Elem(a) => Value::Elem(self.field.derive(&a)),
                Value::Poly(p) => Value::Poly(crate::scalar::Derivation::derive(self.field, &p)),
                Value::Op(_) => return Err(syntax(pos, format!("cannot differentiate operator '{name}'"))),
            };
        }
        Ok(v)
    }

    fn binary(&self, op: BinOp, a: Value, b: Value, pos: Pos) -> Result<Value, ParseError> {
        use Value::*;
        if op == BinOp::Div {
            let inv = match b {
                Elem(d) => d.inv().ok_or_else(|| syntax(pos, "division by zero"))?,
                Poly(p) => match (p.degree_mu(), p.degree_lambda(), p.terms().next()) {
                    (0, 0, Some((_, c))) => c.inv().expect("nonzero"),
                    (0, 0, None) => return Err(syntax(pos, "division by zero")),
                    _ => return Err(syntax(pos, "division by a polynomial in lambda, mu")),
                },
                Op(_) => return Err(syntax(pos, "division by an operator")),
            };
            return self.binary(BinOp::Mul, a, Elem(inv), pos);
        }
        match (a, b) {
            (Elem(x), Elem(y)) => Ok(Elem(match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                _ => x * y,
            })),
            (Poly(_), Op(_)) | (Op(_), Poly(_)) => {
                Err(syntax(pos, "lambda and mu cannot be mixed with operators"))
            }
            (x @ (Elem(_) | Poly(_)), y @ (Elem(_) | Poly(_))) => {
                let (p, q) = (to_poly(x), to_poly(y));
                Ok(Poly(match op {
                    BinOp::Add => p + q,
                    BinOp::Sub => p - q,
                    _ => p * q,
                }))
            }
            (x, y) => {
                let size = match (&x, &y) {
                    (Op(p), Op(q)) => p.size().max(q.size()),
                    (Op(p), _) | (_, Op(p)) => p.size(),
                    _ => unreachable!(),
                };
                let p = self.to_op(x, size, pos)?;
                let q = self.to_op(y, size, pos)?;
                let r = match op {
                    BinOp::Add => p.try_add(&q),
                    BinOp::Sub => p.try_sub(&q),
                    _ => p.mul(&q, self.field),
                };
                r.map(Op).map_err(|e| err(ParseErrorKind::DimensionMismatch, pos, e.to_string()))
            }
        }
    }

    fn to_op(&self, v: Value, size: usize, pos: Pos) -> Result<Op, ParseError> {
        match v {
            Value::Elem(a) => Ok(Operator::constant(Matrix::scalar(size, a))),
            Value::Op(o) if o.size() == size => Ok(o),
            Value::Op(o) if o.size() == 1 || o.is_zero() => Ok(embed(&o, size)),
            Value::Op(o) => Err(err(
                ParseErrorKind::DimensionMismatch,
                pos,
                format!("operators of sizes {} and {size}", o.size()),
            )),
            Value::Poly(_) => Err(syntax(pos, "lambda and mu cannot be mixed with operators")),
        }
    }

    fn power(&self, b: Value, k: i64, pos: Pos) -> Result<Value, ParseError> {
        match b {
            Value::Elem(a) => {
                if k >= 0 {
                    Ok(Value::Elem(a.pow(k as u32)))
                } else {
                    let inv = a.inv().ok_or_else(|| syntax(pos, "division by zero"))?;
                    Ok(Value::Elem(inv.pow((-k) as u32)))
                }
            }
            _ if k < 0 => Err(syntax(pos, "negative exponent on a polynomial or operator")),
            Value::Poly(p) => Ok(Value::Poly(p.pow(k as u32))),
            Value::Op(o) => Ok(Value::Op(o.pow(k as u32, self.field))),
        }
    }

    fn matrix(&self, rows: &[Vec<Expr>], pos: Pos) -> Result<Value, ParseError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(err(
                    ParseErrorKind::DimensionMismatch,
                    row.first().map_or(pos, |e| e.pos),
                    format!("matrix has {n} rows but a row of length {}", row.len()),
                ));
            }
            for e in row {
                let entry = match self.eval(e)? {
                    Value::Elem(a) => Operator::constant(Matrix::scalar(1, a)),
                    Value::Op(o) if o.size() == 1 || o.is_zero() => o,
                    Value::Op(_) => return Err(err(ParseErrorKind::DimensionMismatch, e.pos, "matrix entry is itself a matrix")),
                    Value::Poly(_) => return Err(syntax(e.pos, "lambda and mu cannot appear in an operator")),
                };
                entries.push(entry);
            }
        }
        let order = entries.iter().filter(|o| !o.is_zero()).map(|o| o.order()).max().unwrap_or(0);
        let coeffs = (0..=order)
            .map(|k| Matrix::from_fn(n, |i, j| entries[i * n + j].coeff(k)[(0, 0)].clone()))
            .collect();
        Ok(Value::Op(Operator::from_coeffs(n, coeffs).expect("square")))
    }
}

fn to_poly(v: Value) -> SpectralPoly {
    match v {
        Value::Elem(a) => SpectralPoly::constant(a),
        Value::Poly(p) => p,
        Value::Op(_) => unreachable!(),
    }
}

/// Parsed `field`, `let`, `operator`, `factor` and `ell` statements.
#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub field: DiffField,
    pub ell: usize,
    pub operators: Vec<(String, Op)>,
    pub lets: Vec<(String, Value)>,
    /// User factorization of the spectral curve, `(h, multiplicity)`.
    pub factors: Vec<(BivarPoly, u32)>,
}

impl SessionConfig {
    pub fn operator(&self, name: &str) -> Option<&Op> {
        self.operators.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    /// `L` and `B` by name, falling back to the first two operators.
    pub fn pair(&self) -> Option<(&Op, &Op)> {
        match (self.operator("L"), self.operator("B")) {
            (Some(l), Some(b)) => Some((l, b)),
            _ if self.operators.len() >= 2 => Some((&self.operators[0].1, &self.operators[1].1)),
            _ => None,
        }
    }
}

struct FieldSpec {
    backend: Option<(String, Pos)>,
    gen: Option<(String, Pos)>,
    deriv: Option<(String, Expr)>,
    vars: Vec<(String, Pos)>,
    rules: Vec<(String, u32, Expr, Pos)>,
}

fn parse_field_block(c: &mut Cursor) -> Result<FieldSpec, ParseError> {
    c.expect_punct('{')?;
    let mut spec = FieldSpec { backend: None, gen: None, deriv: None, vars: Vec::new(), rules: Vec::new() };
    loop {
        while c.eat_punct(';') {}
        if c.eat_punct('}') {
            return Ok(spec);
        }
        let t = c.bump();
        let Tok::Ident(key, primes) = t.tok.clone() else {
            return Err(syntax(t.pos, "expected a field item"));
        };
        match (key.as_str(), primes) {
            ("backend", 0) => {
                c.expect_punct('=')?;
                spec.backend = Some(c.expect_name()?);
            }
            ("gen", 0) => {
                c.expect_punct('=')?;
                spec.gen = Some(c.expect_name()?);
            }
            ("d", 0) => {
                c.expect_punct('(')?;
                let (name, _) = c.expect_name()?;
                c.expect_punct(')')?;
                c.expect_punct('=')?;
                spec.deriv = Some((name, c.expr()?));
            }
            ("vars", 0) => {
                c.expect_punct('=')?;
                spec.vars.push(c.expect_name()?);
                while c.eat_punct(',') {
                    spec.vars.push(c.expect_name()?);
                }
            }
            ("rule", 0) => {
                let t = c.bump();
                let Tok::Ident(sym, order) = t.tok else {
                    return Err(syntax(t.pos, "expected a jet such as u''"));
                };
                c.expect_punct('=')?;
                spec.rules.push((sym, order, c.expr()?, t.pos));
            }
            _ => return Err(syntax(t.pos, format!("unknown field item '{key}'"))),
        }
    }
}

fn check_name(name: &str, pos: Pos) -> Result<(), ParseError> {
    if RESERVED.contains(&name) {
        return Err(syntax(pos, format!("'{name}' is reserved")));
    }
    Ok(())
}

fn polynomial_value(v: Value, pos: Pos, what: &str) -> Result<MPoly<GaussianRational>, ParseError> {
    match v {
        Value::Elem(a) if a.is_polynomial() => Ok(a.num().clone()),
        _ => Err(syntax(pos, format!("{what} must be a polynomial"))),
    }
}

fn build_field(spec: FieldSpec, pos: Pos) -> Result<DiffField, ParseError> {
    let empty = HashMap::new();
    let default = if spec.vars.is_empty() { "ratfunc" } else { "diffpoly" };
    let (backend, bpos) = spec.backend.clone().unwrap_or((default.to_string(), pos));
    match backend.as_str() {
        "ratfunc" => {
            let (gen, gpos) = spec.gen.ok_or_else(|| syntax(pos, "ratfunc field needs gen=<name>"))?;
            check_name(&gen, gpos)?;
            let (dname, dexpr) = spec.deriv.ok_or_else(|| syntax(pos, format!("missing d({gen})=...")))?;
            if dname != gen {
                return Err(err(ParseErrorKind::UndeclaredSymbol, dexpr.pos, format!("d({dname}) for undeclared generator")));
            }
            let probe = DiffField::ratfunc(&gen, MPoly::zero()).expect("zero derivative");
            let ev = Evaluator { field: &probe, lets: &empty };
            let d = polynomial_value(ev.eval(&dexpr)?, dexpr.pos, "the derivative of the generator")?;
            DiffField::ratfunc(&gen, d).map_err(|e| syntax(pos, e.to_string()))
        }
        "diffpoly" => {
            if spec.vars.is_empty() {
                return Err(syntax(pos, "diffpoly field needs vars=..."));
            }
            for (v, p) in &spec.vars {
                check_name(v, *p)?;
            }
            let names: Vec<&str> = spec.vars.iter().map(|(v, _)| v.as_str()).collect();
            let probe = DiffField::diffpoly(&names, Vec::new()).map_err(|e| syntax(pos, e.to_string()))?;
            let ev = Evaluator { field: &probe, lets: &empty };
            let mut rules = Vec::new();
            for (sym, order, rhs, rpos) in spec.rules {
                let s = probe
                    .symbol_index(&sym)
                    .ok_or_else(|| err(ParseErrorKind::UndeclaredSymbol, rpos, format!("rule for undeclared '{sym}'")))?;
                let rhs = polynomial_value(ev.eval(&rhs)?, rhs.pos, "a rule right-hand side")?;
                rules.push((Rule { symbol: s, order, rhs }, rpos));
            }
            let last = rules.last().map_or(pos, |(_, p)| *p);
            DiffField::diffpoly(&names, rules.into_iter().map(|(r, _)| r).collect()).map_err(|e| syntax(last, e.to_string()))
        }
        other => Err(syntax(bpos, format!("unknown backend '{other}'"))),
    }
}

/// Parse a whole session config.
pub fn parse_config(src: &str) -> Result<SessionConfig, ParseError> {
    let mut c = Cursor::new(lex(src)?);
    let mut field: Option<DiffField> = None;
    let mut lets: HashMap<String, Value> = HashMap::new();
    let mut let_order = Vec::new();
    let mut operators: Vec<(String, Op, Pos)> = Vec::new();
    let mut factor_exprs = Vec::new();
    let mut ell: Option<(usize, Pos)> = None;
    loop {
        while c.eat_punct(';') {}
        if c.at_eof() {
            break;
        }
        let t = c.bump();
        let Tok::Ident(kw, 0) = t.tok.clone() else {
            return Err(syntax(t.pos, "expected a statement"));
        };
        match kw.as_str() {
            "field" => {
                if field.is_some() {
                    return Err(syntax(t.pos, "second field block"));
                }
                let spec = parse_field_block(&mut c)?;
                field = Some(build_field(spec, t.pos)?);
            }
            "ell" => {
                c.expect_punct('=')?;
                let (n, p) = c.expect_integer()?;
                if n < 1 {
                    return Err(syntax(p, "ell must be positive"));
                }
                ell = Some((n as usize, p));
            }
            "let" | "operator" | "factor" => {
                let f = field.as_ref().ok_or_else(|| syntax(t.pos, "the field block must come first"))?;
                let name = if kw == "factor" {
                    None
                } else {
                    let (n, p) = c.expect_name()?;
                    check_name(&n, p)?;
                    if f.generator_name() == Some(n.as_str()) || f.symbol_index(&n).is_some() {
                        return Err(syntax(p, format!("'{n}' is already a field symbol")));
                    }
                    c.expect_punct('=')?;
                    Some((n, p))
                };
                let e = c.expr()?;
                let ev = Evaluator { field: f, lets: &lets };
                match (kw.as_str(), name) {
                    ("factor", _) => factor_exprs.push(e),
                    ("let", Some((n, _))) => {
                        let v = ev.eval(&e)?;
                        if !lets.contains_key(&n) {
                            let_order.push(n.clone());
                        }
                        lets.insert(n, v);
                    }
                    (_, Some((n, p))) => {
                        let op = match ev.eval(&e)? {
                            Value::Op(o) => o,
                            Value::Elem(a) => Operator::constant(Matrix::scalar(ell.map_or(1, |x| x.0), a)),
                            Value::Poly(_) => return Err(syntax(e.pos, "an operator cannot contain lambda or mu")),
                        };
                        if operators.iter().any(|(m, _, _)| *m == n) {
                            return Err(syntax(p, format!("operator '{n}' defined twice")));
                        }
                        operators.push((n, op, e.pos));
                    }
                    _ => unreachable!(),
                }
            }
            other => return Err(syntax(t.pos, format!("unknown statement '{other}'"))),
        }
    }
    let field = field.ok_or_else(|| syntax((1, 1), "missing field block"))?;
    let size = match (ell, ()) {
        (Some((n, _)), _) => n,
        (None, _) => operators.iter().map(|(_, o, _)| o.size()).max().unwrap_or(1),
    };
    let mut ops = Vec::with_capacity(operators.len());
    for (n, o, p) in operators {
        let o = if o.size() == 1 && size > 1 && o.coeffs().iter().all(|a| a.size() == 1) {
            embed(&o, size)
        } else {
            o
        };
        if o.size() != size && !o.is_zero() {
            return Err(err(
                ParseErrorKind::DimensionMismatch,
                p,
                format!("operator '{n}' has size {} but ell = {size}", o.size()),
            ));
        }
        let o = if o.is_zero() { Operator::zero(size) } else { o };
        ops.push((n, o));
    }
    let empty = HashMap::new();
    let bare = DiffField::diffpoly(&[], Vec::new()).expect("no symbols");
    let ev = Evaluator { field: &bare, lets: &empty };
    let mut factors = Vec::new();
    for e in factor_exprs {
        factors.push(factor_value(&ev, &e)?);
    }
    let lets = let_order.into_iter().map(|n| {
        let v = lets.remove(&n).expect("recorded");
        (n, v)
    });
    Ok(SessionConfig { field, ell: size, operators: ops, lets: lets.collect(), factors })
}

fn factor_value(ev: &Evaluator<'_>, e: &Expr) -> Result<(BivarPoly, u32), ParseError> {
    let (base, k) = match &e.kind {
        ExprKind::Pow(b, k) if *k > 0 => (b.as_ref(), *k as u32),
        _ => (e, 1),
    };
    let p = match ev.eval(base)? {
        Value::Elem(a) => SpectralPoly::constant(a),
        Value::Poly(p) => p,
        Value::Op(_) => return Err(syntax(e.pos, "a factor must be a polynomial in lambda, mu")),
    };
    let b = p.to_bivar().ok_or_else(|| syntax(e.pos, "a factor must have constant coefficients"))?;
    Ok((b, k))
}

fn parse_in(src: &str, field: &DiffField) -> Result<Value, ParseError> {
    let e = parse_expr_tokens(lex(src)?)?;
    let lets = HashMap::new();
    Evaluator { field, lets: &lets }.eval(&e)
}

/// Parse a standalone expression over `field`.
pub fn parse_value(src: &str, field: &DiffField) -> Result<Value, ParseError> {
    parse_in(src, field)
}

pub fn parse_element(src: &str, field: &DiffField) -> Result<Frac, ParseError> {
    match parse_in(src, field)? {
        Value::Elem(a) => Ok(a),
        _ => Err(syntax((1, 1), "expected a field element")),
    }
}

/// Operator of the given size; field elements become scalar multiples of
/// the identity.
pub fn parse_operator(src: &str, field: &DiffField, size: usize) -> Result<Op, ParseError> {
    let ev = Evaluator { field, lets: &HashMap::new() };
    match parse_in(src, field)? {
        Value::Op(o) if o.is_zero() => Ok(Operator::zero(size)),
        v @ (Value::Op(_) | Value::Elem(_)) => ev.to_op(v, size, (1, 1)),
        Value::Poly(_) => Err(syntax((1, 1), "expected an operator")),
    }
}

/// Polynomial in λ, μ over K.
pub fn parse_spectral(src: &str, field: &DiffField) -> Result<SpectralPoly, ParseError> {
    match parse_in(src, field)? {
        Value::Elem(a) => Ok(SpectralPoly::constant(a)),
        Value::Poly(p) => Ok(p),
        Value::Op(_) => Err(syntax((1, 1), "expected a polynomial in lambda, mu")),
    }
}

/// Polynomial in λ, μ over Q(i).
pub fn parse_bivar(src: &str) -> Result<BivarPoly, ParseError> {
    let bare = DiffField::diffpoly(&[], Vec::new()).expect("no symbols");
    parse_spectral(src, &bare)?
        .to_bivar()
        .ok_or_else(|| syntax((1, 1), "expected constant coefficients"))
}

/// `factor` statements only, for standalone factorization files.
pub fn parse_factor_file(src: &str) -> Result<Vec<(BivarPoly, u32)>, ParseError> {
    let mut c = Cursor::new(lex(src)?);
    let bare = DiffField::diffpoly(&[], Vec::new()).expect("no symbols");
    let empty = HashMap::new();
    let ev = Evaluator { field: &bare, lets: &empty };
    let mut out = Vec::new();
    loop {
        while c.eat_punct(';') {}
        if c.at_eof() {
            return Ok(out);
        }
        if c.is_keyword("factor") {
            c.bump();
        }
        let e = c.expr()?;
        out.push(factor_value(&ev, &e)?);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::parser::render::{render_element, render_operator};

    const AKNS: &str = "
field { backend=diffpoly; vars=u,v; rule u'' = -2*u^2*v; rule v'' = -2*v^2*u }
operator L = i*[[D, u],[v, -D]]
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]]
";

    #[test]
    fn akns_config() {
        let cfg = parse_config(AKNS).unwrap();
        assert_eq!(cfg.ell, 2);
        let (l, b) = cfg.pair().unwrap();
        assert_eq!(l.order(), 1);
        assert_eq!(b.order(), 2);
        assert_eq!(render_operator(l, &cfg.field), "[[i*D, i*u], [i*v, -i*D]]");
        assert_eq!(
            render_operator(b, &cfg.field),
            "[[-2*i*D^2 - i*u*v, -2*i*u*D - i*u'], [-2*i*v*D - i*v', 2*i*D^2 + i*u*v]]"
        );
        assert!(l.commutator(b, &cfg.field).unwrap().is_zero());
    }

    #[test]
    fn ratfunc_with_lets() {
        let src = "field { backend=ratfunc; gen=t; d(t)=2*i*t }\nlet u = 1/t; let v = 2*t;\n\
                   operator L = i*[[D, u],[v, -D]]\nfactor (mu - lambda)^2; factor 3";
        let cfg = parse_config(src).unwrap();
        assert_eq!(cfg.lets.len(), 2);
        let l = cfg.operator("L").unwrap();
        assert_eq!(render_element(&l.coeff(0)[(0, 1)], &cfg.field), "i/t");
        assert_eq!(cfg.factors.len(), 2);
        assert_eq!(cfg.factors[0].1, 2);
        assert_eq!(cfg.factors[0].0.render(), "mu - lambda");
    }

    #[test]
    fn primes_on_lets() {
        let src = "field { gen=x; d(x)=1 } let u = x^3; operator L = [[D + u'']]";
        let cfg = parse_config(src).unwrap();
        let l = cfg.operator("L").unwrap();
        assert_eq!(render_operator(l, &cfg.field), "[[D + 6*x]]");
    }

    fn code(src: &str) -> (ParseErrorKind, usize, usize) {
        let e = parse_config(src).unwrap_err();
        (e.kind, e.line, e.col)
    }

    #[test]
    fn errors() {
        use ParseErrorKind::*;
        assert_eq!(code("field { gen=x; d(x)=1 }\noperator L = [[D, w],[1, D]]"), (UndeclaredSymbol, 2, 19));
        assert_eq!(code("field { gen=x; d(x)=1 }\noperator L = [[D, x],[1]]"), (DimensionMismatch, 2, 23));
        assert_eq!(code("field { gen=x; d(x)=1 }\noperator L = [[D, x]"), (Syntax, 2, 21));
        assert_eq!(
            code("field { gen=x; d(x)=1 }\noperator L = [[D, x],[1, D]]\noperator B = [[D]]+[[1,0],[0,1]]*0 + [[1,2,3],[1,2,3],[1,2,3]]"),
            (DimensionMismatch, 3, 36)
        );
        assert_eq!(code("operator L = D"), (Syntax, 1, 1));
        assert_eq!(code("field { backend=diffpoly; vars=u; rule w' = u }"), (UndeclaredSymbol, 1, 40));
        assert_eq!(code("field { gen=x; d(x)=1/x }").0, Syntax);
        assert_eq!(code("field { gen=i; d(i)=1 }").0, Syntax);
    }

    #[test]
    fn standalone_values() {
        let k = DiffField::ratfunc("x", MPoly::one()).unwrap();
        let a = parse_element("3/2/(x + 2)", &k).unwrap();
        assert_eq!(render_element(&a, &k), "3/2/(x + 2)");
        let p = parse_bivar("mu^2 + 4*lambda^4").unwrap();
        assert_eq!(p.render(), "mu^2 + 4*lambda^4");
        let z = parse_operator("0", &k, 2).unwrap();
        assert!(z.is_zero());
        assert_eq!(render_operator(&z, &k), "0");
        let fs = parse_factor_file("factor mu - 2*i*lambda^2;\nfactor (mu + 2*i*lambda^2)^1").unwrap();
        assert_eq!(fs.len(), 2);
    }
}
