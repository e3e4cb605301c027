//! Text and JSON output for each command.

use modo_core::bc::render_poly;
use modo_core::fixtures::Golden;
use modo_core::parser::{render_operator, SessionConfig};
use modo_core::spectral::{akns_potentials, on_curve_k};
use modo_core::{
    bc_generator, is_bc, kernel_at_point, riccati_residual, spectral_curve, BCReport, BivarPoly, CurvePoint,
    CurveReport, DiffField, KernelBasis, Modo, Ring,
};
use serde_json::{json, Map, Value};

use crate::{Failure, Format};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// a closed pipe (`modo ... | head`) is not an error worth a panic
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

pub fn commutator(c: &Modo, field: &DiffField, fmt: Format) {
    let s = render_operator(c, field);
    match fmt {
        Format::Json => print_json(&json!({ "commutator": s, "is_zero": c.is_zero() })),
        Format::Text => outln!("[L,B] = {s}"),
    }
}

fn curve_text(rep: &CurveReport, field: &DiffField) -> String {
    let ell = rep.ell;
    let nl = rep.order_b * ell;
    let mut out = format!("f(lambda, mu) = {}\n", rep.render_f(field));
    out += &format!("[L,B] = 0: {}\n", yes(rep.commutator_is_zero));
    out += &format!("coefficients constant: {}\n", yes(rep.constancy_verified));
    out += &format!(
        "deg_mu f = {} (expected {ell}), mu^{ell} coefficient = {}\n",
        rep.degree_mu,
        field.render(&rep.leading_mu_coeff)
    );
    out += &format!(
        "deg_lambda f = {} (bound {nl}), lambda^{nl} coefficient = {} (expected {})\n",
        rep.degree_lambda,
        field.render(&rep.leading_lambda_coeff),
        field.render(&rep.expected_lambda_coeff)
    );
    out += &format!("degree checks: {}\n", if rep.degree_checks_pass { "pass" } else { "FAIL" });
    for w in &rep.warnings {
        out += &format!("warning: {w}\n");
    }
    out
}

pub fn curve(rep: &CurveReport, field: &DiffField, fmt: Format) {
    match fmt {
        Format::Json => print_json(&rep.to_json(field)),
        Format::Text => out!("{}", curve_text(rep, field)),
    }
}

fn bc_text(rep: &BCReport, field: &DiffField) -> String {
    let mut out = format!("f = {}\n", render_poly(&rep.f, field));
    out += &format!("f(L,B) = 0: {}\n", yes(rep.f_is_bc));
    out += &format!("factorization ({}):\n", rep.source.as_str());
    for h in &rep.factors {
        out += &format!("  {}  sigma = {}, r = {}\n", render_poly(&h.poly, field), h.sigma, h.r);
    }
    out += &format!("F = {}\n", render_poly(&rep.big_f, field));
    out += &format!("decomposition: {}\n", rep.decomposition_strings(field).join(" x "));
    match &rep.trivial_case {
        Some(h) => out += &format!("B is a polynomial in L: {}\n", render_poly(h, field)),
        None => out += "B is a polynomial in L: no\n",
    }
    out
}

pub fn bc(rep: &BCReport, field: &DiffField, fmt: Format) {
    match fmt {
        Format::Json => print_json(&rep.to_json(field)),
        Format::Text => out!("{}", bc_text(rep, field)),
    }
}

fn kernel_json(pt: &CurvePoint, kb: &KernelBasis, field: &DiffField) -> Value {
    let mut m = Map::new();
    m.insert("lambda".into(), json!(pt.lambda0.to_string()));
    m.insert("mu".into(), json!(pt.mu0.to_string()));
    if let Value::Object(rest) = kb.to_json(field) {
        m.extend(rest);
    }
    Value::Object(m)
}

fn kernel_text(pt: &CurvePoint, kb: &KernelBasis, field: &DiffField) -> String {
    let mut out = format!("point: lambda = {}, mu = {}\n", pt.lambda0, pt.mu0);
    out += &format!("rank = {}, nullity = {}\n", kb.rank, kb.nullity());
    for (k, v) in kb.vectors.iter().enumerate() {
        let cells: Vec<String> = v.iter().map(|e| field.render(e)).collect();
        out += &format!("v{} = [{}]\n", k + 1, cells.join(", "));
    }
    out
}

pub fn kernel(pt: &CurvePoint, kb: &KernelBasis, field: &DiffField, fmt: Format) {
    match fmt {
        Format::Json => print_json(&kernel_json(pt, kb, field)),
        Format::Text => out!("{}", kernel_text(pt, kb, field)),
    }
}

pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name, pass, detail: detail.into() }
}

pub fn verify_checks(l: &Modo, b: &Modo, field: &DiffField, user: Option<&[(BivarPoly, u32)]>) -> Vec<Check> {
    let mut out = Vec::new();
    match l.commutator(b, field) {
        Ok(c) => out.push(check("commutator", c.is_zero(), render_operator(&c, field))),
        Err(e) => out.push(check("commutator", false, e.to_string())),
    }
    let curve = match spectral_curve(l, b, field) {
        Ok(c) => c,
        Err(e) => {
            out.push(check("spectral_curve", false, format!("{}: {e}", e.code())));
            return out;
        }
    };
    out.push(check("constant_coefficients", curve.constancy_verified, curve.render_f(field)));
    out.push(check(
        "degrees",
        curve.degree_checks_pass,
        format!("deg_mu = {}, deg_lambda = {}", curve.degree_mu, curve.degree_lambda),
    ));
    match is_bc(&curve.f, l, b, field) {
        Ok(z) => out.push(check("f(L,B) = 0", z, "")),
        Err(e) => out.push(check("f(L,B) = 0", false, format!("{}: {e}", e.code()))),
    }
    match bc_generator(l, b, field, user) {
        Ok(rep) => {
            let divides = rep.f.exact_div(&rep.big_f).is_some() && rep.big_f.exact_div(&rep.f_red).is_some();
            out.push(check("bc_generator", divides, render_poly(&rep.big_f, field)));
        }
        Err(e) => out.push(check("bc_generator", false, format!("{}: {e}", e.code()))),
    }
    if akns_potentials(l).is_ok() {
        match riccati_residual(l, b, field) {
            Ok(r) => out.push(check("riccati", r.is_zero(), r.numerator.render(field))),
            Err(e) => out.push(check("riccati", false, format!("{}: {e}", e.code()))),
        }
    }
    out
}

pub fn checks(cs: &[Check], fmt: Format) -> bool {
    let ok = cs.iter().all(|c| c.pass);
    match fmt {
        Format::Json => {
            let list: Vec<Value> = cs
                .iter()
                .map(|c| json!({ "check": c.name, "pass": c.pass, "detail": c.detail }))
                .collect();
            print_json(&json!({ "checks": list, "ok": ok }));
        }
        Format::Text => {
            for c in cs {
                let tag = if c.pass { "pass" } else { "FAIL" };
                if c.detail.is_empty() {
                    outln!("[{tag}] {}", c.name);
                } else {
                    outln!("[{tag}] {}: {}", c.name, c.detail);
                }
            }
            outln!("{}", if ok { "all checks passed" } else { "verification failed" });
        }
    }
    ok
}

pub fn demo(name: &str, cfg: &SessionConfig, golden: &Golden, fmt: Format) -> Result<bool, Failure> {
    let field = &cfg.field;
    let (l, b) = cfg.pair().expect("fixtures define L and B");
    let curve = spectral_curve(l, b, field)?;
    let rep = bc_generator(l, b, field, None)?;
    let riccati = riccati_residual(l, b, field)?.is_zero();
    let f_ok = curve.render_f(field) == golden.f;
    let big_f_ok = render_poly(&rep.big_f, field) == golden.big_f;
    let mut got: Vec<String> = rep.factors.iter().map(|h| render_poly(&h.poly, field)).collect();
    let mut want: Vec<String> = golden.factors.iter().map(|s| s.to_string()).collect();
    got.sort();
    want.sort();
    let factors_ok = got == want;
    let point = match golden.point {
        Some((lam, mu)) => {
            let bare = DiffField::diffpoly(&[], Vec::new()).expect("no symbols");
            let c = |s: &str| {
                modo_core::parser::parse_element(s, &bare).expect("golden point").as_constant().expect("constant")
            };
            let pt = CurvePoint::new(c(lam), c(mu));
            let kb = kernel_at_point(l, b, &pt, field)?;
            Some((pt.clone(), kb.nullity(), on_curve_k(&curve.f, &pt)))
        }
        None => None,
    };
    let point_ok = point.as_ref().is_none_or(|(_, n, on)| *n >= 1 && *on);
    let all = f_ok && big_f_ok && factors_ok && riccati && point_ok && curve.degree_checks_pass;
    match fmt {
        Format::Json => {
            let mut m = Map::new();
            m.insert("demo".into(), json!(name));
            if let Value::Object(bcj) = rep.to_json(field) {
                m.extend(bcj);
            }
            m.insert("curve".into(), curve.to_json(field));
            m.insert("riccati_residual_zero".into(), json!(riccati));
            if let Some((pt, n, on)) = &point {
                m.insert(
                    "point".into(),
                    json!({ "lambda": pt.lambda0.to_string(), "mu": pt.mu0.to_string(), "on_curve": on, "nullity": n }),
                );
            }
            m.insert(
                "golden".into(),
                json!({ "f": f_ok, "F": big_f_ok, "factors": factors_ok, "point": point_ok }),
            );
            m.insert("match".into(), json!(all));
            print_json(&Value::Object(m));
        }
        Format::Text => {
            outln!("demo {name}");
            out!("{}", curve_text(&curve, field));
            out!("{}", bc_text(&rep, field));
            outln!("riccati residual zero: {}", yes(riccati));
            if let Some((pt, n, on)) = &point {
                outln!("point ({}, {}): on curve {}, nullity {n}", pt.lambda0, pt.mu0, yes(*on));
            }
            let mark = |b: bool| if b { "ok" } else { "MISMATCH" };
            outln!(
                "golden: f {}, F {}, factors {}, point {}",
                mark(f_ok),
                mark(big_f_ok),
                mark(factors_ok),
                mark(point_ok)
            );
            outln!("{}", if all { "result: match" } else { "result: MISMATCH" });
        }
    }
    Ok(all)
}

pub fn failure(f: &Failure, fmt: Format) {
    let (code, msg, pos) = match f {
        Failure::Usage(m) => ("USAGE_ERROR", m.clone(), None),
        Failure::Parse(e) => (e.kind.code(), e.message.clone(), Some((e.line, e.col))),
        Failure::Compute(e) => (e.code(), e.to_string(), None),
        Failure::Verification => return,
    };
    match (fmt, pos) {
        (Format::Json, Some((line, col))) => {
            print_json(&json!({ "error": code, "message": msg, "line": line, "col": col }))
        }
        (Format::Json, None) => print_json(&json!({ "error": code, "message": msg })),
        (Format::Text, Some((line, col))) => eprintln!("error[{code}] at {line}:{col}: {msg}"),
        (Format::Text, None) => eprintln!("error[{code}]: {msg}"),
    }
}
