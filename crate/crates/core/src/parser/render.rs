//! Canonical strings for field elements, operators and matrices. The
//! parser reads everything produced here.

use num_traits::{One, Zero};

use crate::diff_field::DiffField;
use crate::frac::Frac;
use crate::matrix::Matrix;
use crate::operator::Operator;
use crate::scalar::Coeff;

/// `c*mono` as `(negative, body)`; an empty `mono` means the bare coefficient.
pub(crate) fn coeff_times<C: Coeff>(c: &Frac<C>, mono: &str, field: &DiffField<C>) -> (bool, String) {
    let single = c.is_polynomial() && c.num().num_terms() == 1;
    let neg = single && c.num().leading_coeff().is_negative_like();
    let abs = if neg { -c.clone() } else { c.clone() };
    let rendered = field.render(&abs);
    if mono.is_empty() {
        return (neg, rendered);
    }
    if abs.is_one() {
        return (neg, mono.to_string());
    }
    let parens = !single || abs.num().leading_coeff().needs_parens();
    let body = if parens { format!("({rendered})*{mono}") } else { format!("{rendered}*{mono}") };
    (neg, body)
}

/// Join signed terms as `a - b + c`.
pub(crate) fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (k, (neg, body)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub fn render_element<C: Coeff>(a: &Frac<C>, field: &DiffField<C>) -> String {
    field.render(a)
}

/// Entry `(i, j)` as the scalar operator `Σ (A_k)_{ij} D^k`, highest `k` first.
pub fn render_entry<C: Coeff>(op: &Operator<Frac<C>>, i: usize, j: usize, field: &DiffField<C>) -> String {
    let terms = op.coeffs().iter().enumerate().rev().filter_map(|(k, a)| {
        let c = &a[(i, j)];
        if c.is_zero() {
            return None;
        }
        let mono = match k {
            0 => String::new(),
            1 => "D".to_string(),
            _ => format!("D^{k}"),
        };
        Some(coeff_times(c, &mono, field))
    });
    join_signed(terms)
}

/// `[[e00, e01], [e10, e11]]`, or `0` for the zero operator.
pub fn render_operator<C: Coeff>(op: &Operator<Frac<C>>, field: &DiffField<C>) -> String {
    if op.is_zero() {
        return "0".to_string();
    }
    let n = op.size();
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| render_entry(op, i, j, field)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub fn render_matrix<C: Coeff>(m: &Matrix<Frac<C>>, field: &DiffField<C>) -> String {
    let rows: Vec<String> = m
        .rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|e| field.render(e)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
