//! Expression trees and the recursive-descent grammar.

use num_bigint::BigInt;

use super::error::{ParseError, ParseErrorKind};
use super::lexer::{Pos, Tok, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Num(BigInt),
    /// A name with its prime count; `i`, `D`, `lambda`, `mu` included.
    Sym(String, u32),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Matrix(Vec<Vec<Expr>>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

pub struct Cursor {
    toks: Vec<Token>,
    at: usize,
}

fn syntax(pos: Pos, msg: impl Into<String>) -> ParseError {
    ParseError::new(ParseErrorKind::Syntax, pos, msg)
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Ident(s, p) => format!("'{s}{}'", "'".repeat(*p as usize)),
        Tok::Punct(c) => format!("'{c}'"),
        Tok::Eof => "end of input".into(),
    }
}

impl Cursor {
    pub fn new(toks: Vec<Token>) -> Self {
        Cursor { toks, at: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    pub fn peek_at(&self, ahead: usize) -> &Tok {
        &self.toks[(self.at + ahead).min(self.toks.len() - 1)].tok
    }

    pub fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    pub fn is_punct(&self, c: char) -> bool {
        self.peek().tok == Tok::Punct(c)
    }

    pub fn eat_punct(&mut self, c: char) -> bool {
        if self.is_punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect_punct(&mut self, c: char) -> Result<Pos, ParseError> {
        let t = self.peek().clone();
        if t.tok == Tok::Punct(c) {
            self.bump();
            Ok(t.pos)
        } else {
            Err(syntax(t.pos, format!("expected '{c}', found {}", describe(&t.tok))))
        }
    }

    /// Identifier without primes.
    pub fn expect_name(&mut self) -> Result<(String, Pos), ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(s, 0) => Ok((s, t.pos)),
            other => Err(syntax(t.pos, format!("expected a name, found {}", describe(&other)))),
        }
    }

    pub fn is_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s, 0) if s == kw)
    }

    pub fn expect_integer(&mut self) -> Result<(i64, Pos), ParseError> {
        let t = self.bump();
        let neg = t.tok == Tok::Punct('-');
        let t = if neg { self.bump() } else { t };
        match t.tok {
            Tok::Num(n) => {
                let v: i64 = i64::try_from(&n).map_err(|_| syntax(t.pos, "integer too large"))?;
                Ok((if neg { -v } else { v }, t.pos))
            }
            other => Err(syntax(t.pos, format!("expected an integer, found {}", describe(&other)))),
        }
    }

    pub fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.is_punct('+') {
                BinOp::Add
            } else if self.is_punct('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let pos = self.bump().pos;
            let rhs = self.term()?;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.is_punct('*') {
                BinOp::Mul
            } else if self.is_punct('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let pos = self.bump().pos;
            let rhs = self.unary()?;
            lhs = Expr { kind: ExprKind::Bin(op, Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.is_punct('-') {
            let pos = self.bump().pos;
            let inner = self.unary()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), pos });
        }
        if self.eat_punct('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if !self.is_punct('^') {
            return Ok(base);
        }
        let pos = self.bump().pos;
        let e = if self.eat_punct('(') {
            let (e, _) = self.expect_integer()?;
            self.expect_punct(')')?;
            e
        } else {
            self.expect_integer()?.0
        };
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), e), pos })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Num(n) => Ok(Expr { kind: ExprKind::Num(n), pos: t.pos }),
            Tok::Ident(s, p) => Ok(Expr { kind: ExprKind::Sym(s, p), pos: t.pos }),
            Tok::Punct('(') => {
                let e = self.expr()?;
                self.expect_punct(')')?;
                Ok(e)
            }
            Tok::Punct('[') => {
                let mut rows = Vec::new();
                loop {
                    self.expect_punct('[')?;
                    let mut row = vec![self.expr()?];
                    while self.eat_punct(',') {
                        row.push(self.expr()?);
                    }
                    self.expect_punct(']')?;
                    rows.push(row);
                    if !self.eat_punct(',') {
                        break;
                    }
                }
                self.expect_punct(']')?;
                Ok(Expr { kind: ExprKind::Matrix(rows), pos: t.pos })
            }
            other => Err(syntax(t.pos, format!("unexpected {}", describe(&other)))),
        }
    }
}

/// Parse a complete expression from a token stream.
pub fn parse_expr_tokens(toks: Vec<Token>) -> Result<Expr, ParseError> {
    let mut c = Cursor::new(toks);
    let e = c.expr()?;
    if !c.at_eof() {
        let t = c.peek();
        return Err(syntax(t.pos, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::super::lexer::lex;
    use super::*;

    fn parse(s: &str) -> Result<Expr, ParseError> {
        parse_expr_tokens(lex(s)?)
    }

    #[test]
    fn precedence() {
        let e = parse("-x^2 + 3*y/z").unwrap();
        let ExprKind::Bin(BinOp::Add, l, r) = e.kind else { panic!() };
        assert!(matches!(l.kind, ExprKind::Neg(ref inner) if matches!(inner.kind, ExprKind::Pow(_, 2))));
        assert!(matches!(r.kind, ExprKind::Bin(BinOp::Div, _, _)));
        assert!(matches!(parse("t^(-1)").unwrap().kind, ExprKind::Pow(_, -1)));
    }

    #[test]
    fn matrices_and_errors() {
        let e = parse("i*[[D, u],[v, -D]]").unwrap();
        let ExprKind::Bin(BinOp::Mul, _, m) = e.kind else { panic!() };
        let ExprKind::Matrix(rows) = m.kind else { panic!() };
        assert_eq!(rows.len(), 2);
        let err = parse("[[1, 2],[3 4]]").unwrap_err();
        assert_eq!((err.kind, err.line, err.col), (ParseErrorKind::Syntax, 1, 12));
        assert!(parse("x +").is_err());
        assert!(parse("(x").is_err());
    }
}
