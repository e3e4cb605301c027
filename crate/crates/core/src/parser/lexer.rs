use num_bigint::BigInt;

use super::error::{ParseError, ParseErrorKind};

pub type Pos = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Num(BigInt),
    /// Identifier with the number of trailing primes.
    Ident(String, u32),
    Punct(char),
    Eof,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const PUNCT: &str = "+-*/^()[]{},;=";

/// `#` and `//` start comments running to the end of the line.
pub fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let pos = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            k += 1;
            continue;
        }
        if c.is_whitespace() {
            k += 1;
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(k + 1) == Some(&'/')) {
            while k < chars.len() && chars[k] != '\n' {
                k += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            col += k - start;
            out.push(Token { tok: Tok::Num(s.parse().expect("digits")), pos });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let name: String = chars[start..k].iter().collect();
            let mut primes = 0;
            while k < chars.len() && chars[k] == '\'' {
                primes += 1;
                k += 1;
            }
            col += k - start;
            out.push(Token { tok: Tok::Ident(name, primes), pos });
            continue;
        }
        if PUNCT.contains(c) {
            out.push(Token { tok: Tok::Punct(c), pos });
            k += 1;
            col += 1;
            continue;
        }
        return Err(ParseError::new(ParseErrorKind::Syntax, pos, format!("unexpected character '{c}'")));
    }
    out.push(Token { tok: Tok::Eof, pos: (line, col) });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let t = lex("rule u'' = -2*u^2*v # note\n  D").unwrap();
        assert_eq!(t[1].tok, Tok::Ident("u".into(), 2));
        assert_eq!(t[1].pos, (1, 6));
        assert_eq!(t.last().unwrap().tok, Tok::Eof);
        let d = &t[t.len() - 2];
        assert_eq!((d.tok.clone(), d.pos), (Tok::Ident("D".into(), 0), (2, 3)));
        let e = lex("x $ y").unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
    }
}
