//! Text syntax for polynomials, rational functions, forms and maps.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := base ('^' nat)?
//! base   := int ('/' posint)? | symbol | '(' expr ')'
//! ```
//! `X`, `Y`, `Z` are accepted as aliases of `x`, `y`, `z`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Rational, Table};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(text.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return err(i, format!("unexpected character `{c}`"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    table: &'a Table,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MPoly> {
        let b = self.base()?;
        if !self.eat('^') {
            return Ok(b);
        }
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Op('/')) {
                    return err(at, "fractional exponent");
                }
                let e: u32 = n
                    .try_into()
                    .map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
                Ok(b.pow(e))
            }
            Some(Tok::Op('-')) => err(at, "negative exponent"),
            _ => err(at, "expected a natural exponent"),
        }
    }

    fn base(&mut self) -> Result<MPoly> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut r = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Op('/')) {
                    if let Some(Tok::Int(d)) = self.peek_at(1).cloned() {
                        if d.is_zero() {
                            return err(self.here(), "zero denominator");
                        }
                        self.pos += 2;
                        r /= Rational::from_integer(d);
                    }
                }
                Ok(MPoly::constant(self.table, r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let name = match name.as_str() {
                    "X" => "x",
                    "Y" => "y",
                    "Z" => "z",
                    n => n,
                };
                self.table
                    .index(name)
                    .map(|i| MPoly::var_index(self.table, i))
                    .map_err(|_| Error::Parse {
                        pos: at,
                        msg: format!("undeclared symbol `{name}`"),
                    })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return err(self.here(), "expected `)`");
                }
                Ok(e)
            }
            Some(t) => err(at, format!("unexpected token {}", show(&t))),
            None => err(at, "unexpected end of input"),
        }
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => err(self.here(), format!("unexpected token {}", show(t))),
        }
    }
}

fn show(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Op(c) => format!("`{c}`"),
    }
}

fn parser<'a>(s: &str, offset: usize, table: &'a Table) -> Result<Parser<'a>> {
    let toks = lex(s)
        .map_err(|e| shift(e, offset))?
        .into_iter()
        .map(|(p, t)| (p + offset, t))
        .collect();
    Ok(Parser {
        toks,
        pos: 0,
        end: offset + s.chars().count(),
        table,
    })
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos: pos + offset,
            msg,
        },
        other => other,
    }
}

/// Parse a polynomial over the symbols of `table`.
pub fn parse_poly(s: &str, table: &Table) -> Result<MPoly> {
    parse_poly_at(s, 0, table)
}

fn parse_poly_at(s: &str, offset: usize, table: &Table) -> Result<MPoly> {
    let mut p = parser(s, offset, table)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parse `num` or `num / den` (the denominator a power-level expression).
pub fn parse_ratio(s: &str, table: &Table) -> Result<(MPoly, MPoly)> {
    parse_ratio_at(s, 0, table)
}

fn parse_ratio_at(s: &str, offset: usize, table: &Table) -> Result<(MPoly, MPoly)> {
    let mut p = parser(s, offset, table)?;
    let num = p.expr()?;
    let den = if p.eat('/') {
        let at = p.here();
        let d = p.unary()?;
        if d.is_zero() {
            return err(at, "zero denominator");
        }
        d
    } else {
        MPoly::one(table)
    };
    p.finish()?;
    Ok((num, den))
}

/// Split on `sep` at bracket depth zero, returning pieces with their
/// character offsets.
pub fn split_top(s: &str, sep: char) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut start = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            out.push((start, std::mem::take(&mut cur)));
            start = i + 1;
        } else {
            cur.push(c);
        }
    }
    out.push((start, cur));
    out
}

fn delimited(s: &str, open: char, close: char, sep: char, n: usize) -> Result<Vec<(usize, String)>> {
    let t = s.trim_end();
    let lead = t.len() - t.trim_start().len();
    let t = t.trim_start();
    if !t.starts_with(open) {
        return err(lead, format!("expected `{open}`"));
    }
    if !t.ends_with(close) {
        return err(lead + t.chars().count().saturating_sub(1), format!("expected `{close}`"));
    }
    let inner: String = {
        let cs: Vec<char> = t.chars().collect();
        cs[1..cs.len() - 1].iter().collect()
    };
    let parts = split_top(&inner, sep);
    if parts.len() != n {
        return err(lead, format!("expected {n} entries separated by `{sep}`, found {}", parts.len()));
    }
    Ok(parts
        .into_iter()
        .map(|(p, text)| (p + lead + 1, text))
        .collect())
}

/// `[A, B, C]`: coefficients of dX, dY, dZ.
pub fn parse_form_literal(s: &str, table: &Table) -> Result<[MPoly; 3]> {
    let parts = delimited(s, '[', ']', ',', 3)?;
    let mut v = Vec::with_capacity(3);
    for (off, text) in parts {
        v.push(parse_poly_at(&text, off, table)?);
    }
    Ok(v.try_into().expect("three entries"))
}

/// `(e0 : e1 : e2)`.
pub fn parse_map_literal(s: &str, table: &Table) -> Result<[MPoly; 3]> {
    let parts = delimited(s, '(', ')', ':', 3)?;
    let mut v = Vec::with_capacity(3);
    for (off, text) in parts {
        v.push(parse_poly_at(&text, off, table)?);
    }
    Ok(v.try_into().expect("three entries"))
}

/// `{a, b}`: rational coefficients of dx and dy.
pub fn parse_affine_literal(s: &str, table: &Table) -> Result<[(MPoly, MPoly); 2]> {
    let parts = delimited(s, '{', '}', ',', 2)?;
    let mut v = Vec::with_capacity(2);
    for (off, text) in parts {
        v.push(parse_ratio_at(&text, off, table)?);
    }
    Ok(v.try_into().expect("two entries"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SymbolTable;

    fn g() -> Table {
        SymbolTable::geometric()
    }

    #[test]
    fn accepts_rational_literals_and_unary_minus() {
        let p = parse_poly("1/2*x + -1/3", &g()).unwrap();
        assert_eq!(p.to_string(), "1/2*x - 1/3");
        let q = parse_poly("2*X^2*Y - 1/3*Z^3", &g()).unwrap();
        assert_eq!(q.to_string(), "2*x^2*y - 1/3*z^3");
    }

    #[test]
    fn rejects_bad_syntax() {
        let pos = |s: &str| match parse_poly(s, &g()) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(pos("x y"), 2);
        assert_eq!(pos("x^-1"), 2);
        assert_eq!(pos("x^1/2"), 2);
        assert_eq!(pos("w + 1"), 0);
        assert_eq!(pos("(x + 1"), 6);
    }

    #[test]
    fn literals() {
        let f = parse_form_literal("[y*z, -x*z, 0]", &g()).unwrap();
        assert_eq!(f[1].to_string(), "-x*z");
        let m = parse_map_literal("(y*z : x*z : x*y)", &g()).unwrap();
        assert_eq!(m[2].to_string(), "x*y");
        let a = parse_affine_literal("{(1) / (x*(1+x)), -1 / (y*(1+y))}", &g()).unwrap();
        assert_eq!(a[0].1.to_string(), "x^2 + x");
        assert_eq!(a[1].0.to_string(), "-1");
        match parse_form_literal("[x, y]", &g()) {
            Err(Error::Parse { .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
