//! Text syntax for differential polynomials.
//!
//! ```text
//! poly     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := indet ['^' nat] | '(' poly ')' ['^' nat] | rational
//! indet    := deriv* 'x[' (element ',')? nat ']'
//! deriv    := 'd' nat ['^' nat]
//! rational := int ['/' nat]
//! ```
//!
//! Derivation and variable indices are 1-based. Over the trivial group the
//! element may be omitted; over any other group it is required.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::diffpoly::{Ambient, DerivOp, DiffPoly, Indeterminate, Rational};
use crate::error::{Error, Result};

/// Renders `f` canonically, highest term first.
pub fn print_poly(f: &DiffPoly) -> String {
    let ambient = f.ambient();
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, c)) in f.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if mono.is_one() {
            out.push_str(&abs.to_string());
            continue;
        }
        if !abs.is_one() {
            let _ = write!(out, "{abs} * ");
        }
        let factors: Vec<String> = mono
            .factors()
            .iter()
            .map(|(v, e)| {
                let mut s = print_indet(ambient, v);
                if *e > 1 {
                    let _ = write!(s, "^{e}");
                }
                s
            })
            .collect();
        out.push_str(&factors.join(" * "));
    }
    out
}

/// Renders a derivative operator as `d1^2 d2`, or `1` for the identity.
pub fn print_op(op: &DerivOp) -> String {
    let parts: Vec<String> = op
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .map(|(k, e)| if *e > 1 { format!("d{}^{e}", k + 1) } else { format!("d{}", k + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Renders one indeterminate, e.g. `d1^2 d2 x[g,1]`.
pub fn print_indet(ambient: &Ambient, v: &Indeterminate) -> String {
    let mut s = String::new();
    for (k, &e) in v.op.exponents().iter().enumerate() {
        if e > 0 {
            let _ = write!(s, "d{}", k + 1);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
            s.push(' ');
        }
    }
    s.push_str("x[");
    if !ambient.group().is_trivial() {
        s.push_str(ambient.group().name(v.block));
        s.push(',');
    }
    let _ = write!(s, "{}]", v.var + 1);
    s
}

pub fn parse_poly(ambient: &Ambient, source: &str) -> Result<DiffPoly> {
    parse_poly_at(ambient, source, 1)
}

/// Parses one polynomial, reporting errors on line `line`.
pub fn parse_poly_at(ambient: &Ambient, source: &str, line: usize) -> Result<DiffPoly> {
    let tokens = lex(source, line)?;
    let mut p = Parser {
        ambient,
        tokens,
        pos: 0,
        line,
        end_column: source.chars().count() + 1,
    };
    let f = p.poly()?;
    if let Some(tok) = p.tokens.get(p.pos) {
        return Err(p.error_at(tok.column, format!("unexpected {}", tok.kind.describe())));
    }
    Ok(f)
}

/// Parses a file of polynomials: one per line, `#` starts a comment.
pub fn parse_poly_file(ambient: &Ambient, source: &str) -> Result<Vec<DiffPoly>> {
    source
        .lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let body = l.split('#').next().unwrap_or("");
            (!body.trim().is_empty()).then(|| parse_poly_at(ambient, body, i + 1))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Int(BigInt),
    Deriv(u64),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Int(n) => format!("number `{n}`"),
            Kind::Deriv(k) => format!("derivation `d{k}`"),
            Kind::Var(body) => format!("variable `x[{body}]`"),
            Kind::Plus => "`+`".into(),
            Kind::Minus => "`-`".into(),
            Kind::Star => "`*`".into(),
            Kind::Slash => "`/`".into(),
            Kind::Caret => "`^`".into(),
            Kind::LParen => "`(`".into(),
            Kind::RParen => "`)`".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    column: usize,
    /// Column of the bracket body for `Var` tokens.
    inner: usize,
}

fn lex(source: &str, line: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = source.chars().collect();
    let err = |column: usize, message: String| Error::Parse {
        line,
        column,
        message,
    };
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let simple = match c {
            '+' => Some(Kind::Plus),
            '-' => Some(Kind::Minus),
            '*' => Some(Kind::Star),
            '/' => Some(Kind::Slash),
            '^' => Some(Kind::Caret),
            '(' => Some(Kind::LParen),
            ')' => Some(Kind::RParen),
            _ => None,
        };
        if let Some(kind) = simple {
            tokens.push(Token { kind, column, inner: column });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            tokens.push(Token {
                kind: Kind::Int(digits.parse().expect("digits")),
                column,
                inner: column,
            });
        } else if c == 'd' {
            let start = i + 1;
            i = start;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(err(column, "expected derivation index after `d`".into()));
            }
            let digits: String = chars[start..i].iter().collect();
            let k = digits
                .parse()
                .map_err(|_| err(column, format!("derivation index `{digits}` too large")))?;
            tokens.push(Token {
                kind: Kind::Deriv(k),
                column,
                inner: column,
            });
        } else if c == 'x' {
            if chars.get(i + 1) != Some(&'[') {
                return Err(err(column, "expected `[` after `x`".into()));
            }
            let start = i + 2;
            i = start;
            while i < chars.len() && chars[i] != ']' {
                i += 1;
            }
            if i == chars.len() {
                return Err(err(column, "unterminated `x[`".into()));
            }
            let body: String = chars[start..i].iter().collect();
            i += 1;
            tokens.push(Token {
                kind: Kind::Var(body),
                column,
                inner: start + 1,
            });
        } else {
            return Err(err(column, format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    ambient: &'a Ambient,
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_column: usize,
}

impl Parser<'_> {
    fn error_at(&self, column: usize, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column,
            message,
        }
    }

    fn peek(&self) -> Option<&Kind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn expect_nat(&mut self, what: &str) -> Result<u64> {
        let column = self.column();
        match self.peek() {
            Some(Kind::Int(n)) => {
                let n = u64::try_from(n.clone())
                    .map_err(|_| self.error_at(column, format!("{what} too large")))?;
                self.pos += 1;
                Ok(n)
            }
            Some(other) => {
                let msg = format!("expected {what}, found {}", other.describe());
                Err(self.error_at(column, msg))
            }
            None => Err(self.error_at(column, format!("expected {what}, found end of input"))),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(&Kind::Caret) {
            self.pos += 1;
            let column = self.column();
            let e = self.expect_nat("exponent")?;
            u32::try_from(e).map_err(|_| self.error_at(column, "exponent too large".into()))
        } else {
            Ok(1)
        }
    }

    fn poly(&mut self) -> Result<DiffPoly> {
        let mut acc = self.ambient.zero();
        let mut negate = false;
        match self.peek() {
            Some(Kind::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Kind::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Kind::Plus) => negate = false,
                Some(Kind::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<DiffPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Kind::Star) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DiffPoly> {
        let column = self.column();
        match self.peek().cloned() {
            Some(Kind::Int(num)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(&Kind::Slash) {
                    self.pos += 1;
                    let den_col = self.column();
                    let den = self.expect_nat("denominator")?;
                    if den == 0 {
                        return Err(self.error_at(den_col, "zero denominator".into()));
                    }
                    value /= Rational::from_integer(BigInt::from(den));
                }
                Ok(self.ambient.constant(value))
            }
            Some(Kind::LParen) => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(&Kind::RParen) {
                    let col = self.column();
                    return Err(self.error_at(col, "expected `)`".into()));
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(Kind::Deriv(_)) | Some(Kind::Var(_)) => {
                let v = self.indet()?;
                let e = self.exponent()?;
                Ok(self.ambient.poly(v)?.pow(e))
            }
            Some(other) => {
                Err(self.error_at(column, format!("expected a factor, found {}", other.describe())))
            }
            None => Err(self.error_at(column, "expected a factor, found end of input".into())),
        }
    }

    fn indet(&mut self) -> Result<Indeterminate> {
        let m = self.ambient.derivations();
        let mut op = DerivOp::identity(m);
        while let Some(Kind::Deriv(k)) = self.peek().cloned() {
            let column = self.column();
            self.pos += 1;
            if k == 0 {
                return Err(self.error_at(column, "derivations are 1-based; `d0` is invalid".into()));
            }
            if k as usize > m {
                return Err(self.error_at(
                    column,
                    format!("unknown derivation index d{k}: ring has {m} derivation(s)"),
                ));
            }
            let e = self.exponent()?;
            for _ in 0..e {
                op.bump(k as usize - 1);
            }
        }
        let (body, column, inner) = match self.tokens.get(self.pos) {
            Some(Token {
                kind: Kind::Var(body),
                column,
                inner,
            }) => (body.clone(), *column, *inner),
            _ => {
                let col = self.column();
                return Err(self.error_at(col, "expected `x[...]` after derivations".into()));
            }
        };
        self.pos += 1;
        let group = self.ambient.group();
        let (block, index_text, index_col) = match body.split_once(',') {
            Some((elem, idx)) => {
                let name = elem.trim();
                let block = group
                    .index_of(name)
                    .map_err(|_| self.error_at(inner, format!("unknown group element `{name}`")))?;
                (block, idx.trim().to_string(), inner + elem.chars().count() + 1)
            }
            None if group.is_trivial() => (0, body.trim().to_string(), inner),
            None => {
                return Err(self.error_at(
                    column,
                    "group element required: write x[element,index]".into(),
                ))
            }
        };
        let index: usize = index_text
            .parse()
            .map_err(|_| self.error_at(index_col, format!("bad variable index `{index_text}`")))?;
        let n = self.ambient.vars();
        if index == 0 || index > n {
            return Err(self.error_at(
                index_col,
                format!("variable index {index} out of range 1..={n}"),
            ));
        }
        Ok(Indeterminate::new(block, index - 1, op))
    }
}
