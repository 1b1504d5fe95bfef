//! The polynomial expression language.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ['^' INT]
//! atom   := INT | 'rt' | 'xi' | 'eta' | '(' expr ')'
//! ```
//!
//! `rt` is the square root of `d`. Polynomial targets only divide by nonzero
//! constants, so `3/4*xi` is a coefficient; rational-function targets are in
//! `xi` alone and divide freely.

use std::fmt;

use nonint_core::exactalg::{BiPoly, FieldSpec, QuadExt, RatFunc, UPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Exponents above this are rejected to keep expansion bounded.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            let n = s.parse().expect("digits");
            out.push(Token { tok: Tok::Int(n), line: l0, col: c0 });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line: l0, col: c0 });
        } else if "+-*/^()".contains(c) {
            chars.next();
            col += 1;
            out.push(Token { tok: Tok::Sym(c), line: l0, col: c0 });
        } else {
            return Err(ParseError { line, col, msg: format!("unexpected character '{c}'") });
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

/// Values the evaluator works in.
trait Domain: Sized + Clone {
    fn constant(c: QuadExt) -> Self;
    fn var(name: &str) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Result<Self, String>;
    fn pow(&self, e: u32) -> Self;
}

impl Domain for BiPoly {
    fn constant(c: QuadExt) -> Self {
        BiPoly::constant(c)
    }
    fn var(name: &str) -> Option<Self> {
        match name {
            "xi" => Some(BiPoly::xi()),
            "eta" => Some(BiPoly::eta()),
            _ => None,
        }
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        let c = if o.terms().all(|(&(i, j), _)| i == 0 && j == 0) { Some(o.coeff(0, 0)) } else { None };
        match c.map(|c| c.inv()) {
            Some(Some(inv)) => Ok(self.scale(&inv)),
            Some(None) => Err("division by zero".into()),
            None => Err("polynomial expressions may only divide by nonzero constants".into()),
        }
    }
    fn pow(&self, e: u32) -> Self {
        BiPoly::pow(self, e)
    }
}

impl Domain for RatFunc {
    fn constant(c: QuadExt) -> Self {
        RatFunc::constant(c)
    }
    fn var(name: &str) -> Option<Self> {
        (name == "xi").then(|| RatFunc::from_poly(UPoly::x()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        self.checked_div(o).map_err(|_| "division by zero".to_string())
    }
    fn pow(&self, e: u32) -> Self {
        RatFunc::pow(self, e)
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn err_at<T>(&self, t: &Token, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: t.line, col: t.col, msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<D: Domain>(&mut self) -> Result<D, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term::<D>()?;
        if neg {
            acc = D::constant(QuadExt::zero()).sub(&acc);
        }
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term::<D>()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term::<D>()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<D: Domain>(&mut self) -> Result<D, ParseError> {
        let mut acc = self.unary::<D>()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary::<D>()?);
            } else if self.peek().tok == Tok::Sym('/') {
                let at = self.peek().clone();
                self.pos += 1;
                let rhs = self.unary::<D>()?;
                acc = match acc.div(&rhs) {
                    Ok(v) => v,
                    Err(m) => return self.err_at(&at, m),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<D: Domain>(&mut self) -> Result<D, ParseError> {
        if self.eat('-') {
            let v = self.unary::<D>()?;
            return Ok(D::constant(QuadExt::zero()).sub(&v));
        }
        self.power()
    }

    fn power<D: Domain>(&mut self) -> Result<D, ParseError> {
        let base = self.atom::<D>()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(n) => {
                self.pos += 1;
                match u32::try_from(n).ok().filter(|e| *e <= MAX_EXPONENT) {
                    Some(e) => Ok(base.pow(e)),
                    None => self.err_at(&t, format!("exponent exceeds {MAX_EXPONENT}")),
                }
            }
            _ => self.err_at(&t, format!("expected a nonnegative integer exponent, found {}", t.tok)),
        }
    }

    fn atom<D: Domain>(&mut self) -> Result<D, ParseError> {
        let t = self.peek().clone();
        self.pos += 1;
        match &t.tok {
            Tok::Int(n) => Ok(D::constant(QuadExt::from_rational(BigRational::from_integer(n.clone())))),
            Tok::Ident(s) if s == "rt" => {
                if self.field.is_rational() {
                    return self.err_at(&t, "'rt' is undefined over Q (d = 1)");
                }
                Ok(D::constant(self.field.sqrt_d()))
            }
            Tok::Ident(s) => match D::var(s) {
                Some(v) => Ok(v),
                None => self.err_at(&t, format!("unknown identifier '{s}'")),
            },
            Tok::Sym('(') => {
                let v = self.expr::<D>()?;
                let close = self.peek().clone();
                if !self.eat(')') {
                    return self.err_at(&close, format!("expected ')', found {}", close.tok));
                }
                Ok(v)
            }
            other => self.err_at(&t, format!("unexpected {other}")),
        }
    }
}

fn parse_with<D: Domain>(text: &str, field: FieldSpec) -> Result<D, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks: &toks, pos: 0, field };
    let v = p.expr::<D>()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.err_at(&t, format!("unexpected {}", t.tok));
    }
    Ok(v)
}

/// Parses a polynomial in `xi`, `eta` over `Q(sqrt d)`.
pub fn parse_poly(text: &str, field: FieldSpec) -> Result<BiPoly, ParseError> {
    parse_with(text, field)
}

/// Parses a rational function of `xi` over `Q(sqrt d)`.
pub fn parse_ratfunc(text: &str, field: FieldSpec) -> Result<RatFunc, ParseError> {
    parse_with(text, field)
}

/// Parses a constant such as `-1/2 + 3*rt`.
pub fn parse_constant(text: &str, field: FieldSpec) -> Result<QuadExt, ParseError> {
    let p = parse_poly(text, field)?;
    if p.terms().any(|(&(i, j), _)| i != 0 || j != 0) {
        return Err(ParseError { line: 1, col: 1, msg: "expected a constant".into() });
    }
    Ok(p.coeff(0, 0))
}
