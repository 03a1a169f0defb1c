//! Named variables and the text form of polynomials.
//!
//! Grammar (whitespace ignored):
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' digits)?
//! atom   := digits | name | '(' expr ')'
//! ```
//! Division is only allowed by a nonzero constant.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Monomial, MonomialOrder, Polynomial, Var};
use crate::exactmath::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsePolyError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParsePolyError {}

/// A list of variable names; variable `i` is `names[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new(names: &[&str]) -> Self {
        PolyRing {
            names: names.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name).map(|i| i as Var)
    }

    pub fn name(&self, v: Var) -> Option<&str> {
        self.names.get(v as usize).map(String::as_str)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, ParsePolyError> {
        let mut p = Parser {
            ring: self,
            src: text.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }

    /// Canonical text: terms in decreasing degrevlex order (variable 0
    /// highest), coefficients in lowest terms, `0` for the zero polynomial.
    /// [`PolyRing::parse`] reads it back to the same polynomial.
    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let ord = MonomialOrder::degrevlex((0..self.names.len() as Var).collect());
        let mut terms: Vec<(&Monomial, &Scalar)> = p.terms().collect();
        terms.sort_by(|a, b| ord.compare(b.0, a.0));
        let mut out = String::new();
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for &(v, e) in m.pairs() {
                let name = match self.name(v) {
                    Some(n) => n.to_string(),
                    None => alloc::format!("v{v}"),
                };
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(alloc::format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParsePolyError {
        ParsePolyError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParsePolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParsePolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    let inv = constant_of(&d)
                        .and_then(|c| c.inv())
                        .ok_or(ParsePolyError {
                            position: at,
                            message: "division only by a nonzero constant".to_string(),
                        })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParsePolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String, ParsePolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Polynomial, ParsePolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let s: Scalar = d.parse().map_err(|_| self.error("bad number"))?;
                Ok(Polynomial::constant(s))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match self.ring.var(name) {
                    Some(v) => Ok(Polynomial::var(v)),
                    None => Err(ParsePolyError {
                        position: start,
                        message: alloc::format!("unknown variable '{name}'"),
                    }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn constant_of(p: &Polynomial) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero());
    }
    if p.len() == 1 {
        let (m, c) = p.terms().next()?;
        if m.is_one() {
            return Some(c.clone());
        }
    }
    None
}
