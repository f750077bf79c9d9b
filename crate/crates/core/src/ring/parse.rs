//! Polynomial expressions: `x*z - y^2`, `3*x^2*y + (x - y)^2`.
//!
//! Terms are joined by `+`/`-`, factors by `*`, powers by `^`; coefficients
//! are decimal integers reduced mod p. Whitespace is ignored.

use alloc::string::String;

use super::{Polynomial, Ring};

/// A parse failure at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    let chars: alloc::vec::Vec<(usize, char)> =
        text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect();
    let mut p = Parser { ring, chars: &chars, pos: 0, end_col: text.chars().count() + 1 };
    if chars.is_empty() {
        return Err(p.error("empty expression"));
    }
    let f = p.expr()?;
    if p.pos < chars.len() {
        return Err(p.error(&alloc::format!("unexpected `{}`", chars[p.pos].1)));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: &'a [(usize, char)],
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end_col, |&(c, _)| c)
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError { column: self.column(), message: msg.into() }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero();
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { self.ring.sub(&acc, &t) } else { self.ring.add(&acc, &t) };
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let v = self.number()?;
                let p = self.ring.field().modulus() as u128;
                self.ring.constant((v % p) as i64)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                e
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                let col = self.column();
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
                match self.ring.names().iter().position(|v| *v == name) {
                    Some(i) => self.ring.var(i),
                    None => {
                        return Err(ParseError {
                            column: col,
                            message: alloc::format!("unknown variable `{name}`"),
                        })
                    }
                }
            }
            Some(c) => return Err(self.error(&alloc::format!("unexpected `{c}`"))),
            None => return Err(self.error("unexpected end of expression")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("expected an exponent"));
            }
            let e = self.number()?;
            let e = u32::try_from(e)
                .ok()
                .filter(|&e| e <= 1000)
                .ok_or_else(|| self.error("exponent too large"))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<u128, ParseError> {
        let mut v: u128 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(c as u128 - '0' as u128))
                .ok_or_else(|| self.error("integer literal too large"))?;
            self.pos += 1;
        }
        Ok(v)
    }
}
