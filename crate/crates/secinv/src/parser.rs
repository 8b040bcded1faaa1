//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ('^' uint)? | '(' expr ')' | '-' factor
//! rational := int ('/' uint)?
//! ```
//! Whitespace is insignificant. Multiplication is always explicit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

pub fn parse_polynomial(text: &str, vars: &[String], order: MonomialOrder) -> Result<Polynomial> {
    let mut p = Parser::new(text, vars, order);
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [String],
    order: MonomialOrder,
}

impl<'a> Parser<'a> {
    fn new(text: &str, vars: &'a [String], order: MonomialOrder) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            vars,
            order,
        }
    }

    fn err(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('-') => {
                self.bump();
                Ok(self.factor()?.neg())
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(Polynomial::constant(self.vars.len(), self.order, r))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.ident();
                let idx = self
                    .vars
                    .iter()
                    .position(|v| v == &name)
                    .ok_or(Error::UnknownVariable(name))?;
                let base = Polynomial::variable(self.vars.len(), self.order, idx);
                if self.peek() == Some('^') {
                    self.bump();
                    let e = self.uint()?;
                    let mut acc = Polynomial::one(self.vars.len(), self.order);
                    for _ in 0..e {
                        acc = acc.mul(&base)?;
                    }
                    Ok(acc)
                } else {
                    Ok(base)
                }
            }
            Some(c) => Err(self.err(&format!("unexpected character `{c}`"))),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("number out of range"))
    }

    fn bigint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("invalid integer"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.bigint()?;
        if self.peek() == Some('/') {
            self.bump();
            let den = self.bigint()?;
            if den.is_zero() {
                return Err(self.err("division by zero in rational literal"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from(num))
        }
    }
}

/// Parse a standalone rational literal: optional '-', digits, optional
/// '/ digits'. Used for matrix entries in problem files.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let (neg, rest) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, text),
    };
    let mut p = Parser::new(rest, &[], MonomialOrder::DegRevLex);
    let r = p.rational()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(Error::Parse {
            position: p.pos,
            message: "unexpected trailing input in rational literal".to_string(),
        });
    }
    Ok(if neg { -r } else { r })
}
