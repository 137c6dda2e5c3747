//! Recursive-descent parser for rational Laurent expressions.
//!
//! Grammar:
//! ```text
//! expr   := ["-"] term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := base ("^" signed-int)?
//! base   := integer | identifier | "(" expr ")"
//! ```
//! Whitespace is insignificant; identifiers match `[A-Za-z][A-Za-z0-9']*`
//! and must belong to the declared variable list. Errors carry the byte
//! offset where they occurred.

use crate::poly::{LaurentPoly, PolyError};
use crate::rational::RationalExpr;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("division by the zero polynomial at byte {pos}")]
    DivisionByZero { pos: usize },
    #[error("arithmetic error at byte {pos}: {source}")]
    Arith { pos: usize, source: PolyError },
}

/// Parse `text` into an exact rational expression over `vars`.
pub fn parse_expr(text: &str, vars: &[String]) -> Result<RationalExpr, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        vars,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

/// Parse `text` and insist the result is a Laurent polynomial (denominator 1
/// after monomial folding).
pub fn parse_laurent(text: &str, vars: &[String]) -> Result<LaurentPoly, ParseError> {
    let r = parse_expr(text, vars)?;
    r.as_laurent()
        .map_err(|e| ParseError::Arith { pos: 0, source: e })
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn arith(&self, pos: usize, source: PolyError) -> ParseError {
        match source {
            PolyError::DivisionByZero => ParseError::DivisionByZero { pos },
            other => ParseError::Arith { pos, source: other },
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalExpr, ParseError> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let pos = self.pos;
                let t = self.term()?;
                acc = acc.add(&t).map_err(|e| self.arith(pos, e))?;
            } else if self.eat(b'-') {
                let pos = self.pos;
                let t = self.term()?;
                acc = acc.sub(&t).map_err(|e| self.arith(pos, e))?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalExpr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                let pos = self.pos;
                let f = self.factor()?;
                acc = acc.mul(&f).map_err(|e| self.arith(pos, e))?;
            } else if self.eat(b'/') {
                let pos = self.pos;
                let f = self.factor()?;
                if f.is_zero() {
                    return Err(ParseError::DivisionByZero { pos });
                }
                acc = acc.div(&f).map_err(|e| self.arith(pos, e))?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalExpr, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let pos = self.pos;
            let n = self.signed_int()?;
            base.pow(n).map_err(|e| self.arith(pos, e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<RationalExpr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                self.skip_ws();
                Ok(RationalExpr::from_poly(LaurentPoly::constant(self.vars, n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.identifier();
                self.skip_ws();
                let poly = LaurentPoly::variable(self.vars, &name).map_err(|_| {
                    ParseError::UnknownVariable {
                        pos: start,
                        name: name.clone(),
                    }
                })?;
                Ok(RationalExpr::from_poly(poly))
            }
            _ => Err(self.syntax("expected integer, identifier, or `(`")),
        }
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        self.pos += 1;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = &self.bytes[start..self.pos];
        BigInt::parse_bytes(digits, 10).ok_or_else(|| self.syntax("expected integer"))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.syntax("expected exponent"));
        }
        let n = self.integer()?;
        self.skip_ws();
        let n: i64 = i64::try_from(&n).map_err(|_| self.syntax("exponent too large"))?;
        Ok(if negative { -n } else { n })
    }
}
