//! Parser for the canonical textual scalar form, accepting the symbols `q`,
//! `v`, `y1`, `y2`, `z` (= `y1*y2^-1`), integers, rationals and the operators
//! `+ - * / ^` with parentheses. Exponents may be integers or halves written
//! `q^(k/2)`.

use alloc::string::String;


use num_bigint::BigInt;

use super::poly::LaurentPoly;
use super::ratio::ScalarK;
use super::Exponent;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

/// Parse a scalar expression into `K`.
pub fn parse_scalar(input: &str) -> Result<ScalarK, ParseError> {
    let mut p = Parser { bytes: input.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError { message: String::from(message), position: self.pos }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ScalarK, ParseError> {
        let mut acc = if self.eat(b'-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ScalarK, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let rhs = self.factor()?;
                acc = acc.div(&rhs).ok_or_else(|| self.err("division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<ScalarK, ParseError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let (num, halved) = self.exponent()?;
            let k = if halved {
                // Only the symbol q may carry a half exponent: q^(k/2) = v^k.
                return base
                    .half_power(num)
                    .ok_or_else(|| self.err("half exponent only allowed on q"));
            } else {
                num
            };
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    /// Returns `(value, halved)`; `halved` when written as `(k/2)`.
    fn exponent(&mut self) -> Result<(i64, bool), ParseError> {
        if self.eat(b'(') {
            let n = self.integer()?;
            if !self.eat(b'/') {
                if self.eat(b')') {
                    return Ok((n, false));
                }
                return Err(self.err("expected / or ) in exponent"));
            }
            let d = self.integer()?;
            if d != 2 {
                return Err(self.err("only halves are supported in exponents"));
            }
            if !self.eat(b')') {
                return Err(self.err("expected ) after exponent"));
            }
            Ok((n, true))
        } else {
            Ok((self.integer()?, false))
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<ScalarK, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected )"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(ScalarK::q_power(Exponent::q(1)))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(ScalarK::monomial(BigInt::from(1), [1, 0, 0]))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(ScalarK::q_power(Exponent::s()))
            }
            Some(b'y') => {
                self.pos += 1;
                match self.bytes.get(self.pos) {
                    Some(b'1') => {
                        self.pos += 1;
                        Ok(ScalarK::monomial(BigInt::from(1), [0, 1, 0]))
                    }
                    Some(b'2') => {
                        self.pos += 1;
                        Ok(ScalarK::monomial(BigInt::from(1), [0, 0, 1]))
                    }
                    _ => Err(self.err("expected y1 or y2")),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(ScalarK::int(n))
            }
            _ => Err(self.err("expected a value")),
        }
    }
}

impl ScalarK {
    /// `self^(k/2)` when `self` is the symbol `q`; used only by the parser.
    fn half_power(&self, k: i64) -> Option<ScalarK> {
        if *self == ScalarK::q_power(Exponent::q(1)) {
            Some(ScalarK::from_poly(LaurentPoly::monomial(BigInt::from(1), [k, 0, 0])))
        } else {
            None
        }
    }
}
