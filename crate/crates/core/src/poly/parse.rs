//! Text form of polynomials as they appear in printed tables, e.g.
//! `10(x+1)(x^2+4x+1)`, `(x + 1)^3(x^4 + x^3 + 11x^2 + x + 1)`, `24(y+4)`.
//!
//! Grammar (whitespace ignored; `x`, `y` and `q` all name the same indeterminate):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' exp]
//! exp    := digits | '{' digits '}'
//! atom   := digits | 'x' | 'y' | 'q' | '(' expr ')'
//! ```
//!
//! An integer may only start a term or follow an explicit `*`, so `2 3` is
//! rejected rather than read as 6.

use std::str::FromStr;

use num_bigint::BigInt;

use super::IntPoly;
use crate::error::{Error, Result};

/// Degree ceiling for parsed input.
pub const MAX_PARSED_DEGREE: usize = 1 << 16;
const MAX_COEFF_BITS: u64 = 1 << 20;
const MAX_NESTING: usize = 128;

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
            depth: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::PolySyntax {
            pos: self.pos,
            msg: msg.to_owned(),
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

    fn expr(&mut self) -> Result<IntPoly> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(self.err("nesting too deep"));
        }
        let mut negate = false;
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<IntPoly> {
        let mut acc = self.factor(true)?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor(true)?;
                    acc = checked_mul(&acc, &f).map_err(|e| self.relocate(e))?;
                }
                Some(b'x' | b'y' | b'q' | b'(') => {
                    let f = self.factor(false)?;
                    acc = checked_mul(&acc, &f).map_err(|e| self.relocate(e))?;
                }
                Some(c) if c.is_ascii_digit() => {
                    return Err(self.err("integer must follow '*' here"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self, allow_int: bool) -> Result<IntPoly> {
        let base = self.atom(allow_int)?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return checked_pow(&base, e).map_err(|err| self.relocate(err));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32> {
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected exponent"));
        }
        let e = std::str::from_utf8(digits)
            .unwrap()
            .parse::<u32>()
            .map_err(|_| self.err("exponent too large"))?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        Ok(e)
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self, allow_int: bool) -> Result<IntPoly> {
        match self.peek() {
            Some(b'x' | b'y' | b'q') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() && allow_int => {
                let digits = self.digits();
                if digits.len() as u64 > MAX_COEFF_BITS / 3 {
                    return Err(self.err("integer literal too long"));
                }
                let n: BigInt = std::str::from_utf8(digits).unwrap().parse().unwrap();
                Ok(IntPoly::constant(n))
            }
            Some(_) => Err(self.err("expected a number, variable or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn relocate(&self, e: Error) -> Error {
        match e {
            Error::PolySyntax { msg, .. } => Error::PolySyntax { pos: self.pos, msg },
            other => other,
        }
    }
}

fn max_bits(p: &IntPoly) -> u64 {
    p.coeffs().iter().map(BigInt::bits).max().unwrap_or(0)
}

fn checked_mul(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.degree() + b.degree() > MAX_PARSED_DEGREE {
        return Err(Error::DegreeTooLarge(MAX_PARSED_DEGREE));
    }
    // each product coefficient sums at most min(len) terms
    let growth = 64 - (a.coeffs().len().min(b.coeffs().len()) as u64).leading_zeros() as u64;
    if max_bits(a) + max_bits(b) + growth > MAX_COEFF_BITS {
        return Err(Error::PolySyntax {
            pos: 0,
            msg: "coefficients too large".into(),
        });
    }
    Ok(a * b)
}

fn checked_pow(base: &IntPoly, e: u32) -> Result<IntPoly> {
    if (base.degree() as u64) * (e as u64) > MAX_PARSED_DEGREE as u64 {
        return Err(Error::DegreeTooLarge(MAX_PARSED_DEGREE));
    }
    // (Σ|c_i|)^e bounds every coefficient of the power
    let l1: BigInt = base.coeffs().iter().map(|c| c.magnitude().clone()).sum::<num_bigint::BigUint>().into();
    if l1.bits().saturating_mul(e as u64) > MAX_COEFF_BITS {
        return Err(Error::PolySyntax {
            pos: 0,
            msg: "coefficients too large".into(),
        });
    }
    Ok(base.pow(e))
}
