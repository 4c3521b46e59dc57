//! Exact element syntax shared by every file format.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | 't' | 'sqrt(' integer ')' | '(' expr ')'
//! ```
//!
//! Decimal points are rejected: there are no floating literals. `t` is only valid
//! in Q(t), and `sqrt(n)` only in Q(sqrt d) when `n = m^2 d` (or `n` is a square).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::arith::{exact_sqrt_int, rational_sqrt};
use super::{FieldElement, FieldKind};

pub fn parse_element(text: &str, kind: &FieldKind) -> Result<FieldElement, String> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, kind };
    let v = p.expr()?;
    if p.pos != p.src.len() {
        return Err(format!("unexpected '{}' at offset {} in {text:?}", p.src[p.pos] as char, p.pos));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    kind: &'a FieldKind,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FieldElement, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?).map_err(|e| e.to_string())?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.try_mul(&self.unary()?).map_err(|e| e.to_string())?;
            } else if self.eat(b'/') {
                acc = acc.try_div(&self.unary()?).map_err(|e| e.to_string())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElement, String> {
        if self.eat(b'-') {
            return Ok(self.unary()?.negated());
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElement, String> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let exp = self.integer()?;
        let exp = u32::try_from(&exp).map_err(|_| format!("exponent {exp} too large"))?;
        let mut acc = FieldElement::one(self.kind);
        for _ in 0..exp {
            acc = acc.try_mul(&base).map_err(|e| e.to_string())?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some(c) => format!("expected a number at offset {start}, found '{}'", c as char),
                None => format!("expected a number at offset {start}, found end of input"),
            });
        }
        if self.peek() == Some(b'.') {
            return Err("floating literals are not accepted; write p/q".into());
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<FieldElement, String> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(format!("expected ')' at offset {}", self.pos));
                }
                Ok(v)
            }
            Some(b't') => {
                self.pos += 1;
                match self.kind {
                    FieldKind::RatFunc => Ok(FieldElement::indeterminate()),
                    k => Err(format!("indeterminate 't' is not an element of the {k} field")),
                }
            }
            Some(b's') => {
                if !self.src[self.pos..].starts_with(b"sqrt(") {
                    return Err(format!("unknown token at offset {}", self.pos));
                }
                self.pos += 5;
                let n = self.integer()?;
                if !self.eat(b')') {
                    return Err(format!("expected ')' at offset {}", self.pos));
                }
                self.sqrt_literal(&n)
            }
            _ => {
                let n = self.integer()?;
                Ok(FieldElement::from_rational(BigRational::from_integer(n), self.kind))
            }
        }
    }

    fn sqrt_literal(&self, n: &BigInt) -> Result<FieldElement, String> {
        if let Some(r) = exact_sqrt_int(n) {
            return Ok(FieldElement::from_rational(BigRational::from_integer(r), self.kind));
        }
        let FieldKind::Quad(d) = self.kind else {
            return Err(format!("sqrt({n}) is not an element of the {} field", self.kind));
        };
        let ratio = BigRational::new(n.clone(), d.clone());
        match rational_sqrt(&ratio) {
            Some(m) if !m.is_zero() && !n.is_negative() => Ok(FieldElement::quad(
                BigRational::zero(),
                m,
                d.clone(),
            )),
            _ => Err(format!("sqrt({n}) is not an element of Q(sqrt {d})")),
        }
    }
}
