//! Text grammar for polynomials: identifiers, integer coefficients, `^`
//! with an integer exponent, explicit `*`, `+`, `-` and parentheses.

use num_bigint::BigInt;

use super::field::Field;
use super::poly::Polynomial;
use super::ring::{RingExt, RingRef};
use crate::error::{AlgebraError, Result};

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    src: &'a [u8],
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { acc.try_add(&t)? } else { acc.try_sub(&t)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                self.err("juxtaposition is not allowed; write an explicit '*'")
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected a nonnegative integer exponent after '^'");
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = text
                .parse()
                .map_err(|_| AlgebraError::ExponentOverflow(u32::MAX))?;
            if e > u16::MAX as u32 {
                return Err(AlgebraError::ExponentOverflow(e));
            }
            return base.try_pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v: BigInt = text.parse().expect("digits");
                Ok(self.ring.constant(self.ring.field().from_bigint(&v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable {name}"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_polynomial<F: Field>(ring: &RingRef<F>, text: &str) -> Result<Polynomial<F>> {
    let mut p = Parser {
        ring,
        src: text.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Comma-separated list; commas inside parentheses are not separators.
pub fn parse_polynomial_list<F: Field>(ring: &RingRef<F>, text: &str) -> Result<Vec<Polynomial<F>>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_polynomial(ring, &text[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !text[start..].trim().is_empty() || !out.is_empty() {
        out.push(parse_polynomial(ring, &text[start..])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Ring};

    #[test]
    fn parses_grammar_example() {
        let r = Ring::new(PrimeField::default(), &["x", "y", "z"]).unwrap();
        let p = r.parse("x^2*y - 3*z^3").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x^2*y - 3*z^3");
        assert_eq!(r.parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn rejects_juxtaposition_and_unknowns() {
        let r = Ring::new(PrimeField::default(), &["x", "y"]).unwrap();
        assert!(matches!(r.parse("2x"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(r.parse("x y"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(r.parse("x*w"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(r.parse("x^"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(r.parse("x^70000"), Err(AlgebraError::ExponentOverflow(_))));
    }

    #[test]
    fn lists_respect_parentheses() {
        let r = Ring::new(PrimeField::default(), &["x", "y"]).unwrap();
        let v = r.parse_list("(x+y)^2, x - y ,y").unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[0], r.parse("x^2 + 2*x*y + y^2").unwrap());
        assert!(r.parse_list("").unwrap().is_empty());
    }
}
