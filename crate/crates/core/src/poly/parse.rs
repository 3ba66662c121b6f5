//! Parser for the polynomial text grammar.
//!
//! Accepts both expanded form `x^4 - 36*x^3 + 454*x^2 - 2356*x + 4241` and
//! factored form `(x+5)^32*(x-9)^13*(x^2-21*x+92)`. Whitespace-insensitive;
//! `^` binds tighter than `*`.

use super::IntPoly;
use crate::num::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        })
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            _ => self.err(&format!("expected '{}'", c as char)),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let n = self.integer()?;
        let s = n.to_string();
        s.parse::<u32>()
            .map_err(|_| ParseError {
                pos: self.pos,
                msg: "exponent too large".into(),
            })
    }

    // expression := ['+'|'-'] term (('+'|'-') term)*
    fn expression(&mut self) -> Result<IntPoly, ParseError> {
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                self.pos += 1;
                negate = c == b'-';
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                self.pos += 1;
                let t = self.term()?;
                acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    // term := power ('*' power)*
    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let p = self.power()?;
            acc = acc.mul(&p);
        }
        Ok(acc)
    }

    // power := atom ('^' uint)?
    fn power(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    // atom := '(' expression ')' | 'x' | integer
    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expression()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(self.integer()?)),
            _ => self.err("expected '(', 'x', or integer"),
        }
    }
}

/// Parse a polynomial in either expanded or factored text form.
pub fn parse_poly(s: &str) -> Result<IntPoly, ParseError> {
    let mut p = Parser {
        bytes: s.as_bytes(),
        pos: 0,
    };
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return p.err("trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let cases = [
            "x^4 - 36*x^3 + 454*x^2 - 2356*x + 4241",
            "x + 5",
            "x",
            "-x^2 + 3",
            "7",
        ];
        for c in cases {
            let p = parse_poly(c).unwrap();
            assert_eq!(parse_poly(&p.expanded()).unwrap(), p, "case {c}");
        }
    }

    #[test]
    fn factored_form() {
        let p = parse_poly("(x+5)^32*(x-9)^13*(x^2-21*x+92)").unwrap();
        assert_eq!(p.degree(), 47);
        let q = parse_poly("(x + 5)^32 * (x - 9)^13 * (x^2 - 21*x + 92)").unwrap();
        assert_eq!(p, q);
        // ^ binds tighter than *
        let a = parse_poly("(x+1)^2*(x+2)").unwrap();
        let b = parse_poly("(x+1)^2").unwrap().mul(&parse_poly("x+2").unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_poly("x^4 + * 3").unwrap_err();
        assert!(e.pos >= 6);
        assert!(parse_poly("(x+1").is_err());
        assert!(parse_poly("x + y").is_err());
    }
}
