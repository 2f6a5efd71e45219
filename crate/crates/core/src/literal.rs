//! Text literals for Laurent scalars, as accepted on the command line.
//!
//! A literal is a signed sum of terms `c`, `p` or `c p` (optionally `c*p`),
//! where `c` is an integer or fraction `a/b` and `p` is `q`, `v`, `q^e` or
//! `v^k`. The `q` exponent may be an integer or a half-integer written in
//! parentheses, as in `q^(-1/2)`; since `v = q^(1/2)` the `v` exponent is an
//! integer. Examples: `q^-2`, `1 - q^2`, `3/2 q^(1/2)`, `-v^3 + 2`.
//! Every `Laurent` prints in a form this parser reads back.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::scalar::Laurent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse scalar {input:?} at offset {pos}: {msg}")]
pub struct LiteralError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, LiteralError> {
        Err(LiteralError {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, LiteralError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn signed_integer(&mut self) -> Result<i64, LiteralError> {
        let neg = self.eat('-');
        let v = self.integer()?;
        let v: i64 = match i64::try_from(v) {
            Ok(v) => v,
            Err(_) => return self.err("exponent too large"),
        };
        Ok(if neg { -v } else { v })
    }

    /// Returns the exponent of `v`.
    fn q_exponent(&mut self) -> Result<i64, LiteralError> {
        if self.eat('(') {
            let num = self.signed_integer()?;
            let out = if self.eat('/') {
                if self.integer()? != BigInt::from(2) {
                    return self.err("q exponents must be integers or halves");
                }
                num
            } else {
                2 * num
            };
            if !self.eat(')') {
                return self.err("expected ')'");
            }
            Ok(out)
        } else {
            Ok(2 * self.signed_integer()?)
        }
    }

    fn power(&mut self) -> Result<Option<i64>, LiteralError> {
        let base = match self.peek() {
            Some('q') => 2,
            Some('v') => 1,
            _ => return Ok(None),
        };
        self.pos += 1;
        if !self.eat('^') {
            return Ok(Some(base));
        }
        Ok(Some(if base == 2 { self.q_exponent()? } else { self.signed_integer()? }))
    }

    fn term(&mut self) -> Result<Laurent, LiteralError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat('/') { self.integer()? } else { BigInt::from(1) };
            if den == BigInt::from(0) {
                return self.err("zero denominator");
            }
            let c = BigRational::new(num, den);
            self.eat('*');
            Some(c)
        } else {
            None
        };
        let exp = self.power()?;
        match (coeff, exp) {
            (None, None) => self.err("expected a number, q or v"),
            (c, e) => Ok(Laurent::monomial(
                e.unwrap_or(0),
                c.unwrap_or_else(|| BigRational::from_integer(1.into())),
            )),
        }
    }

    fn expr(&mut self) -> Result<Laurent, LiteralError> {
        let mut total = Laurent::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else if self.peek().is_none() {
                break;
            } else {
                return self.err("expected '+' or '-'");
            };
            first = false;
            let t = self.term()?;
            total = if neg { &total - &t } else { &total + &t };
        }
        Ok(total)
    }
}

/// Parses a scalar literal.
pub fn parse_laurent(s: &str) -> Result<Laurent, LiteralError> {
    let mut p = Parser {
        src: s,
        chars: s.chars().collect(),
        pos: 0,
    };
    if p.peek().is_none() {
        return p.err("empty literal");
    }
    p.expr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(parse_laurent("q^-2").unwrap(), Laurent::q_pow(-2));
        assert_eq!(parse_laurent("1 - q^2").unwrap(), &Laurent::one() - &Laurent::q_pow(2));
        assert_eq!(parse_laurent("q^(-1/2)").unwrap(), Laurent::v_pow(-1));
        assert_eq!(parse_laurent("-v^3 + 2").unwrap(), &Laurent::from_int(2) - &Laurent::v_pow(3));
        assert_eq!(
            parse_laurent("3/2 q").unwrap(),
            Laurent::monomial(2, BigRational::new(3.into(), 2.into()))
        );
        assert_eq!(parse_laurent("2*q^3").unwrap(), Laurent::q_pow(3).scale(&BigRational::from_integer(2.into())));
        for bad in ["", "q^", "x", "1/0", "q^(1/3)", "2 3", "q^(1"] {
            assert!(parse_laurent(bad).is_err(), "{bad:?} accepted");
        }
    }

    proptest! {
        #[test]
        fn display_round_trips(terms in prop::collection::vec((-8i64..8, -20i64..20, 1i64..6), 0..5)) {
            let x = Laurent::from_terms(terms.into_iter().map(|(e, a, b)| (e, BigRational::new(a.into(), b.into()))));
            prop_assert_eq!(parse_laurent(&x.to_string()).unwrap(), x);
        }
    }
}
