//! Recursive-descent parser for the element text form.
//!
//! Grammar:
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power ('*' power)*
//! power  := atom ('^' uint)?
//! atom   := number ['/' number] | 't' | name '[' int ']' | '(' expr ')' | '-' atom
//! ```

use std::str::FromStr;

use num_bigint::BigInt;

use super::element::{Element, GeneratorFamily};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits"))
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
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

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.digits()?;
            let e: u32 = e.try_into().or_else(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Element> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let r = if self.eat(b'/') {
                    let d = self.digits()?;
                    if d == BigInt::from(0) {
                        return self.err("zero denominator");
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                Ok(Element::from_rational(r))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if name == "t" {
                    return Ok(Element::constant(Scalar::t()));
                }
                let Some(fam) = GeneratorFamily::from_prefix(name) else {
                    self.pos = start;
                    return self.err(format!("unknown generator family {name:?}"));
                };
                self.expect(b'[')?;
                let neg = self.eat(b'-');
                let k = self.digits()?;
                self.expect(b']')?;
                let k: i64 = k.try_into().or_else(|_| self.err("index too large"))?;
                Ok(Element::generator(fam, if neg { -k } else { k }))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
        }
    }
}

pub fn parse_element(s: &str) -> Result<Element> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl FromStr for Element {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_element(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn parses_canonical_forms() {
        let a: Element = "3/2*h[2]*h[1] - h[3]".parse().unwrap();
        let b = &(&Element::h(2) * &Element::h(1)).scale(&Scalar::from(ratio(3, 2))) - &Element::h(3);
        assert_eq!(a, b);
        let c: Element = "(1-t)*Q[2]".parse().unwrap();
        assert_eq!(c, Element::q(2).scale(&(&Scalar::from_int(1) - &Scalar::t())));
        let d: Element = "-(h[2]^2 - h[1]*h[3])".parse().unwrap();
        assert_eq!(d, &(&Element::h(1) * &Element::h(3)) - &Element::h(2).pow(2));
        let e: Element = "hs[1]^2 - hs[1] - hs[2]".parse().unwrap();
        assert_eq!(e.len(), 3);
    }

    #[test]
    fn index_conventions() {
        assert_eq!("h[0]".parse::<Element>().unwrap(), Element::one());
        assert_eq!("h[-1]".parse::<Element>().unwrap(), Element::zero());
        assert_eq!("0".parse::<Element>().unwrap(), Element::zero());
    }

    #[test]
    fn round_trip() {
        for s in ["h[2]*h[1] - h[3]", "(1-t^2)*Q[1] + 3", "-1/3*es[2]^3*es[1] + hs[4]", "-(1-t)*Q[2] - t"] {
            let a: Element = s.parse().unwrap();
            let b: Element = a.to_string().parse().unwrap();
            assert_eq!(a, b, "{s} -> {a}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!("h[2] +".parse::<Element>(), Err(Error::Parse { .. })));
        assert!(matches!("x[1]".parse::<Element>(), Err(Error::Parse { .. })));
        assert!(matches!("h[1])".parse::<Element>(), Err(Error::Parse { .. })));
    }
}
