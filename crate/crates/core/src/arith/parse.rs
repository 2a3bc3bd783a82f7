//! Recursive-descent parser for the scalar grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' digits)?
//! atom  := digits | identifier | '(' expr ')'
//! ```

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};
use num::{BigInt, BigRational};

pub fn parse_scalar(text: &str, field: &Field) -> Result<Scalar> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty input"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a Field,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Scalar> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().expect("digit run parses");
                Ok(self.field.from_rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                match self.field.variable_name() {
                    Some(v) if v == name => Ok(self.field.variable().unwrap()),
                    _ => Err(Error::UnknownVariable(name)),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq() -> Field {
        Field::ratfunc("q").unwrap()
    }

    #[test]
    fn reduces_rationals() {
        assert_eq!(parse_scalar("2/4", &Field::Rational).unwrap().to_string(), "1/2");
        assert_eq!(parse_scalar("-6/-4", &Field::Rational).unwrap().to_string(), "3/2");
    }

    #[test]
    fn cancels_polynomial_gcd() {
        let v = parse_scalar("(q^2-1)/(q-1)", &qq()).unwrap();
        assert_eq!(v.to_string(), "q+1");
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(parse_scalar("1/(q-q)", &qq()), Err(Error::DivisionByZero));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_scalar("1 + * 2", &Field::Rational) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_scalar("z", &qq()), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_scalar("q", &Field::Rational), Err(Error::UnknownVariable(_))));
        assert!(parse_scalar("q^-1", &qq()).is_err());
    }

    #[test]
    fn print_parse_fixed_point() {
        for s in ["-1/2*q+3", "(q^2+1)/(q^3-2*q)", "-(q-1)/(2*q+1)", "0", "7"] {
            let v = parse_scalar(s, &qq()).unwrap();
            let again = parse_scalar(&v.to_string(), &qq()).unwrap();
            assert_eq!(v, again);
            assert_eq!(v.to_string(), again.to_string());
        }
    }
}
