//! Recursive-descent parser for rational expressions in `r`.
//!
//! Grammar:
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary (("*" | "/") unary)*
//! unary := ("+" | "-") unary | power
//! power := atom ("^" exponent)?
//! atom  := integer | "r" | "(" expr ")"
//! exponent := ["-"] integer | "(" ["-"] integer ")"
//! ```

use num_bigint::BigInt;

use super::ratfunc::RationalFunction;
use super::{ArithError, Rational};

pub fn parse_rational_function(input: &str) -> Result<RationalFunction, ArithError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ArithError {
        ArithError::Parse {
            position: self.pos,
            message: message.to_string(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ArithError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ArithError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.unary()?;
                acc = acc.checked_div(&rhs).map_err(|_| ArithError::Parse {
                    position: at,
                    message: "division by zero".to_string(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ArithError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ArithError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let at = self.pos;
        let exponent = if self.eat(b'(') {
            let e = self.signed_int()?;
            if !self.eat(b')') {
                return Err(self.error("expected ')' after exponent"));
            }
            e
        } else {
            self.signed_int()?
        };
        base.pow(exponent).map_err(|_| ArithError::Parse {
            position: at,
            message: "negative power of zero".to_string(),
        })
    }

    fn signed_int(&mut self) -> Result<i64, ArithError> {
        let neg = self.eat(b'-');
        let digits = self
            .digits()
            .ok_or_else(|| self.error("expected integer exponent"))?;
        let v: i64 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RationalFunction, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'r') => {
                self.pos += 1;
                Ok(RationalFunction::r())
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().expect("digit present");
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(RationalFunction::constant(Rational::from_integer(n)))
            }
            Some(_) => Err(self.error("expected a number, 'r' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_expression() {
        let f = parse_rational_function("(2*r^4 - r^2 + 1)/(r - r^3)").unwrap();
        let g = parse_rational_function("-(2*r^4-r^2+1)/(r^3-r)").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn negative_exponents() {
        assert_eq!(
            parse_rational_function("r^-3").unwrap(),
            parse_rational_function("1/r^(3)").unwrap()
        );
    }

    #[test]
    fn reports_position() {
        match parse_rational_function("r + * 2") {
            Err(ArithError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_rational_function("(r+1") {
            Err(ArithError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_rational_function("x").is_err());
        assert!(parse_rational_function("1/(r-r)").is_err());
    }
}
