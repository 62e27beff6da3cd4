//! Recursive-descent parser for the expression DSL.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-' unary | factor
//! factor   := atom ('^' exponent)?
//! exponent := number | '-' number | '(' '-'? number ')'
//! atom     := number | 'i' | 'x0' | 'r' | 'z'
//!           | ('exp' | 'cos' | 'sin') '(' expr ')' | '(' expr ')'
//! ```
//!
//! `z` expands to `x0 + i*r` at parse time.

use super::expr::Expression;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Expression> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
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
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expression> {
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

    fn term(&mut self) -> Result<Expression> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expression> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expression> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let p = self.exponent()?;
            return Ok(base.powf(p));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<f64> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let v = self.number()?;
            self.expect(b')')?;
            return Ok(if neg { -v } else { v });
        }
        let neg = self.eat(b'-');
        let v = self.number()?;
        Ok(if neg { -v } else { v })
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos > s
        };
        let mut any = digits(self);
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            any |= digits(self);
        }
        if !any {
            self.pos = start;
            return Err(self.error("expected a number"));
        }
        if self.pos < self.src.len() && matches!(self.src[self.pos], b'e' | b'E') {
            let save = self.pos;
            self.pos += 1;
            if self.pos < self.src.len() && matches!(self.src[self.pos], b'+' | b'-') {
                self.pos += 1;
            }
            if !digits(self) {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<f64>().map_err(|_| Error::Parse { offset: start, message: format!("bad number `{text}`") })
    }

    fn identifier(&mut self) -> (usize, String) {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        (start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Expression> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => Ok(Expression::real(self.number()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let (start, name) = self.identifier();
                match name.as_str() {
                    "i" => Ok(Expression::i()),
                    "x0" => Ok(Expression::x0()),
                    "r" => Ok(Expression::r()),
                    "z" => Ok(Expression::z()),
                    "exp" | "cos" | "sin" => {
                        self.expect(b'(')?;
                        let arg = self.expr()?;
                        self.expect(b')')?;
                        Ok(match name.as_str() {
                            "exp" => Expression::exp(arg),
                            "cos" => Expression::cos(arg),
                            _ => Expression::sin(arg),
                        })
                    }
                    _ => Err(Error::UnknownIdentifier { offset: start, name }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::expr::Node;
    use num_complex::Complex64;

    #[test]
    fn z_expands_at_parse_time() {
        let e = parse("exp(z^2)").unwrap();
        let expect = Expression::exp((Expression::x0() + Expression::i() * Expression::r()).powf(2.0));
        assert_eq!(e, expect);
    }

    #[test]
    fn fractional_exponent_in_parentheses() {
        let e = parse("(1+z^2)^(2.5)").unwrap();
        match e.node() {
            Node::Pow(_, p) => assert_eq!(*p, 2.5),
            other => panic!("expected a power node, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_offsets() {
        assert_eq!(parse("x0^"), Err(Error::Parse { offset: 3, message: "expected a number".into() }));
        assert!(matches!(parse("exp(x0"), Err(Error::Parse { offset: 6, .. })));
        assert!(matches!(parse("x0 r"), Err(Error::Parse { offset: 3, .. })));
        assert_eq!(parse("2*y"), Err(Error::UnknownIdentifier { offset: 2, name: "y".into() }));
    }

    #[test]
    fn unary_minus_and_scientific_numbers() {
        let e = parse("-x0^2 + 1e-1*r").unwrap();
        let v = e.eval(2.0, 10.0).unwrap();
        assert!((v - Complex64::new(-3.0, 0.0)).norm() < 1e-14);
        assert_eq!(parse("x0^-1").unwrap(), Expression::x0().powf(-1.0));
    }
}
