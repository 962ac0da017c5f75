//! Parser for the exact scalar grammar, e.g. `1/2*z^3 - z + 2`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | 'z' | '(' expr ')'
//! ```
//!
//! `z` denotes ζ_N for the order passed to [`parse_scalar`].

use num_bigint::BigInt;
use num_rational::BigRational;

use super::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Parses `text` as an element of Q(ζ_order).
pub fn parse_scalar(text: &str, order: u32) -> Result<Cyclotomic> {
    if order == 0 {
        return Err(Error::Parse {
            offset: 0,
            message: "cyclotomic order must be positive".into(),
        });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        order,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty scalar"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value.lift(order))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: u32,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Cyclotomic> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                acc * rhs
            } else {
                (&acc / &rhs).map_err(|_| Error::Parse {
                    offset: at,
                    message: "division by zero".into(),
                })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Cyclotomic> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected integer exponent"));
        }
        let e: i64 = digits.parse().map_err(|_| Error::Parse {
            offset: at,
            message: "exponent out of range".into(),
        })?;
        base.pow(if neg { -e } else { e })
            .map_err(|_| Error::Parse {
                offset: at,
                message: "zero raised to a negative power".into(),
            })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Cyclotomic> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok(Cyclotomic::zeta(self.order))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.digits();
                if matches!(self.src.get(self.pos), Some(b'.' | b'e' | b'E')) {
                    return Err(self.error("floating-point literals are not allowed"));
                }
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(Cyclotomic::from_rational(BigRational::from_integer(n)))
            }
            Some(b'.') => Err(self.error("floating-point literals are not allowed")),
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::ratio;

    #[test]
    fn parses_examples() {
        let x = parse_scalar("1/2*z^3 - z + 2", 12).unwrap();
        assert_eq!(x.to_string(), "1/2*z^3 - z + 2");
        assert_eq!(
            parse_scalar("-3/4", 1).unwrap(),
            Cyclotomic::from_rational(ratio(-3, 4))
        );
        assert_eq!(
            parse_scalar("z^2", 4).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        assert_eq!(parse_scalar("z^-1", 5).unwrap(), Cyclotomic::zeta_pow(5, 4));
        assert_eq!(
            parse_scalar("(1+z)*(1-z)", 4).unwrap(),
            Cyclotomic::from_integer(2)
        );
        assert_eq!(
            parse_scalar("-z^2", 3).unwrap(),
            -Cyclotomic::zeta_pow(3, 2)
        );
    }

    #[test]
    fn result_lives_at_requested_order() {
        assert_eq!(parse_scalar("1", 6).unwrap().order(), 6);
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(matches!(parse_scalar("0.5*z", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("1e3", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("1/0", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("2 3", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("(1", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_scalar("x", 4), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["z^3 + 2*z", "-1/7", "0", "-z^5 + 3/2*z - 1"] {
            let v = parse_scalar(s, 12).unwrap();
            assert_eq!(parse_scalar(&v.to_string(), 12).unwrap(), v);
        }
    }
}
