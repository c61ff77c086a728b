//! Expressions such as `e(1,2) * t1 * t1`, `2 x1 - x2 e(1,2)` or
//! `(t1 + 1) * t2`. Indices are 1-based; factors multiply left to right and
//! may be separated by `*` or whitespace.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*'] factor)*
//! factor := INT | 'e' '(' INT (',' INT)* ')' | 'x' INT | 't' INT | '(' expr ')'
//! ```

use super::algebra::{KlrAlgebra, KlrElement};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use num_bigint::BigInt;

pub fn parse_expression(alg: &KlrAlgebra, src: &str) -> Result<KlrElement> {
    let mut p = Parser { alg, src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    alg: &'a KlrAlgebra,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<KlrElement> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(&rat(-1));
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<KlrElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.alg.multiply(&acc, &f)?;
                }
                Some(c) if c.is_ascii_digit() || c == b'(' || c == b'e' || c == b'x' || c == b't' => {
                    let f = self.factor()?;
                    acc = self.alg.multiply(&acc, &f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn index(&mut self) -> Result<usize> {
        let at = self.pos;
        let n = self.integer()?;
        let k: usize = n.try_into().map_err(|_| Error::Parse { pos: at, msg: "index too large".into() })?;
        if k == 0 {
            return Err(Error::Parse { pos: at, msg: "indices are 1-based".into() });
        }
        Ok(k - 1)
    }

    fn factor(&mut self) -> Result<KlrElement> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let located = |e: Error| match e {
            Error::Parse { .. } | Error::BetaMismatch(..) => e,
            other => Error::Parse { pos: at, msg: other.to_string() },
        };
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.alg.scalar(Rational::from_integer(n)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'e') => {
                self.pos += 1;
                self.expect(b'(')?;
                let mut seq = Vec::new();
                if self.peek() != Some(b')') {
                    seq.push(self.index()?);
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        seq.push(self.index()?);
                    }
                }
                self.expect(b')')?;
                self.alg.idempotent(&seq).map_err(located)
            }
            Some(b'x') => {
                self.pos += 1;
                let k = self.index()?;
                self.alg.x(k).map_err(located)
            }
            Some(b't') => {
                self.pos += 1;
                let k = self.index()?;
                self.alg.tau(k).map_err(located)
            }
            Some(_) => Err(self.error("expected a factor")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::OrientedQuiver;
    use crate::rootsys::CartanDatum;

    fn alg() -> KlrAlgebra {
        let q = OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap();
        KlrAlgebra::new(&q, &[1, 1]).unwrap()
    }

    #[test]
    fn parses_products_and_sums() {
        let h = alg();
        let a = parse_expression(&h, "t1*t1*e(1,2)").unwrap();
        let b = parse_expression(&h, "(x2 - x1) e(1,2)").unwrap();
        assert_eq!(a, b);
        let c = parse_expression(&h, "-2 + 3").unwrap();
        assert_eq!(c, h.one());
    }

    #[test]
    fn reports_positions() {
        let h = alg();
        assert_eq!(
            parse_expression(&h, "t1 * ?"),
            Err(Error::Parse { pos: 5, msg: "expected a factor".into() })
        );
        assert!(matches!(parse_expression(&h, "x0"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_expression(&h, "e(1,1)"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_expression(&h, "t1)"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_expression(&h, "t5"), Err(Error::Parse { pos: 0, .. })));
    }
}
