//! Text grammar for `QHalf`: `q^{a/2}`, parentheses, `*`, `/`, `+`, `-`,
//! integer literals.  Printing produces the canonical form and
//! `parse(print(v)) == v` exactly.

use super::poly::QPoly;
use super::QHalf;
use crate::error::{EngineError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Format a q-exponent given in units of q^{1/2}.
fn fmt_half_exp(s: i64) -> String {
    if s % 2 == 0 {
        format!("{}", s / 2)
    } else {
        format!("{}/2", s)
    }
}

fn fmt_poly(p: &QPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if e == 0 {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "q^{{{}}}", fmt_half_exp(e as i64))?;
        }
    }
    Ok(())
}

struct PolyDisplay<'a>(&'a QPoly);
impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(self.0, f)
    }
}

impl fmt::Display for QHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut head_parts: Vec<String> = vec![];
        if self.shift != 0 {
            head_parts.push(format!("q^{{{}}}", fmt_half_exp(self.shift)));
        }
        let num_is_one = self.num.degree() == Some(0) && self.num.leading().unwrap().is_one();
        if head_parts.is_empty() || !num_is_one {
            let s = format!("{}", PolyDisplay(&self.num));
            // Parenthesize sums and negatives when combined with other parts.
            let needs_paren = (self.num.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
                || self.num.leading().unwrap().is_negative())
                && (!head_parts.is_empty() || self.den.degree() != Some(0));
            head_parts.push(if needs_paren { format!("({s})") } else { s });
        }
        let head = head_parts.join(" * ");
        if self.den.degree() == Some(0) {
            write!(f, "{head}")
        } else {
            write!(f, "{head} / ({})", PolyDisplay(&self.den))
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { bytes: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(EngineError::Parse(format!("{msg} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while matches!(self.bytes.get(self.pos), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| EngineError::Parse("integer overflow".into()))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<QHalf> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QHalf> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QHalf> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                v
            }
            Some(b'q') => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.expect(b'{')?;
                    let a = self.integer()?;
                    let shift = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let b = self.integer()?;
                        if b != 2 {
                            return self.err("q exponents must have denominator 2");
                        }
                        a
                    } else {
                        2 * a
                    };
                    self.expect(b'}')?;
                    return Ok(QHalf::half_pow(shift));
                }
                return Ok(QHalf::q());
            }
            Some(b'0'..=b'9') => {
                let n = self.integer()?;
                QHalf::from_int(n)
            }
            Some(c) => return self.err(&format!("unexpected '{}'", c as char)),
            None => return self.err("unexpected end of input"),
        };
        // Integer power on a parenthesized atom: (q+1)^{2}.
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.expect(b'{')?;
            let k = self.integer()?;
            self.expect(b'}')?;
            return base.pow(k);
        }
        Ok(base)
    }
}

impl QHalf {
    /// Parse the textual grammar; inverse of `Display` on canonical forms.
    pub fn parse(s: &str) -> Result<QHalf> {
        let mut p = Parser::new(s);
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return p.err("trailing input");
        }
        Ok(v)
    }

    /// Rational constant helper for the parser-facing API.
    pub fn rational(num: i64, den: i64) -> QHalf {
        QHalf::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basics() {
        assert_eq!(QHalf::parse("q^{1/2} * q^{1/2}").unwrap(), QHalf::q());
        assert_eq!(QHalf::parse("(q-1)*(q+1)").unwrap(), QHalf::poly_q(&[-1, 0, 1]));
        assert_eq!(QHalf::parse("3/2").unwrap(), QHalf::rational(3, 2));
        assert_eq!(QHalf::parse("q^{-3/2}").unwrap(), QHalf::half_pow(-3));
        assert_eq!(
            QHalf::parse("(q+1)^{2}").unwrap(),
            &QHalf::poly_q(&[1, 1]) * &QHalf::poly_q(&[1, 1])
        );
    }

    #[test]
    fn print_parse_round_trip() {
        let samples = [
            QHalf::zero(),
            QHalf::one(),
            QHalf::rational(-7, 3),
            QHalf::half_pow(-5),
            &QHalf::half_pow(3) / &(&QHalf::from_int(2) * &QHalf::poly_q(&[1, 1])),
            &QHalf::poly_q(&[-1, 0, 1]) / &QHalf::poly_q(&[2, 0, 0, 1]),
            &(-&QHalf::q()) - &QHalf::rational(1, 2),
        ];
        for v in samples {
            let s = v.to_string();
            assert_eq!(QHalf::parse(&s).unwrap(), v, "round trip failed on {s}");
        }
    }
}
