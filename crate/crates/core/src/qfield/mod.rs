//! Exact arithmetic in the field Q(q^{1/2}) of rational functions in a formal
//! square root of q.
//!
//! Every order, dimension and formal degree in the engine is a [`QHalf`]:
//! a reduced fraction of Laurent polynomials in q^{1/2} with rational
//! coefficients.  Canonical form: numerator and denominator coprime, the
//! denominator monic with nonzero constant term, and all q-power content
//! collected in a single half-integer exponent on the numerator.

mod factor;
mod parse;
mod poly;

pub use factor::QFactored;
pub use poly::QPoly;

use crate::error::{EngineError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational function in q^{1/2}.
///
/// Value = q^{shift/2} * num(x) / den(x) with x = q^{1/2}.  Invariants:
/// `den` monic with nonzero constant term, `num` with nonzero constant term
/// (its x-content is folded into `shift`), gcd(num, den) = 1.  Zero is
/// represented as num = 0, shift = 0, den = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QHalf {
    num: QPoly,
    den: QPoly,
    /// Power of x = q^{1/2} multiplying the fraction (may be negative).
    shift: i64,
}

impl QHalf {
    fn normalized(num: QPoly, den: QPoly, shift: i64) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return QHalf { num: QPoly::zero(), den: QPoly::one(), shift: 0 };
        }
        // Strip x-content from both sides into the shift.
        let vn = num.valuation().unwrap() as i64;
        let vd = den.valuation().unwrap() as i64;
        let num = num.shift_down(vn as usize);
        let den = den.shift_down(vd as usize);
        let shift = shift + vn - vd;
        // Reduce and make the denominator monic.
        let g = num.gcd(&den);
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        let (den, lead) = den.monic();
        let num = num.scale(&(BigRational::one() / lead));
        QHalf { num, den, shift }
    }

    pub fn zero() -> Self {
        QHalf { num: QPoly::zero(), den: QPoly::one(), shift: 0 }
    }

    pub fn one() -> Self {
        QHalf::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        QHalf::normalized(QPoly::from_int(n), QPoly::one(), 0)
    }

    pub fn from_rational(r: BigRational) -> Self {
        QHalf::normalized(QPoly::constant(r), QPoly::one(), 0)
    }

    /// q^k for integer k.
    pub fn q_pow(k: i64) -> Self {
        QHalf::half_pow(2 * k)
    }

    /// q^{k/2} for integer k.
    pub fn half_pow(k: i64) -> Self {
        QHalf { num: QPoly::one(), den: QPoly::one(), shift: k }
    }

    /// The variable q itself.
    pub fn q() -> Self {
        QHalf::q_pow(1)
    }

    /// Polynomial in q from integer coefficients (`coeffs[i]` on q^i).
    pub fn poly_q(coeffs: &[i64]) -> Self {
        QHalf::normalized(QPoly::from_q_coeffs(coeffs), QPoly::one(), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    /// Exponent of the q^{1/2}-power content, in units of q^{1/2}.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(EngineError::InvalidOperand("inverse of zero".into()));
        }
        Ok(QHalf::normalized(self.den.clone(), self.num.clone(), -self.shift))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = QHalf::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        Ok(acc)
    }

    pub fn checked_div(&self, rhs: &QHalf) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// True when the value is a polynomial in q (integer powers only,
    /// trivial denominator, nonnegative q-power).
    pub fn is_q_polynomial(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        self.den.degree() == Some(0)
            && self.shift >= 0
            && self.shift % 2 == 0
            && self
                .num
                .coeffs
                .iter()
                .enumerate()
                .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Split a polynomial q^N * m(q) with m(0) != 0 into (m, N).
    ///
    /// This is the coprime-to-p part used by the depth-zero formal-degree
    /// formula: the residue characteristic contributes exactly q^N.
    pub fn prime_to_p_part(&self) -> Result<(QHalf, BigRational)> {
        if self.is_zero() {
            return Err(EngineError::InvalidOperand(
                "prime-to-p part of zero".into(),
            ));
        }
        if !self.is_q_polynomial() {
            return Err(EngineError::InvalidOperand(format!(
                "prime-to-p part requires a polynomial in q, got {self}"
            )));
        }
        let m = QHalf { num: self.num.clone(), den: QPoly::one(), shift: 0 };
        let n = BigRational::new(BigInt::from(self.shift), BigInt::from(2));
        Ok((m, n))
    }

    /// Evaluate at q = q0 > 0.  Returns an exact value of the form
    /// a + b*sqrt(q0); b = 0 whenever only integer powers of q occur or q0
    /// is a perfect square.
    pub fn eval(&self, q0: u64) -> Result<QValue> {
        if q0 == 0 {
            return Err(EngineError::InvalidOperand("q0 must be positive".into()));
        }
        let q0_rat = BigRational::from_integer(BigInt::from(q0));
        let root = exact_sqrt(q0);
        // Evaluate numerator and denominator as a + b*sqrt(q0).
        let (mut na, mut nb) = self.num.eval_sqrt(&q0_rat);
        let (da, db) = self.den.eval_sqrt(&q0_rat);
        // Fold in the power of sqrt(q0) from the shift.
        let (s_int, s_half) = (self.shift.div_euclid(2), self.shift.rem_euclid(2));
        let q_int = pow_rational(&q0_rat, s_int);
        na = na * &q_int;
        nb = nb * &q_int;
        if s_half == 1 {
            // Multiply (na + nb*s) by s: s^2 = q0.
            let new_a = &nb * &q0_rat;
            let new_b = na;
            na = new_a;
            nb = new_b;
        }
        if let Some(r) = &root {
            // Perfect square: collapse to rationals.
            let a = na + nb * r;
            let d = da + db * r;
            if d.is_zero() {
                return Err(EngineError::EvaluationPole(q0.to_string()));
            }
            return Ok(QValue { rational: a / d, sqrt_coeff: BigRational::zero(), q0 });
        }
        // q0 not a perfect square: sqrt(q0) is irrational, so the
        // denominator vanishes iff both components do.
        if da.is_zero() && db.is_zero() {
            return Err(EngineError::EvaluationPole(q0.to_string()));
        }
        // (na + nb s)/(da + db s) * (da - db s)/(da - db s)
        let norm = &da * &da - &db * &db * &q0_rat;
        if norm.is_zero() {
            // Can only happen for rational sqrt(q0), excluded above.
            return Err(EngineError::EvaluationPole(q0.to_string()));
        }
        let a = (&na * &da - &nb * &db * &q0_rat) / &norm;
        let b = (&nb * &da - &na * &db) / &norm;
        Ok(QValue { rational: a, sqrt_coeff: b, q0 })
    }

    /// Positivity at a sample point (used by formal-degree sanity checks).
    pub fn is_positive_at(&self, q0: u64) -> bool {
        match self.eval(q0) {
            Ok(v) => {
                // a + b*sqrt(q0) > 0, decided exactly.
                let a = v.rational;
                let b = v.sqrt_coeff;
                if b.is_zero() {
                    return a.is_positive();
                }
                if a.is_zero() {
                    return b.is_positive();
                }
                let lhs_pos = a.is_positive();
                let rhs_pos = b.is_positive();
                if lhs_pos && rhs_pos {
                    true
                } else if !lhs_pos && !rhs_pos {
                    false
                } else {
                    // Compare a^2 vs b^2 q0 with signs.
                    let a2 = &a * &a;
                    let b2q = &b * &b * BigRational::from_integer(BigInt::from(q0));
                    if lhs_pos {
                        a2 > b2q
                    } else {
                        b2q > a2
                    }
                }
            }
            Err(_) => false,
        }
    }
}

impl serde::Serialize for QHalf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for QHalf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        QHalf::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Exact value a + b*sqrt(q0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QValue {
    pub rational: BigRational,
    pub sqrt_coeff: BigRational,
    pub q0: u64,
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt_coeff.is_zero() {
            write!(f, "{}", self.rational)
        } else if self.rational.is_zero() {
            write!(f, "{}*sqrt({})", self.sqrt_coeff, self.q0)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.sqrt_coeff, self.q0)
        }
    }
}

fn exact_sqrt(n: u64) -> Option<BigRational> {
    let r = (n as f64).sqrt().round() as u64;
    for cand in r.saturating_sub(1)..=r + 1 {
        if cand * cand == n {
            return Some(BigRational::from_integer(BigInt::from(cand)));
        }
    }
    None
}

fn pow_rational(base: &BigRational, k: i64) -> BigRational {
    let mut acc = BigRational::one();
    let b = if k < 0 { base.recip() } else { base.clone() };
    for _ in 0..k.unsigned_abs() {
        acc = acc * &b;
    }
    acc
}

impl Add for &QHalf {
    type Output = QHalf;
    fn add(self, rhs: &QHalf) -> QHalf {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = rhs.num.shift_up((rhs.shift - s) as usize);
        let num = &(&a * &rhs.den) + &(&b * &self.den);
        let den = &self.den * &rhs.den;
        QHalf::normalized(num, den, s)
    }
}

impl Sub for &QHalf {
    type Output = QHalf;
    fn sub(self, rhs: &QHalf) -> QHalf {
        self + &(-rhs)
    }
}

impl Neg for &QHalf {
    type Output = QHalf;
    fn neg(self) -> QHalf {
        QHalf { num: -&self.num, den: self.den.clone(), shift: self.shift }
    }
}

impl Mul for &QHalf {
    type Output = QHalf;
    fn mul(self, rhs: &QHalf) -> QHalf {
        QHalf::normalized(
            &self.num * &rhs.num,
            &self.den * &rhs.den,
            self.shift + rhs.shift,
        )
    }
}

impl Div for &QHalf {
    type Output = QHalf;
    /// Panics on division by zero; use [`QHalf::checked_div`] to get an error.
    fn div(self, rhs: &QHalf) -> QHalf {
        self * &rhs.inv().expect("division by zero QHalf")
    }
}
