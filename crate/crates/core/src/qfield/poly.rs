//! Dense univariate polynomials over Q in the formal variable x = q^{1/2}.
//!
//! This is deliberately minimal: just enough exact arithmetic (including gcd
//! and exact division) to support the rational-function field built on top.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in x with rational coefficients; `coeffs[i]` is the coefficient
/// of x^i.  Invariant: no trailing zero coefficient (zero = empty vec).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    pub(crate) coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// Monomial c * x^e.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        QPoly { coeffs }
    }

    /// x^e.
    pub fn x_pow(e: usize) -> Self {
        QPoly::monomial(BigRational::one(), e)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// Polynomial in q (even powers of x) from integer coefficients,
    /// `q_coeffs[i]` the coefficient of q^i.
    pub fn from_q_coeffs(q_coeffs: &[i64]) -> Self {
        let mut coeffs = vec![BigRational::zero(); 2 * q_coeffs.len()];
        for (i, &c) in q_coeffs.iter().enumerate() {
            coeffs[2 * i] = BigRational::from_integer(BigInt::from(c));
        }
        QPoly::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient (x-adic valuation).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divide by x^k; caller must ensure valuation >= k.
    pub fn shift_down(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        debug_assert!(self.valuation().unwrap() >= k);
        QPoly::from_coeffs(self.coeffs[k..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Make the leading coefficient 1 and return the old leading coefficient.
    pub fn monic(&self) -> (Self, BigRational) {
        match self.leading() {
            None => (QPoly::zero(), BigRational::one()),
            Some(l) => {
                let l = l.clone();
                (self.scale(&(BigRational::one() / &l)), l)
            }
        }
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn div_rem(&self, div: &QPoly) -> (QPoly, QPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        let dd = div.degree().unwrap();
        let dl = div.leading().unwrap().clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap() / &dl;
            let term = QPoly::monomial(c, rd - dd);
            quot = &quot + &term;
            rem = &rem - &(&term * div);
        }
        (quot, rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic().0
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate at x = sqrt(q0): returns (a, b) with value a + b*sqrt(q0),
    /// splitting even and odd exponents.
    pub fn eval_sqrt(&self, q0: &BigRational) -> (BigRational, BigRational) {
        let mut even = BigRational::zero();
        let mut odd = BigRational::zero();
        let mut pow = BigRational::one();
        for pair in self.coeffs.chunks(2) {
            even = even + &pair[0] * &pow;
            if let Some(c1) = pair.get(1) {
                odd = odd + c1 * &pow;
            }
            pow = pow * q0;
        }
        (even, odd)
    }

    /// Common denominator of the coefficients times the content sign:
    /// returns (primitive integer-coefficient polynomial, rational content)
    /// with self = content * primitive, primitive having coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_part(&self) -> (QPoly, BigRational) {
        use num_integer::Integer;
        if self.is_zero() {
            return (QPoly::zero(), BigRational::zero());
        }
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = denom.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for n in &ints {
            g = g.gcd(n);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = QPoly::from_coeffs(
            ints.iter()
                .map(|n| BigRational::from_integer(n / &g))
                .collect(),
        );
        (prim, BigRational::new(g, denom))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            coeffs.push(a + b);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}
