//! Factored presentation of a `QHalf`: unit * q^{k/2} * product of coprime
//! integer-coefficient polynomials in q.  Factorization is by trial division
//! against cyclotomic polynomials (the only factors that occur in orders of
//! finite groups of Lie type); anything left over is kept as one residual
//! coprime factor.

use super::poly::QPoly;
use super::QHalf;
use crate::error::{EngineError, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Factored form of a `QHalf`.  `factors` are primitive integer-coefficient
/// polynomials in q (positive leading coefficient), pairwise coprime, with
/// integer multiplicities (negative = denominator side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFactored {
    pub unit: BigRational,
    /// Power of q^{1/2}.
    pub q_power_half: i64,
    pub factors: Vec<(QPoly, i64)>,
}

/// Reinterpret a polynomial in q as a polynomial in x = q^{1/2}.
fn q_to_x(p: &QPoly) -> QPoly {
    let mut coeffs = Vec::with_capacity(2 * p.coeffs.len());
    for c in &p.coeffs {
        coeffs.push(c.clone());
        coeffs.push(BigRational::zero());
    }
    QPoly::from_coeffs(coeffs)
}

/// Extract the even-exponent part of an x-polynomial as a polynomial in q.
/// Errors when an odd exponent occurs.
fn x_to_q(p: &QPoly) -> Result<QPoly> {
    for (i, c) in p.coeffs.iter().enumerate() {
        if i % 2 == 1 && !c.is_zero() {
            return Err(EngineError::InvalidOperand(
                "not a polynomial in q (odd half-power present)".into(),
            ));
        }
    }
    Ok(QPoly::from_coeffs(p.coeffs.iter().step_by(2).cloned().collect()))
}

/// Cyclotomic polynomials in q, for d = 1..=max.
fn cyclotomics(max: usize) -> Vec<QPoly> {
    let mut phis: Vec<QPoly> = Vec::with_capacity(max);
    for n in 1..=max {
        // q^n - 1 divided by the product of Phi_d over proper divisors d.
        let mut num = {
            let mut coeffs = vec![0i64; n + 1];
            coeffs[0] = -1;
            coeffs[n] = 1;
            QPoly::from_coeffs(
                coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect(),
            )
        };
        for d in 1..n {
            if n % d == 0 {
                num = num.div_exact(&phis[d - 1]);
            }
        }
        phis.push(num);
    }
    phis
}

/// Factor a primitive integer q-polynomial into cyclotomic factors plus an
/// optional residual; returns (constant, list of (factor, multiplicity)).
fn factor_q_poly(p: &QPoly) -> (BigRational, Vec<(QPoly, i64)>) {
    let (mut rem, content) = p.primitive_part();
    let mut out: Vec<(QPoly, i64)> = vec![];
    // q itself first.
    if let Some(v) = rem.valuation() {
        if v > 0 {
            rem = rem.shift_down(v);
            out.push((QPoly::x_pow(1), v as i64));
        }
    }
    for phi in cyclotomics(24) {
        let mut mult = 0i64;
        loop {
            let (q, r) = rem.div_rem(&phi);
            if r.is_zero() && !q.is_zero() {
                rem = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            out.push((phi, mult));
        }
        if rem.degree() == Some(0) {
            break;
        }
    }
    let mut unit = content;
    if let Some(0) = rem.degree() {
        unit = unit * rem.leading().unwrap();
    } else if !rem.is_zero() {
        let (prim, c) = rem.primitive_part();
        unit = unit * c;
        out.push((prim, 1));
    }
    (unit, out)
}

impl QHalf {
    /// Factor into cyclotomic-style pieces.  Requires numerator and
    /// denominator to be polynomials in q (the q^{1/2} content may be odd).
    pub fn factor(&self) -> Result<QFactored> {
        if self.is_zero() {
            return Err(EngineError::InvalidOperand("factor of zero".into()));
        }
        let num_q = x_to_q(self.numerator())?;
        let den_q = x_to_q(self.denominator())?;
        let (nu, nf) = factor_q_poly(&num_q);
        let (du, df) = factor_q_poly(&den_q);
        let mut factors: Vec<(QPoly, i64)> = nf;
        for (p, m) in df {
            if let Some(entry) = factors.iter_mut().find(|(fp, _)| *fp == p) {
                entry.1 -= m;
            } else {
                factors.push((p, -m));
            }
        }
        factors.retain(|(_, m)| *m != 0);
        factors.sort_by(|a, b| {
            a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        Ok(QFactored { unit: nu / du, q_power_half: self.shift(), factors })
    }
}

impl QFactored {
    /// Multiply the factored form back out.
    pub fn expand(&self) -> QHalf {
        let mut acc = &QHalf::from_rational(self.unit.clone())
            * &QHalf::half_pow(self.q_power_half);
        for (p, m) in &self.factors {
            let f = QHalf::normalized(q_to_x(p), QPoly::one(), 0);
            acc = &acc * &f.pow(*m).expect("factor is nonzero");
        }
        acc
    }

    /// Human-readable factored rendering, e.g. `1/2 * q^{3/2} * (q+1)^{-1}`.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = vec![];
        if !self.unit.is_one() {
            parts.push(self.unit.to_string());
        }
        if self.q_power_half != 0 {
            let e = self.q_power_half;
            if e % 2 == 0 {
                parts.push(format!("q^{{{}}}", e / 2));
            } else {
                parts.push(format!("q^{{{e}/2}}"));
            }
        }
        for (p, m) in &self.factors {
            let base = QHalf::normalized(q_to_x(p), QPoly::one(), 0).to_string();
            if *m == 1 {
                parts.push(format!("({base})"));
            } else {
                parts.push(format!("({base})^{{{m}}}"));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" * ")
        }
    }
}
