//! Orders, dimensions, cuspidal-representation classification and the
//! unipotent-cuspidal existence predicate for the finite reductive groups
//! that occur as parahoric reductive quotients.
//!
//! Everything is a table-backed exact computation: orders are polynomials in
//! q (as [`QHalf`] values), counts are stored as the stated closed forms.

use crate::error::{EngineError, Result};
use crate::qfield::QHalf;
use serde::Serialize;
use std::fmt;

/// Label of a finite reductive group over F_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum FiniteGroupLabel {
    GSp4,
    Sp4,
    /// GSp_{2,2} = {(g,h) in GSp2 × GSp2 : same similitude}.
    GSp22,
    Sp2xSp2,
    /// SO_{2n+1}.
    SOOdd(u32),
    /// Split SO_{2n}.
    SOEvenPlus(u32),
    /// Non-split SO_{2n}^-.
    SOEvenMinus(u32),
    GL(u32),
    U1,
    /// O_2^ε; carried as a label only (its order never enters a formula).
    O2,
}

impl fmt::Display for FiniteGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteGroupLabel::GSp4 => write!(f, "GSp4"),
            FiniteGroupLabel::Sp4 => write!(f, "Sp4"),
            FiniteGroupLabel::GSp22 => write!(f, "GSp2,2"),
            FiniteGroupLabel::Sp2xSp2 => write!(f, "Sp2xSp2"),
            FiniteGroupLabel::SOOdd(n) => write!(f, "SO{}", 2 * n + 1),
            FiniteGroupLabel::SOEvenPlus(n) => write!(f, "SO{}+", 2 * n),
            FiniteGroupLabel::SOEvenMinus(n) => write!(f, "SO{}-", 2 * n),
            FiniteGroupLabel::GL(n) => write!(f, "GL{n}"),
            FiniteGroupLabel::U1 => write!(f, "U1"),
            FiniteGroupLabel::O2 => write!(f, "O2"),
        }
    }
}

fn q_pow_minus_one(k: u32) -> QHalf {
    // q^k - 1.
    let mut coeffs = vec![0i64; k as usize + 1];
    coeffs[0] = -1;
    coeffs[k as usize] = 1;
    QHalf::poly_q(&coeffs)
}

fn q_pow_plus_one(k: u32) -> QHalf {
    let mut coeffs = vec![0i64; k as usize + 1];
    coeffs[0] = 1;
    coeffs[k as usize] = 1;
    QHalf::poly_q(&coeffs)
}

/// |G(F_q)| as an exact polynomial in q.
pub fn group_order(label: &FiniteGroupLabel) -> Result<QHalf> {
    let order = match label {
        // (q-1) q^4 (q^2-1)(q^4-1)
        FiniteGroupLabel::GSp4 => &(&(&q_pow_minus_one(1) * &QHalf::q_pow(4))
            * &q_pow_minus_one(2))
            * &q_pow_minus_one(4),
        // q^4 (q^2-1)(q^4-1)
        FiniteGroupLabel::Sp4 => {
            &(&QHalf::q_pow(4) * &q_pow_minus_one(2)) * &q_pow_minus_one(4)
        }
        // (q-1) q^2 (q^2-1)^2
        FiniteGroupLabel::GSp22 => &(&(&q_pow_minus_one(1) * &QHalf::q_pow(2))
            * &q_pow_minus_one(2))
            * &q_pow_minus_one(2),
        // q^2 (q^2-1)^2
        FiniteGroupLabel::Sp2xSp2 => {
            &(&QHalf::q_pow(2) * &q_pow_minus_one(2)) * &q_pow_minus_one(2)
        }
        // q^{n^2} prod_{i=1..n} (q^{2i}-1)
        FiniteGroupLabel::SOOdd(n) => {
            let mut acc = QHalf::q_pow((n * n) as i64);
            for i in 1..=*n {
                acc = &acc * &q_pow_minus_one(2 * i);
            }
            acc
        }
        // q^{n(n-1)} (q^n ∓ 1) prod_{i=1..n-1} (q^{2i}-1)
        FiniteGroupLabel::SOEvenPlus(n) | FiniteGroupLabel::SOEvenMinus(n) => {
            if *n == 0 {
                return Ok(QHalf::one());
            }
            let mut acc = QHalf::q_pow((n * (n - 1)) as i64);
            acc = &acc
                * &(if matches!(label, FiniteGroupLabel::SOEvenPlus(_)) {
                    q_pow_minus_one(*n)
                } else {
                    q_pow_plus_one(*n)
                });
            for i in 1..*n {
                acc = &acc * &q_pow_minus_one(2 * i);
            }
            acc
        }
        // q^{n(n-1)/2} prod_{i=1..n} (q^i-1)
        FiniteGroupLabel::GL(n) => {
            let mut acc = QHalf::q_pow((n * n.saturating_sub(1) / 2) as i64);
            for i in 1..=*n {
                acc = &acc * &q_pow_minus_one(i);
            }
            acc
        }
        FiniteGroupLabel::U1 => q_pow_plus_one(1),
        FiniteGroupLabel::O2 => {
            return Err(EngineError::Unsupported(
                "O2 order depends on the form; not used by any formula".into(),
            ))
        }
    };
    Ok(order)
}

/// dim G as an algebraic group.
pub fn dimension(label: &FiniteGroupLabel) -> Result<i64> {
    Ok(match label {
        FiniteGroupLabel::GSp4 => 11,
        FiniteGroupLabel::Sp4 => 10,
        FiniteGroupLabel::GSp22 => 7,
        FiniteGroupLabel::Sp2xSp2 => 6,
        FiniteGroupLabel::SOOdd(n) => {
            let m = (2 * n + 1) as i64;
            m * (m - 1) / 2
        }
        FiniteGroupLabel::SOEvenPlus(n) | FiniteGroupLabel::SOEvenMinus(n) => {
            let m = (2 * n) as i64;
            m * (m - 1) / 2
        }
        FiniteGroupLabel::GL(n) => (*n as i64) * (*n as i64),
        FiniteGroupLabel::U1 => 1,
        FiniteGroupLabel::O2 => 1,
    })
}

/// Does the group carry a unipotent cuspidal representation?  Returns its
/// dimension when one exists and the table records it (only the rank-2
/// symplectic groups need the dimension downstream).
pub fn has_unipotent_cuspidal(label: &FiniteGroupLabel) -> Result<(bool, Option<QHalf>)> {
    // theta10: dim = q(q-1)^2/2.
    let theta10_dim = &(&QHalf::q() * &(&q_pow_minus_one(1) * &q_pow_minus_one(1)))
        / &QHalf::from_int(2);
    match label {
        FiniteGroupLabel::Sp4 | FiniteGroupLabel::GSp4 => Ok((true, Some(theta10_dim))),
        // SO_{2n+1}: exactly when n = s^2 + s for some s >= 1.
        FiniteGroupLabel::SOOdd(n) => {
            let hit = (1..).map(|s| s * s + s).take_while(|&v| v <= *n).any(|v| v == *n);
            Ok((hit, None))
        }
        // SO_{2n} split: exactly when n = 4 s^2.
        FiniteGroupLabel::SOEvenPlus(n) => {
            let hit = (1..).map(|s| 4 * s * s).take_while(|&v| v <= *n).any(|v| v == *n);
            Ok((hit, None))
        }
        // SO_{2n} non-split: exactly when n = (2s+1)^2.
        FiniteGroupLabel::SOEvenMinus(n) => {
            let hit = (0..)
                .map(|s| (2 * s + 1) * (2 * s + 1))
                .take_while(|&v| v <= *n)
                .any(|v| v == *n);
            Ok((hit, None))
        }
        // GL_n never has one.
        FiniteGroupLabel::GL(_) => Ok((false, None)),
        other => Err(EngineError::Unsupported(format!(
            "unipotent-cuspidal predicate not defined for {other}"
        ))),
    }
}

/// One family of cuspidal representations of a finite reductive quotient.
#[derive(Debug, Clone, Serialize)]
pub struct CuspidalClass {
    pub ambient: FiniteGroupLabel,
    /// Eigenvalue pattern of the parameterizing semisimple class
    /// (membership conditions kept symbolic).
    pub series: &'static str,
    pub condition: &'static str,
    /// Number of semisimple classes in the family, when the table states it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_count: Option<QHalf>,
    /// Representations per class (Lusztig-series enhancements).
    pub enhancements_per_class: u32,
    /// Dimension of each member, when the table states it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<QHalf>,
    pub unipotent: bool,
    pub nonsingular: bool,
}

/// Dimension (q-1)^2 of a regular Deligne–Lusztig character of the
/// anisotropic torus in a rank-2 product group.
pub fn rt_regular_dim() -> QHalf {
    &q_pow_minus_one(1) * &q_pow_minus_one(1)
}

/// Dimension of the unipotent cuspidal theta10: q(q-1)^2/2.
pub fn theta10_dim() -> QHalf {
    &(&QHalf::q() * &rt_regular_dim()) / &QHalf::from_int(2)
}

/// The cuspidal classification tables for the three quotients the
/// depth-zero enumeration consumes.
pub fn cuspidal_classes(label: &FiniteGroupLabel) -> Result<Vec<CuspidalClass>> {
    let two = QHalf::from_int(2);
    match label {
        FiniteGroupLabel::GSp22 => Ok(vec![
            CuspidalClass {
                ambient: FiniteGroupLabel::GSp22,
                series: "(lambda1, lambda2), lambda_i in F_{q^2} \\ F_q",
                condition: "lambda1^{q-1} != -1 or lambda2^{q-1} != -1",
                class_count: None,
                enhancements_per_class: 1,
                dim: Some(rt_regular_dim()),
                unipotent: false,
                nonsingular: true,
            },
            CuspidalClass {
                ambient: FiniteGroupLabel::GSp22,
                series: "(lambda1, lambda2), lambda_i in F_{q^2} \\ F_q",
                condition: "lambda1^{q-1} = lambda2^{q-1} = -1 (pair rho^+/rho^-)",
                class_count: None,
                enhancements_per_class: 2,
                dim: Some(&rt_regular_dim() / &two),
                unipotent: false,
                nonsingular: false,
            },
        ]),
        FiniteGroupLabel::GSp4 => Ok(vec![
            CuspidalClass {
                ambient: FiniteGroupLabel::GSp4,
                series: "central s in Z(GSpin5): twists of the unipotent cuspidal",
                condition: "chi any of the q-1 central twists",
                class_count: Some(q_pow_minus_one(1)),
                enhancements_per_class: 1,
                dim: Some(theta10_dim()),
                unipotent: true,
                nonsingular: false,
            },
            CuspidalClass {
                ambient: FiniteGroupLabel::GSp4,
                series: "R_T^theta, T anisotropic maximal torus",
                condition: "theta regular",
                class_count: None,
                enhancements_per_class: 1,
                dim: None,
                unipotent: false,
                nonsingular: true,
            },
        ]),
        FiniteGroupLabel::Sp4 => Ok(vec![
            CuspidalClass {
                ambient: FiniteGroupLabel::Sp4,
                series: "unipotent (s = 1)",
                condition: "unique unipotent cuspidal",
                class_count: Some(QHalf::one()),
                enhancements_per_class: 1,
                dim: Some(theta10_dim()),
                unipotent: true,
                nonsingular: false,
            },
            CuspidalClass {
                ambient: FiniteGroupLabel::Sp4,
                series: "1, -1, -1, alpha^{+-1}",
                condition: "alpha in mu_{q+1} \\ {+-1}; O2 x U1 series",
                class_count: Some(&q_pow_minus_one(1) / &two),
                enhancements_per_class: 2,
                dim: None,
                unipotent: false,
                nonsingular: true,
            },
            CuspidalClass {
                ambient: FiniteGroupLabel::Sp4,
                series: "1, alpha^{+-1}, beta^{+-1}",
                condition: "alpha != beta^{+-1} in mu_{q+1} \\ {+-1}; isotropic torus",
                class_count: None,
                enhancements_per_class: 1,
                dim: None,
                unipotent: false,
                nonsingular: true,
            },
            CuspidalClass {
                ambient: FiniteGroupLabel::Sp4,
                series: "1, alpha, alpha^q, alpha^{q^2}, alpha^{q^3}",
                condition: "alpha in mu_{q^2+1} \\ {+-1}; anisotropic torus",
                class_count: None,
                enhancements_per_class: 1,
                dim: None,
                unipotent: false,
                nonsingular: true,
            },
        ]),
        other => Err(EngineError::Unsupported(format!(
            "cuspidal classification table not recorded for {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn eval_u64(v: &QHalf, q0: u64) -> u64 {
        let val = v.eval(q0).unwrap();
        assert!(val.sqrt_coeff.to_integer().to_u64() == Some(0));
        val.rational.to_integer().to_u64().unwrap()
    }

    #[test]
    fn orders_match_closed_forms() {
        // Spot-check the four quotient groups at q = 3.
        assert_eq!(
            eval_u64(&group_order(&FiniteGroupLabel::GSp4).unwrap(), 3),
            2 * 81 * 8 * 80
        );
        assert_eq!(
            eval_u64(&group_order(&FiniteGroupLabel::Sp4).unwrap(), 3),
            81 * 8 * 80
        );
        assert_eq!(
            eval_u64(&group_order(&FiniteGroupLabel::GSp22).unwrap(), 3),
            2 * 9 * 64
        );
        assert_eq!(
            eval_u64(&group_order(&FiniteGroupLabel::Sp2xSp2).unwrap(), 3),
            9 * 64
        );
    }

    #[test]
    fn orders_divisible_by_q_to_positive_roots() {
        // Number of positive roots: 4 for the rank-2 groups, 2 for Sp2xSp2
        // (q-power is q^2 there) and GSp22.
        for (label, n_pos) in [
            (FiniteGroupLabel::GSp4, 4u32),
            (FiniteGroupLabel::Sp4, 4),
            (FiniteGroupLabel::GSp22, 2),
            (FiniteGroupLabel::Sp2xSp2, 2),
        ] {
            let order = group_order(&label).unwrap();
            for q0 in [3u64, 5, 7, 9] {
                let v = eval_u64(&order, q0);
                assert!(v > 0);
                assert_eq!(v % q0.pow(n_pos), 0, "{label} at q={q0}");
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&FiniteGroupLabel::GSp4).unwrap(), 11);
        assert_eq!(dimension(&FiniteGroupLabel::Sp4).unwrap(), 10);
        assert_eq!(dimension(&FiniteGroupLabel::GSp22).unwrap(), 7);
        assert_eq!(dimension(&FiniteGroupLabel::Sp2xSp2).unwrap(), 6);
    }

    #[test]
    fn unipotent_cuspidal_predicate() {
        // SO5 = SO_{2*2+1}: n = 2 = 1^2 + 1 -> yes; SO7: n = 3 -> no.
        assert!(has_unipotent_cuspidal(&FiniteGroupLabel::SOOdd(2)).unwrap().0);
        assert!(!has_unipotent_cuspidal(&FiniteGroupLabel::SOOdd(3)).unwrap().0);
        assert!(!has_unipotent_cuspidal(&FiniteGroupLabel::GL(7)).unwrap().0);
        let (yes, dim) = has_unipotent_cuspidal(&FiniteGroupLabel::Sp4).unwrap();
        assert!(yes);
        // dim(theta10) * 2 = q (q-1)^2.
        let twice = &dim.unwrap() * &QHalf::from_int(2);
        assert_eq!(twice, &QHalf::q() * &rt_regular_dim());
    }

    #[test]
    fn cuspidal_tables() {
        let sp4 = cuspidal_classes(&FiniteGroupLabel::Sp4).unwrap();
        assert_eq!(sp4.len(), 4);
        // O2 x U1 series: (q-1)/2 classes, 2 enhancements each -> q-1 reps.
        let o2u1 = &sp4[1];
        assert_eq!(o2u1.enhancements_per_class, 2);
        let count = o2u1.class_count.clone().unwrap();
        let reps = &count * &QHalf::from_int(2);
        assert_eq!(reps, QHalf::poly_q(&[-1, 1]));
        for q0 in [3u64, 5, 7, 9] {
            assert!(count.is_positive_at(q0));
        }

        let gsp4 = cuspidal_classes(&FiniteGroupLabel::GSp4).unwrap();
        assert_eq!(gsp4[0].class_count.clone().unwrap(), QHalf::poly_q(&[-1, 1]));
        assert!(gsp4[0].unipotent);

        let gsp22 = cuspidal_classes(&FiniteGroupLabel::GSp22).unwrap();
        assert_eq!(gsp22[0].enhancements_per_class, 1);
        assert_eq!(gsp22[0].dim.clone().unwrap(), rt_regular_dim());
        assert_eq!(
            gsp22[1].dim.clone().unwrap(),
            &rt_regular_dim() / &QHalf::from_int(2)
        );
    }
}
