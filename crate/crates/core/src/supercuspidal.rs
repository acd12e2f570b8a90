//! Depth-zero supercuspidal enumeration, exact formal degrees, and the
//! positive-depth type-datum / twisted-Levi templates for Sp4 and GSp4.
//!
//! Formal degrees come from the quotient formula
//! dim(τ) / ( |𝔾_x(𝔽_q)| · q^{-dim 𝔾_x / 2} ) in the volume normalization
//! that produces an explicit q^{1/2} factor for GSp4, and from the
//! exp_q-based closed formula for arbitrary-depth tame supercuspidals.

use crate::error::{EngineError, Result};
use crate::finite_reductive::{dimension, group_order, rt_regular_dim, theta10_dim, FiniteGroupLabel};
use crate::qfield::QHalf;
use crate::rootdata::Group;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

/// Singularity type of a depth-zero supercuspidal.
///
/// `KfSingular` implies singular over the local field as well; the tag
/// `FSingularKfNonsingular` is the intermediate case (singular over F but
/// nonsingular over the residue field).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Singularity {
    Regular,
    Nonsingular,
    FSingularKfNonsingular,
    KfSingular,
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Singularity::Regular => write!(f, "regular"),
            Singularity::Nonsingular => write!(f, "nonsingular"),
            Singularity::FSingularKfNonsingular => write!(f, "F-singular, k_F-nonsingular"),
            Singularity::KfSingular => write!(f, "k_F-singular"),
        }
    }
}

/// A depth-zero supercuspidal representation (or family of such), described
/// by the vertex it is induced from, the finite cuspidal on the reductive
/// quotient and its dimension, and a singularity tag.
#[derive(Debug, Clone, Serialize)]
pub struct DepthZeroSC {
    pub group: Group,
    /// Machine name used by the CLI (`pi_beta_theta10`, ...).
    pub name: &'static str,
    /// Human-readable name.
    pub display: &'static str,
    /// Building vertex the representation is compactly induced from.
    pub vertex: &'static str,
    /// Reductive quotient at that vertex.
    pub quotient: FiniteGroupLabel,
    /// Which finite cuspidal induces it.
    pub inducing_cuspidal: &'static str,
    /// Dimension of the inducing cuspidal, when it is a single closed form.
    pub dim_tau: Option<QHalf>,
    pub singularity: Singularity,
    /// Number of representations in the family, when finite and closed-form.
    pub family_count: Option<QHalf>,
    /// The displayed formal-degree computation for this representation
    /// divides by the coprime-to-p part of the quotient order instead of the
    /// full order (the residue characteristic factor q^N is dropped).
    pub prime_to_p_order: bool,
}

fn q_half(n: i64, d: i64) -> QHalf {
    QHalf::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// The exact case lists of depth-zero supercuspidals.
pub fn enumerate_depth_zero(group: Group) -> Vec<DepthZeroSC> {
    match group {
        Group::GSp4 => vec![
            DepthZeroSC {
                group,
                name: "pi_S_theta",
                display: "pi_(S,theta)",
                vertex: "any",
                quotient: FiniteGroupLabel::GSp4,
                inducing_cuspidal: "R_T^theta, theta regular on a maximally unramified elliptic torus",
                dim_tau: None,
                singularity: Singularity::Regular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_beta_theta10_chi",
                display: "pi_beta(theta10 (x) chi)",
                vertex: "delta",
                quotient: FiniteGroupLabel::GSp4,
                inducing_cuspidal: "unique unipotent cuspidal theta10, twisted by a central character",
                dim_tau: Some(theta10_dim()),
                singularity: Singularity::KfSingular,
                family_count: None,
                prime_to_p_order: true,
            },
            DepthZeroSC {
                group,
                name: "pi_alpha_eta2_chi",
                display: "pi_alpha(eta2; chi)",
                vertex: "alpha",
                quotient: FiniteGroupLabel::GSp22,
                inducing_cuspidal: "omega_cusp^{eta2} = half of R_T^epsilon, conjugated by diag(pi,1)",
                dim_tau: Some(&q_half(1, 2) * &rt_regular_dim()),
                singularity: Singularity::KfSingular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_S_theta_theta_chi",
                display: "pi_(S, theta (x) theta (x) chi)",
                vertex: "alpha",
                quotient: FiniteGroupLabel::GSp22,
                inducing_cuspidal: "R_T^{theta x theta} on the norm-one-matched pair torus",
                dim_tau: Some(rt_regular_dim()),
                singularity: Singularity::FSingularKfNonsingular,
                family_count: None,
                prime_to_p_order: false,
            },
        ],
        Group::Sp4 => vec![
            DepthZeroSC {
                group,
                name: "pi_S_theta",
                display: "pi_(S,theta)",
                vertex: "any",
                quotient: FiniteGroupLabel::Sp4,
                inducing_cuspidal: "R_T^theta, theta regular on a maximally unramified elliptic torus",
                dim_tau: None,
                singularity: Singularity::Regular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_beta_theta10",
                display: "pi_beta(theta10)",
                vertex: "beta",
                quotient: FiniteGroupLabel::Sp4,
                inducing_cuspidal: "unique unipotent cuspidal theta10",
                dim_tau: Some(theta10_dim()),
                singularity: Singularity::KfSingular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_gamma_theta10",
                display: "pi_gamma(theta10)",
                vertex: "gamma",
                quotient: FiniteGroupLabel::Sp4,
                inducing_cuspidal: "unique unipotent cuspidal theta10",
                dim_tau: Some(theta10_dim()),
                singularity: Singularity::KfSingular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_mu2_family",
                display: "cInd from beta/gamma of the {1, sgn} series",
                vertex: "beta|gamma",
                quotient: FiniteGroupLabel::Sp4,
                inducing_cuspidal: "cuspidals matched with characters 1, sgn of O2 x U1",
                dim_tau: None,
                singularity: Singularity::Nonsingular,
                // (q-1)/2 conjugacy classes x 2 characters, over the two vertices.
                family_count: Some(QHalf::poly_q(&[-1, 1])),
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_alpha_plus_eta2",
                display: "pi_alpha^+(eta2)",
                vertex: "alpha",
                quotient: FiniteGroupLabel::Sp2xSp2,
                inducing_cuspidal: "R'_+(theta0) x R'_+(theta0)^{diag(pi,1)}",
                dim_tau: Some(&q_half(1, 4) * &rt_regular_dim()),
                singularity: Singularity::KfSingular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_alpha_minus_eta2",
                display: "pi_alpha^-(eta2)",
                vertex: "alpha",
                quotient: FiniteGroupLabel::Sp2xSp2,
                inducing_cuspidal: "R'_-(theta0) x R'_-(theta0)^{diag(pi,1)}",
                dim_tau: Some(&q_half(1, 4) * &rt_regular_dim()),
                singularity: Singularity::KfSingular,
                family_count: None,
                prime_to_p_order: false,
            },
            DepthZeroSC {
                group,
                name: "pi_alpha_theta",
                display: "pi_alpha(theta)",
                vertex: "alpha",
                quotient: FiniteGroupLabel::Sp2xSp2,
                inducing_cuspidal: "R_T^theta x (R_T^theta)^{diag(pi,1)}, theta regular anisotropic",
                dim_tau: Some(rt_regular_dim()),
                singularity: Singularity::FSingularKfNonsingular,
                family_count: None,
                prime_to_p_order: false,
            },
        ],
    }
}

/// Look up a depth-zero representation by machine name.
pub fn depth_zero_by_name(group: Group, name: &str) -> Result<DepthZeroSC> {
    enumerate_depth_zero(group)
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| {
            EngineError::MalformedDescriptor(format!(
                "unknown depth-zero supercuspidal {name} for {group}"
            ))
        })
}

/// dim(τ) / ( |𝔾_x| · q^{-dim 𝔾_x / 2} ), optionally with the coprime-to-p
/// order in the denominator.
pub fn formal_degree_depth_zero(rep: &DepthZeroSC) -> Result<QHalf> {
    let dim_tau = rep.dim_tau.clone().ok_or_else(|| {
        EngineError::IncompleteData(format!(
            "{}: inducing cuspidal has no closed-form dimension",
            rep.display
        ))
    })?;
    let order = group_order(&rep.quotient)?;
    let order = if rep.prime_to_p_order {
        // Drop the q^N factor contributed by the residue characteristic.
        order.prime_to_p_part()?.0
    } else {
        order
    };
    let d = dimension(&rep.quotient)?;
    let denom = &order * &QHalf::half_pow(-d);
    dim_tau.checked_div(&denom)
}

/// Formal degree of the discrete-series constituent δ([η2, νη2], ·) of a
/// ramified-quadratic principal series, via the Iwahori–Hecke route: one
/// half times the Steinberg formal degree of the GL2 × GL2 / GL1 affine
/// Hecke algebra, ½ · 1/(q²−1) · (q−1)/(q²−1) · q^{3/2}.
pub fn formal_degree_delta_eta2() -> QHalf {
    let q2m1 = QHalf::poly_q(&[-1, 0, 1]);
    let qm1 = QHalf::poly_q(&[-1, 1]);
    let prod = &(&q_half(1, 2) * &q2m1.inv().expect("q^{2}-1 is nonzero"))
        * &(&qm1.checked_div(&q2m1).expect("q^{2}-1 is nonzero") * &QHalf::half_pow(3));
    prod
}

/// Summary of a cuspidal datum, carrying exactly what the closed formal
/// degree formula consumes.
#[derive(Debug, Clone, Serialize)]
pub struct PositiveDepthDatum {
    pub dim_rho: QHalf,
    /// Index [G⁰_{[y]} : G⁰_{y,0+}] as an exact polynomial quantity.
    pub index: QHalf,
    pub dim_g: i64,
    pub dim_g0_y0: i64,
    /// Depths r_0 < r_1 < ... < r_{d-1} <= r_d.
    pub depths: Vec<BigRational>,
    /// Absolute root counts |R_0|, ..., |R_d| along the twisted Levi
    /// sequence; nondecreasing.
    pub root_counts: Vec<i64>,
}

/// A formal degree of the shape c(q) · exp_q(t) with t an exact rational;
/// t need not be a half-integer, so the q-power stays formal.
#[derive(Debug, Clone, Serialize)]
pub struct ExpQValue {
    pub coefficient: QHalf,
    pub exponent: BigRational,
}

impl ExpQValue {
    /// Fold the exponent into the coefficient when it is a half-integer.
    pub fn as_qhalf(&self) -> Result<QHalf> {
        let two = BigRational::from_integer(BigInt::from(2));
        let doubled = &self.exponent * &two;
        if !doubled.is_integer() {
            return Err(EngineError::InvalidOperand(format!(
                "exponent {} is not a half-integer",
                self.exponent
            )));
        }
        let k: i64 = doubled
            .to_integer()
            .try_into()
            .map_err(|_| EngineError::InvalidOperand("exponent overflow".into()))?;
        Ok(&self.coefficient * &QHalf::half_pow(k))
    }
}

impl fmt::Display for ExpQValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * exp_q({})", self.coefficient, self.exponent)
    }
}

/// dim ρ / [G⁰_{[y]} : G⁰_{y,0+}] · exp_q( ½ dim G + ½ dim 𝔾⁰_{y,0}
/// + ½ Σ_{i<d} r_i (|R_{i+1}| − |R_i|) ).
pub fn formal_degree_positive_depth(datum: &PositiveDepthDatum) -> Result<ExpQValue> {
    let d = datum.depths.len();
    if d == 0 || datum.root_counts.len() != d {
        return Err(EngineError::InvalidDatum(
            "need depths r_0..r_d with matching root counts |R_0|..|R_d|".into(),
        ));
    }
    let zero = BigRational::zero();
    if datum.depths[0] <= zero && d > 1 {
        return Err(EngineError::InvalidDatum("depths must satisfy 0 < r_0".into()));
    }
    if datum.depths[0] < zero {
        return Err(EngineError::InvalidDatum("depths must satisfy 0 <= r_0".into()));
    }
    for i in 1..d {
        let strict = i < d - 1;
        if (strict && datum.depths[i] <= datum.depths[i - 1])
            || datum.depths[i] < datum.depths[i - 1]
        {
            return Err(EngineError::InvalidDatum(format!(
                "depth ordering violated at r_{i}"
            )));
        }
        if datum.root_counts[i] < datum.root_counts[i - 1] {
            return Err(EngineError::InvalidDatum(format!(
                "root count |R_{i}| decreases"
            )));
        }
    }
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut exponent =
        &half * BigRational::from_integer(BigInt::from(datum.dim_g + datum.dim_g0_y0));
    for i in 0..d - 1 {
        let jump = BigRational::from_integer(BigInt::from(
            datum.root_counts[i + 1] - datum.root_counts[i],
        ));
        exponent += &half * &(&datum.depths[i] * &jump);
    }
    let coefficient = datum.dim_rho.checked_div(&datum.index)?;
    Ok(ExpQValue { coefficient, exponent })
}

/// A twisted-Levi / type-datum template: the shape of a tamely ramified
/// Levi sequence together with the singularity verdict for the positive-depth
/// supercuspidals it produces.
#[derive(Debug, Clone, Serialize)]
pub struct TypeDatumTemplate {
    pub group: Group,
    /// 1-based position in the enumerated list.
    pub index: u8,
    /// Strictly increasing twisted Levi sequence; the ambient group is
    /// implicit as the final entry.
    pub tower: Vec<&'static str>,
    pub abelian_g0: bool,
    /// dim ρ⁰ = 1 exactly when G⁰ is abelian.
    pub dim_rho0_one: bool,
    pub can_be_singular: bool,
    /// Discriminant condition under which singular supercuspidals occur.
    pub singular_condition: Option<&'static str>,
    pub notes: &'static str,
}

const NM_CONDITION: &str = "-c1*c2 in Nm_{F1/F}(F1^x)";

/// The eight positive-depth type-datum templates per group.
pub fn enumerate_type_templates(group: Group) -> Vec<TypeDatumTemplate> {
    let t = |index: u8,
             tower: Vec<&'static str>,
             abelian_g0: bool,
             can_be_singular: bool,
             singular_condition: Option<&'static str>,
             notes: &'static str| TypeDatumTemplate {
        group,
        index,
        tower,
        abelian_g0,
        dim_rho0_one: abelian_g0,
        can_be_singular,
        singular_condition,
        notes,
    };
    match group {
        Group::Sp4 => vec![
            t(1, vec!["T^(1)_{F1/F1#}", "G"], true, false, None,
              "tower of quadratic extensions F1/F1#/F"),
            t(2, vec!["T^(1)_{F1#+F1#/F1#}", "G"], true, false, None,
              "quadratic extension F1#/F"),
            t(3, vec!["T^(1)_{F1/F,F2/F}", "G"], true, false, None,
              "two quadratic extensions F1, F2/F"),
            t(4, vec!["R^(1)_{F1/F}Gm x SL2", "G"], false, false, None,
              "the intermediate group has no singular supercuspidals"),
            t(5, vec!["U_{F1/F}(c1,c2)", "G"], false, true, Some(NM_CONDITION),
              "phi_0 trivial; singular iff the unitary group is quasi-split"),
            t(6, vec!["T^(1)_{F1/F,F2/F}", "R^(1)_{F1/F}Gm x SL2", "G"], true, false, None,
              "three-step sequence"),
            t(7, vec!["T^(1)_{F1/F,F1/F}", "U_{F1/F}(c1,c2)", "G"], true, false, None,
              "phi_1 = 1: the unitary group has no interesting characters"),
            t(8, vec!["T^(1)_{F1#+F1#/F1#}", "GL2 x Sp0", "G"], true, false, None,
              "quadratic extension F1#/F"),
        ],
        Group::GSp4 => vec![
            t(1, vec!["T_{F1/F1#}", "G"], true, false, None,
              "tower of quadratic extensions F1/F1#/F"),
            t(2, vec!["T_{F1#+F1#/F1#}", "G"], true, false, None,
              "quadratic extension F1#/F"),
            t(3, vec!["T_{F1/F,F2/F}", "G"], true, false, None,
              "two quadratic extensions F1, F2/F"),
            t(4, vec!["{(x,y) in R_{F1/F}Gm x GL2 : Nm x = det y}", "G"], false, false, None,
              "the intermediate group has no singular supercuspidals"),
            t(5, vec!["GU_{F1/F}(c1,c2)", "G"], false, true, Some(NM_CONDITION),
              "singular iff the unitary similitude group is quasi-split"),
            t(6, vec!["T_{F1/F,F2/F}", "{(x,y) in R_{F1/F}Gm x GL2 : Nm x = det y}", "G"],
              true, false, None, "three-step sequence"),
            t(7, vec!["T_{F1/F,F1/F}", "GU_{F1/F}(2)", "G"], true, false, None,
              "diagonal subtorus inside the unitary similitude group"),
            t(8, vec!["T_{F1#+F1#/F1#}", "GL2 x GSp0", "G"], true, false, None,
              "quadratic extension F1#/F"),
        ],
    }
}

/// A conjugacy class of maximal tori anisotropic (mod center), described by
/// its étale-algebra shape.
#[derive(Debug, Clone, Serialize)]
pub struct ToriClassTemplate {
    pub group: Group,
    pub name: &'static str,
    /// Field data: (base extension F_i#/F, 2-dimensional étale algebra
    /// F_i/F_i#) per block; Σ [F_i : F] = 2n.
    pub blocks: Vec<&'static str>,
    /// Parameters c_i taken modulo norms.
    pub parameters: &'static str,
}

/// The three shapes of maximal tori anisotropic mod center, per group.
pub fn tori_class_templates(group: Group) -> Vec<ToriClassTemplate> {
    match group {
        Group::Sp4 => vec![
            ToriClassTemplate {
                group,
                name: "T^(1)_{F1/F,F2/F}",
                blocks: vec!["F1/F quadratic", "F2/F quadratic"],
                parameters: "c_i in F^x / Nm_{F_i/F}(F_i^x)",
            },
            ToriClassTemplate {
                group,
                name: "T^(1)_{F1#+F1#/F1#}",
                blocks: vec!["split etale algebra over a quadratic F1#/F"],
                parameters: "none",
            },
            ToriClassTemplate {
                group,
                name: "T^(1)_{F1/F1#}",
                blocks: vec!["tower of quadratic extensions F1/F1#/F"],
                parameters: "c in (F1#)^x / Nm_{F1/F1#}(F1^x)",
            },
        ],
        Group::GSp4 => vec![
            ToriClassTemplate {
                group,
                name: "T_{F1/F,F2/F}",
                blocks: vec!["F1/F quadratic", "F2/F quadratic"],
                parameters: "norms matched in F^x",
            },
            ToriClassTemplate {
                group,
                name: "T_{F1#+F1#/F1#}",
                blocks: vec!["split etale algebra over a quadratic F1#/F"],
                parameters: "product lands in F^x",
            },
            ToriClassTemplate {
                group,
                name: "T_{F1/F1#}",
                blocks: vec!["tower of quadratic extensions F1/F1#/F"],
                parameters: "Nm_{F1/F1#} lands in F^x",
            },
        ],
    }
}
