//! Symbolic stability ledger.
//!
//! Harish-Chandra characters restricted to topologically unipotent elements
//! are recorded as coefficient vectors over a fixed basis of invariant
//! distributions built from toric Green functions on the parahoric quotients.
//! Green functions are opaque orthogonal symbols and the character-expansion
//! constants `c`, `c1`, `c2` are formal positive unknowns, so stability
//! checks reduce to exact linear algebra: a coefficient vanishes only if it
//! vanishes identically as a polynomial in the unknowns.
//!
//! The module reproduces the discrete-series/supercuspidal pairing for the
//! two ramified quadratic characters: the pair {δ([η2,νη2],1), π_α(η2;1)} is
//! stable near the order-two element s exactly when both members carry the
//! same η2, and the eight Sp4 restrictions regroup into two packets of four.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::{EngineError, Result};

/// The six stable basis distributions.
pub const STABLE_BASIS: [&str; 6] = [
    "D_{C2}^st",
    "D_{A1}^st",
    "D_{A1~}^st",
    "D_e^st",
    "D_{A1xA1}^st",
    "D^st_{(F_A1xA1,Gsgn)}",
];

/// The unstable companion of `D_{A1xA1}^st`.
pub const UNSTABLE: &str = "D_{A1xA1}^unst";

/// The generalized-Green-function coordinate that counts as unstable for the
/// neighborhood-of-s check (it is not stable on GSp_{2,2}).
pub const GSGN: &str = "D^st_{(F_A1xA1,Gsgn)}";

/// A coefficient: an exact-rational linear combination of formal monomials in
/// the unknown constants (`c`, `c1`, `c2`, the restriction splitters, the
/// residue-class sign `eps_q` = (-1)^{(q-1)/2}, and `q*`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coeff {
    terms: BTreeMap<String, BigRational>,
}

impl Coeff {
    pub fn zero() -> Coeff {
        Coeff::default()
    }

    pub fn term(monomial: &str, num: i64, den: i64) -> Coeff {
        let mut c = Coeff::zero();
        c.add_term(monomial, BigRational::new(num.into(), den.into()));
        c
    }

    fn add_term(&mut self, monomial: &str, value: BigRational) {
        let entry = self.terms.entry(monomial.to_string()).or_insert_with(BigRational::zero);
        *entry += value;
        if entry.is_zero() {
            self.terms.remove(monomial);
        }
    }

    pub fn add(&mut self, other: &Coeff) {
        for (m, v) in &other.terms {
            self.add_term(m, v.clone());
        }
    }

    pub fn scale(&self, num: i64, den: i64) -> Coeff {
        let f = BigRational::new(num.into(), den.into());
        let mut out = Coeff::zero();
        for (m, v) in &self.terms {
            out.add_term(m, v.clone() * f.clone());
        }
        out
    }

    /// Zero as a polynomial in the independent formal unknowns.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{v} {m}")?;
        }
        Ok(())
    }
}

/// A finitely supported vector over the distribution basis and the
/// Green-symbol registry.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DistVector {
    coeffs: BTreeMap<String, Coeff>,
}

impl DistVector {
    pub fn zero() -> DistVector {
        DistVector::default()
    }

    pub fn coefficient(&self, basis: &str) -> Coeff {
        self.coeffs.get(basis).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &Coeff)> {
        self.coeffs.iter().map(|(k, v)| (k.as_str(), v))
    }

    fn push(&mut self, basis: &str, coeff: Coeff) {
        let entry = self.coeffs.entry(basis.to_string()).or_default();
        entry.add(&coeff);
        if entry.is_zero() {
            self.coeffs.remove(basis);
        }
    }

    pub fn add(&mut self, other: &DistVector) {
        for (b, c) in &other.coeffs {
            self.push(b, c.clone());
        }
    }

    pub fn scale(&self, num: i64, den: i64) -> DistVector {
        let mut out = DistVector::zero();
        for (b, c) in &self.coeffs {
            out.push(b, c.scale(num, den));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for DistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in &self.coeffs {
            if !first {
                write!(f, "  +  ")?;
            }
            first = false;
            write!(f, "({c})·{b}")?;
        }
        Ok(())
    }
}

/// The two ramified quadratic characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtaChoice {
    Eta2,
    Eta2Prime,
}

impl EtaChoice {
    pub fn tag(self) -> &'static str {
        match self {
            EtaChoice::Eta2 => "eta2",
            EtaChoice::Eta2Prime => "eta2p",
        }
    }
}

/// Which absolute sign the unresolved ± in ½(Q ± q*·Gsgn) takes for η2.
/// Only the relative sign between the two characters is normative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    PlusForEta2,
    MinusForEta2,
}

fn eta_sign(eta: EtaChoice, conv: SignConvention) -> i64 {
    match (eta, conv) {
        (EtaChoice::Eta2, SignConvention::PlusForEta2) => 1,
        (EtaChoice::Eta2Prime, SignConvention::PlusForEta2) => -1,
        (EtaChoice::Eta2, SignConvention::MinusForEta2) => -1,
        (EtaChoice::Eta2Prime, SignConvention::MinusForEta2) => 1,
    }
}

/// Where stability is tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Context {
    /// Neighborhood of the identity: only the unstable toric coordinate
    /// obstructs.
    NearOne,
    /// Neighborhood of the order-two element s with centralizer GSp_{2,2}:
    /// the Gsgn coordinate also counts as unstable.
    NearS,
}

/// Representations with recorded restricted-character vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepLabel {
    /// δ([η2, νη2], 1) on GSp4.
    Delta,
    /// π_α(η2; 1) on GSp4.
    PiAlpha,
    /// First Sp4 constituent of the restriction of δ.
    Pi1,
    /// Second Sp4 constituent of the restriction of δ.
    Pi2,
    /// π_α^+(η2) on Sp4.
    PiAlphaPlus,
    /// π_α^-(η2) on Sp4.
    PiAlphaMinus,
}

impl RepLabel {
    pub fn parse(s: &str) -> Result<RepLabel> {
        Ok(match s {
            "delta" => RepLabel::Delta,
            "pi_alpha" => RepLabel::PiAlpha,
            "pi_1" => RepLabel::Pi1,
            "pi_2" => RepLabel::Pi2,
            "pi_alpha^+" => RepLabel::PiAlphaPlus,
            "pi_alpha^-" => RepLabel::PiAlphaMinus,
            other => {
                return Err(EngineError::Unsupported(format!(
                    "no recorded character vector for {other}"
                )))
            }
        })
    }

    pub fn display(self, eta: EtaChoice) -> String {
        let e = eta.tag();
        match self {
            RepLabel::Delta => format!("delta([{e}, nu * {e}], 1)"),
            RepLabel::PiAlpha => format!("pi_alpha({e}; 1)"),
            RepLabel::Pi1 => format!("pi_1({e})"),
            RepLabel::Pi2 => format!("pi_2({e})"),
            RepLabel::PiAlphaPlus => format!("pi_alpha^+({e})"),
            RepLabel::PiAlphaMinus => format!("pi_alpha^-({e})"),
        }
    }
}

/// The recorded coefficient vector of the restricted Harish-Chandra
/// character.
///
/// The GSp4 discrete-series member carries ½c1(D^st − D^unst) ± c2·Gsgn +
/// c·D_e; its supercuspidal partner carries ½c1(D^st + D^unst) ∓ c2·Gsgn.
/// The ± on the Gsgn coordinate is tied to the choice of ramified quadratic
/// character through the sign convention, anti-correlated within a matched
/// pair so the pair sum cancels on both unstable coordinates.  Sp4
/// restrictions carry half the parent vector plus an unmatched formal
/// splitter on the unstable coordinate that only cancels against the other
/// half.
pub fn character_vector(
    rep: RepLabel,
    eta: EtaChoice,
    conv: SignConvention,
) -> Result<DistVector> {
    let s = eta_sign(eta, conv);
    let mut v = DistVector::zero();
    match rep {
        RepLabel::Delta => {
            v.push("D_{A1xA1}^st", Coeff::term("c1", 1, 2));
            v.push(UNSTABLE, Coeff::term("c1", -1, 2));
            v.push(GSGN, Coeff::term("c2", s, 1));
            v.push("D_e^st", Coeff::term("c", 1, 1));
        }
        RepLabel::PiAlpha => {
            v.push("D_{A1xA1}^st", Coeff::term("c1", 1, 2));
            v.push(UNSTABLE, Coeff::term("c1", 1, 2));
            v.push(GSGN, Coeff::term("c2", -s, 1));
        }
        RepLabel::Pi1 | RepLabel::Pi2 => {
            v = character_vector(RepLabel::Delta, eta, conv)?.scale(1, 2);
            let sign = if rep == RepLabel::Pi1 { 1 } else { -1 };
            v.push(UNSTABLE, Coeff::term(&format!("d({})", eta.tag()), sign, 1));
        }
        RepLabel::PiAlphaPlus | RepLabel::PiAlphaMinus => {
            v = character_vector(RepLabel::PiAlpha, eta, conv)?.scale(1, 2);
            let sign = if rep == RepLabel::PiAlphaPlus { 1 } else { -1 };
            v.push(UNSTABLE, Coeff::term(&format!("d'({})", eta.tag()), sign, 1));
        }
    }
    Ok(v)
}

/// Per-facet restriction of the character on (topologically) unipotent
/// elements, in Green-function symbols.  Facet names follow the alcove
/// complex: F_C2, F_A1xA1, F_A1, F_A1tilde, F_e.
pub fn facet_character(
    rep: RepLabel,
    eta: EtaChoice,
    conv: SignConvention,
    facet: &str,
) -> Result<DistVector> {
    let s = eta_sign(eta, conv);
    let mut v = DistVector::zero();
    match rep {
        RepLabel::Delta => match facet {
            // ¼(Q_{A1xA1} − 2 Q_{A1} + Q_1) from the Steinberg of GSp_{2,2}.
            "F_C2" => {
                v.push("Q_{A1xA1}@F_C2", Coeff::term("1", 1, 4));
                v.push("Q_{A1}@F_C2", Coeff::term("1", -2, 4));
                v.push("Q_{1}@F_C2", Coeff::term("1", 1, 4));
            }
            // ½(Q_1 ± q* Gsgn), sign fixed by the ramified quadratic.
            "F_A1xA1" => {
                v.push("Q_{1}@F_A1xA1", Coeff::term("1", 1, 2));
                v.push("Gsgn@F_A1xA1", Coeff::term("q*", s, 2));
            }
            "F_A1" => v.push("Q_{1}@F_A1", Coeff::term("1", 1, 1)),
            "F_A1tilde" => v.push("Q_{1}@F_A1tilde", Coeff::term("1", 1, 1)),
            "F_e" => v.push("1@F_e", Coeff::term("1", 2, 1)),
            other => {
                return Err(EngineError::InvalidOperand(format!("unknown facet {other}")));
            }
        },
        RepLabel::PiAlpha => match facet {
            // ½(Q_{A1xA1} ± q* Gsgn); anti-correlated with the series member.
            "F_A1xA1" => {
                v.push("Q_{A1xA1}@F_A1xA1", Coeff::term("1", 1, 2));
                v.push("Gsgn@F_A1xA1", Coeff::term("q*", -s, 2));
            }
            // Cuspidality kills the invariants at every other vertex.
            "F_C2" | "F_A1" | "F_A1tilde" | "F_e" => {}
            other => {
                return Err(EngineError::InvalidOperand(format!("unknown facet {other}")));
            }
        },
        _ => {
            return Err(EngineError::Unsupported(
                "facet profiles are recorded for the GSp4 members only".into(),
            ))
        }
    }
    Ok(v)
}

/// One facet entry of a parahoric-invariant profile.
#[derive(Debug, Clone)]
pub struct FacetInvariant {
    pub facet: &'static str,
    /// Finite-reductive invariant, or "0".
    pub invariant: String,
    /// Sign of the Gsgn component at this facet (0 if absent).
    pub gsgn_sign: i64,
}

/// Parahoric invariants of a recorded representation.
#[derive(Debug, Clone)]
pub struct ParahoricInvariantProfile {
    pub label: String,
    pub entries: Vec<FacetInvariant>,
}

pub fn parahoric_profile(
    rep: RepLabel,
    eta: EtaChoice,
    conv: SignConvention,
) -> Result<ParahoricInvariantProfile> {
    let s = eta_sign(eta, conv);
    let e = eta.tag();
    let entries = match rep {
        RepLabel::Delta => vec![
            FacetInvariant {
                facet: "F_C2",
                invariant: "omega_princ^eps (St of GSp_{2,2})".into(),
                gsgn_sign: 0,
            },
            FacetInvariant {
                facet: "F_A1xA1",
                invariant: format!("omega_princ^{e}"),
                gsgn_sign: s,
            },
        ],
        RepLabel::PiAlpha => vec![
            FacetInvariant { facet: "F_C2", invariant: "0".into(), gsgn_sign: 0 },
            FacetInvariant {
                facet: "F_A1xA1",
                invariant: format!("omega_cusp^{e}"),
                gsgn_sign: -s,
            },
        ],
        _ => {
            return Err(EngineError::Unsupported(
                "parahoric profiles are recorded for the GSp4 members only".into(),
            ))
        }
    };
    Ok(ParahoricInvariantProfile { label: rep.display(eta), entries })
}

/// Stability of a coefficient vector in the given context.
pub fn is_stable(v: &DistVector, ctx: Context) -> bool {
    let unst_ok = v.coefficient(UNSTABLE).is_zero();
    match ctx {
        Context::NearOne => unst_ok,
        Context::NearS => unst_ok && v.coefficient(GSGN).is_zero(),
    }
}

/// All inclusion-minimal nonempty subsets of the candidates whose sum is
/// stable.  Subsets are returned as sorted index lists.
pub fn minimal_stable_subsets(
    candidates: &[(String, DistVector)],
    ctx: Context,
) -> Result<Vec<Vec<usize>>> {
    let n = candidates.len();
    if n > 16 {
        return Err(EngineError::InvalidOperand(format!(
            "subset enumeration supports at most 16 candidates, got {n}"
        )));
    }
    let mut stable_masks: Vec<u32> = vec![];
    for mask in 1u32..(1 << n) {
        let mut sum = DistVector::zero();
        for (i, (_, v)) in candidates.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum.add(v);
            }
        }
        if is_stable(&sum, ctx) {
            stable_masks.push(mask);
        }
    }
    let mut out = vec![];
    'outer: for &m in &stable_masks {
        for &other in &stable_masks {
            if other != m && other & m == other {
                continue 'outer;
            }
        }
        out.push((0..n).filter(|i| m & (1 << i) != 0).collect());
    }
    Ok(out)
}

/// The four GSp4 candidates: series and supercuspidal members for both
/// ramified quadratic characters.
pub fn gsp4_candidates(conv: SignConvention) -> Vec<(String, DistVector)> {
    let mut out = vec![];
    for eta in [EtaChoice::Eta2, EtaChoice::Eta2Prime] {
        for rep in [RepLabel::Delta, RepLabel::PiAlpha] {
            out.push((rep.display(eta), character_vector(rep, eta, conv).unwrap()));
        }
    }
    out
}

/// The eight Sp4 restrictions of the GSp4 candidates.
pub fn sp4_candidates(conv: SignConvention) -> Vec<(String, DistVector)> {
    let mut out = vec![];
    for eta in [EtaChoice::Eta2, EtaChoice::Eta2Prime] {
        for rep in
            [RepLabel::Pi1, RepLabel::Pi2, RepLabel::PiAlphaPlus, RepLabel::PiAlphaMinus]
        {
            out.push((rep.display(eta), character_vector(rep, eta, conv).unwrap()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CONVS: [SignConvention; 2] = [SignConvention::PlusForEta2, SignConvention::MinusForEta2];

    #[test]
    fn displayed_coefficient_patterns() {
        let conv = SignConvention::PlusForEta2;
        let d = character_vector(RepLabel::Delta, EtaChoice::Eta2, conv).unwrap();
        assert_eq!(d.coefficient("D_{A1xA1}^st"), Coeff::term("c1", 1, 2));
        assert_eq!(d.coefficient(UNSTABLE), Coeff::term("c1", -1, 2));
        assert_eq!(d.coefficient(GSGN), Coeff::term("c2", 1, 1));
        assert_eq!(d.coefficient("D_e^st"), Coeff::term("c", 1, 1));
        let p = character_vector(RepLabel::PiAlpha, EtaChoice::Eta2, conv).unwrap();
        assert_eq!(p.coefficient(UNSTABLE), Coeff::term("c1", 1, 2));
        assert_eq!(p.coefficient(GSGN), Coeff::term("c2", -1, 1));
        assert_eq!(p.coefficient("D_e^st"), Coeff::zero());
        assert!(RepLabel::parse("nonsense").is_err());
    }

    #[test]
    fn matched_pair_is_stable_in_both_contexts() {
        for conv in CONVS {
            for eta in [EtaChoice::Eta2, EtaChoice::Eta2Prime] {
                let mut sum = character_vector(RepLabel::Delta, eta, conv).unwrap();
                sum.add(&character_vector(RepLabel::PiAlpha, eta, conv).unwrap());
                assert!(is_stable(&sum, Context::NearOne));
                assert!(is_stable(&sum, Context::NearS));
                // The Gsgn coefficients cancel within the matched pair.
                assert!(sum.coefficient(GSGN).is_zero());
            }
        }
    }

    #[test]
    fn mismatched_pair_is_unstable_near_s_only() {
        for conv in CONVS {
            let mut sum = character_vector(RepLabel::Delta, EtaChoice::Eta2, conv).unwrap();
            sum.add(&character_vector(RepLabel::PiAlpha, EtaChoice::Eta2Prime, conv).unwrap());
            assert!(is_stable(&sum, Context::NearOne));
            assert!(!is_stable(&sum, Context::NearS));
        }
        assert!(is_stable(&DistVector::zero(), Context::NearS));
    }

    #[test]
    fn single_members_are_unstable() {
        let conv = SignConvention::PlusForEta2;
        for rep in [RepLabel::Delta, RepLabel::PiAlpha, RepLabel::Pi1, RepLabel::PiAlphaMinus] {
            let v = character_vector(rep, EtaChoice::Eta2, conv).unwrap();
            assert!(!is_stable(&v, Context::NearOne), "{rep:?}");
            assert!(!is_stable(&v, Context::NearS), "{rep:?}");
        }
    }

    #[test]
    fn minimal_subsets_reproduce_the_pairs() {
        for conv in CONVS {
            let cands = gsp4_candidates(conv);
            let subsets = minimal_stable_subsets(&cands, Context::NearS).unwrap();
            let named: Vec<Vec<&str>> = subsets
                .iter()
                .map(|s| s.iter().map(|&i| cands[i].0.as_str()).collect())
                .collect();
            assert_eq!(
                named,
                vec![
                    vec!["delta([eta2, nu * eta2], 1)", "pi_alpha(eta2; 1)"],
                    vec!["delta([eta2p, nu * eta2p], 1)", "pi_alpha(eta2p; 1)"],
                ]
            );
            // Near the identity the pairing is unconstrained: all four
            // series/supercuspidal cross pairs are minimal.
            let near1 = minimal_stable_subsets(&cands, Context::NearOne).unwrap();
            assert_eq!(near1.len(), 4);
            for s in &near1 {
                assert_eq!(s.len(), 2);
            }
        }
    }

    #[test]
    fn sp4_restrictions_regroup_into_two_quadruples() {
        for conv in CONVS {
            let cands = sp4_candidates(conv);
            let subsets = minimal_stable_subsets(&cands, Context::NearS).unwrap();
            assert_eq!(subsets, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        }
    }

    #[test]
    fn brute_force_oracle_agrees() {
        // Independent re-enumeration: all stable subsets, filtered by
        // minimality through pairwise comparison of index sets.
        let cands = sp4_candidates(SignConvention::PlusForEta2);
        let mut stable: Vec<Vec<usize>> = vec![];
        for mask in 1u32..(1 << cands.len()) {
            let mut sum = DistVector::zero();
            let mut idx = vec![];
            for (i, (_, v)) in cands.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    sum.add(v);
                    idx.push(i);
                }
            }
            if is_stable(&sum, Context::NearS) {
                stable.push(idx);
            }
        }
        let minimal: Vec<Vec<usize>> = stable
            .iter()
            .filter(|s| {
                !stable
                    .iter()
                    .any(|t| t.len() < s.len() && t.iter().all(|i| s.contains(i)))
            })
            .cloned()
            .collect();
        assert_eq!(minimal, minimal_stable_subsets(&cands, Context::NearS).unwrap());
    }

    #[test]
    fn restriction_sums_recover_the_parents() {
        let conv = SignConvention::PlusForEta2;
        for eta in [EtaChoice::Eta2, EtaChoice::Eta2Prime] {
            let mut quad = DistVector::zero();
            for rep in
                [RepLabel::Pi1, RepLabel::Pi2, RepLabel::PiAlphaPlus, RepLabel::PiAlphaMinus]
            {
                quad.add(&character_vector(rep, eta, conv).unwrap());
            }
            let mut pair = character_vector(RepLabel::Delta, eta, conv).unwrap();
            pair.add(&character_vector(RepLabel::PiAlpha, eta, conv).unwrap());
            assert_eq!(quad, pair);
            assert!(is_stable(&quad, Context::NearS));
        }
    }

    #[test]
    fn facet_profiles() {
        let conv = SignConvention::PlusForEta2;
        // The supercuspidal member has no invariants away from its vertex.
        for facet in ["F_C2", "F_A1", "F_A1tilde", "F_e"] {
            let v = facet_character(RepLabel::PiAlpha, EtaChoice::Eta2, conv, facet).unwrap();
            assert!(v.is_zero(), "{facet}");
        }
        let v = facet_character(RepLabel::PiAlpha, EtaChoice::Eta2, conv, "F_A1xA1").unwrap();
        assert_eq!(v.coefficient("Gsgn@F_A1xA1"), Coeff::term("q*", -1, 2));
        // Steinberg alternating sum at the hyperspecial vertex.
        let v = facet_character(RepLabel::Delta, EtaChoice::Eta2, conv, "F_C2").unwrap();
        assert_eq!(v.coefficient("Q_{A1xA1}@F_C2"), Coeff::term("1", 1, 4));
        assert_eq!(v.coefficient("Q_{A1}@F_C2"), Coeff::term("1", -1, 2));
        assert_eq!(v.coefficient("Q_{1}@F_C2"), Coeff::term("1", 1, 4));
        let v = facet_character(RepLabel::Delta, EtaChoice::Eta2, conv, "F_e").unwrap();
        assert_eq!(v.coefficient("1@F_e"), Coeff::term("1", 2, 1));
        assert!(facet_character(RepLabel::Delta, EtaChoice::Eta2, conv, "F_x").is_err());
        // Gsgn signs are anti-correlated within a matched pair at the shared
        // vertex, and flip with the ramified quadratic character.
        let profile = parahoric_profile(RepLabel::Delta, EtaChoice::Eta2, conv).unwrap();
        let sc = parahoric_profile(RepLabel::PiAlpha, EtaChoice::Eta2, conv).unwrap();
        assert_eq!(profile.entries[1].gsgn_sign, -sc.entries[1].gsgn_sign);
        assert_eq!(sc.entries[0].invariant, "0");
        let other = parahoric_profile(RepLabel::Delta, EtaChoice::Eta2Prime, conv).unwrap();
        assert_eq!(profile.entries[1].gsgn_sign, -other.entries[1].gsgn_sign);
    }
}
