//! Decision procedure for (ir)reducibility of parabolically induced
//! representations of GSp4 and Sp4.
//!
//! Principal series are decided over the full Weyl orbit of the inducing
//! character triple; the matched conjugate is canonicalized (lexicographically
//! smallest) so reports are invariant under Weyl conjugation of the input.
//! Intermediate series (Siegel and Klingen Levis) are decided from the
//! declared invariants of the inducing supercuspidal label.  The module also
//! computes the principal-series Bernstein block J^s and the covered
//! Kazhdan–Lusztig unipotent assignments for constituents.

use crate::characters::{ScGroup, SmoothChar, SupercuspidalLabel};
use crate::error::{EngineError, Result};
use crate::rootdata::Group;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

/// Inducing data for a parabolically induced representation.
#[derive(Debug, Clone)]
pub enum InducingData {
    /// χ1 × χ2 ⋊ θ from the Borel (θ trivial for Sp4).
    Torus { chi1: SmoothChar, chi2: SmoothChar, theta: SmoothChar },
    /// ν^β ρ ⋊ χ from the Siegel Levi GL2 × G(Sp0).
    Siegel { rho: SupercuspidalLabel, beta: BigRational, chi: SmoothChar },
    /// χ ⋊ ρ from the Klingen Levi GL1 × G(Sp2); the ν-part of χ is the
    /// Langlands shift β.
    Klingen { chi: SmoothChar, rho: SupercuspidalLabel },
}

#[derive(Debug, Clone)]
pub struct InducedRep {
    pub group: Group,
    pub data: InducingData,
}

impl InducedRep {
    pub fn principal_series(
        group: Group,
        chi1: SmoothChar,
        chi2: SmoothChar,
        theta: SmoothChar,
    ) -> Result<Self> {
        if chi1.group().id() != chi2.group().id() || chi1.group().id() != theta.group().id() {
            return Err(EngineError::LabelGroupMismatch(
                "principal-series characters from different sessions".into(),
            ));
        }
        if group == Group::Sp4 && !theta.is_trivial() {
            return Err(EngineError::MalformedDescriptor(
                "Sp4 principal series has no similitude character".into(),
            ));
        }
        Ok(InducedRep { group, data: InducingData::Torus { chi1, chi2, theta } })
    }

    pub fn siegel(
        group: Group,
        rho: SupercuspidalLabel,
        beta: BigRational,
        chi: SmoothChar,
    ) -> Result<Self> {
        if rho.group != ScGroup::GL2 {
            return Err(EngineError::MalformedDescriptor(format!(
                "Siegel Levi needs a GL2 supercuspidal, got {}",
                rho.group
            )));
        }
        if group == Group::Sp4 && !chi.is_trivial() {
            return Err(EngineError::MalformedDescriptor(
                "Sp4 Siegel induction has no similitude character".into(),
            ));
        }
        Ok(InducedRep { group, data: InducingData::Siegel { rho, beta, chi } })
    }

    pub fn klingen(group: Group, chi: SmoothChar, rho: SupercuspidalLabel) -> Result<Self> {
        let want = match group {
            Group::GSp4 => ScGroup::GSp2,
            Group::Sp4 => ScGroup::Sp2,
        };
        if rho.group != want {
            return Err(EngineError::MalformedDescriptor(format!(
                "Klingen Levi for {group} needs a {want} supercuspidal, got {}",
                rho.group
            )));
        }
        Ok(InducedRep { group, data: InducingData::Klingen { chi, rho } })
    }
}

/// Which reducibility case matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    Irreducible,
    Gsp4_1ai,
    Gsp4_1aii,
    Gsp4_1aiii,
    Gsp4_1aiv,
    Gsp4_1bi,
    Gsp4_1bii,
    Gsp4_1biii,
    Gsp4Siegel,
    Gsp4_3a,
    Gsp4_3b,
    /// Order-2 region, χ1 ⋊ T^i pieces irreducible.
    Sp4_1ai,
    /// Order-2 region, χ1 = χ2.
    Sp4_1aii,
    /// Order-2 region, χ1 ≠ χ2 both of order 2.
    Sp4_1aBoth,
    Sp4_1bi,
    Sp4_1bii,
    Sp4_1biii,
    Sp4_1biv,
    Sp4_1ci,
    Sp4_1cii,
    Sp4_1ciii,
    /// ν^{±1/2}ρ ⋊ 1 with ω_ρ = 1.
    Sp4SiegelHalf,
    /// ρ ⋊ 1 with ω_ρ ≠ 1.
    Sp4SiegelZero,
    Sp4_3a,
    Sp4_3b,
    Sp4_3c,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One irreducible constituent of the induced representation.
#[derive(Debug, Clone, Serialize)]
pub struct Constituent {
    pub label: String,
    pub essentially_tempered: bool,
    pub square_integrable: bool,
    pub generic: bool,
    /// Langlands standard-triple label when non-tempered.
    pub langlands: Option<String>,
}

impl Constituent {
    fn tempered(label: String, generic: bool) -> Self {
        Constituent {
            label,
            essentially_tempered: true,
            square_integrable: false,
            generic,
            langlands: None,
        }
    }

    fn square_integrable(label: String, generic: bool) -> Self {
        Constituent {
            label,
            essentially_tempered: true,
            square_integrable: true,
            generic,
            langlands: None,
        }
    }

    fn quotient(label: String, langlands: String) -> Self {
        Constituent {
            label,
            essentially_tempered: false,
            square_integrable: false,
            generic: false,
            langlands: Some(langlands),
        }
    }

    /// A Langlands quotient named by its own standard triple.
    fn named_quotient(langlands: String) -> Self {
        Constituent::quotient(langlands.clone(), langlands)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReducibilityReport {
    pub group: Group,
    pub case: CaseTag,
    pub length: usize,
    pub constituents: Vec<Constituent>,
    /// Caveats (e.g. the printed order-2 subcase overlap for Sp4).
    pub note: Option<String>,
}

impl ReducibilityReport {
    fn new(group: Group, case: CaseTag, constituents: Vec<Constituent>) -> Self {
        ReducibilityReport { group, case, length: constituents.len(), constituents, note: None }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.into());
        self
    }
}

type Triple = (SmoothChar, SmoothChar, SmoothChar);

fn nu1(c: &SmoothChar) -> SmoothChar {
    c.group().nu_frac(1, 1)
}

fn is_nu_power(c: &SmoothChar, n: i64, d: i64) -> bool {
    *c == c.group().nu_frac(n, d)
}

/// The full Weyl orbit of (χ1, χ2, θ); 8 triples for data in general
/// position.  The short reflection swaps χ1 and χ2; the long reflection
/// inverts χ2 and (for GSp4) twists θ by χ2.
pub fn torus_weyl_orbit(group: Group, t: &Triple) -> Result<Vec<Triple>> {
    let mut orbit: Vec<Triple> = vec![t.clone()];
    let mut frontier = vec![t.clone()];
    while let Some((c1, c2, th)) = frontier.pop() {
        let swapped = (c2.clone(), c1.clone(), th.clone());
        let long = match group {
            Group::GSp4 => (c1.clone(), c2.inv(), c2.mul(&th)?),
            Group::Sp4 => (c1.clone(), c2.inv(), th.clone()),
        };
        for cand in [swapped, long] {
            if !orbit.contains(&cand) {
                orbit.push(cand.clone());
                frontier.push(cand);
            }
        }
    }
    Ok(orbit)
}

/// Pick the conjugate satisfying `guard`: the input triple itself when it
/// already matches, otherwise the lexicographically smallest match, so the
/// chosen representative is deterministic.
fn pick<'a>(orbit: &'a [Triple], guard: impl Fn(&Triple) -> bool) -> Option<&'a Triple> {
    if guard(&orbit[0]) {
        return Some(&orbit[0]);
    }
    orbit
        .iter()
        .filter(|t| guard(t))
        .min_by_key(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
}

/// GSp4 regularity: χ1 ≠ 1, χ2 ≠ 1, χ1 ≠ χ2^{±1}.
fn regular(t: &Triple) -> bool {
    let (c1, c2, _) = t;
    !c1.is_trivial() && !c2.is_trivial() && *c1 != *c2 && *c1 != c2.inv()
}

fn reducibility_lemma(t: &Triple) -> Result<bool> {
    let (c1, c2, _) = t;
    let nu = nu1(c1);
    let nui = nu.inv();
    Ok(*c1 == nu
        || *c1 == nui
        || *c2 == nu
        || *c2 == nui
        || *c1 == nu.mul(c2)?
        || *c1 == nui.mul(c2)?
        || *c1 == nu.mul(&c2.inv())?
        || *c1 == nui.mul(&c2.inv())?)
}

fn half(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Langlands label for the ν^{1/2}χ2 St_GL2 ⋊ θ constituent of case (1ai),
/// branching on e(χ2); `None` at the tempered point e(χ2) = −1/2.
fn gsp4_1ai_st(c2: &SmoothChar, th: &SmoothChar) -> Result<(bool, Option<String>)> {
    let e = c2.e_of();
    if e > half(-1, 2) {
        Ok((false, Some(format!("J({} St_GL2; {})", c2.times_nu_frac(1, 2), th))))
    } else if e == half(-1, 2) {
        Ok((true, None))
    } else {
        let twist = nu1(c2).mul(&c2.square())?.mul(th)?;
        Ok((false, Some(format!("J({} St_GL2; {})", c2.inv().times_nu_frac(-1, 2), twist))))
    }
}

/// Langlands label for ν^{1/2}χ2 1_GL2 ⋊ θ in case (1ai): six branches.
fn gsp4_1ai_triv(c2: &SmoothChar, th: &SmoothChar) -> Result<String> {
    let e = c2.e_of();
    let nu_c2 = c2.times_nu(BigRational::from_integer(1.into()));
    Ok(if e > BigRational::zero() {
        format!("J({}, {}; {})", nu_c2, c2, th)
    } else if e.is_zero() {
        format!("J({}, {} x| {})", nu_c2, c2, th)
    } else if e >= half(-1, 2) {
        format!("J({}, {}; {})", nu_c2, c2.inv(), c2.mul(th)?)
    } else if e > half(-1, 1) {
        format!("J({}, {}; {})", c2.inv(), nu_c2, nu_c2.mul(th)?)
    } else if e == half(-1, 1) {
        let twist = nu1(c2).mul(&c2.square())?.mul(th)?;
        format!("J({}; {} x| {})", c2.inv(), c2.inv().times_nu_frac(-1, 1), twist)
    } else {
        let twist = nu1(c2).mul(&c2.square())?.mul(th)?;
        format!("J({}, {}; {})", c2.inv(), c2.inv().times_nu_frac(-1, 1), twist)
    })
}

fn decide_gsp4_torus(orbit: &[Triple]) -> Result<ReducibilityReport> {
    let g = Group::GSp4;
    let nu = nu1(&orbit[0].0);
    let nu2 = nu.square();

    // (1aiii) χ1 = ν², χ2 = ν.
    if let Some((_, _, th)) =
        pick(orbit, |(c1, c2, _)| is_nu_power(c1, 2, 1) && is_nu_power(c2, 1, 1))
    {
        let st = th.times_nu_frac(3, 2);
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1aiii, vec![
            Constituent::square_integrable(format!("{st} St_GSp4"), true),
            Constituent::quotient(
                format!("{st} 1_GSp4"),
                format!("J({}, {}; {})", nu2, nu, th),
            ),
            Constituent::named_quotient(format!("J({}; {} St_GSp2)", nu2, th.times_nu_frac(1, 2))),
            Constituent::named_quotient(format!("J({} St_GL2; {})", nu.pow(1).times_nu_frac(1, 2), th)),
        ]));
    }

    // (1aiv) χ1 = νχ2 with χ2 of order 2.
    if let Some((_, c2, th)) = pick(orbit, |(c1, c2, _)| {
        c2.has_order(2) && *c1 == nu1(c2).mul(c2).unwrap_or_else(|_| c2.clone())
    }) {
        let nu_c2 = c2.times_nu_frac(1, 1);
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1aiv, vec![
            Constituent::square_integrable(format!("delta([{}, {}], {})", c2, nu_c2, th), true),
            Constituent::named_quotient(format!("J({} St_GL2; {})", c2.times_nu_frac(1, 2), th)),
            Constituent::named_quotient(format!(
                "J({} St_GL2; {})",
                c2.times_nu_frac(1, 2),
                c2.mul(th)?
            )),
            Constituent::named_quotient(format!("J({}; {} x| {})", nu_c2, c2, th)),
        ]));
    }

    // (1ai) χ1 = νχ2, regular, χ2² ∉ {ν^{−2}, ν^{−1}, 1}, χ2 ∉ {ν^{−2}, ν}.
    if let Some((_, c2, th)) = pick(orbit, |t @ (c1, c2, _)| {
        let sq = c2.square();
        regular(t)
            && *c1 == nu1(c2).mul(c2).unwrap_or_else(|_| c2.clone())
            && !is_nu_power(&sq, -2, 1)
            && !is_nu_power(&sq, -1, 1)
            && !sq.is_trivial()
            && !is_nu_power(c2, -2, 1)
            && !is_nu_power(c2, 1, 1)
    }) {
        let (st_tempered, st_langlands) = gsp4_1ai_st(c2, th)?;
        let triv_langlands = gsp4_1ai_triv(c2, th)?;
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1ai, vec![
            Constituent {
                label: format!("{} St_GL2 x| {}", c2.times_nu_frac(1, 2), th),
                essentially_tempered: st_tempered,
                square_integrable: false,
                generic: true,
                langlands: st_langlands,
            },
            Constituent::quotient(
                format!("{} 1_GL2 x| {}", c2.times_nu_frac(1, 2), th),
                triv_langlands,
            ),
        ]));
    }

    // (1aii) χ2 = ν, χ1 ∉ {1, ν^{±1}, ν^{±2}}.
    if let Some((c1, _, th)) = pick(orbit, |(c1, c2, _)| {
        is_nu_power(c2, 1, 1)
            && !c1.is_trivial()
            && !is_nu_power(c1, 1, 1)
            && !is_nu_power(c1, -1, 1)
            && !is_nu_power(c1, 2, 1)
            && !is_nu_power(c1, -2, 1)
    }) {
        let e = c1.e_of();
        let st_half = th.times_nu_frac(1, 2);
        let (st_tempered, st_langlands) = if e > BigRational::zero() {
            (false, Some(format!("J({}; {} St_GSp2)", c1, st_half)))
        } else if e.is_zero() {
            (true, None)
        } else {
            (false, Some(format!("J({}; {} St_GSp2)", c1.inv(), c1.mul(th)?.times_nu_frac(1, 2))))
        };
        let triv_langlands = if e > BigRational::zero() {
            format!("J({}, {}; {})", c1, nu, th)
        } else if e.is_zero() {
            format!("J({}; {} x| {})", nu, c1, th)
        } else {
            format!("J({}, {}; {})", c1.inv(), nu, c1.mul(th)?)
        };
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1aii, vec![
            Constituent {
                label: format!("{} x| {} St_GSp2", c1, st_half),
                essentially_tempered: st_tempered,
                square_integrable: false,
                generic: true,
                langlands: st_langlands,
            },
            Constituent::quotient(format!("{} x| {} 1_GSp2", c1, st_half), triv_langlands),
        ]));
    }

    // (1bi) χ1 = ν, χ2 = 1.
    if let Some((_, _, th)) =
        pick(orbit, |(c1, c2, _)| is_nu_power(c1, 1, 1) && c2.is_trivial())
    {
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1bi, vec![
            Constituent::tempered(format!("tau(S, {th})"), true),
            Constituent::tempered(format!("tau(T, {th})"), false),
            Constituent::named_quotient(format!("J({}; 1 x| {})", nu, th)),
            Constituent::named_quotient(format!("J({} St_GL2; {})", th.group().nu_frac(1, 2), th)),
        ]));
    }

    // (1bii) χ1 = χ2 = ν.
    if let Some((_, _, th)) =
        pick(orbit, |(c1, c2, _)| is_nu_power(c1, 1, 1) && is_nu_power(c2, 1, 1))
    {
        let st_half = th.times_nu_frac(1, 2);
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1bii, vec![
            Constituent {
                label: format!("{} x| {} St_GSp2", nu, st_half),
                essentially_tempered: false,
                square_integrable: false,
                generic: true,
                langlands: Some(format!("J({}, {}; {})", nu, nu, th)),
            },
            Constituent::quotient(
                format!("{} x| {} 1_GSp2", nu, st_half),
                format!("J({}; {} St_GSp2)", nu, st_half),
            ),
        ]));
    }

    // (1biii) χ1 = νχ2 and χ1² = ν.
    if let Some((_, c2, th)) = pick(orbit, |(c1, c2, _)| {
        *c1 == nu1(c2).mul(c2).unwrap_or_else(|_| c2.clone()) && is_nu_power(&c1.square(), 1, 1)
    }) {
        let nu_c2 = c2.times_nu_frac(1, 1);
        return Ok(ReducibilityReport::new(g, CaseTag::Gsp4_1biii, vec![
            Constituent::tempered(format!("{} St_GL2 x| {}", c2.times_nu_frac(1, 2), th), true),
            Constituent::quotient(
                format!("{} 1_GL2 x| {}", c2.times_nu_frac(1, 2), th),
                format!("J({}, {}; {})", nu_c2, nu_c2, c2.mul(th)?),
            ),
        ]));
    }

    Err(EngineError::Unsupported(
        "reducible principal series matched no case".into(),
    ))
}

fn sp4_region_1a(t: &Triple) -> bool {
    let (c1, c2, _) = t;
    let nu = nu1(c1);
    let nui = nu.inv();
    let shifts = [
        nu.mul(c2),
        nui.mul(c2),
        nu.mul(&c2.inv()),
        nui.mul(&c2.inv()),
    ];
    *c1 != nu
        && *c1 != nui
        && *c2 != nu
        && *c2 != nui
        && shifts.into_iter().all(|s| s.map(|s| s != *c1).unwrap_or(true))
}

const SP4_1A_NOTE: &str = "order-2 subcases overlap as printed; \
for chi1 = chi2 the length-two splitting of each half is applied";

fn decide_sp4_torus(orbit: &[Triple]) -> Result<ReducibilityReport> {
    let g = Group::Sp4;
    let nu = nu1(&orbit[0].0);
    let nu2 = nu.square();
    let one = orbit[0].0.group().one();

    // Regular ν-shifted cases (1b) and non-regular ν cases (1c) first: the
    // order-2 region (1a) explicitly excludes data with a ν-relation.

    // (1biii) χ1 = ν², χ2 = ν.
    if pick(orbit, |(c1, c2, _)| is_nu_power(c1, 2, 1) && is_nu_power(c2, 1, 1)).is_some() {
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1biii, vec![
            Constituent::square_integrable("nu^{3/2} St_Sp4".into(), true),
            Constituent::quotient(
                "nu^{3/2} 1_Sp4".into(),
                format!("J({}, {}; 1)", nu2, nu),
            ),
            Constituent::named_quotient(format!("J({}; nu^{{1/2}} St_Sp2)", nu2)),
            Constituent::named_quotient("J(nu^{3/2} St_GL2; 1)".into()),
        ]));
    }

    // (1biv) χ1 = νχ2 with χ2 of order 2: both halves have length three.
    if let Some((_, c2, _)) = pick(orbit, |(c1, c2, _)| {
        c2.has_order(2) && *c1 == nu1(c2).mul(c2).unwrap_or_else(|_| c2.clone())
    }) {
        let nu_c2 = c2.times_nu_frac(1, 1);
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1biv, vec![
            Constituent::square_integrable(format!("pi_1({c2})"), true),
            Constituent::square_integrable(format!("pi_2({c2})"), false),
            Constituent::named_quotient(format!("J({} St_GL2; 1)", c2.times_nu_frac(1, 2))),
            Constituent::named_quotient(format!("J({}; T^1_{{{}}})", nu_c2, c2)),
            Constituent::named_quotient(format!("J({}; T^2_{{{}}})", nu_c2, c2)),
            Constituent::named_quotient(format!("J({}, {}; 1)", nu_c2, c2)),
        ])
        .with_note("half splittings: pi_1 + pi_2 + J(St) and the three J's"))
    }

    // (1bi) χ1 = νχ2, regular, χ2² ∉ {ν^{−2}, ν^{−1}, 1}, χ2 ∉ {ν^{−2}, ν}.
    if let Some((_, c2, _)) = pick(orbit, |t @ (c1, c2, _)| {
        let sq = c2.square();
        regular(t)
            && *c1 == nu1(c2).mul(c2).unwrap_or_else(|_| c2.clone())
            && !is_nu_power(&sq, -2, 1)
            && !is_nu_power(&sq, -1, 1)
            && !sq.is_trivial()
            && !is_nu_power(c2, -2, 1)
            && !is_nu_power(c2, 1, 1)
    }) {
        let st_tempered = c2.e_of() == half(-1, 2);
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1bi, vec![
            Constituent {
                label: format!("{} St_GL2 x| 1", c2.times_nu_frac(1, 2)),
                essentially_tempered: st_tempered,
                square_integrable: false,
                generic: true,
                langlands: if st_tempered {
                    None
                } else {
                    Some(format!("J({} St_GL2; 1)", c2.times_nu_frac(1, 2)))
                },
            },
            Constituent::quotient(
                format!("{} 1_GL2 x| 1", c2.times_nu_frac(1, 2)),
                format!("J({}, {}; 1)", c2.times_nu_frac(1, 1), c2),
            ),
        ]));
    }

    // (1bii) χ2 = ν, χ1 ∉ {1, ν^{±1}, ν^{±2}}.
    if let Some((c1, _, _)) = pick(orbit, |(c1, c2, _)| {
        is_nu_power(c2, 1, 1)
            && !c1.is_trivial()
            && !is_nu_power(c1, 1, 1)
            && !is_nu_power(c1, -1, 1)
            && !is_nu_power(c1, 2, 1)
            && !is_nu_power(c1, -2, 1)
    }) {
        let st_tempered = c1.e_of().is_zero();
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1bii, vec![
            Constituent {
                label: format!("{} x| nu^{{1/2}} St_Sp2", c1),
                essentially_tempered: st_tempered,
                square_integrable: false,
                generic: true,
                langlands: if st_tempered {
                    None
                } else {
                    Some(format!("J({}; nu^{{1/2}} St_Sp2)", c1))
                },
            },
            Constituent::quotient(
                format!("{} x| nu^{{1/2}} 1_Sp2", c1),
                format!("J({}, {}; 1)", c1, nu),
            ),
        ]));
    }

    // (1ci) χ1 = ν, χ2 = 1.
    if pick(orbit, |(c1, c2, _)| is_nu_power(c1, 1, 1) && c2.is_trivial()).is_some() {
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1ci, vec![
            Constituent::tempered("tau".into(), true),
            Constituent::tempered("tau'".into(), false),
            Constituent::named_quotient(format!("J({}; 1 x| 1_Sp2)", nu)),
            Constituent::named_quotient("J(nu^{1/2} St_GL2; 1)".into()),
        ]));
    }

    // (1cii) χ1 = χ2 = ν: both constituents irreducible.
    if pick(orbit, |(c1, c2, _)| is_nu_power(c1, 1, 1) && is_nu_power(c2, 1, 1)).is_some() {
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1cii, vec![
            Constituent {
                label: format!("{} x| nu^{{1/2}} St_Sp2", nu),
                essentially_tempered: false,
                square_integrable: false,
                generic: true,
                langlands: Some(format!("J({}, {}; 1)", nu, nu)),
            },
            Constituent::quotient(
                format!("{} x| nu^{{1/2}} 1_Sp2", nu),
                format!("J({}; nu^{{1/2}} St_Sp2)", nu),
            ),
        ]));
    }

    // (1ciii) χ1 = νχ2 and χ1² = ν.
    if let Some((_, c2, _)) = pick(orbit, |(c1, c2, _)| {
        *c1 == nu1(c2).mul(c2).unwrap_or_else(|_| c2.clone()) && is_nu_power(&c1.square(), 1, 1)
    }) {
        let nu_c2 = c2.times_nu_frac(1, 1);
        return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1ciii, vec![
            Constituent::tempered(format!("{} St_GL2 x| 1", c2.times_nu_frac(1, 2)), true),
            Constituent::quotient(
                format!("{} 1_GL2 x| 1", c2.times_nu_frac(1, 2)),
                format!("J({}, {}; {})", nu_c2, nu_c2, c2),
            ),
        ]));
    }

    // Order-2 region (1a): no ν-relation anywhere in the orbit.
    if orbit.iter().all(sp4_region_1a) {
        // Normalize so that χ2 has order 2 when possible.
        if let Some((c1, c2, _)) = pick(orbit, |(_, c2, _)| c2.has_order(2)) {
            if c1 == c2 {
                let mut cons = vec![];
                for i in 1..=2 {
                    for j in 1..=2 {
                        cons.push(Constituent::tempered(
                            format!("tau_{i}{j}({c1})"),
                            i == 1 && j == 1,
                        ));
                    }
                }
                return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1aii, cons)
                    .with_note(SP4_1A_NOTE));
            }
            if c1.has_order(2) {
                let mut cons = vec![];
                for i in 1..=2 {
                    for j in 1..=2 {
                        cons.push(Constituent::tempered(
                            format!("theta_{i}{j}({c1}, {c2})"),
                            i == 1 && j == 1,
                        ));
                    }
                }
                return Ok(ReducibilityReport::new(g, CaseTag::Sp4_1aBoth, cons)
                    .with_note(SP4_1A_NOTE));
            }
            let e = c1.e_of();
            let mk = |i: u8, generic: bool| {
                let label = format!("{} x| T^{i}_{{{}}}", c1, c2);
                if e.is_zero() {
                    Constituent::tempered(label, generic)
                } else if e > BigRational::zero() {
                    Constituent {
                        generic,
                        ..Constituent::quotient(label, format!("J({}; T^{i}_{{{}}})", c1, c2))
                    }
                } else {
                    Constituent {
                        generic,
                        ..Constituent::quotient(
                            label,
                            format!("J({}; T^{i}_{{{}}})", c1.inv(), c2),
                        )
                    }
                }
            };
            return Ok(ReducibilityReport::new(
                g,
                CaseTag::Sp4_1ai,
                vec![mk(1, true), mk(2, false)],
            )
            .with_note(SP4_1A_NOTE));
        }
        // Neither character has order 2: irreducible.
        let (c1, c2, _) = &orbit[0];
        return Ok(irreducible(g, format!("{} x {} x| {}", c1, c2, one)));
    }

    Err(EngineError::Unsupported(
        "reducible principal series matched no case".into(),
    ))
}

fn irreducible(group: Group, label: String) -> ReducibilityReport {
    ReducibilityReport::new(group, CaseTag::Irreducible, vec![Constituent {
        label,
        essentially_tempered: false,
        square_integrable: false,
        generic: true,
        langlands: None,
    }])
}

fn decide_siegel(rep: &InducedRep) -> Result<ReducibilityReport> {
    let InducingData::Siegel { rho, beta, chi } = &rep.data else { unreachable!() };
    let omega_trivial = rho.central_char.is_trivial();
    match rep.group {
        Group::GSp4 => {
            let reducible = rho.self_dual
                && omega_trivial
                && (*beta == half(1, 2) || *beta == half(-1, 2));
            if !reducible {
                return Ok(irreducible(
                    rep.group,
                    format!("nu^{{{beta}}} {} x| {}", rho.id, chi),
                ));
            }
            Ok(ReducibilityReport::new(rep.group, CaseTag::Gsp4Siegel, vec![
                Constituent::square_integrable(
                    format!("delta(nu^{{1/2}} {} x| {})", rho.id, chi),
                    true,
                ),
                Constituent::named_quotient(format!("J(nu^{{1/2}} {}; {})", rho.id, chi)),
            ]))
        }
        Group::Sp4 => {
            if rho.self_dual && omega_trivial && (*beta == half(1, 2) || *beta == half(-1, 2)) {
                return Ok(ReducibilityReport::new(rep.group, CaseTag::Sp4SiegelHalf, vec![
                    Constituent::square_integrable(
                        format!("delta(nu^{{1/2}} {} x| 1)", rho.id),
                        true,
                    ),
                    Constituent::named_quotient(format!("J(nu^{{1/2}} {}; 1)", rho.id)),
                ]));
            }
            if rho.self_dual && !omega_trivial && beta.is_zero() {
                return Ok(ReducibilityReport::new(rep.group, CaseTag::Sp4SiegelZero, vec![
                    Constituent::tempered(format!("({} x| 1)^+", rho.id), true),
                    Constituent::tempered(format!("({} x| 1)^-", rho.id), false),
                ]));
            }
            Ok(irreducible(rep.group, format!("nu^{{{beta}}} {} x| 1", rho.id)))
        }
    }
}

fn decide_klingen(rep: &InducedRep) -> Result<ReducibilityReport> {
    let InducingData::Klingen { chi, rho } = &rep.data else { unreachable!() };
    let beta = chi.e_of();
    let xi = chi.unitary_part();
    match rep.group {
        Group::GSp4 => {
            if chi.is_trivial() {
                return Ok(ReducibilityReport::new(rep.group, CaseTag::Gsp4_3a, vec![
                    Constituent::tempered(format!("(1 x| {})^+", rho.id), true),
                    Constituent::tempered(format!("(1 x| {})^-", rho.id), false),
                ]));
            }
            let unit_beta = beta == half(1, 1) || beta == half(-1, 1);
            if unit_beta && xi.has_order(2) && rho.is_fixed_by_twist(&xi) {
                return Ok(ReducibilityReport::new(rep.group, CaseTag::Gsp4_3b, vec![
                    Constituent::square_integrable(
                        format!("delta({} x| {})", xi.times_nu_frac(1, 1), rho.id),
                        true,
                    ),
                    Constituent::named_quotient(format!(
                        "J({}; {})",
                        xi.times_nu_frac(1, 1),
                        rho.id
                    )),
                ]));
            }
            Ok(irreducible(rep.group, format!("{} x| {}", chi, rho.id)))
        }
        Group::Sp4 => {
            if chi.is_trivial() {
                return Ok(ReducibilityReport::new(rep.group, CaseTag::Sp4_3a, vec![
                    Constituent::tempered(format!("(1 x| {})^+", rho.id), true),
                    Constituent::tempered(format!("(1 x| {})^-", rho.id), false),
                ]));
            }
            if xi.has_order(2) {
                let trivial_on_fsigma = rho.is_trivial_on_fsigma(&xi)?;
                if !trivial_on_fsigma && beta.is_zero() {
                    return Ok(ReducibilityReport::new(rep.group, CaseTag::Sp4_3b, vec![
                        Constituent::tempered(format!("({} x| {})^+", xi, rho.id), true),
                        Constituent::tempered(format!("({} x| {})^-", xi, rho.id), false),
                    ]));
                }
                if trivial_on_fsigma && (beta == half(1, 1) || beta == half(-1, 1)) {
                    return Ok(ReducibilityReport::new(rep.group, CaseTag::Sp4_3c, vec![
                        Constituent::square_integrable(
                            format!("delta({} x| {})", xi.times_nu_frac(1, 1), rho.id),
                            true,
                        ),
                        Constituent::named_quotient(format!(
                            "J({}; {})",
                            xi.times_nu_frac(1, 1),
                            rho.id
                        )),
                    ]));
                }
            }
            Ok(irreducible(rep.group, format!("{} x| {}", chi, rho.id)))
        }
    }
}

/// Main decision procedure.
pub fn decide_reducibility(rep: &InducedRep) -> Result<ReducibilityReport> {
    match &rep.data {
        InducingData::Torus { chi1, chi2, theta } => {
            let t = (chi1.clone(), chi2.clone(), theta.clone());
            let orbit = torus_weyl_orbit(rep.group, &t)?;
            match rep.group {
                Group::GSp4 => {
                    if !reducibility_lemma(&t)? {
                        return Ok(irreducible(
                            rep.group,
                            format!("{} x {} x| {}", chi1, chi2, theta),
                        ));
                    }
                    decide_gsp4_torus(&orbit)
                }
                Group::Sp4 => decide_sp4_torus(&orbit),
            }
        }
        InducingData::Siegel { .. } => decide_siegel(rep),
        InducingData::Klingen { .. } => decide_klingen(rep),
    }
}

/// Langlands standard-triple label for a non-tempered constituent.
pub fn langlands_quotient_label(rep: &InducedRep, constituent: &str) -> Result<String> {
    let report = decide_reducibility(rep)?;
    let c = report
        .constituents
        .iter()
        .find(|c| c.label == constituent)
        .ok_or_else(|| {
            EngineError::MalformedDescriptor(format!("no constituent labeled '{constituent}'"))
        })?;
    if c.essentially_tempered {
        return Err(EngineError::NotApplicable(format!(
            "'{constituent}' is essentially tempered"
        )));
    }
    c.langlands.clone().ok_or_else(|| {
        EngineError::Unsupported(format!("no Langlands data recorded for '{constituent}'"))
    })
}

/// Bernstein-block case for a principal series, decided from the unit
/// restrictions only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockCase {
    J1,
    J2,
    J3,
    J4,
}

#[derive(Debug, Clone, Serialize)]
pub struct BernsteinBlockJ {
    pub case: BlockCase,
    /// The group J^s (F-points of the dual of the centralizer).
    pub js_label: &'static str,
    /// Root-system type of J^s, selecting the Iwahori–Hecke table.
    pub js_type: &'static str,
}

/// Classify the block from (χ1, χ2); independent of θ and of ν-twists.
pub fn bernstein_block_j(chi1: &SmoothChar, chi2: &SmoothChar) -> Result<BernsteinBlockJ> {
    let u1 = chi1.unit_restriction();
    let u2 = chi2.unit_restriction();
    let classify = |a: &SmoothChar, b: &SmoothChar| -> Option<BernsteinBlockJ> {
        if a.is_trivial() && b.is_trivial() {
            Some(BernsteinBlockJ { case: BlockCase::J1, js_label: "GSp4", js_type: "C2" })
        } else if !a.is_trivial() && b.is_trivial() {
            Some(BernsteinBlockJ {
                case: BlockCase::J2,
                js_label: "GL1 x GSp2",
                js_type: "A1",
            })
        } else if !a.is_trivial() && (*a == *b || *a == b.inv()) && a.square().is_trivial() {
            Some(BernsteinBlockJ {
                case: BlockCase::J3,
                js_label: "GL2 x GL2 / GL1",
                js_type: "A1xA1",
            })
        } else if !a.is_trivial() && (*a == *b || *a == b.inv()) {
            Some(BernsteinBlockJ {
                case: BlockCase::J4,
                js_label: "GL2 x GSp0",
                js_type: "A1",
            })
        } else {
            None
        }
    };
    classify(&u1, &u2)
        .or_else(|| classify(&u2, &u1))
        .ok_or_else(|| {
            EngineError::Unsupported(format!(
                "block of ({u1}, {u2}) is not among the covered cases"
            ))
        })
}

/// A Kazhdan–Lusztig unipotent assignment for one constituent.
#[derive(Debug, Clone, Serialize)]
pub struct UnipotentAssignment {
    /// Partition of 4 describing the unipotent class in the dual group.
    pub partition: &'static str,
    /// Enhancement sign (+1 / −1).
    pub enhancement: i64,
    /// Iwahori–Hecke indexing label (t_a, t_b, t_e, t_a x t_o, ...), when one
    /// is tabulated.
    pub hecke: Option<&'static str>,
    /// Disambiguates repeated partitions embedded differently.
    pub embedding: Option<&'static str>,
}

fn ua(
    partition: &'static str,
    enhancement: i64,
    hecke: Option<&'static str>,
    embedding: Option<&'static str>,
) -> UnipotentAssignment {
    UnipotentAssignment { partition, enhancement, hecke, embedding }
}

/// Unipotent class and enhancement of a constituent, for the covered GSp4
/// principal-series and Siegel cases.
pub fn unipotent_class_of_constituent(
    rep: &InducedRep,
    constituent: &str,
) -> Result<UnipotentAssignment> {
    if rep.group != Group::GSp4 {
        return Err(EngineError::Unsupported(
            "unipotent assignments are tabulated for GSp4 only".into(),
        ));
    }
    let report = decide_reducibility(rep)?;
    let idx = report
        .constituents
        .iter()
        .position(|c| c.label == constituent)
        .ok_or_else(|| {
            EngineError::MalformedDescriptor(format!("no constituent labeled '{constituent}'"))
        })?;
    let c = &report.constituents[idx];
    let block = match &rep.data {
        InducingData::Torus { chi1, chi2, .. } => Some(bernstein_block_j(chi1, chi2)?),
        _ => None,
    };
    let unsupported =
        || EngineError::Unsupported(format!("no tabulated unipotent for '{constituent}'"));
    match report.case {
        CaseTag::Gsp4_1ai | CaseTag::Gsp4_1aii => {
            let block = block.unwrap();
            let hecke = Some(match (report.case, block.case) {
                (_, BlockCase::J1) => "t_e",
                (CaseTag::Gsp4_1ai, BlockCase::J3) => "t_a x t_o",
                (CaseTag::Gsp4_1ai, BlockCase::J4) => "t_a",
                (CaseTag::Gsp4_1aii, BlockCase::J2) => "t_a",
                _ => return Err(unsupported()),
            });
            // St constituent first, 1 constituent second.
            Ok(if idx == 0 { ua("[2^2]", 1, hecke, None) } else { ua("[1^4]", 1, hecke, None) })
        }
        CaseTag::Gsp4_1aiii => {
            if idx == 0 {
                Ok(ua("[4]", 1, None, None))
            } else {
                Err(unsupported())
            }
        }
        CaseTag::Gsp4_1aiv => {
            let block = block.unwrap();
            match block.case {
                BlockCase::J1 => {
                    // χ2 = η: only δ is tabulated, with trivial unipotent.
                    if c.square_integrable {
                        Ok(ua("[1^4]", 1, Some("t_a"), None))
                    } else {
                        Err(unsupported())
                    }
                }
                BlockCase::J3 => Ok(match idx {
                    0 => ua("[2^2]", 1, Some("t_a x t_a"), None),
                    1 => ua("[2,1^2]", 1, Some("t_a x t_a"), Some("first factor")),
                    2 => ua("[2,1^2]", 1, Some("t_a x t_a"), Some("second factor")),
                    _ => ua("[1^4]", 1, Some("t_a x t_a"), None),
                }),
                _ => Err(unsupported()),
            }
        }
        CaseTag::Gsp4_1bi => Ok(match idx {
            0 => ua("[2,1^2]", -1, Some("t_b"), None),
            1 => ua("[2,1^2]", 1, Some("t_b"), None),
            2 => ua("[1^4]", 1, Some("t_b"), None),
            _ => ua("[2^2]", 1, Some("t_b"), None),
        }),
        CaseTag::Gsp4_1biii => {
            let block = block.unwrap();
            let hecke = Some(match block.case {
                BlockCase::J1 => "t_e",
                BlockCase::J3 => "t_a x t_o",
                _ => return Err(unsupported()),
            });
            Ok(if idx == 0 { ua("[2^2]", 1, hecke, None) } else { ua("[1^4]", 1, hecke, None) })
        }
        CaseTag::Gsp4Siegel => {
            if c.square_integrable {
                Ok(ua("[2,1^2]", 1, Some("t_a"), None))
            } else {
                Err(unsupported())
            }
        }
        _ => Err(unsupported()),
    }
}

#[cfg(test)]
mod tests;
