//! Decidable model of smooth characters of F^×.
//!
//! A character is a pair (ν-exponent, tame label): χ = ν^{e(χ)} · χ0 with χ0
//! drawn from a declared finitely generated abelian label group.  The group
//! always contains the three order-2 characters that drive the case analysis:
//! η (unramified quadratic) and the two ramified quadratics η2, η2′.  All
//! tests the engine performs — equality, inversion, order, ramification,
//! equality of restrictions to the unit subgroup — are decided syntactically
//! from the declared relations; no function on F^× is ever constructed.

use crate::error::{EngineError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// One generator of the tame label group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    /// Multiplicative order; `None` declares a generic label of infinite
    /// order with no relations.
    pub order: Option<u64>,
    /// Unramified generators die on the unit subgroup o_F^×.
    pub unramified: bool,
}

#[derive(Debug)]
struct LabelGroupInner {
    id: u64,
    generators: Vec<GeneratorDecl>,
}

/// A frozen label-group declaration; the session context for all character
/// arithmetic.  Cheap to clone (shared).
#[derive(Debug, Clone)]
pub struct LabelGroup {
    inner: Arc<LabelGroupInner>,
}

impl LabelGroup {
    /// The minimal group: {η, η2, η2′} ≅ (Z/2)², i.e. F^×/(F^×)² for odd p
    /// (η2·η2′ = η is *not* imposed; the three quadratics are independent
    /// generators here, matching their use as labels).
    pub fn standard() -> Self {
        Self::with_generators(&[])
    }

    /// Standard group extended by user-declared generators.
    pub fn with_generators(extra: &[GeneratorDecl]) -> Self {
        let mut generators = vec![
            GeneratorDecl { name: "eta".into(), order: Some(2), unramified: true },
            GeneratorDecl { name: "eta2".into(), order: Some(2), unramified: false },
            GeneratorDecl { name: "eta2p".into(), order: Some(2), unramified: false },
        ];
        for g in extra {
            assert!(
                generators.iter().all(|h| h.name != g.name),
                "duplicate generator name {}",
                g.name
            );
            assert!(g.order != Some(0), "generator order must be positive");
            generators.push(g.clone());
        }
        LabelGroup {
            inner: Arc::new(LabelGroupInner {
                id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
                generators,
            }),
        }
    }

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn generators(&self) -> &[GeneratorDecl] {
        &self.inner.generators
    }

    fn make(&self, nu_exp: BigRational, exps: Vec<i64>) -> SmoothChar {
        let mut c = SmoothChar { group: self.clone(), nu_exp, exps };
        c.reduce();
        c
    }

    /// The trivial character.
    pub fn one(&self) -> SmoothChar {
        self.make(BigRational::zero(), vec![0; self.inner.generators.len()])
    }

    /// ν^t (unramified, absolute value to the t).
    pub fn nu(&self, t: BigRational) -> SmoothChar {
        let mut c = self.one();
        c.nu_exp = t;
        c
    }

    /// ν^{n/d} convenience constructor.
    pub fn nu_frac(&self, n: i64, d: i64) -> SmoothChar {
        self.nu(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The unramified quadratic character η.
    pub fn eta(&self) -> SmoothChar {
        self.generator("eta").unwrap()
    }

    /// The first ramified quadratic character η2.
    pub fn eta2(&self) -> SmoothChar {
        self.generator("eta2").unwrap()
    }

    /// The second ramified quadratic character η2′.
    pub fn eta2p(&self) -> SmoothChar {
        self.generator("eta2p").unwrap()
    }

    /// Character equal to one declared generator.
    pub fn generator(&self, name: &str) -> Result<SmoothChar> {
        let idx = self
            .inner
            .generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| EngineError::NeedsDeclaration(format!("unknown label {name}")))?;
        let mut exps = vec![0; self.inner.generators.len()];
        exps[idx] = 1;
        Ok(self.make(BigRational::zero(), exps))
    }

    /// Parse the character literal grammar: `nu^{a/b} * label^{k} * ...`,
    /// `1` for the trivial character; `label^{-1}` inverts.
    pub fn parse_char(&self, s: &str) -> Result<SmoothChar> {
        let mut acc = self.one();
        for raw in s.split('*') {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(EngineError::Parse(format!("empty factor in '{s}'")));
            }
            if tok == "1" {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                None => (tok, BigRational::from_integer(1.into())),
                Some((b, e)) => {
                    let e = e
                        .trim()
                        .strip_prefix('{')
                        .and_then(|e| e.strip_suffix('}'))
                        .ok_or_else(|| {
                            EngineError::Parse(format!("exponent must be braced in '{tok}'"))
                        })?;
                    let v = match e.split_once('/') {
                        None => BigRational::from_integer(
                            e.trim()
                                .parse::<i64>()
                                .map_err(|_| EngineError::Parse(format!("bad exponent {e}")))?
                                .into(),
                        ),
                        Some((n, d)) => BigRational::new(
                            n.trim()
                                .parse::<i64>()
                                .map_err(|_| EngineError::Parse(format!("bad exponent {e}")))?
                                .into(),
                            d.trim()
                                .parse::<i64>()
                                .map_err(|_| EngineError::Parse(format!("bad exponent {e}")))?
                                .into(),
                        ),
                    };
                    (b.trim(), v)
                }
            };
            let factor = if base == "nu" {
                self.nu(exp)
            } else {
                if !exp.is_integer() {
                    return Err(EngineError::Parse(format!(
                        "fractional exponent on tame label '{base}'"
                    )));
                }
                let k: i64 = exp.to_integer().try_into().map_err(|_| {
                    EngineError::Parse(format!("exponent overflow on '{base}'"))
                })?;
                self.generator(base)?.pow(k)
            };
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }
}

/// A smooth character ν^{nu_exp} · (product of tame generators).
#[derive(Debug, Clone)]
pub struct SmoothChar {
    group: LabelGroup,
    nu_exp: BigRational,
    exps: Vec<i64>,
}

impl PartialEq for SmoothChar {
    fn eq(&self, other: &Self) -> bool {
        self.group.id() == other.group.id()
            && self.nu_exp == other.nu_exp
            && self.exps == other.exps
    }
}
impl Eq for SmoothChar {}

impl std::hash::Hash for SmoothChar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.id().hash(state);
        self.nu_exp.hash(state);
        self.exps.hash(state);
    }
}

impl SmoothChar {
    fn reduce(&mut self) {
        for (e, g) in self.exps.iter_mut().zip(self.group.generators()) {
            if let Some(n) = g.order {
                *e = e.rem_euclid(n as i64);
            }
        }
    }

    pub fn group(&self) -> &LabelGroup {
        &self.group
    }

    /// The exponent e(χ) with χ = ν^{e(χ)}·χ0, χ0 unitary.
    pub fn e_of(&self) -> BigRational {
        self.nu_exp.clone()
    }

    pub fn is_trivial(&self) -> bool {
        self.nu_exp.is_zero() && self.exps.iter().all(|&e| e == 0)
    }

    /// Exact multiplicative order; `None` when infinite (nonzero ν-exponent
    /// or a generic label present).
    pub fn order(&self) -> Option<u64> {
        if !self.nu_exp.is_zero() {
            return None;
        }
        let mut ord: u64 = 1;
        for (&e, g) in self.exps.iter().zip(self.group.generators()) {
            if e == 0 {
                continue;
            }
            let n = g.order?;
            let k = n / num_integer::gcd(n, e.unsigned_abs());
            ord = num_integer::lcm(ord, k);
        }
        Some(ord)
    }

    pub fn has_order(&self, n: u64) -> bool {
        self.order() == Some(n)
    }

    /// True when trivial on the unit subgroup: only ν and unramified
    /// generators occur.
    pub fn is_unramified(&self) -> bool {
        self.exps
            .iter()
            .zip(self.group.generators())
            .all(|(&e, g)| e == 0 || g.unramified)
    }

    /// Restriction to the unit subgroup o_F^×: drops ν and the unramified
    /// generators.  The result is a character with nu_exp = 0 whose equality
    /// is the equality of unit restrictions.
    pub fn unit_restriction(&self) -> SmoothChar {
        let exps = self
            .exps
            .iter()
            .zip(self.group.generators())
            .map(|(&e, g)| if g.unramified { 0 } else { e })
            .collect();
        self.group.make(BigRational::zero(), exps)
    }

    pub fn mul(&self, other: &SmoothChar) -> Result<SmoothChar> {
        if self.group.id() != other.group.id() {
            return Err(EngineError::LabelGroupMismatch(format!(
                "'{self}' and '{other}' live in different sessions"
            )));
        }
        Ok(self.group.make(
            &self.nu_exp + &other.nu_exp,
            self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn inv(&self) -> SmoothChar {
        self.group
            .make(-self.nu_exp.clone(), self.exps.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i64) -> SmoothChar {
        self.group.make(
            &self.nu_exp * BigRational::from_integer(k.into()),
            self.exps.iter().map(|e| e * k).collect(),
        )
    }

    pub fn square(&self) -> SmoothChar {
        self.pow(2)
    }

    /// ν^t · χ.
    pub fn times_nu(&self, t: BigRational) -> SmoothChar {
        let mut c = self.clone();
        c.nu_exp = &c.nu_exp + t;
        c
    }

    pub fn times_nu_frac(&self, n: i64, d: i64) -> SmoothChar {
        self.times_nu(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The unitary part χ0 (forget the ν-exponent).
    pub fn unitary_part(&self) -> SmoothChar {
        let mut c = self.clone();
        c.nu_exp = BigRational::zero();
        c
    }
}

impl fmt::Display for SmoothChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec![];
        if !self.nu_exp.is_zero() {
            if self.nu_exp == BigRational::from_integer(1.into()) {
                parts.push("nu".into());
            } else {
                parts.push(format!("nu^{{{}}}", self.nu_exp));
            }
        }
        for (&e, g) in self.exps.iter().zip(self.group.generators()) {
            if e == 0 {
                continue;
            }
            if e == 1 {
                parts.push(g.name.clone());
            } else {
                parts.push(format!("{}^{{{e}}}", g.name));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

/// Which group a supercuspidal label lives on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScGroup {
    GL2,
    GSp2,
    Sp2,
    PGL2,
    Other(String),
}

impl fmt::Display for ScGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScGroup::GL2 => write!(f, "GL2"),
            ScGroup::GSp2 => write!(f, "GSp2"),
            ScGroup::Sp2 => write!(f, "Sp2"),
            ScGroup::PGL2 => write!(f, "PGL2"),
            ScGroup::Other(s) => write!(f, "{s}"),
        }
    }
}

/// Opaque label for an irreducible unitary supercuspidal representation of a
/// small group, carrying exactly the invariants the deciders consult.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupercuspidalLabel {
    pub group: ScGroup,
    /// Defining-data reference, e.g. an admissible-pair tag; purely opaque.
    pub id: String,
    pub central_char: SmoothChar,
    pub self_dual: bool,
    /// Depth (0 for depth-zero).
    pub depth: BigRational,
    /// Order-2 characters χ with χ·σ ≅ σ (self-twists).
    pub self_twists: Vec<SmoothChar>,
    /// For Sp2-supercuspidals: the order-2 characters of F^× declared
    /// trivial on F_σ^× (the field attached to σ); `None` = undeclared.
    pub fsigma_trivial: Option<Vec<SmoothChar>>,
}

impl SupercuspidalLabel {
    pub fn new(group: ScGroup, id: &str, central_char: SmoothChar) -> Self {
        SupercuspidalLabel {
            group,
            id: id.into(),
            central_char,
            self_dual: false,
            depth: BigRational::zero(),
            self_twists: vec![],
            fsigma_trivial: None,
        }
    }

    pub fn self_dual(mut self, yes: bool) -> Self {
        self.self_dual = yes;
        self
    }

    pub fn with_depth(mut self, n: i64, d: i64) -> Self {
        self.depth = BigRational::new(BigInt::from(n), BigInt::from(d));
        assert!(!self.depth.is_negative(), "depth must be nonnegative");
        self
    }

    pub fn with_self_twists(mut self, twists: Vec<SmoothChar>) -> Self {
        self.self_twists = twists;
        self
    }

    pub fn with_fsigma_trivial(mut self, chars: Vec<SmoothChar>) -> Self {
        self.fsigma_trivial = Some(chars);
        self
    }

    /// Does twisting by χ fix σ?  Decided from the declared self-twists.
    pub fn is_fixed_by_twist(&self, chi: &SmoothChar) -> bool {
        chi.is_trivial() || self.self_twists.contains(chi)
    }

    /// Is χ trivial on F_σ^×?  Requires a declaration.
    pub fn is_trivial_on_fsigma(&self, chi: &SmoothChar) -> Result<bool> {
        match &self.fsigma_trivial {
            None => Err(EngineError::NeedsDeclaration(format!(
                "F_sigma^x data not declared for supercuspidal {}",
                self.id
            ))),
            Some(list) => Ok(chi.is_trivial() || list.contains(chi)),
        }
    }
}
