//! Galois-side classifier: symbolic L-parameter descriptors for Sp4 and GSp4,
//! their centralizers 𝒢_φ and component groups S_φ, Springer tables, cuspidal
//! supports, infinitesimal parameters, and assembled L-packets.
//!
//! A parameter is described by how the Weil-group representation `U`
//! decomposes: a list of summands (characters or opaque irreducible tags with
//! declared self-duality, determinant and depth), the similitude character ξ
//! (GSp4 only), and an explicit description of the SL2 restriction.  The SL2
//! part is never inferred: where the embedding is ambiguous (one factor vs
//! diagonal) the descriptor must say which.
//!
//! Partition conventions for the `sl2` field follow the per-case tables: the
//! regular principal-series families (`sp4-7a`, `gsp4-4a`) use partitions of 4
//! as printed there; factor/diagonal embeddings use partition `[2]` together
//! with an embedding tag; the rank-one symmetric-space case `sp4-6a` accepts
//! `[2]` or `[3]` for its nontrivial branch.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::characters::SmoothChar;
use crate::rootdata::{Group, LeviLabel};
use crate::{EngineError, Result};

pub mod presets;
#[cfg(test)]
mod tests;

fn half(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

/// Declared self-duality of an irreducible summand: the invariant pairing
/// V ⊗ V → ℂ (Sp4) or V ⊗ V → ξ (GSp4), if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SelfDuality {
    Orthogonal,
    Symplectic,
    None,
}

/// An opaque irreducible summand of dimension ≥ 2.
#[derive(Debug, Clone, PartialEq)]
pub struct IrrSummand {
    /// Tag naming the summand; reused inside packet-member labels.
    pub name: String,
    pub self_duality: SelfDuality,
    pub det: SmoothChar,
    /// Depth of the corresponding supercuspidal (keys the mixed-packet
    /// dichotomy).
    pub depth_zero: bool,
}

/// One summand of the Weil-group representation.
#[derive(Debug, Clone, PartialEq)]
pub enum SummandKind {
    Char(SmoothChar),
    Irr(IrrSummand),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summand {
    pub kind: SummandKind,
    pub dim: u32,
    pub mult: u32,
}

impl Summand {
    pub fn character(c: &SmoothChar) -> Summand {
        Summand { kind: SummandKind::Char(c.clone()), dim: 1, mult: 1 }
    }

    pub fn character_mult(c: &SmoothChar, mult: u32) -> Summand {
        Summand { kind: SummandKind::Char(c.clone()), dim: 1, mult }
    }

    pub fn irr(name: &str, dim: u32, self_duality: SelfDuality, det: &SmoothChar) -> Summand {
        Summand {
            kind: SummandKind::Irr(IrrSummand {
                name: name.to_string(),
                self_duality,
                det: det.clone(),
                depth_zero: true,
            }),
            dim,
            mult: 1,
        }
    }

    pub fn with_mult(mut self, mult: u32) -> Summand {
        self.mult = mult;
        self
    }

    pub fn positive_depth(mut self) -> Summand {
        if let SummandKind::Irr(ref mut irr) = self.kind {
            irr.depth_zero = false;
        }
        self
    }
}

/// Where an sl2 of partition type `[2]` lands when the centralizer has
/// several factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sl2Embedding {
    FirstFactor,
    SecondFactor,
    Diagonal,
}

/// Explicit description of φ|_{SL2}.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Data {
    /// Partition (descending); empty or all-1 means trivial.
    pub partition: Vec<u32>,
    pub embedding: Option<Sl2Embedding>,
}

impl Sl2Data {
    pub fn trivial() -> Sl2Data {
        Sl2Data { partition: vec![], embedding: None }
    }

    pub fn partition(parts: &[u32]) -> Sl2Data {
        Sl2Data { partition: parts.to_vec(), embedding: None }
    }

    pub fn embedded(parts: &[u32], embedding: Sl2Embedding) -> Sl2Data {
        Sl2Data { partition: parts.to_vec(), embedding: Some(embedding) }
    }

    pub fn is_trivial(&self) -> bool {
        self.partition.iter().all(|&p| p == 1)
    }
}

/// Symbolic descriptor of an L-parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamDescriptor {
    pub group: Group,
    pub summands: Vec<Summand>,
    /// Similitude character; `Some` exactly for GSp4.
    pub xi: Option<SmoothChar>,
    pub sl2: Sl2Data,
    /// Declares that two distinct irreducible summands are (ξ-)dual to each
    /// other.
    pub dual_pair: bool,
}

impl ParamDescriptor {
    pub fn sp4(summands: Vec<Summand>, sl2: Sl2Data) -> ParamDescriptor {
        ParamDescriptor { group: Group::Sp4, summands, xi: None, sl2, dual_pair: false }
    }

    pub fn gsp4(summands: Vec<Summand>, xi: &SmoothChar, sl2: Sl2Data) -> ParamDescriptor {
        ParamDescriptor {
            group: Group::GSp4,
            summands,
            xi: Some(xi.clone()),
            sl2,
            dual_pair: false,
        }
    }

    pub fn with_dual_pair(mut self) -> ParamDescriptor {
        self.dual_pair = true;
        self
    }

    fn total_dim(&self) -> u32 {
        self.summands.iter().map(|s| s.dim * s.mult).sum()
    }

    /// Dimension-1 summands, expanded by multiplicity.
    fn chars(&self) -> Vec<SmoothChar> {
        let mut out = vec![];
        for s in &self.summands {
            if let SummandKind::Char(c) = &s.kind {
                for _ in 0..s.mult {
                    out.push(c.clone());
                }
            }
        }
        out
    }

    /// Irreducible summands of dimension ≥ 2 with their multiplicities.
    fn irrs(&self) -> Vec<(&IrrSummand, u32, u32)> {
        let mut out = vec![];
        for s in &self.summands {
            if let SummandKind::Irr(v) = &s.kind {
                out.push((v, s.dim, s.mult));
            }
        }
        out
    }

    fn det_of(&self, s: &Summand) -> SmoothChar {
        match &s.kind {
            SummandKind::Char(c) => c.clone(),
            SummandKind::Irr(v) => v.det.clone(),
        }
    }
}

// ---------------------------------------------------------------------------
// Cases
// ---------------------------------------------------------------------------

/// The classified shape of a parameter descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GaloisCase {
    Sp4C1,
    Sp4C2,
    Sp4C3,
    Sp4C4a,
    Sp4C4b,
    Sp4C4c,
    Sp4C5a,
    Sp4C5b,
    Sp4C5c,
    Sp4C5d,
    Sp4C6a,
    Sp4C6b,
    Sp4C6c,
    Sp4C6d,
    Sp4C7a,
    Sp4C7b,
    Sp4C7c,
    Sp4C7d,
    Sp4C7e,
    Sp4C7f,
    Sp4C7j,
    GSp4C1,
    GSp4C2a,
    GSp4C2b,
    GSp4C2c,
    GSp4C3a,
    GSp4C3b,
    GSp4C4a,
    GSp4C4b,
    GSp4C4c,
    GSp4C4d,
    GSp4C4e,
}

impl fmt::Display for GaloisCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GaloisCase::*;
        let s = match self {
            Sp4C1 => "sp4-1",
            Sp4C2 => "sp4-2",
            Sp4C3 => "sp4-3",
            Sp4C4a => "sp4-4a",
            Sp4C4b => "sp4-4b",
            Sp4C4c => "sp4-4c",
            Sp4C5a => "sp4-5a",
            Sp4C5b => "sp4-5b",
            Sp4C5c => "sp4-5c",
            Sp4C5d => "sp4-5d",
            Sp4C6a => "sp4-6a",
            Sp4C6b => "sp4-6b",
            Sp4C6c => "sp4-6c",
            Sp4C6d => "sp4-6d",
            Sp4C7a => "sp4-7a",
            Sp4C7b => "sp4-7b",
            Sp4C7c => "sp4-7c",
            Sp4C7d => "sp4-7d",
            Sp4C7e => "sp4-7e",
            Sp4C7f => "sp4-7f",
            Sp4C7j => "sp4-7j",
            GSp4C1 => "gsp4-1",
            GSp4C2a => "gsp4-2a",
            GSp4C2b => "gsp4-2b",
            GSp4C2c => "gsp4-2c",
            GSp4C3a => "gsp4-3a",
            GSp4C3b => "gsp4-3b",
            GSp4C4a => "gsp4-4a",
            GSp4C4b => "gsp4-4b",
            GSp4C4c => "gsp4-4c",
            GSp4C4d => "gsp4-4d",
            GSp4C4e => "gsp4-4e",
        };
        write!(f, "{s}")
    }
}

fn malformed(msg: impl Into<String>) -> EngineError {
    EngineError::MalformedDescriptor(msg.into())
}

fn order2(c: &SmoothChar) -> bool {
    c.square().is_trivial() && !c.is_trivial()
}

fn square_trivial(c: &SmoothChar) -> bool {
    c.square().is_trivial()
}

// ---------------------------------------------------------------------------
// Validation and classification
// ---------------------------------------------------------------------------

fn validate(p: &ParamDescriptor) -> Result<()> {
    let expected = match p.group {
        Group::Sp4 => 5,
        Group::GSp4 => 4,
    };
    if p.total_dim() != expected {
        return Err(malformed(format!(
            "summand dimensions sum to {}, expected {expected}",
            p.total_dim()
        )));
    }
    match p.group {
        Group::Sp4 => {
            if p.xi.is_some() {
                return Err(malformed("similitude character only applies to GSp4"));
            }
            // Total determinant must be trivial (image in SO5).
            let mut det = match &p.summands[0].kind {
                SummandKind::Char(c) => c.group().one(),
                SummandKind::Irr(v) => v.det.group().one(),
            };
            for s in &p.summands {
                for _ in 0..s.mult {
                    det = det.mul(&p.det_of(s))?;
                }
            }
            if !det.is_trivial() {
                return Err(malformed("total determinant is nontrivial"));
            }
        }
        Group::GSp4 => {
            let xi = p.xi.as_ref().ok_or_else(|| malformed("GSp4 requires a similitude character"))?;
            if p.summands.iter().any(|s| s.dim == 3) {
                return Err(malformed("a 3+1 decomposition admits no symplectic pairing"));
            }
            // The multiset of dim-1 summands must be closed under c ↦ ξ·c^{-1}.
            let chars = p.chars();
            let mut pool = chars.clone();
            for c in &chars {
                let partner = xi.mul(&c.inv())?;
                if let Some(i) = pool.iter().position(|d| *d == partner) {
                    pool.remove(i);
                } else {
                    return Err(malformed(
                        "dimension-1 summands are not closed under the ξ-duality",
                    ));
                }
            }
        }
    }
    let mut last = u32::MAX;
    for &part in &p.sl2.partition {
        if part == 0 || part > last {
            return Err(malformed("sl2 partition must be positive and descending"));
        }
        last = part;
    }
    if p.sl2.partition.iter().sum::<u32>() > expected {
        return Err(malformed("sl2 partition exceeds the parameter dimension"));
    }
    Ok(())
}

/// Classify a descriptor into its case label.
pub fn classify(p: &ParamDescriptor) -> Result<GaloisCase> {
    validate(p)?;
    match p.group {
        Group::Sp4 => classify_sp4(p),
        Group::GSp4 => classify_gsp4(p),
    }
}

/// The inverse-closed multiset {1, a, a⁻¹, b, b⁻¹} of a five-character
/// parameter, or an error.
fn split_five_chars(chars: &[SmoothChar]) -> Result<(SmoothChar, SmoothChar)> {
    let mut pool = chars.to_vec();
    let triv = pool
        .iter()
        .position(|c| c.is_trivial())
        .ok_or_else(|| malformed("five-character parameter without a trivial summand"))?;
    pool.remove(triv);
    let a = pool.remove(0);
    let ai = pool
        .iter()
        .position(|c| *c == a.inv())
        .ok_or_else(|| malformed("five-character parameter is not self-dual"))?;
    pool.remove(ai);
    let b = pool.remove(0);
    if pool[0] != b.inv() {
        return Err(malformed("five-character parameter is not self-dual"));
    }
    Ok((a, b))
}

fn classify_sp4(p: &ParamDescriptor) -> Result<GaloisCase> {
    let mut dims: Vec<u32> = vec![];
    for s in &p.summands {
        for _ in 0..s.mult {
            dims.push(s.dim);
        }
    }
    dims.sort_unstable_by(|a, b| b.cmp(a));
    let chars = p.chars();
    match dims.as_slice() {
        [5] => Ok(GaloisCase::Sp4C1),
        [4, 1] => {
            if !square_trivial(&chars[0]) {
                return Err(malformed("the character in a 4+1 decomposition must square to 1"));
            }
            Ok(GaloisCase::Sp4C2)
        }
        [3, 2] => Ok(GaloisCase::Sp4C3),
        [3, 1, 1] => {
            let (c1, c2) = (&chars[0], &chars[1]);
            if c1 == c2 {
                if !square_trivial(c1) {
                    return Err(malformed("repeated character must square to 1"));
                }
                Ok(GaloisCase::Sp4C4a)
            } else if square_trivial(c1) && square_trivial(c2) {
                Ok(GaloisCase::Sp4C4b)
            } else if *c1 == c2.inv() {
                Ok(GaloisCase::Sp4C4c)
            } else {
                Err(malformed("3+1+1 characters are neither order 2 nor mutually inverse"))
            }
        }
        [2, 2, 1] => {
            if !square_trivial(&chars[0]) {
                return Err(malformed("the character in a 2+2+1 decomposition must square to 1"));
            }
            let irrs = p.irrs();
            if irrs.len() == 1 && irrs[0].2 == 2 {
                match irrs[0].0.self_duality {
                    SelfDuality::Orthogonal => Ok(GaloisCase::Sp4C5a),
                    SelfDuality::Symplectic => {
                        if !chars[0].is_trivial() {
                            return Err(malformed(
                                "symplectic 2+2 forces the residual character to be trivial",
                            ));
                        }
                        Ok(GaloisCase::Sp4C5b)
                    }
                    SelfDuality::None => Err(malformed("repeated summand needs a declared form")),
                }
            } else if irrs.len() == 2 {
                if p.dual_pair {
                    Ok(GaloisCase::Sp4C5d)
                } else if irrs.iter().all(|(v, _, _)| v.self_duality == SelfDuality::Orthogonal) {
                    Ok(GaloisCase::Sp4C5c)
                } else {
                    Err(malformed("distinct 2-dim summands must be orthogonal or a dual pair"))
                }
            } else {
                Err(malformed("unrecognized 2+2+1 shape"))
            }
        }
        [2, 1, 1, 1] => {
            let mut cs = chars.clone();
            // Move the order ≤ 2 characters first for pattern matching.
            cs.sort_by_key(|c| (!square_trivial(c), c.to_string()));
            let distinct: Vec<&SmoothChar> = {
                let mut d: Vec<&SmoothChar> = vec![];
                for c in &cs {
                    if !d.contains(&c) {
                        d.push(c);
                    }
                }
                d
            };
            match distinct.len() {
                1 => Ok(GaloisCase::Sp4C6a),
                2 => Ok(GaloisCase::Sp4C6b),
                3 => {
                    if cs.iter().all(square_trivial) {
                        Ok(GaloisCase::Sp4C6c)
                    } else {
                        let sq: Vec<&SmoothChar> =
                            cs.iter().filter(|c| square_trivial(c)).collect();
                        let rest: Vec<&SmoothChar> =
                            cs.iter().filter(|c| !square_trivial(c)).collect();
                        if sq.len() == 1 && *rest[0] == rest[1].inv() {
                            Ok(GaloisCase::Sp4C6d)
                        } else {
                            Err(malformed("2+1+1+1 characters do not pair up"))
                        }
                    }
                }
                _ => Err(malformed("unrecognized 2+1+1+1 shape")),
            }
        }
        [1, 1, 1, 1, 1] => {
            let (a, b) = split_five_chars(&chars)?;
            let (a, b) = if a.is_trivial() && !b.is_trivial() { (b, a) } else { (a, b) };
            if a.is_trivial() && b.is_trivial() {
                Ok(GaloisCase::Sp4C7a)
            } else if b.is_trivial() {
                if order2(&a) {
                    Ok(GaloisCase::Sp4C7c)
                } else {
                    Ok(GaloisCase::Sp4C7d)
                }
            } else if a == b || a == b.inv() {
                if order2(&a) {
                    Ok(GaloisCase::Sp4C7b)
                } else {
                    Ok(GaloisCase::Sp4C7f)
                }
            } else if order2(&a) && order2(&b) {
                Ok(GaloisCase::Sp4C7e)
            } else {
                Ok(GaloisCase::Sp4C7j)
            }
        }
        _ => Err(malformed("unrecognized Sp4 decomposition")),
    }
}

fn classify_gsp4(p: &ParamDescriptor) -> Result<GaloisCase> {
    let xi = p.xi.clone().unwrap();
    let mut dims: Vec<u32> = vec![];
    for s in &p.summands {
        for _ in 0..s.mult {
            dims.push(s.dim);
        }
    }
    dims.sort_unstable_by(|a, b| b.cmp(a));
    let chars = p.chars();
    match dims.as_slice() {
        [4] => Ok(GaloisCase::GSp4C1),
        [2, 2] => {
            let irrs = p.irrs();
            if irrs.len() == 1 && irrs[0].2 == 2 {
                if irrs[0].0.det != xi {
                    return Err(malformed("repeated 2-dim summand must have determinant ξ"));
                }
                match irrs[0].0.self_duality {
                    SelfDuality::Symplectic => Ok(GaloisCase::GSp4C2a),
                    SelfDuality::Orthogonal => Ok(GaloisCase::GSp4C2b),
                    SelfDuality::None => Err(malformed("repeated summand needs a declared form")),
                }
            } else if irrs.len() == 2 && p.dual_pair {
                Ok(GaloisCase::GSp4C2c)
            } else {
                Err(malformed("distinct 2-dim summands must be declared ξ-dual"))
            }
        }
        [2, 1, 1] => {
            let irr = &p.irrs()[0];
            if irr.0.det != xi {
                return Err(malformed("the 2-dim summand must have determinant ξ"));
            }
            if chars[0].mul(&chars[1])? != xi {
                return Err(malformed("characters in a 2+1+1 decomposition must multiply to ξ"));
            }
            if chars[0] == chars[1] {
                Ok(GaloisCase::GSp4C3a)
            } else {
                Ok(GaloisCase::GSp4C3b)
            }
        }
        [1, 1, 1, 1] => {
            let mut groups: Vec<(SmoothChar, u32)> = vec![];
            for c in &chars {
                if let Some(e) = groups.iter_mut().find(|(d, _)| d == c) {
                    e.1 += 1;
                } else {
                    groups.push((c.clone(), 1));
                }
            }
            groups.sort_by_key(|(c, m)| (std::cmp::Reverse(*m), c.to_string()));
            match groups.as_slice() {
                [(c, 4)] => {
                    if c.square() != xi {
                        return Err(malformed("quadruple character must square to ξ"));
                    }
                    Ok(GaloisCase::GSp4C4a)
                }
                [(c1, 2), (c3, 2)] => {
                    if c1.square() == xi && c3.square() == xi {
                        Ok(GaloisCase::GSp4C4b)
                    } else if c1.mul(c3)? == xi {
                        Ok(GaloisCase::GSp4C4c)
                    } else {
                        Err(malformed("doubled characters are not ξ-paired"))
                    }
                }
                [(c1, 2), (c3, 1), (c4, 1)] => {
                    if c1.square() == xi && c3.mul(c4)? == xi {
                        Ok(GaloisCase::GSp4C4d)
                    } else {
                        Err(malformed("2+1+1 character pattern is not ξ-paired"))
                    }
                }
                [_, _, _, _] => Ok(GaloisCase::GSp4C4e),
                _ => Err(malformed("unrecognized character pattern")),
            }
        }
        _ => Err(malformed("unrecognized GSp4 decomposition")),
    }
}

// ---------------------------------------------------------------------------
// Springer tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpringerRow {
    /// Unipotent pair (orbit, local system).
    pub pair: &'static str,
    /// Weyl-group representation, or "cusp".
    pub weyl_rep: &'static str,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpringerTable {
    pub group: &'static str,
    pub rows: &'static [SpringerRow],
}

const fn row(pair: &'static str, weyl_rep: &'static str) -> SpringerRow {
    SpringerRow { pair, weyl_rep }
}

const SPRINGER_SL2: SpringerTable = SpringerTable {
    group: "SL2",
    rows: &[row("([1^2],1)", "1"), row("([2],1)", "sgn"), row("([2],-1)", "cusp")],
};

const SPRINGER_SO3: SpringerTable = SpringerTable {
    group: "SO3",
    rows: &[row("([1^2],1)", "1"), row("([2],1)", "sgn")],
};

const SPRINGER_SO5: SpringerTable = SpringerTable {
    group: "SO5",
    rows: &[
        row("([5],1)", "(-,[1^2])"),
        row("([3,1^2],1)", "([1],[1])"),
        row("([3,1^2],-1)", "(-,[2])"),
        row("([2^2,1],1)", "([1^2],-)"),
        row("([1^5],1)", "([2],-)"),
    ],
};

const SPRINGER_O4: SpringerTable = SpringerTable {
    group: "O4",
    rows: &[
        row("(00,1)", "1_W"),
        row("(00,-1)", "(1(x)1,sgn)"),
        row("(0e,1)", "(1(x)sgn,1)"),
        row("(ee,(1,1))", "sgn_W"),
        row("(ee,(1,-1))", "(sgn(x)sgn,sgn)"),
        row("(ee,(-1,1))", "cusp"),
        row("(ee,(-1,-1))", "cusp"),
    ],
};

const SPRINGER_GSP4: SpringerTable = SpringerTable {
    group: "GSp4",
    rows: &[
        row("([4],1)", "(-,[1^2])"),
        row("([2^2],1)", "([1],[1])"),
        row("([2^2],-1)", "(-,[2])"),
        row("([2,1^2],1)", "([1^2],-)"),
        row("([1^4],1)", "([2],-)"),
    ],
};

const SPRINGER_GSP22: SpringerTable = SpringerTable {
    group: "GSp22",
    rows: &[
        row("(00,1)", "1(x)1"),
        row("(0e,1)", "1(x)sgn"),
        row("(e0,1)", "sgn(x)1"),
        row("(ee,1)", "sgn(x)sgn"),
        row("(ee,-1)", "cusp"),
    ],
};

/// All transcribed Springer tables.
pub fn springer_tables() -> Vec<SpringerTable> {
    vec![SPRINGER_SL2, SPRINGER_SO3, SPRINGER_SO5, SPRINGER_O4, SPRINGER_GSP4, SPRINGER_GSP22]
}

/// Look up a Springer table by its group label.
pub fn springer_table(group: &str) -> Result<SpringerTable> {
    springer_tables()
        .into_iter()
        .find(|t| t.group == group)
        .ok_or_else(|| EngineError::InvalidDatum(format!("no Springer table for {group}")))
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CentralizerReport {
    pub case: GaloisCase,
    /// The centralizer 𝒢_φ of the Weil-group part.
    pub g_phi: String,
    /// The component group S_φ of the full parameter (depends on sl2).
    pub s_phi: String,
    /// The enhancement group A_φ; its quotient by the central image is S_φ.
    pub a_phi: String,
    /// Rank of S_φ as an elementary abelian 2-group.
    pub s_rank: u32,
    pub irr_count: u64,
    /// 𝒢 of the full parameter finite modulo the center of the dual group.
    pub finite_mod_center: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MemberKind {
    Supercuspidal,
    PrincipalSeries,
    Intermediate,
}

#[derive(Debug, Clone, Serialize)]
pub struct PacketMember {
    pub kind: MemberKind,
    pub label: String,
    pub enhancement: String,
    pub generic: bool,
    /// Group-side cuspidal-support Levi.
    pub support: LeviLabel,
    /// Depth-zero supercuspidal family backing this member, when applicable.
    pub sc_ref: Option<String>,
    /// Declared restriction to Sp4 (for `sp4_from_gsp4`).
    pub restriction: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PacketDescriptor {
    pub group: Group,
    pub case: GaloisCase,
    pub members: Vec<PacketMember>,
    pub s_rank: u32,
    pub tempered: bool,
    pub discrete: bool,
    /// Dual-side label of the cuspidal-support Levi of the first member.
    pub support_dual: String,
    /// Group-side name of that Levi.
    pub support_group: String,
    pub note: Option<String>,
}

/// Enhancement labels for a rank-r elementary abelian 2-group, trivial first.
pub fn enhancement_labels(rank: u32) -> Vec<String> {
    let mut out = vec![];
    for mask in 0u32..(1 << rank) {
        if mask == 0 {
            out.push("1".to_string());
            continue;
        }
        let mut parts = vec![];
        for bit in 0..rank {
            if mask & (1 << bit) != 0 {
                parts.push(if rank == 1 {
                    "eps".to_string()
                } else {
                    format!("eps{}", bit + 1)
                });
            }
        }
        out.push(parts.join("*"));
    }
    out
}

/// Dual-side label for the group-side Levi `levi`.
pub fn dual_levi_label(group: Group, levi: LeviLabel) -> &'static str {
    match (group, levi) {
        (Group::Sp4, LeviLabel::G) => "SO5(C)",
        (Group::Sp4, LeviLabel::Siegel) => "GL2(C) x SO1(C)",
        (Group::Sp4, LeviLabel::Klingen) => "GL1(C) x SO3(C)",
        (Group::Sp4, LeviLabel::T) => "T^vee",
        (Group::GSp4, LeviLabel::G) => "GSp4(C)",
        (Group::GSp4, LeviLabel::Siegel) => "GL1(C) x GSp2(C)",
        (Group::GSp4, LeviLabel::Klingen) => "GL2(C) x GSp0(C)",
        (Group::GSp4, LeviLabel::T) => "T^vee",
    }
}

// ---------------------------------------------------------------------------
// The per-case analysis
// ---------------------------------------------------------------------------

struct MemberSpec {
    kind: MemberKind,
    label: String,
    support: LeviLabel,
    sc_ref: Option<String>,
    restriction: Option<Vec<String>>,
}

fn sc(label: String) -> MemberSpec {
    MemberSpec {
        kind: MemberKind::Supercuspidal,
        label,
        support: LeviLabel::G,
        sc_ref: None,
        restriction: None,
    }
}

fn sc_ref(label: String, family: &str) -> MemberSpec {
    MemberSpec { sc_ref: Some(family.to_string()), ..sc(label) }
}

fn ps(label: String) -> MemberSpec {
    MemberSpec {
        kind: MemberKind::PrincipalSeries,
        label,
        support: LeviLabel::T,
        sc_ref: None,
        restriction: None,
    }
}

fn inter(label: String, support: LeviLabel) -> MemberSpec {
    MemberSpec { kind: MemberKind::Intermediate, label, support, sc_ref: None, restriction: None }
}

struct Analysis {
    case: GaloisCase,
    g_phi: String,
    s_rank: u32,
    finite_mod_center: bool,
    tempered: bool,
    discrete: bool,
    members: Vec<MemberSpec>,
    note: Option<String>,
}

fn need_trivial_sl2(p: &ParamDescriptor, case: GaloisCase) -> Result<()> {
    if p.sl2.is_trivial() {
        Ok(())
    } else {
        Err(malformed(format!("{case}: the centralizer has no unipotents; sl2 must be trivial")))
    }
}

/// sl2 shape for the cases where the only options are trivial or a single
/// principal sl2.
fn two_branch(p: &ParamDescriptor) -> Result<bool> {
    if p.sl2.is_trivial() {
        Ok(false)
    } else if p.sl2.partition == [2] || p.sl2.partition == [3] {
        Ok(true)
    } else {
        Err(malformed("sl2 must be trivial or a single [2]"))
    }
}

fn twist_label(c: &SmoothChar, base: &str) -> String {
    if c.is_trivial() {
        base.to_string()
    } else {
        format!("{c} {base}")
    }
}

fn analyze(p: &ParamDescriptor) -> Result<Analysis> {
    let case = classify(p)?;
    match p.group {
        Group::Sp4 => analyze_sp4(p, case),
        Group::GSp4 => analyze_gsp4(p, case),
    }
}

fn all_chars_unitary(p: &ParamDescriptor) -> bool {
    p.chars().iter().all(|c| c.e_of().is_zero())
        && p.xi.as_ref().map_or(true, |xi| xi.e_of().is_zero())
}

fn analyze_sp4(p: &ParamDescriptor, case: GaloisCase) -> Result<Analysis> {
    use GaloisCase::*;
    let chars = p.chars();
    let irrs = p.irrs();
    let unitary = all_chars_unitary(p);
    let mut a = Analysis {
        case,
        g_phi: String::new(),
        s_rank: 0,
        finite_mod_center: false,
        tempered: unitary,
        discrete: false,
        members: vec![],
        note: None,
    };
    match case {
        Sp4C1 => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "1".into();
            a.finite_mod_center = true;
            a.discrete = true;
            a.members.push(sc(format!("pi({})", irrs[0].0.name)));
        }
        Sp4C2 => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2".into();
            a.s_rank = 1;
            a.finite_mod_center = true;
            a.discrete = true;
            let v = &irrs[0].0.name;
            a.members.push(sc(format!("pi({v},{})^+", chars[0])));
            a.members.push(sc(format!("pi({v},{})^-", chars[0])));
        }
        Sp4C3 => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2".into();
            a.s_rank = 1;
            a.finite_mod_center = true;
            a.discrete = true;
            let (v1, v2) = (&irrs[0].0.name, &irrs[1].0.name);
            a.members.push(sc(format!("pi({v1},{v2})^+")));
            a.members.push(sc(format!("pi({v1},{v2})^-")));
        }
        Sp4C4a => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "S(mu2 x O2) ~ O2".into();
            a.s_rank = 1;
            let v = &irrs[0].0.name;
            let c1 = &chars[0];
            a.members.push(inter(format!("({c1} x| pi({v}))^+"), LeviLabel::Klingen));
            a.members.push(inter(format!("({c1} x| pi({v}))^-"), LeviLabel::Klingen));
        }
        Sp4C4b => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2^2".into();
            a.s_rank = 2;
            a.finite_mod_center = true;
            a.discrete = true;
            let v = &irrs[0].0.name;
            for sign in ["++", "+-", "-+", "--"] {
                a.members.push(sc(format!("pi({v};{},{})^{{{sign}}}", chars[0], chars[1])));
            }
        }
        Sp4C4c => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C*".into();
            let v = &irrs[0].0.name;
            a.members.push(inter(format!("{} x| pi({v})", chars[0]), LeviLabel::Klingen));
        }
        Sp4C5a => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C*".into();
            a.members.push(sc(format!("pi({},{})", irrs[0].0.name, chars[0])));
            a.note = Some("singleton supercuspidal packet as printed".into());
        }
        Sp4C5b => {
            a.g_phi = "Sp2".into();
            let v = irrs[0].0;
            if two_branch(p)? {
                a.s_rank = 1;
                a.finite_mod_center = true;
                a.discrete = true;
                a.members
                    .push(inter(format!("delta(nu^{{1/2}} pi({}) x| 1)", v.name), LeviLabel::Siegel));
                if v.depth_zero {
                    a.members.push(sc_ref("pi_alpha(eta)".into(), "pi_alpha_theta"));
                } else {
                    a.members.push(sc(format!("pi_chi({})", v.name)));
                }
            } else {
                a.members.push(inter(format!("pi({}) x| 1", v.name), LeviLabel::Siegel));
            }
        }
        Sp4C5c => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2^2".into();
            a.s_rank = 2;
            a.finite_mod_center = true;
            a.discrete = true;
            let (v1, v2) = (&irrs[0].0.name, &irrs[1].0.name);
            for sign in ["++", "+-", "-+", "--"] {
                a.members.push(sc(format!("pi({v1},{v2},{})^{{{sign}}}", chars[0])));
            }
        }
        Sp4C5d => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C*".into();
            a.members.push(inter(format!("pi({}) x| 1", irrs[0].0.name), LeviLabel::Siegel));
        }
        Sp4C6a => {
            a.g_phi = "SO3 x mu2".into();
            a.s_rank = 1;
            let v = &irrs[0].0.name;
            let shifted = two_branch(p)?;
            for i in 1..=2 {
                let c = if shifted { chars[0].times_nu_frac(1, 1) } else { chars[0].clone() };
                a.members.push(inter(format!("{c} x| pi_{i}({v})"), LeviLabel::Klingen));
            }
        }
        Sp4C6b => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2 x S(O2 x mu2)".into();
            a.s_rank = 2;
            let v = &irrs[0].0.name;
            // The repeated character of the pattern (chars were sorted during
            // classification by the caller; recover it directly).
            let mut rep_char = chars[0].clone();
            for c in &chars {
                if chars.iter().filter(|d| *d == c).count() == 2 {
                    rep_char = c.clone();
                }
            }
            for i in 1..=2 {
                for s in ["+", "-"] {
                    a.members
                        .push(inter(format!("({rep_char} x| pi_{i}({v}))^{s}"), LeviLabel::Klingen));
                }
            }
            a.note = Some("members tau_11, tau_12, tau_21, tau_22".into());
        }
        Sp4C6c => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2 x S(mu2^3)".into();
            a.s_rank = 3;
            a.finite_mod_center = true;
            a.discrete = true;
            let v = &irrs[0].0.name;
            for i in 0..8 {
                a.members.push(sc(format!(
                    "pi({v};{},{},{})#{}",
                    chars[0],
                    chars[1],
                    chars[2],
                    i + 1
                )));
            }
        }
        Sp4C6d => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "mu2 x C*".into();
            a.s_rank = 1;
            let v = &irrs[0].0.name;
            let c2 = chars
                .iter()
                .find(|c| !square_trivial(c))
                .ok_or_else(|| malformed("expected a non-quadratic character"))?;
            for i in 1..=2 {
                a.members.push(inter(format!("{c2} x| pi_{i}({v})"), LeviLabel::Klingen));
            }
        }
        Sp4C7a => {
            a.g_phi = "SO5".into();
            match p.sl2.partition.as_slice() {
                [4] => {
                    a.finite_mod_center = true;
                    a.discrete = true;
                    a.members.push(ps("St_Sp4".into()));
                }
                [2, 2] => {
                    a.s_rank = 1;
                    a.members.push(ps("tau".into()));
                    a.members.push(ps("tau'".into()));
                }
                [2, 1, 1] => {
                    a.members.push(ps("1 St_GL2 x| 1".into()));
                }
                p if p.iter().all(|&x| x == 1) => {
                    a.members.push(ps("1 x 1 x| 1".into()));
                }
                _ => return Err(malformed("sp4-7a: sl2 must be [4], [2,2], [2,1,1] or trivial")),
            }
        }
        Sp4C7b => {
            a.g_phi = "S(O4 x mu2) ~ O4".into();
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap().clone();
            if p.sl2.is_trivial() {
                a.s_rank = 1;
                for i in 1..=2 {
                    a.members.push(ps(format!("{c} x| T^{i}_{{{c}}}")));
                }
            } else if p.sl2.partition == [2]
                && p.sl2.embedding == Some(Sl2Embedding::FirstFactor)
            {
                a.members.push(ps(format!("{c} St_GL2 x| 1")));
            } else if p.sl2.partition == [2] && p.sl2.embedding == Some(Sl2Embedding::Diagonal) {
                a.s_rank = 2;
                a.finite_mod_center = true;
                a.discrete = true;
                for i in 1..=2 {
                    let mut m = ps(format!("pi_{i}({c})"));
                    m.restriction = None;
                    a.members.push(m);
                }
                if c.is_unramified() {
                    a.members.push(sc_ref("pi_beta(theta10)".into(), "pi_beta_theta10"));
                    a.members.push(sc_ref("pi_gamma(theta10)".into(), "pi_gamma_theta10"));
                } else {
                    a.members.push(sc_ref(format!("pi_alpha^+({c})"), "pi_alpha_plus_eta2"));
                    a.members.push(sc_ref(format!("pi_alpha^-({c})"), "pi_alpha_minus_eta2"));
                }
            } else {
                return Err(malformed(
                    "sp4-7b: sl2 must be trivial, [2] in the first factor, or [2] diagonal",
                ));
            }
        }
        Sp4C7c => {
            a.g_phi = "S(O3 x O2) ~ SO3 x O2".into();
            a.s_rank = 1;
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap().clone();
            let shifted = two_branch(p)?;
            for i in 1..=2 {
                let t = if shifted {
                    c.group().nu_frac(1, 2).to_string()
                } else {
                    "1".to_string()
                };
                a.members.push(ps(format!("{t} x| T^{i}_{{{c}}}")));
            }
        }
        Sp4C7d => {
            a.g_phi = "SO3 x SO2".into();
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap().clone();
            if two_branch(p)? {
                a.members.push(ps(format!("{c} x {} x| 1", c.group().nu_frac(1, 2))));
            } else {
                a.members.push(ps(format!("{c} x 1 x| 1")));
            }
        }
        Sp4C7e => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "S(O2 x O2 x mu2) ~ O2^2".into();
            a.s_rank = 2;
            let mut nt: Vec<SmoothChar> = vec![];
            for c in &chars {
                if !c.is_trivial() && !nt.contains(c) {
                    nt.push(c.clone());
                }
            }
            nt.sort_by_key(|c| c.to_string());
            let (c1, c2) = (&nt[0], &nt[1]);
            for i in 1..=2 {
                for j in 1..=2 {
                    a.members.push(ps(format!("theta_{i}{j}({c1}, {c2})")));
                }
            }
        }
        Sp4C7f => {
            a.g_phi = "GL2".into();
            // Pick the representative with nonnegative exponent.
            let mut c = chars.iter().find(|c| !c.is_trivial()).unwrap().clone();
            if c.e_of() < BigRational::zero() {
                c = c.inv();
            }
            if !two_branch(p)? {
                a.members.push(ps(format!("{c} x {c} x| 1")));
            } else {
                let lg = c.group().clone();
                let e = c.e_of();
                let u = c.unitary_part();
                if c == lg.nu_frac(3, 2) {
                    a.tempered = false;
                    a.members.push(ps("J(nu^{3/2} St_GL2; 1)".into()));
                } else if c == lg.nu_frac(1, 2) {
                    a.tempered = false;
                    a.members.push(ps("J(nu^{1/2} St_GL2; 1)".into()));
                    a.note = Some("member taken as the Langlands quotient of the length-two St half".into());
                } else if e == half(1, 2) && order2(&u) {
                    a.tempered = false;
                    a.members.push(ps(format!("J({} St_GL2; 1)", u.times_nu_frac(1, 2))));
                } else {
                    a.tempered = e.is_zero();
                    a.members.push(ps(format!("{c} St_GL2 x| 1")));
                }
            }
        }
        Sp4C7j => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C* x C*".into();
            let (c1, c2) = split_five_chars(&chars)?;
            a.members.push(ps(format!("{c1} x {c2} x| 1")));
            a.note = Some("irreducible full principal series".into());
        }
        _ => unreachable!("GSp4 case in Sp4 analysis"),
    }
    Ok(a)
}

fn analyze_gsp4(p: &ParamDescriptor, case: GaloisCase) -> Result<Analysis> {
    use GaloisCase::*;
    let chars = p.chars();
    let irrs = p.irrs();
    let xi = p.xi.clone().unwrap();
    let unitary = all_chars_unitary(p);
    let mut a = Analysis {
        case,
        g_phi: String::new(),
        s_rank: 0,
        finite_mod_center: false,
        tempered: unitary,
        discrete: false,
        members: vec![],
        note: None,
    };
    match case {
        GSp4C1 => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C*".into();
            a.finite_mod_center = true;
            a.discrete = true;
            a.members.push(sc(format!("pi({})", irrs[0].0.name)));
        }
        GSp4C2a => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "GO2 ~ (C*)^2 : mu2".into();
            a.s_rank = 1;
            let v = &irrs[0].0.name;
            a.members.push(inter(format!("(1 x| pi({v})^vee)^+"), LeviLabel::Klingen));
            a.members.push(inter(format!("(1 x| pi({v})^vee)^-"), LeviLabel::Klingen));
        }
        GSp4C2b => {
            a.g_phi = "GL2".into();
            let v = &irrs[0].0.name;
            let beta = xi.e_of();
            if !two_branch(p)? {
                if beta != half(1, 1) && beta != half(-1, 1) {
                    a.tempered = beta.is_zero();
                    a.members.push(inter(format!("pi({v}) x| {}", xi.inv()), LeviLabel::Siegel));
                } else {
                    a.tempered = true;
                    a.members
                        .push(inter(format!("temp(pi({v}) x| {})", xi.inv()), LeviLabel::Siegel));
                }
            } else if beta != BigRational::zero() && beta != half(-2, 1) {
                a.tempered = true;
                a.members.push(inter(
                    format!("temp(nu^{{1/2}} pi({v}) x| {})", xi.inv().times_nu_frac(-1, 1)),
                    LeviLabel::Siegel,
                ));
            } else {
                return Err(EngineError::Unsupported(
                    "gsp4-2b with nontrivial sl2 at shift 0 or -2 is not specified".into(),
                ));
            }
        }
        GSp4C2c => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C* x C*".into();
            let v = &irrs[0].0.name;
            a.members.push(inter(format!("(1 x| pi({v})^vee)^+"), LeviLabel::Klingen));
            a.note = Some(
                "singleton as printed; the induced 1 x| pi^vee is reducible for self-dual data"
                    .into(),
            );
        }
        GSp4C3a => {
            a.g_phi = "C* x SL2".into();
            let v = irrs[0].0;
            let c1 = &chars[0];
            if !two_branch(p)? {
                a.members.push(inter(
                    format!("({c1} pi({})^vee) x| {}", v.name, c1.inv()),
                    LeviLabel::Siegel,
                ));
                a.tempered = true;
            } else {
                a.s_rank = 1;
                a.finite_mod_center = true;
                a.discrete = true;
                a.tempered = true;
                let twist = c1.inv().times_nu_frac(-1, 2);
                a.members.push(inter(
                    format!("delta(nu^{{1/2}} pi({}) x| {twist})", v.name),
                    LeviLabel::Siegel,
                ));
                if v.depth_zero {
                    a.members.push(sc_ref(
                        format!("pi_(S, theta (x) theta (x) {})", c1.inv()),
                        "pi_S_theta_theta_chi",
                    ));
                } else {
                    a.members.push(sc(format!("pi(pi({})) (x) {}", v.name, c1.inv())));
                }
            }
        }
        GSp4C3b => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "C* x C*".into();
            let v = &irrs[0].0.name;
            let c1 = &chars[0];
            let beta = chars[0].mul(&chars[1].inv())?.e_of();
            if beta == half(1, 1) || beta == half(-1, 1) {
                a.tempered = false;
                a.members.push(inter(
                    format!("J({c1} pi({v})^vee; {})", c1.inv()),
                    LeviLabel::Siegel,
                ));
            } else {
                a.tempered = beta.is_zero() && unitary;
                a.members
                    .push(inter(format!("({c1} pi({v})^vee) x| {}", c1.inv()), LeviLabel::Siegel));
            }
        }
        GSp4C4a => {
            a.g_phi = "GSp4".into();
            let c1 = &chars[0];
            let t = c1.inv();
            a.tempered = true;
            match p.sl2.partition.as_slice() {
                [4] => {
                    a.finite_mod_center = true;
                    a.discrete = true;
                    a.members.push(ps(twist_label(&t, "St_GSp4")));
                }
                [2, 2] => {
                    a.s_rank = 1;
                    let th = t.times_nu_frac(-1, 2);
                    a.members.push(ps(format!("tau(S, {th})")));
                    a.members.push(ps(format!("tau(T, {th})")));
                }
                [2, 1, 1] => {
                    a.members.push(ps(format!("1 St_GL2 x| {t}")));
                }
                parts if parts.iter().all(|&x| x == 1) => {
                    a.members.push(ps(format!("1 x 1 x| {t}")));
                }
                _ => return Err(malformed("gsp4-4a: sl2 must be [4], [2,2], [2,1,1] or trivial")),
            }
        }
        GSp4C4b => {
            a.g_phi = "GSp_{2,2}".into();
            // The two doubled characters, c1 < c3 by label.
            let mut vals: Vec<SmoothChar> = vec![];
            for c in &chars {
                if !vals.contains(c) {
                    vals.push(c.clone());
                }
            }
            vals.sort_by_key(|c| c.to_string());
            let (c1, c3) = (&vals[0], &vals[1]);
            let theta = c1.mul(&c3.inv())?;
            a.tempered = true;
            let regular = p.sl2.partition == [2, 2]
                || (p.sl2.partition == [2] && p.sl2.embedding == Some(Sl2Embedding::Diagonal));
            if p.sl2.is_trivial() {
                let t = c1.inv().mul(c3)?;
                a.members.push(ps(format!("{t} x {t} x| {}", c1.inv())));
            } else if p.sl2.partition == [2]
                && p.sl2.embedding == Some(Sl2Embedding::FirstFactor)
            {
                a.members.push(ps(format!("{theta} St_GL2 x| {}", c1.inv())));
                a.note = Some("tempered Steinberg constituent of the nu-shifted series".into());
            } else if p.sl2.partition == [2]
                && p.sl2.embedding == Some(Sl2Embedding::SecondFactor)
            {
                a.members.push(ps(format!("{theta} St_GL2 x| {}", c3.inv())));
            } else if regular {
                a.s_rank = 1;
                a.finite_mod_center = true;
                a.discrete = true;
                let twist = c1.inv().times_nu_frac(-1, 2);
                let delta_label =
                    format!("delta([{theta}, {}], {twist})", theta.times_nu_frac(1, 1));
                let mut delta = ps(delta_label.clone());
                let partner = if theta.is_unramified() {
                    let mut m = sc_ref(
                        format!("pi_delta(theta10 (x) {})", c1.inv()),
                        "pi_beta_theta10_chi",
                    );
                    m.restriction = None;
                    m
                } else {
                    sc_ref(format!("pi_alpha({theta}; {})", c1.inv()), "pi_alpha_eta2_chi")
                };
                let mut partner = partner;
                if c1.inv().is_trivial() {
                    delta.restriction =
                        Some(vec![format!("pi_1({theta})"), format!("pi_2({theta})")]);
                    partner.restriction = if theta.is_unramified() {
                        Some(vec!["pi_beta(theta10)".into(), "pi_gamma(theta10)".into()])
                    } else {
                        Some(vec![
                            format!("pi_alpha^+({theta})"),
                            format!("pi_alpha^-({theta})"),
                        ])
                    };
                }
                a.members.push(delta);
                a.members.push(partner);
            } else {
                return Err(malformed(
                    "gsp4-4b: sl2 must be trivial, one factor, or regular ([2,2] / [2] diagonal)",
                ));
            }
        }
        GSp4C4c => {
            a.g_phi = "GL2 x GSp0 (Levi)".into();
            let mut vals: Vec<SmoothChar> = vec![];
            for c in &chars {
                if !vals.contains(c) {
                    vals.push(c.clone());
                }
            }
            vals.sort_by_key(|c| c.to_string());
            let (c1, c3) = (&vals[0], &vals[1]);
            let lg = c1.group().clone();
            let t = c3.inv().mul(c1)?;
            if !two_branch(p)? {
                a.tempered = t.e_of().is_zero() && unitary;
                a.members.push(ps(format!("{t} x 1 x| {}", c1.inv())));
            } else {
                let nu1 = lg.nu_frac(1, 1);
                let nu2 = lg.nu_frac(2, 1);
                if t == nu1 || t == nu1.inv() {
                    a.tempered = false;
                    a.members.push(ps(format!(
                        "J({} St_GL2; {})",
                        lg.nu_frac(3, 2),
                        c1.inv().times_nu_frac(-1, 2)
                    )));
                } else if t == nu2 || t == nu2.inv() {
                    a.tempered = false;
                    a.members.push(ps(format!("J({nu2}; {} St_GSp2)", c1.inv())));
                } else {
                    a.tempered = t.e_of().is_zero();
                    a.members.push(ps(format!("{t} x| {} St_GSp2", c1.inv())));
                }
            }
        }
        GSp4C4d => {
            a.g_phi = "GL1 x GSp2 (Levi)".into();
            if !p.sl2.is_trivial() {
                return Err(EngineError::Unsupported(
                    "gsp4-4d with nontrivial sl2 is not specified".into(),
                ));
            }
            let mut vals: Vec<(SmoothChar, u32)> = vec![];
            for c in &chars {
                if let Some(e) = vals.iter_mut().find(|(d, _)| d == c) {
                    e.1 += 1;
                } else {
                    vals.push((c.clone(), 1));
                }
            }
            let c1 = vals.iter().find(|(_, m)| *m == 2).unwrap().0.clone();
            let c3 = vals.iter().find(|(_, m)| *m == 1).unwrap().0.clone();
            let lg = c1.group().clone();
            let t = c1.inv().mul(&c3)?;
            let nu1 = lg.nu_frac(1, 1);
            if t.square() == nu1 || t.square() == nu1.inv() {
                let s = if t.square() == nu1 {
                    t.times_nu_frac(-1, 2)
                } else {
                    t.times_nu_frac(1, 2)
                };
                a.tempered = false;
                a.members.push(ps(format!("{s} 1_GL2 x| {}", c1.inv())));
            } else if t == nu1 || t == nu1.inv() {
                a.tempered = false;
                a.members.push(ps(format!(
                    "{nu1} x| {} 1_GSp2",
                    c1.inv().times_nu_frac(-1, 2)
                )));
            } else {
                a.tempered = t.e_of().is_zero() && unitary;
                a.members.push(ps(format!("{t} x {} x| {}", t.inv(), c1.inv())));
            }
        }
        GSp4C4e => {
            need_trivial_sl2(p, case)?;
            a.g_phi = "T^vee".into();
            let (c1, c2, c3) = (&chars[0], &chars[1], &chars[2]);
            let lg = c1.group().clone();
            let nu1 = lg.nu_frac(1, 1);
            let aa = c1.mul(&c3.inv())?;
            let bb = c1.mul(&c2.inv())?;
            let mut has_nu_ratio = false;
            for (i, x) in chars.iter().enumerate() {
                for (j, y) in chars.iter().enumerate() {
                    if i != j {
                        let r = x.mul(&y.inv())?;
                        if r == nu1 || r == nu1.inv() {
                            has_nu_ratio = true;
                        }
                    }
                }
            }
            if !has_nu_ratio {
                a.tempered = unitary;
                a.members.push(ps(format!("{aa} x {bb} x| {}", c1.inv())));
            } else if bb == nu1
                && aa != lg.one()
                && aa != nu1
                && aa != nu1.inv()
                && aa != lg.nu_frac(2, 1)
                && aa != lg.nu_frac(-2, 1)
            {
                a.tempered = false;
                a.members
                    .push(ps(format!("{aa} x| {} 1_GSp2", c1.inv().times_nu_frac(1, 2))));
            } else if bb == nu1 && c2.mul(&c3.inv())? == nu1 {
                a.tempered = false;
                a.members.push(ps(format!("{} 1_GSp4", c1.inv().times_nu_frac(3, 2))));
            } else {
                return Err(EngineError::Unsupported(
                    "gsp4-4e: this nu-configuration is not listed; order the characters as in \
                     the covered bullets"
                        .into(),
                ));
            }
        }
        _ => unreachable!("Sp4 case in GSp4 analysis"),
    }
    Ok(a)
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// 𝒢_φ, S_φ and friends.
pub fn centralizer(p: &ParamDescriptor) -> Result<CentralizerReport> {
    let a = analyze(p)?;
    let s_phi = match a.s_rank {
        0 => "1".to_string(),
        1 => "mu2".to_string(),
        r => format!("mu2^{r}"),
    };
    Ok(CentralizerReport {
        case: a.case,
        g_phi: a.g_phi,
        a_phi: s_phi.clone(),
        s_phi,
        s_rank: a.s_rank,
        irr_count: 1 << a.s_rank,
        finite_mod_center: a.finite_mod_center,
    })
}

/// The full L-packet.
pub fn assemble_packet(p: &ParamDescriptor) -> Result<PacketDescriptor> {
    let a = analyze(p)?;
    let enh = enhancement_labels(a.s_rank);
    if a.members.len() != enh.len() {
        return Err(EngineError::InvalidDatum(format!(
            "{}: assembled {} members for rank {}",
            a.case,
            a.members.len(),
            a.s_rank
        )));
    }
    let members: Vec<PacketMember> = a
        .members
        .into_iter()
        .zip(enh)
        .enumerate()
        .map(|(i, (m, e))| PacketMember {
            kind: m.kind,
            label: m.label,
            enhancement: e,
            generic: a.tempered && i == 0,
            support: m.support,
            sc_ref: m.sc_ref,
            restriction: m.restriction,
        })
        .collect();
    let support = members[0].support;
    Ok(PacketDescriptor {
        group: p.group,
        case: a.case,
        support_dual: dual_levi_label(p.group, support).to_string(),
        support_group: support.name(p.group).to_string(),
        members,
        s_rank: a.s_rank,
        tempered: a.tempered,
        discrete: a.discrete,
        note: a.note,
    })
}

/// Cuspidal support of one enhanced parameter.
#[derive(Debug, Clone, Serialize)]
pub struct SupportReport {
    pub dual_levi: String,
    pub group_levi: LeviLabel,
    /// The packet member realizing this enhancement.
    pub sketch: String,
}

pub fn cuspidal_support(p: &ParamDescriptor, rho: &str) -> Result<SupportReport> {
    let packet = assemble_packet(p)?;
    let member = packet
        .members
        .iter()
        .find(|m| m.enhancement == rho)
        .ok_or_else(|| {
            EngineError::InvalidEnhancement(format!(
                "{rho} is not an enhancement of a rank-{} component group",
                packet.s_rank
            ))
        })?;
    Ok(SupportReport {
        dual_levi: dual_levi_label(p.group, member.support).to_string(),
        group_levi: member.support,
        sketch: member.label.clone(),
    })
}

/// One entry of the infinitesimal parameter: a summand tag and its ν-shift.
#[derive(Debug, Clone, Serialize)]
pub struct InfEntry {
    pub tag: String,
    pub shift: BigRational,
}

fn inf(tag: impl Into<String>, n: i64, d: i64) -> InfEntry {
    InfEntry { tag: tag.into(), shift: half(n, d) }
}

/// Ladder of shifts (p-1)/2, (p-3)/2, …, -(p-1)/2 for a part of size p.
fn ladder(tag: &str, part: u32, out: &mut Vec<InfEntry>) {
    let p = part as i64;
    for k in 0..p {
        out.push(inf(tag, p - 1 - 2 * k, 2));
    }
}

/// The infinitesimal parameter λ_φ as (tag, ν-shift) entries.
pub fn infinitesimal(p: &ParamDescriptor) -> Result<Vec<InfEntry>> {
    use GaloisCase::*;
    let case = classify(p)?;
    let chars = p.chars();
    let irrs = p.irrs();
    let mut out = vec![];
    if p.sl2.is_trivial() {
        for s in &p.summands {
            let tag = match &s.kind {
                SummandKind::Char(c) => c.to_string(),
                SummandKind::Irr(v) => v.name.clone(),
            };
            for _ in 0..s.mult {
                out.push(InfEntry { tag: tag.clone(), shift: BigRational::zero() });
            }
        }
        return Ok(out);
    }
    match case {
        Sp4C7a | GSp4C4a => {
            // λ = χ1 · ladder of the declared partition, padded with zeros.
            let tag = chars[0].to_string();
            let mut total = 0;
            for &part in &p.sl2.partition {
                ladder(&tag, part, &mut out);
                total += part;
            }
            for _ in total..chars.len() as u32 {
                out.push(InfEntry { tag: tag.clone(), shift: BigRational::zero() });
            }
        }
        Sp4C7b => {
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap().to_string();
            match p.sl2.embedding {
                Some(Sl2Embedding::Diagonal) => {
                    // Conjugation action on M2: shifts (1, 0, 0, -1).
                    out.push(inf(&c, 2, 2));
                    out.push(inf(&c, 0, 2));
                    out.push(inf(&c, 0, 2));
                    out.push(inf(&c, -2, 2));
                    out.push(inf("1", 0, 2));
                }
                _ => {
                    out.push(inf(&c, 1, 2));
                    out.push(inf(&c, -1, 2));
                    out.push(inf(&c, 0, 2));
                    out.push(inf(&c, 0, 2));
                    out.push(inf("1", 0, 2));
                }
            }
        }
        Sp4C5b => {
            let v = &irrs[0].0.name;
            out.push(inf(v, 1, 2));
            out.push(inf(v, -1, 2));
            out.push(inf("1", 0, 2));
        }
        Sp4C6a => {
            let v = &irrs[0].0.name;
            let c = chars[0].to_string();
            out.push(inf(v, 0, 2));
            out.push(inf(&c, 2, 2));
            out.push(inf(&c, 0, 2));
            out.push(inf(&c, -2, 2));
        }
        Sp4C7c => {
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap().to_string();
            out.push(inf(&c, 0, 2));
            out.push(inf(&c, 0, 2));
            out.push(inf("1", 1, 2));
            out.push(inf("1", -1, 2));
            out.push(inf("1", 0, 2));
        }
        Sp4C7d => {
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap().to_string();
            out.push(inf(&c, 0, 2));
            out.push(inf(&c, 0, 2));
            out.push(inf("1", 1, 2));
            out.push(inf("1", -1, 2));
            out.push(inf("1", 0, 2));
        }
        Sp4C7f => {
            let c = chars.iter().find(|c| !c.is_trivial()).unwrap();
            out.push(inf(c.to_string(), 1, 2));
            out.push(inf(c.to_string(), -1, 2));
            out.push(inf(c.inv().to_string(), 1, 2));
            out.push(inf(c.inv().to_string(), -1, 2));
            out.push(inf("1", 0, 2));
        }
        GSp4C2b => {
            let v = &irrs[0].0.name;
            out.push(inf(v, 1, 2));
            out.push(inf(v, -1, 2));
        }
        GSp4C3a => {
            let v = &irrs[0].0.name;
            let c = chars[0].to_string();
            out.push(inf(&c, 1, 2));
            out.push(inf(v, 0, 2));
            out.push(inf(&c, -1, 2));
        }
        GSp4C4b => {
            let mut vals: Vec<SmoothChar> = vec![];
            for c in &chars {
                if !vals.contains(c) {
                    vals.push(c.clone());
                }
            }
            vals.sort_by_key(|c| c.to_string());
            let (c1, c3) = (vals[0].to_string(), vals[1].to_string());
            match p.sl2.embedding {
                Some(Sl2Embedding::FirstFactor) => {
                    out.push(inf(&c1, 1, 2));
                    out.push(inf(&c1, -1, 2));
                    out.push(inf(&c3, 0, 2));
                    out.push(inf(&c3, 0, 2));
                }
                Some(Sl2Embedding::SecondFactor) => {
                    out.push(inf(&c1, 0, 2));
                    out.push(inf(&c1, 0, 2));
                    out.push(inf(&c3, 1, 2));
                    out.push(inf(&c3, -1, 2));
                }
                _ => {
                    out.push(inf(&c1, 1, 2));
                    out.push(inf(&c3, 1, 2));
                    out.push(inf(&c3, -1, 2));
                    out.push(inf(&c1, -1, 2));
                }
            }
        }
        GSp4C4c => {
            let mut vals: Vec<SmoothChar> = vec![];
            for c in &chars {
                if !vals.contains(c) {
                    vals.push(c.clone());
                }
            }
            vals.sort_by_key(|c| c.to_string());
            out.push(inf(vals[0].to_string(), 1, 2));
            out.push(inf(vals[0].to_string(), -1, 2));
            out.push(inf(vals[1].to_string(), 0, 2));
            out.push(inf(vals[1].to_string(), 0, 2));
        }
        _ => {
            return Err(EngineError::Unsupported(format!(
                "{case}: no infinitesimal-parameter table for this sl2 shape"
            )))
        }
    }
    Ok(out)
}

/// Restrict a GSp4 packet to Sp4 via the declared restriction constituents.
pub fn sp4_from_gsp4(packet: &PacketDescriptor) -> Result<PacketDescriptor> {
    if packet.group != Group::GSp4 {
        return Err(EngineError::InvalidOperand("expected a GSp4 packet".into()));
    }
    let mut members: Vec<PacketMember> = vec![];
    for m in &packet.members {
        match &m.restriction {
            Some(labels) => {
                for (i, label) in labels.iter().enumerate() {
                    members.push(PacketMember {
                        kind: m.kind,
                        label: label.clone(),
                        enhancement: String::new(),
                        generic: false,
                        support: m.support,
                        sc_ref: None,
                        restriction: None,
                    });
                    let _ = i;
                }
            }
            None => {
                if packet.members.len() == 1 {
                    members.push(PacketMember { restriction: None, ..m.clone() });
                } else {
                    return Err(EngineError::IncompleteData(format!(
                        "member {} has no declared restriction to Sp4",
                        m.label
                    )));
                }
            }
        }
    }
    if !members.len().is_power_of_two() {
        return Err(EngineError::InvalidDatum(format!(
            "restricted packet size {} is not a power of two",
            members.len()
        )));
    }
    let s_rank = members.len().trailing_zeros();
    let enh = enhancement_labels(s_rank);
    for (m, e) in members.iter_mut().zip(enh) {
        m.enhancement = e;
    }
    if packet.tempered {
        if let Some(first) = members.first_mut() {
            first.generic = true;
        }
    }
    let case = match packet.case {
        GaloisCase::GSp4C4b => GaloisCase::Sp4C7b,
        GaloisCase::GSp4C3a => GaloisCase::Sp4C5b,
        GaloisCase::GSp4C2b => GaloisCase::Sp4C5d,
        GaloisCase::GSp4C1 => GaloisCase::Sp4C1,
        other => other,
    };
    let support = members[0].support;
    Ok(PacketDescriptor {
        group: Group::Sp4,
        case,
        support_dual: dual_levi_label(Group::Sp4, support).to_string(),
        support_group: support.name(Group::Sp4).to_string(),
        members,
        s_rank,
        tempered: packet.tempered,
        discrete: packet.discrete,
        note: Some("restricted from a GSp4 packet".into()),
    })
}
