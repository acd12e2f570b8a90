//! Root data, Weyl group, nilpotent orbits, Levi subgroups, self-duality
//! isomorphism and parahoric reductive quotients for Sp4 and GSp4.
//!
//! Everything here is exact integer combinatorics on rank-2/rank-3 lattices.
//! Weyl elements are enumerated by brute force from the simple reflections;
//! conjugacy classes and lattice-torsion data are computed, not transcribed.

use crate::error::{EngineError, Result};
use serde::Serialize;
use std::fmt;

/// The two ambient groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    Sp4,
    GSp4,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Sp4 => write!(f, "Sp4"),
            Group::GSp4 => write!(f, "GSp4"),
        }
    }
}

impl Group {
    pub fn parse(s: &str) -> Result<Group> {
        match s {
            "Sp4" | "sp4" => Ok(Group::Sp4),
            "GSp4" | "gsp4" => Ok(Group::GSp4),
            other => Err(EngineError::InvalidOperand(format!("unknown group {other}"))),
        }
    }
}

/// A root datum: character/cocharacter lattices with bases, paired roots and
/// coroots, and the two simple roots.
#[derive(Debug, Clone, Serialize)]
pub struct RootDatum {
    pub group: Group,
    /// Character-lattice basis labels.
    pub basis: Vec<&'static str>,
    /// Cocharacter-lattice basis labels.
    pub cobasis: Vec<&'static str>,
    /// Roots as vectors in the character lattice.
    pub roots: Vec<Vec<i64>>,
    /// Coroots, parallel to `roots`.
    pub coroots: Vec<Vec<i64>>,
    /// Indices into `roots` of the simple roots (short α, long β).
    pub simple: [usize; 2],
    /// Pairing matrix ⟨basis_i, cobasis_j⟩.
    pub pairing: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// ⟨v, u⟩ for v in the character lattice, u in the cocharacter lattice.
    pub fn pair(&self, v: &[i64], u: &[i64]) -> i64 {
        let mut s = 0;
        for (i, vi) in v.iter().enumerate() {
            for (j, uj) in u.iter().enumerate() {
                s += vi * self.pairing[i][j] * uj;
            }
        }
        s
    }

    /// Reflection in root #k acting on the character lattice.
    pub fn reflect_char(&self, k: usize, v: &[i64]) -> Vec<i64> {
        let c = self.pair(v, &self.coroots[k]);
        v.iter().zip(&self.roots[k]).map(|(vi, ai)| vi - c * ai).collect()
    }

    /// Reflection in root #k acting on the cocharacter lattice.
    pub fn reflect_cochar(&self, k: usize, u: &[i64]) -> Vec<i64> {
        let c = self.pair(&self.roots[k], u);
        u.iter().zip(&self.coroots[k]).map(|(ui, ai)| ui - c * ai).collect()
    }

    pub fn simple_alpha(&self) -> &Vec<i64> {
        &self.roots[self.simple[0]]
    }

    pub fn simple_beta(&self) -> &Vec<i64> {
        &self.roots[self.simple[1]]
    }
}

/// Build the explicit root datum.
///
/// Sp4: X* = Z{ε1, ε2}, roots ±ε1±ε2 (short), ±2ε1, ±2ε2 (long), simple
/// roots α = ε1−ε2, β = 2ε2.
///
/// GSp4: X* = Z{ε0, ε1, ε2} (ε0 the similitude character), roots
/// ±(ε1−ε2), ±(ε1+ε2−ε0) (short), ±(2ε1−ε0), ±(2ε2−ε0) (long), simple
/// roots α = ε1−ε2, β = 2ε2−ε0.
pub fn build_root_datum(group: Group) -> RootDatum {
    match group {
        Group::Sp4 => {
            let roots = vec![
                vec![1, -1],  // α
                vec![0, 2],   // β
                vec![1, 1],   // α + β
                vec![2, 0],   // 2α + β
                vec![-1, 1],
                vec![0, -2],
                vec![-1, -1],
                vec![-2, 0],
            ];
            let coroots = vec![
                vec![1, -1],
                vec![0, 1],
                vec![1, 1],
                vec![1, 0],
                vec![-1, 1],
                vec![0, -1],
                vec![-1, -1],
                vec![-1, 0],
            ];
            RootDatum {
                group,
                basis: vec!["eps1", "eps2"],
                cobasis: vec!["eps1v", "eps2v"],
                roots,
                coroots,
                simple: [0, 1],
                pairing: vec![vec![1, 0], vec![0, 1]],
            }
        }
        Group::GSp4 => {
            let roots = vec![
                vec![0, 1, -1],  // α = ε1 − ε2
                vec![-1, 0, 2],  // β = 2ε2 − ε0
                vec![-1, 1, 1],  // α + β = ε1 + ε2 − ε0
                vec![-1, 2, 0],  // 2α + β = 2ε1 − ε0
                vec![0, -1, 1],
                vec![1, 0, -2],
                vec![1, -1, -1],
                vec![1, -2, 0],
            ];
            let coroots = vec![
                vec![0, 1, -1],
                vec![0, 0, 1],
                vec![0, 1, 1],
                vec![0, 1, 0],
                vec![0, -1, 1],
                vec![0, 0, -1],
                vec![0, -1, -1],
                vec![0, -1, 0],
            ];
            RootDatum {
                group,
                basis: vec!["eps0", "eps1", "eps2"],
                cobasis: vec!["eps0v", "eps1v", "eps2v"],
                roots,
                coroots,
                simple: [0, 1],
                pairing: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
            }
        }
    }
}

/// The self-duality isomorphism X*(GSp4) → X_*(GSp4):
/// ε0 ↦ −2ε0∨ − ε1∨ − ε2∨, ε1 ↦ −ε0∨, ε2 ↦ −ε0∨ − ε2∨.
pub fn self_duality_map(v: &[i64]) -> Result<Vec<i64>> {
    if v.len() != 3 {
        return Err(EngineError::InvalidOperand(
            "self-duality map needs a rank-3 GSp4 lattice vector".into(),
        ));
    }
    let (a0, a1, a2) = (v[0], v[1], v[2]);
    Ok(vec![-2 * a0 - a1 - a2, -a0, -a0 - a2])
}

/// Its inverse X_*(GSp4) → X*(GSp4):
/// ε0∨ ↦ −ε1, ε1∨ ↦ ε1 + ε2 − ε0, ε2∨ ↦ ε1 − ε2.
pub fn self_duality_inverse(u: &[i64]) -> Result<Vec<i64>> {
    if u.len() != 3 {
        return Err(EngineError::InvalidOperand(
            "self-duality inverse needs a rank-3 GSp4 lattice vector".into(),
        ));
    }
    let (b0, b1, b2) = (u[0], u[1], u[2]);
    Ok(vec![-b1, -b0 + b1 + b2, b1 - b2])
}

/// A Weyl element, carried as a signed permutation of {ε1, ε2} together with
/// its matrix on the rank-3 GSp4 cocharacter lattice (used for torsion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Images: `eps[i] = (j, s)` means w(ε_{i+1}) = s · ε_{j+1} (s = ±1).
    pub eps: [(usize, i64); 2],
    /// Matrix of w on X_*(T_GSp4) = Z³, columns = images of basis vectors.
    pub cochar: [[i64; 3]; 3],
    /// Reduced word in the simple reflections ("1" for the identity).
    pub word: String,
}

impl WeylElement {
    fn identity() -> Self {
        WeylElement {
            eps: [(0, 1), (1, 1)],
            cochar: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            word: "1".into(),
        }
    }

    fn compose(&self, rhs: &WeylElement) -> WeylElement {
        // (self ∘ rhs): apply rhs first.
        let mut eps = [(0usize, 0i64); 2];
        for i in 0..2 {
            let (j, s) = rhs.eps[i];
            let (k, t) = self.eps[j];
            eps[i] = (k, s * t);
        }
        let mut m = [[0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    m[i][j] += self.cochar[i][k] * rhs.cochar[k][j];
                }
            }
        }
        WeylElement { eps, cochar: m, word: String::new() }
    }

    /// Signed-permutation cycle type, e.g. "(1)(1)", "(1)(-1)", "(2)", "(-2)".
    pub fn cycle_type(&self) -> String {
        let [(j1, s1), (j2, s2)] = self.eps;
        if j1 == 0 {
            // Two fixed points up to sign.
            let mut signs = [s1, s2];
            signs.sort();
            match signs {
                [1, 1] => "(1)(1)".into(),
                [-1, 1] => "(1)(-1)".into(),
                [-1, -1] => "(-1)(-1)".into(),
                _ => unreachable!(),
            }
        } else {
            debug_assert_eq!(j2, 0);
            if s1 * s2 == 1 {
                "(2)".into()
            } else {
                "(-2)".into()
            }
        }
    }

    /// Action of w on a pair (c1, c2) indexed by (ε1, ε2): returns the
    /// permutation-with-inversion recipe `out[i] = (source index, invert?)`.
    pub fn char_pair_action(&self) -> [(usize, bool); 2] {
        // w sends ε_{i} to s ε_{j}; on unramified-twist data the induced map
        // on (χ1, χ2) reads the source at the preimage with inversion for −.
        let mut out = [(0usize, false); 2];
        for i in 0..2 {
            let (j, s) = self.eps[i];
            out[j] = (i, s < 0);
        }
        out
    }
}

/// Enumerate the Weyl group (8 elements) by closure from the two simple
/// reflections, tracking both incarnations.
pub fn weyl_elements() -> Vec<WeylElement> {
    let gsp4 = build_root_datum(Group::GSp4);
    let cochar_of = |k: usize| {
        let mut m = [[0i64; 3]; 3];
        for j in 0..3 {
            let mut e = [0i64; 3];
            e[j] = 1;
            let img = gsp4.reflect_cochar(k, &e);
            for i in 0..3 {
                m[i][j] = img[i];
            }
        }
        m
    };
    let s_alpha = WeylElement {
        eps: [(1, 1), (0, 1)], // swap ε1, ε2
        cochar: cochar_of(0),
        word: "a".into(),
    };
    let s_beta = WeylElement {
        eps: [(0, 1), (1, -1)], // ε2 ↦ −ε2
        cochar: cochar_of(1),
        word: "b".into(),
    };
    let mut elems = vec![WeylElement::identity()];
    let mut queue = vec![WeylElement::identity()];
    while let Some(w) = queue.pop() {
        for (g, tag) in [(&s_alpha, "a"), (&s_beta, "b")] {
            let mut next = g.compose(&w);
            next.word = if w.word == "1" { tag.into() } else { format!("{tag}{}", w.word) };
            if !elems.iter().any(|e| e.eps == next.eps) {
                elems.push(next.clone());
                queue.push(next);
            }
        }
    }
    elems.sort_by_key(|e| (e.word.len(), e.word.clone()));
    elems
}

/// A Weyl conjugacy class with the lattice-torsion datum used by the
/// stability bookkeeping.
#[derive(Debug, Clone, Serialize)]
pub struct WeylClass {
    pub name: String,
    pub cycle_type: String,
    pub representative: String,
    pub size: usize,
    /// Rank of tor[X_*(T)/(1−w)X_*(T)] as an elementary-abelian 2-group
    /// (computed on the rank-3 GSp4 cocharacter lattice).
    pub torsion_rank: u32,
}

fn class_name(cycle_type: &str) -> &'static str {
    match cycle_type {
        "(1)(1)" => "e",
        "(1)(-1)" => "A1",
        "(2)" => "A1tilde",
        "(-1)(-1)" => "A1xA1",
        "(-2)" => "C2",
        _ => unreachable!(),
    }
}

/// Smith-normal-form elementary divisors of a 3×3 integer matrix.
fn smith_divisors(mut m: [[i64; 3]; 3]) -> [i64; 3] {
    fn reduce(m: &mut [[i64; 3]; 3], k: usize) {
        loop {
            // Find a nonzero pivot with minimal absolute value.
            let mut best: Option<(usize, usize)> = None;
            for i in k..3 {
                for j in k..3 {
                    if m[i][j] != 0
                        && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { return };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..3 {
                let f = m[i][k] / m[k][k];
                if f != 0 {
                    for j in 0..3 {
                        m[i][j] -= f * m[k][j];
                    }
                }
                if m[i][k] != 0 {
                    clean = false;
                }
            }
            for j in k + 1..3 {
                let f = m[k][j] / m[k][k];
                if f != 0 {
                    for row in m.iter_mut() {
                        row[j] -= f * row[k];
                    }
                }
                if m[k][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                return;
            }
        }
    }
    reduce(&mut m, 0);
    reduce(&mut m, 1);
    reduce(&mut m, 2);
    let mut d = [m[0][0].abs(), m[1][1].abs(), m[2][2].abs()];
    // Enforce divisibility d1 | d2 | d3 (sufficient for our small cases).
    for i in 0..2 {
        for j in i + 1..3 {
            if d[i] != 0 && d[j] != 0 && d[j] % d[i] != 0 {
                let g = num_integer::gcd(d[i], d[j]);
                let l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d.sort();
    d
}

/// The five Weyl conjugacy classes, from brute-force enumeration.
pub fn weyl_classes(_group: Group) -> Vec<WeylClass> {
    let elems = weyl_elements();
    let mut classes: Vec<(WeylElement, Vec<usize>)> = vec![];
    let mut assigned = vec![false; elems.len()];
    for (i, w) in elems.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut members = vec![];
        for g in &elems {
            // g w g^{-1}; compute via eps composition only (faithful here).
            let gw = g.compose(w);
            let ginv = invert(g);
            let conj = gw.compose(&ginv);
            if let Some(j) = elems.iter().position(|e| e.eps == conj.eps) {
                if !members.contains(&j) {
                    members.push(j);
                }
            }
        }
        for &j in &members {
            assigned[j] = true;
        }
        classes.push((w.clone(), members));
    }
    let mut out: Vec<WeylClass> = classes
        .into_iter()
        .map(|(rep, members)| {
            let cycle = rep.cycle_type();
            // 1 − w on the GSp4 cocharacter lattice.
            let mut m = [[0i64; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    m[i][j] = i64::from(i == j) - rep.cochar[i][j];
                }
            }
            let div = smith_divisors(m);
            let torsion_rank =
                div.iter().filter(|&&d| d > 1).inspect(|&&d| debug_assert_eq!(d, 2)).count()
                    as u32;
            WeylClass {
                name: class_name(&cycle).into(),
                cycle_type: cycle,
                representative: rep.word,
                size: members.len(),
                torsion_rank,
            }
        })
        .collect();
    let order = ["e", "A1", "A1tilde", "A1xA1", "C2"];
    out.sort_by_key(|c| order.iter().position(|n| *n == c.name).unwrap());
    out
}

fn invert(w: &WeylElement) -> WeylElement {
    // Every element has order dividing 4: inverse = w^{k-1} with w^k = 1.
    let id = WeylElement::identity();
    let mut prev = id.clone();
    let mut power = w.clone();
    for _ in 0..8 {
        if power.eps == id.eps {
            return prev;
        }
        prev = power.clone();
        power = w.compose(&power);
    }
    unreachable!("Weyl element of unexpected order");
}

/// Levi subgroups of GSp4 (and their Sp4 analogues by the same labels).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LeviLabel {
    /// The full group.
    G,
    /// Siegel Levi GL2 × GSp0 (GSp4) / GL2 (Sp4).
    Siegel,
    /// Klingen Levi GL1 × GSp2 (GSp4) / GL1 × Sp2 (Sp4).
    Klingen,
    /// The maximal torus.
    T,
}

impl LeviLabel {
    /// The identification of dual Levi subgroups under self-duality:
    /// the Siegel and Klingen Levis swap; G and T are self-dual.
    pub fn dual(self) -> LeviLabel {
        match self {
            LeviLabel::G => LeviLabel::G,
            LeviLabel::Siegel => LeviLabel::Klingen,
            LeviLabel::Klingen => LeviLabel::Siegel,
            LeviLabel::T => LeviLabel::T,
        }
    }

    pub fn name(self, group: Group) -> &'static str {
        match (group, self) {
            (Group::GSp4, LeviLabel::G) => "GSp4",
            (Group::GSp4, LeviLabel::Siegel) => "GL2xGSp0",
            (Group::GSp4, LeviLabel::Klingen) => "GL1xGSp2",
            (Group::GSp4, LeviLabel::T) => "T",
            (Group::Sp4, LeviLabel::G) => "Sp4",
            (Group::Sp4, LeviLabel::Siegel) => "GL2",
            (Group::Sp4, LeviLabel::Klingen) => "GL1xSp2",
            (Group::Sp4, LeviLabel::T) => "T",
        }
    }
}

/// Nilpotent orbit of the rank-2 symplectic/orthogonal pair.
#[derive(Debug, Clone, Serialize)]
pub struct NilpotentOrbit {
    pub name: &'static str,
    /// Partition of 5 (so5 side).
    pub b2_partition: Vec<u8>,
    /// Partition of 4 (sp4 side).
    pub c2_partition: Vec<u8>,
    /// Levi from whose regular orbit this one is induced.
    pub levi: LeviLabel,
    /// Root-vector representative.
    pub representative: &'static str,
}

/// The four nilpotent orbits with the B2 ↔ C2 partition pairing.
pub fn nilpotent_orbits(_group: Group) -> Vec<NilpotentOrbit> {
    vec![
        NilpotentOrbit {
            name: "regular",
            b2_partition: vec![5],
            c2_partition: vec![4],
            levi: LeviLabel::G,
            representative: "e_alpha + e_beta",
        },
        NilpotentOrbit {
            name: "subregular",
            b2_partition: vec![3, 1, 1],
            c2_partition: vec![2, 2],
            levi: LeviLabel::Siegel,
            representative: "e_beta",
        },
        NilpotentOrbit {
            name: "minimal",
            b2_partition: vec![2, 2, 1],
            c2_partition: vec![2, 1, 1],
            levi: LeviLabel::Klingen,
            representative: "e_alpha",
        },
        NilpotentOrbit {
            name: "zero",
            b2_partition: vec![1, 1, 1, 1, 1],
            c2_partition: vec![1, 1, 1, 1],
            levi: LeviLabel::T,
            representative: "0",
        },
    ]
}

/// A maximal parahoric with its finite reductive quotient.
#[derive(Debug, Clone, Serialize)]
pub struct ParahoricQuotient {
    /// Building-vertex label (extended-Dynkin convention: δ hyperspecial).
    pub vertex: &'static str,
    /// Alias used when naming the supercuspidals supported at this vertex
    /// (the Sp4 enumeration labels its two hyperspecial-type vertices β, γ).
    pub sc_alias: &'static str,
    /// Node deleted from the extended Dynkin diagram.
    pub deleted_node: &'static str,
    /// Reductive quotient over the residue field.
    pub quotient: &'static str,
}

/// Maximal parahoric vertices and reductive quotients.
pub fn parahoric_quotients(group: Group) -> Vec<ParahoricQuotient> {
    match group {
        Group::GSp4 => vec![
            // β and δ lie in one orbit of the similitude group.
            ParahoricQuotient {
                vertex: "delta",
                sc_alias: "beta",
                deleted_node: "delta",
                quotient: "GSp4",
            },
            ParahoricQuotient {
                vertex: "alpha",
                sc_alias: "alpha",
                deleted_node: "alpha",
                quotient: "GSp2,2",
            },
        ],
        Group::Sp4 => vec![
            ParahoricQuotient {
                vertex: "delta",
                sc_alias: "beta",
                deleted_node: "delta",
                quotient: "Sp4",
            },
            ParahoricQuotient {
                vertex: "beta",
                sc_alias: "gamma",
                deleted_node: "beta",
                quotient: "Sp4",
            },
            ParahoricQuotient {
                vertex: "alpha",
                sc_alias: "alpha",
                deleted_node: "alpha",
                quotient: "Sp2xSp2",
            },
        ],
    }
}

/// One facet of the fundamental alcove, labeled by the Weyl class attached
/// to it in the distribution bookkeeping.
#[derive(Debug, Clone, Serialize)]
pub struct Facet {
    pub name: &'static str,
    pub dim: u8,
    pub weyl_class: &'static str,
}

/// The fundamental-alcove facet complex: three vertices, three edges, one
/// chamber, each tagged with its Weyl class.
pub fn facets(group: Group) -> Vec<Facet> {
    let vertex_classes: [&'static str; 3] = match group {
        // GSp4: both hyperspecial-type vertices give C2; the third is A1×A1.
        Group::GSp4 => ["C2", "C2", "A1xA1"],
        Group::Sp4 => ["C2", "C2", "A1xA1"],
    };
    vec![
        Facet { name: "F_C2", dim: 0, weyl_class: vertex_classes[0] },
        Facet { name: "F_C2'", dim: 0, weyl_class: vertex_classes[1] },
        Facet { name: "F_A1xA1", dim: 0, weyl_class: vertex_classes[2] },
        Facet { name: "F_A1", dim: 1, weyl_class: "A1" },
        Facet { name: "F_A1'", dim: 1, weyl_class: "A1" },
        Facet { name: "F_A1tilde", dim: 1, weyl_class: "A1tilde" },
        Facet { name: "F_e", dim: 2, weyl_class: "e" },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_pairings_are_two() {
        for g in [Group::Sp4, Group::GSp4] {
            let d = build_root_datum(g);
            assert_eq!(d.roots.len(), 8);
            for k in 0..8 {
                assert_eq!(d.pair(&d.roots[k], &d.coroots[k]), 2, "{g} root {k}");
            }
        }
    }

    #[test]
    fn cartan_matrix_is_c2() {
        for g in [Group::Sp4, Group::GSp4] {
            let d = build_root_datum(g);
            let (a, b) = (d.simple[0], d.simple[1]);
            assert_eq!(d.pair(&d.roots[a], &d.coroots[b]), -1);
            assert_eq!(d.pair(&d.roots[b], &d.coroots[a]), -2);
        }
    }

    #[test]
    fn reflections_permute_roots() {
        for g in [Group::Sp4, Group::GSp4] {
            let d = build_root_datum(g);
            for k in 0..8 {
                let mut images: Vec<Vec<i64>> =
                    d.roots.iter().map(|r| d.reflect_char(k, r)).collect();
                images.sort();
                let mut roots = d.roots.clone();
                roots.sort();
                assert_eq!(images, roots);
            }
        }
    }

    #[test]
    fn self_duality_is_inverse_pair_and_swaps_simples() {
        // inverse ∘ forward = identity on the basis.
        for i in 0..3 {
            let mut e = vec![0i64; 3];
            e[i] = 1;
            let img = self_duality_map(&e).unwrap();
            assert_eq!(self_duality_inverse(&img).unwrap(), e);
        }
        let d = build_root_datum(Group::GSp4);
        // α1 ↦ α2∨ and α2 ↦ α1∨.
        assert_eq!(
            self_duality_map(d.simple_alpha()).unwrap(),
            d.coroots[d.simple[1]]
        );
        assert_eq!(
            self_duality_map(d.simple_beta()).unwrap(),
            d.coroots[d.simple[0]]
        );
        // ε1 ↦ −ε0∨.
        assert_eq!(self_duality_map(&[0, 1, 0]).unwrap(), vec![-1, 0, 0]);
        assert!(self_duality_map(&[1, 0]).is_err());
    }

    #[test]
    fn weyl_group_has_eight_elements_five_classes() {
        let elems = weyl_elements();
        assert_eq!(elems.len(), 8);
        let classes = weyl_classes(Group::GSp4);
        assert_eq!(classes.len(), 5);
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), 8);
        let names: Vec<_> = classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["e", "A1", "A1tilde", "A1xA1", "C2"]);
        let types: Vec<_> = classes.iter().map(|c| c.cycle_type.as_str()).collect();
        assert_eq!(types, ["(1)(1)", "(1)(-1)", "(2)", "(-1)(-1)", "(-2)"]);
    }

    #[test]
    fn torsion_is_z2_exactly_for_a1xa1() {
        for c in weyl_classes(Group::GSp4) {
            let expect = u32::from(c.name == "A1xA1");
            assert_eq!(c.torsion_rank, expect, "class {}", c.name);
        }
    }

    #[test]
    fn levi_duality_involution() {
        for l in [LeviLabel::G, LeviLabel::Siegel, LeviLabel::Klingen, LeviLabel::T] {
            assert_eq!(l.dual().dual(), l);
        }
        assert_eq!(LeviLabel::Siegel.dual(), LeviLabel::Klingen);
    }

    #[test]
    fn nilpotent_orbit_table() {
        let orbits = nilpotent_orbits(Group::GSp4);
        assert_eq!(orbits.len(), 4);
        let pairs: Vec<_> = orbits
            .iter()
            .map(|o| (o.b2_partition.clone(), o.c2_partition.clone()))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (vec![5], vec![4]),
                (vec![3, 1, 1], vec![2, 2]),
                (vec![2, 2, 1], vec![2, 1, 1]),
                (vec![1, 1, 1, 1, 1], vec![1, 1, 1, 1]),
            ]
        );
        let levis: Vec<_> = orbits.iter().map(|o| o.levi).collect();
        assert_eq!(
            levis,
            vec![LeviLabel::G, LeviLabel::Siegel, LeviLabel::Klingen, LeviLabel::T]
        );
    }

    #[test]
    fn parahoric_tables() {
        let g = parahoric_quotients(Group::GSp4);
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].quotient, "GSp4");
        assert_eq!(g[1].quotient, "GSp2,2");
        let s = parahoric_quotients(Group::Sp4);
        assert_eq!(s.len(), 3);
        assert_eq!(
            s.iter().map(|p| p.quotient).collect::<Vec<_>>(),
            vec!["Sp4", "Sp4", "Sp2xSp2"]
        );
        assert_eq!(s[1].sc_alias, "gamma");
    }
}
