use super::*;
use crate::characters::{GeneratorDecl, LabelGroup};

fn gsp4_ps(chi1: SmoothChar, chi2: SmoothChar, theta: SmoothChar) -> InducedRep {
    InducedRep::principal_series(Group::GSp4, chi1, chi2, theta).unwrap()
}

fn sp4_ps(chi1: SmoothChar, chi2: SmoothChar) -> InducedRep {
    let one = chi1.group().one();
    InducedRep::principal_series(Group::Sp4, chi1, chi2, one).unwrap()
}

fn labels(r: &ReducibilityReport) -> Vec<&str> {
    r.constituents.iter().map(|c| c.label.as_str()).collect()
}

fn check_invariants(r: &ReducibilityReport) {
    assert_eq!(r.length, r.constituents.len());
    assert_eq!(
        r.constituents.iter().filter(|c| c.generic).count(),
        1,
        "exactly one generic constituent in {r:?}"
    );
    for c in &r.constituents {
        assert!(
            !c.square_integrable || c.essentially_tempered,
            "square-integrable implies tempered: {c:?}"
        );
        if c.essentially_tempered {
            assert!(c.langlands.is_none());
        }
    }
}

#[test]
fn gsp4_full_nu_relation_has_length_four() {
    let g = LabelGroup::standard();
    let rep = gsp4_ps(g.nu_frac(2, 1), g.nu_frac(1, 1), g.one());
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_1aiii);
    assert_eq!(labels(&r), vec![
        "nu^{3/2} St_GSp4",
        "nu^{3/2} 1_GSp4",
        "J(nu^{2}; nu^{1/2} St_GSp2)",
        "J(nu^{3/2} St_GL2; 1)",
    ]);
    let st = &r.constituents[0];
    assert!(st.square_integrable && st.generic);
    assert!(!r.constituents[1].essentially_tempered);
    check_invariants(&r);
}

#[test]
fn gsp4_nonregular_nu_case_splits_into_two_tempered_and_two_quotients() {
    let g = LabelGroup::standard();
    let rep = gsp4_ps(g.nu_frac(1, 1), g.one(), g.one());
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_1bi);
    assert_eq!(labels(&r), vec![
        "tau(S, 1)",
        "tau(T, 1)",
        "J(nu; 1 x| 1)",
        "J(nu^{1/2} St_GL2; 1)",
    ]);
    assert!(r.constituents[0].essentially_tempered && !r.constituents[0].square_integrable);
    assert!(r.constituents[1].essentially_tempered);
    check_invariants(&r);
}

#[test]
fn gsp4_generic_position_is_irreducible() {
    let g = LabelGroup::standard();
    // No ν-relation between η2, ν^{1/3}η and the duals.
    let rep = gsp4_ps(g.eta2(), g.eta().times_nu_frac(1, 3), g.one());
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Irreducible);
    assert_eq!(r.length, 1);
    check_invariants(&r);
}

#[test]
fn gsp4_two_term_cases_have_generic_st_constituent() {
    let g = LabelGroup::standard();
    // χ1 = ν²η = ν·χ2 with χ2 = νη: case with a St/1 splitting of length 2.
    let c2 = g.eta().times_nu_frac(1, 1);
    let rep = gsp4_ps(c2.times_nu_frac(1, 1), c2.clone(), g.one());
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_1ai);
    assert_eq!(labels(&r), vec![
        "nu^{3/2} * eta St_GL2 x| 1",
        "nu^{3/2} * eta 1_GL2 x| 1",
    ]);
    assert!(r.constituents[0].generic && !r.constituents[0].essentially_tempered);
    check_invariants(&r);
}

#[test]
fn langlands_branches_on_exponent() {
    let g = LabelGroup::standard();

    // e(χ2) = 1 > 0: quotient J(νχ2, χ2; θ).
    let c2 = g.eta().times_nu_frac(1, 1);
    let rep = gsp4_ps(c2.times_nu_frac(1, 1), c2.clone(), g.one());
    assert_eq!(
        langlands_quotient_label(&rep, "nu^{3/2} * eta 1_GL2 x| 1").unwrap(),
        "J(nu^{2} * eta, nu * eta; 1)"
    );
    assert_eq!(
        langlands_quotient_label(&rep, "nu^{3/2} * eta St_GL2 x| 1").unwrap(),
        "J(nu^{3/2} * eta St_GL2; 1)"
    );

    // −1 < e(χ2) = −3/4 < −1/2: the St constituent crosses the wall and is
    // expressed through the inverse character and a twisted similitude.
    let c2 = g.eta().times_nu_frac(-3, 4);
    let rep = gsp4_ps(c2.times_nu_frac(1, 1), c2.clone(), g.one());
    assert_eq!(
        langlands_quotient_label(&rep, "nu^{-1/4} * eta St_GL2 x| 1").unwrap(),
        "J(nu^{1/4} * eta St_GL2; nu^{-1/2})"
    );
    assert_eq!(
        langlands_quotient_label(&rep, "nu^{-1/4} * eta 1_GL2 x| 1").unwrap(),
        "J(nu^{3/4} * eta, nu^{1/4} * eta; nu^{1/4} * eta)"
    );

    // e(χ2) = −1/2: the St constituent is tempered, so has no quotient label.
    let c2 = g.eta().times_nu_frac(-1, 2);
    let rep = gsp4_ps(c2.times_nu_frac(1, 1), c2.clone(), g.one());
    let err = langlands_quotient_label(&rep, "eta St_GL2 x| 1").unwrap_err();
    assert!(matches!(err, EngineError::NotApplicable(_)));

    // e(χ1) = 0 with χ2 = ν: tempered St half, quotient J(ν; χ1 ⋊ θ).
    let rep = gsp4_ps(g.eta(), g.nu_frac(1, 1), g.one());
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_1aii);
    assert!(r.constituents[0].essentially_tempered);
    assert_eq!(
        langlands_quotient_label(&rep, "eta x| nu^{1/2} 1_GSp2").unwrap(),
        "J(nu; eta x| 1)"
    );
}

#[test]
fn gsp4_order_two_shifted_case_has_square_integrable_member() {
    let g = LabelGroup::standard();
    let rep = gsp4_ps(g.eta2().times_nu_frac(1, 1), g.eta2(), g.one());
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_1aiv);
    assert_eq!(r.length, 4);
    assert_eq!(r.constituents[0].label, "delta([eta2, nu * eta2], 1)");
    assert!(r.constituents[0].square_integrable);
    check_invariants(&r);
}

#[test]
fn siegel_induction_at_half_shift() {
    let g = LabelGroup::standard();
    let rho = SupercuspidalLabel::new(ScGroup::GL2, "rho", g.one()).self_dual(true);
    let rep = InducedRep::siegel(Group::GSp4, rho.clone(), half(1, 2), g.one()).unwrap();
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4Siegel);
    assert_eq!(r.length, 2);
    let sub = &r.constituents[0];
    assert!(sub.square_integrable && sub.generic);
    let quot = &r.constituents[1];
    assert!(!quot.essentially_tempered && !quot.generic);

    // Non-self-dual or nontrivial central character: irreducible.
    let rho2 = SupercuspidalLabel::new(ScGroup::GL2, "rho2", g.one());
    let rep = InducedRep::siegel(Group::GSp4, rho2, half(1, 2), g.one()).unwrap();
    assert_eq!(decide_reducibility(&rep).unwrap().case, CaseTag::Irreducible);
    let rho3 = SupercuspidalLabel::new(ScGroup::GL2, "rho3", g.eta2()).self_dual(true);
    let rep = InducedRep::siegel(Group::GSp4, rho3, half(1, 2), g.one()).unwrap();
    assert_eq!(decide_reducibility(&rep).unwrap().case, CaseTag::Irreducible);
}

#[test]
fn sp4_siegel_splits_at_zero_for_nontrivial_central_character() {
    let g = LabelGroup::standard();
    let rho = SupercuspidalLabel::new(ScGroup::GL2, "rho", g.eta2()).self_dual(true);
    let rep = InducedRep::siegel(Group::Sp4, rho.clone(), BigRational::zero(), g.one()).unwrap();
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Sp4SiegelZero);
    assert!(r.constituents.iter().all(|c| c.essentially_tempered));
    check_invariants(&r);

    // The same datum at β = 1/2 is irreducible (ω_ρ ≠ 1 there).
    let rep = InducedRep::siegel(Group::Sp4, rho, half(1, 2), g.one()).unwrap();
    assert_eq!(decide_reducibility(&rep).unwrap().case, CaseTag::Irreducible);
}

#[test]
fn gsp4_klingen_cases() {
    let g = LabelGroup::standard();
    let rho = SupercuspidalLabel::new(ScGroup::GSp2, "pi", g.one())
        .with_self_twists(vec![g.eta2()]);

    // χ = 1: two tempered subrepresentations.
    let rep = InducedRep::klingen(Group::GSp4, g.one(), rho.clone()).unwrap();
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_3a);
    assert!(r.constituents.iter().all(|c| c.essentially_tempered));

    // χ = νξo with ξoπ ≅ π declared: square-integrable sub.
    let rep =
        InducedRep::klingen(Group::GSp4, g.eta2().times_nu_frac(1, 1), rho.clone()).unwrap();
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Gsp4_3b);
    assert!(r.constituents[0].square_integrable);
    assert_eq!(r.constituents[1].langlands.as_deref(), Some("J(nu * eta2; pi)"));

    // Undeclared twist: irreducible.
    let rep = InducedRep::klingen(Group::GSp4, g.eta().times_nu_frac(1, 1), rho).unwrap();
    assert_eq!(decide_reducibility(&rep).unwrap().case, CaseTag::Irreducible);
}

#[test]
fn sp4_klingen_cases_depend_on_the_twist_index_subgroup() {
    let g = LabelGroup::standard();
    // π with η2 nontrivial and η trivial on its twist-index subgroup.
    let rho = SupercuspidalLabel::new(ScGroup::Sp2, "pi", g.one())
        .with_fsigma_trivial(vec![g.eta()]);

    // Order-two χ nontrivial on the subgroup, β = 0: two tempered pieces.
    let rep = InducedRep::klingen(Group::Sp4, g.eta2(), rho.clone()).unwrap();
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_3b);
    assert_eq!(r.length, 2);
    assert!(r.constituents.iter().all(|c| c.essentially_tempered));

    // Order-two χ trivial on the subgroup, β = ±1: discrete-series sub.
    let rep =
        InducedRep::klingen(Group::Sp4, g.eta().times_nu_frac(-1, 1), rho.clone()).unwrap();
    let r = decide_reducibility(&rep).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_3c);
    assert!(r.constituents[0].square_integrable);

    // Mismatched β: irreducible.
    let rep = InducedRep::klingen(Group::Sp4, g.eta(), rho.clone()).unwrap();
    assert_eq!(decide_reducibility(&rep).unwrap().case, CaseTag::Irreducible);
    let rep = InducedRep::klingen(Group::Sp4, g.eta2().times_nu_frac(1, 1), rho).unwrap();
    assert_eq!(decide_reducibility(&rep).unwrap().case, CaseTag::Irreducible);

    // No declaration at all: the comparison is undecidable.
    let bare = SupercuspidalLabel::new(ScGroup::Sp2, "pi'", g.one());
    let rep = InducedRep::klingen(Group::Sp4, g.eta2(), bare).unwrap();
    assert!(matches!(
        decide_reducibility(&rep).unwrap_err(),
        EngineError::NeedsDeclaration(_)
    ));
}

#[test]
fn sp4_order_two_region() {
    let g = LabelGroup::standard();

    // χ2 of order two, χ1 in general position: length 2, halves irreducible.
    let c1 = g.eta().times_nu_frac(1, 3);
    let r = decide_reducibility(&sp4_ps(c1, g.eta2())).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1ai);
    assert_eq!(labels(&r), vec![
        "nu^{1/3} * eta x| T^1_{eta2}",
        "nu^{1/3} * eta x| T^2_{eta2}",
    ]);
    assert!(r.note.is_some());
    check_invariants(&r);

    // χ1 = χ2 of order two: both halves split, length 4, all tempered.
    let r = decide_reducibility(&sp4_ps(g.eta2(), g.eta2())).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1aii);
    assert_eq!(r.length, 4);
    assert!(r.constituents.iter().all(|c| c.essentially_tempered));
    check_invariants(&r);

    // Distinct order-two characters: length 4.
    let r = decide_reducibility(&sp4_ps(g.eta2(), g.eta())).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1aBoth);
    assert_eq!(r.length, 4);
    check_invariants(&r);

    // No order-two character and no ν-relation: irreducible.
    let r = decide_reducibility(&sp4_ps(g.nu_frac(1, 3), g.nu_frac(1, 7))).unwrap();
    assert_eq!(r.case, CaseTag::Irreducible);
    let r = decide_reducibility(&sp4_ps(g.one(), g.one())).unwrap();
    assert_eq!(r.case, CaseTag::Irreducible);
}

#[test]
fn sp4_shifted_order_two_case_has_six_constituents() {
    let g = LabelGroup::standard();
    let r = decide_reducibility(&sp4_ps(g.eta2().times_nu_frac(1, 1), g.eta2())).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1biv);
    assert_eq!(r.length, 6);
    assert_eq!(r.constituents.iter().filter(|c| c.square_integrable).count(), 2);
    assert_eq!(r.constituents[0].label, "pi_1(eta2)");
    assert_eq!(r.constituents[5].label, "J(nu * eta2, eta2; 1)");
    check_invariants(&r);
}

#[test]
fn sp4_full_nu_relation_cases() {
    let g = LabelGroup::standard();

    let r = decide_reducibility(&sp4_ps(g.nu_frac(2, 1), g.nu_frac(1, 1))).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1biii);
    assert_eq!(r.constituents[0].label, "nu^{3/2} St_Sp4");
    assert!(r.constituents[0].square_integrable);
    assert_eq!(r.length, 4);
    check_invariants(&r);

    let r = decide_reducibility(&sp4_ps(g.nu_frac(1, 1), g.one())).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1ci);
    assert_eq!(r.length, 4);
    assert_eq!(
        r.constituents.iter().filter(|c| c.essentially_tempered).count(),
        2
    );
    check_invariants(&r);

    let r = decide_reducibility(&sp4_ps(g.nu_frac(1, 1), g.nu_frac(1, 1))).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1cii);
    assert_eq!(r.length, 2);
    check_invariants(&r);

    // χ1 = νχ2 with χ1² = ν: tempered St constituent.
    let c2 = g.eta2().times_nu_frac(-1, 2);
    let r = decide_reducibility(&sp4_ps(c2.times_nu_frac(1, 1), c2)).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1ciii);
    assert!(r.constituents[0].essentially_tempered);
    check_invariants(&r);

    // Regular ν-shift with no order-two character: length 2.
    let c2 = g.eta().times_nu_frac(1, 5);
    let r = decide_reducibility(&sp4_ps(c2.times_nu_frac(1, 1), c2)).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1bi);
    assert_eq!(r.length, 2);
    check_invariants(&r);

    let r = decide_reducibility(&sp4_ps(g.eta2p(), g.nu_frac(1, 1))).unwrap();
    assert_eq!(r.case, CaseTag::Sp4_1bii);
    assert_eq!(r.length, 2);
    check_invariants(&r);
}

#[test]
fn bernstein_block_from_unit_restrictions() {
    let g = LabelGroup::standard();
    let b = bernstein_block_j(&g.one(), &g.nu_frac(1, 1)).unwrap();
    assert_eq!(b.case, BlockCase::J1);
    assert_eq!(b.js_label, "GSp4");
    assert_eq!(b.js_type, "C2");

    // η is unramified, so (η, ν²η) still lands in the principal block.
    let b = bernstein_block_j(&g.eta(), &g.eta().times_nu_frac(2, 1)).unwrap();
    assert_eq!(b.case, BlockCase::J1);

    let b = bernstein_block_j(&g.eta2(), &g.one()).unwrap();
    assert_eq!(b.case, BlockCase::J2);
    assert_eq!(b.js_label, "GL1 x GSp2");

    let b = bernstein_block_j(&g.eta2(), &g.eta2().times_nu_frac(-1, 2)).unwrap();
    assert_eq!(b.case, BlockCase::J3);
    assert_eq!(b.js_label, "GL2 x GL2 / GL1");
    assert_eq!(b.js_type, "A1xA1");

    // A ramified character of order six pairs with its inverse.
    let g6 = LabelGroup::with_generators(&[GeneratorDecl {
        name: "zeta".into(),
        order: Some(6),
        unramified: false,
    }]);
    let zeta = g6.generator("zeta").unwrap();
    let b = bernstein_block_j(&zeta, &zeta.inv()).unwrap();
    assert_eq!(b.case, BlockCase::J4);
    assert_eq!(b.js_label, "GL2 x GSp0");

    // Two unrelated ramified characters: outside the tabulated blocks.
    assert!(matches!(
        bernstein_block_j(&g.eta2(), &g.eta2p()).unwrap_err(),
        EngineError::Unsupported(_)
    ));
}

#[test]
fn bernstein_block_is_twist_and_weyl_invariant() {
    let g = LabelGroup::standard();
    let pairs = [
        (g.one(), g.one()),
        (g.eta2(), g.one()),
        (g.eta2(), g.eta2()),
        (g.eta2(), g.eta2p().mul(&g.eta2()).unwrap()),
    ];
    for (c1, c2) in pairs {
        let base = bernstein_block_j(&c1, &c2).map(|b| b.case).ok();
        for (a, b) in [
            (c2.clone(), c1.clone()),
            (c1.clone(), c2.inv()),
            (c1.times_nu_frac(3, 2), c2.times_nu_frac(-1, 1)),
        ] {
            assert_eq!(bernstein_block_j(&a, &b).map(|x| x.case).ok(), base);
        }
    }
}

#[test]
fn unipotent_assignments_for_covered_cases() {
    let g = LabelGroup::standard();

    // Steinberg of the full-relation case: regular unipotent.
    let rep = gsp4_ps(g.nu_frac(2, 1), g.nu_frac(1, 1), g.one());
    let u = unipotent_class_of_constituent(&rep, "nu^{3/2} St_GSp4").unwrap();
    assert_eq!(u.partition, "[4]");
    assert_eq!(u.enhancement, 1);

    // Non-regular case in the principal block: the t_b table.
    let rep = gsp4_ps(g.nu_frac(1, 1), g.one(), g.one());
    let u = unipotent_class_of_constituent(&rep, "tau(S, 1)").unwrap();
    assert_eq!((u.partition, u.enhancement, u.hecke), ("[2,1^2]", -1, Some("t_b")));
    let u = unipotent_class_of_constituent(&rep, "tau(T, 1)").unwrap();
    assert_eq!((u.partition, u.enhancement), ("[2,1^2]", 1));
    let u = unipotent_class_of_constituent(&rep, "J(nu; 1 x| 1)").unwrap();
    assert_eq!(u.partition, "[1^4]");
    let u = unipotent_class_of_constituent(&rep, "J(nu^{1/2} St_GL2; 1)").unwrap();
    assert_eq!(u.partition, "[2^2]");

    // ν-shifted pair of order-two characters, ramified block: four classes.
    let rep = gsp4_ps(g.eta2().times_nu_frac(1, 1), g.eta2(), g.one());
    let u = unipotent_class_of_constituent(&rep, "delta([eta2, nu * eta2], 1)").unwrap();
    assert_eq!((u.partition, u.hecke), ("[2^2]", Some("t_a x t_a")));
    let u =
        unipotent_class_of_constituent(&rep, "J(nu^{1/2} * eta2 St_GL2; 1)").unwrap();
    assert_eq!((u.partition, u.embedding), ("[2,1^2]", Some("first factor")));
    let u = unipotent_class_of_constituent(&rep, "J(nu * eta2; eta2 x| 1)").unwrap();
    assert_eq!(u.partition, "[1^4]");

    // Same shape with the unramified quadratic: only δ is tabulated, with
    // trivial unipotent.
    let rep = gsp4_ps(g.eta().times_nu_frac(1, 1), g.eta(), g.one());
    let u = unipotent_class_of_constituent(&rep, "delta([eta, nu * eta], 1)").unwrap();
    assert_eq!((u.partition, u.hecke), ("[1^4]", Some("t_a")));
    assert!(matches!(
        unipotent_class_of_constituent(&rep, "J(nu * eta; eta x| 1)").unwrap_err(),
        EngineError::Unsupported(_)
    ));

    // Two-term St/1 splittings: [2^2] against [1^4].
    let c2 = g.eta2().times_nu_frac(1, 2);
    let rep = gsp4_ps(c2.times_nu_frac(1, 1), c2.clone(), g.one());
    let u =
        unipotent_class_of_constituent(&rep, "nu * eta2 St_GL2 x| 1").unwrap();
    assert_eq!((u.partition, u.hecke), ("[2^2]", Some("t_a x t_o")));
    let u = unipotent_class_of_constituent(&rep, "nu * eta2 1_GL2 x| 1").unwrap();
    assert_eq!(u.partition, "[1^4]");

    // Siegel discrete-series sub.
    let rho = SupercuspidalLabel::new(ScGroup::GL2, "rho", g.one()).self_dual(true);
    let rep = InducedRep::siegel(Group::GSp4, rho, half(1, 2), g.one()).unwrap();
    let u = unipotent_class_of_constituent(&rep, "delta(nu^{1/2} rho x| 1)").unwrap();
    assert_eq!((u.partition, u.hecke), ("[2,1^2]", Some("t_a")));

    // Sp4 has no tabulated assignments.
    let rep = sp4_ps(g.nu_frac(2, 1), g.nu_frac(1, 1));
    assert!(matches!(
        unipotent_class_of_constituent(&rep, "nu^{3/2} St_Sp4").unwrap_err(),
        EngineError::Unsupported(_)
    ));
}

#[test]
fn reports_are_weyl_orbit_invariant() {
    let g = LabelGroup::standard();
    let data = [
        (g.nu_frac(2, 1), g.nu_frac(1, 1), g.one()),
        (g.nu_frac(1, 1), g.one(), g.eta2()),
        (g.eta2().times_nu_frac(1, 1), g.eta2(), g.one()),
        (g.eta().times_nu_frac(2, 1), g.eta().times_nu_frac(1, 1), g.one()),
        (g.eta2p(), g.nu_frac(1, 1), g.eta()),
        (g.eta2(), g.eta().times_nu_frac(1, 3), g.one()),
    ];
    for group in [Group::GSp4, Group::Sp4] {
        for (c1, c2, th) in &data {
            let th = if group == Group::Sp4 { g.one() } else { th.clone() };
            let t = (c1.clone(), c2.clone(), th);
            let base =
                decide_reducibility(&InducedRep {
                    group,
                    data: InducingData::Torus {
                        chi1: t.0.clone(),
                        chi2: t.1.clone(),
                        theta: t.2.clone(),
                    },
                })
                .unwrap();
            let mut base_flags: Vec<_> = base
                .constituents
                .iter()
                .map(|c| (c.essentially_tempered, c.square_integrable, c.generic))
                .collect();
            base_flags.sort();
            for (a, b, c) in torus_weyl_orbit(group, &t).unwrap() {
                let r = decide_reducibility(&InducedRep {
                    group,
                    data: InducingData::Torus { chi1: a, chi2: b, theta: c },
                })
                .unwrap();
                assert_eq!(r.case, base.case);
                assert_eq!(r.length, base.length);
                let mut flags: Vec<_> = r
                    .constituents
                    .iter()
                    .map(|c| (c.essentially_tempered, c.square_integrable, c.generic))
                    .collect();
                flags.sort();
                assert_eq!(flags, base_flags);
            }
        }
    }
}

#[test]
fn grothendieck_sweep_over_small_grid() {
    // Every triple on a small grid must either decide cleanly or raise the
    // documented undecidability, and every report satisfies the constituent
    // invariants.
    let g = LabelGroup::standard();
    let shifts: [(i64, i64); 7] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)];
    let units = [g.one(), g.eta(), g.eta2()];
    let mut decided = 0;
    for group in [Group::GSp4, Group::Sp4] {
        for (n1, d1) in shifts {
            for (n2, d2) in shifts {
                for u1 in &units {
                    for u2 in &units {
                        let c1 = u1.times_nu_frac(n1, d1);
                        let c2 = u2.times_nu_frac(n2, d2);
                        let rep = InducedRep::principal_series(
                            group,
                            c1,
                            c2,
                            g.one(),
                        )
                        .unwrap();
                        let r = decide_reducibility(&rep).unwrap();
                        check_invariants(&r);
                        decided += 1;
                    }
                }
            }
        }
    }
    assert_eq!(decided, 2 * 7 * 7 * 9);
}

#[test]
fn malformed_inputs_are_rejected() {
    let g = LabelGroup::standard();
    assert!(matches!(
        InducedRep::principal_series(Group::Sp4, g.one(), g.one(), g.eta2()).unwrap_err(),
        EngineError::MalformedDescriptor(_)
    ));
    let rho = SupercuspidalLabel::new(ScGroup::GSp2, "pi", g.one());
    assert!(matches!(
        InducedRep::siegel(Group::GSp4, rho.clone(), half(1, 2), g.one()).unwrap_err(),
        EngineError::MalformedDescriptor(_)
    ));
    assert!(matches!(
        InducedRep::klingen(Group::Sp4, g.one(), rho).unwrap_err(),
        EngineError::MalformedDescriptor(_)
    ));
    let rep = gsp4_ps(g.nu_frac(2, 1), g.nu_frac(1, 1), g.one());
    assert!(matches!(
        langlands_quotient_label(&rep, "no such constituent").unwrap_err(),
        EngineError::MalformedDescriptor(_)
    ));
}
