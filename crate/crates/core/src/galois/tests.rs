use super::presets::{preset, preset_names};
use super::*;
use crate::characters::LabelGroup;
use crate::induction::{decide_reducibility, InducedRep};

fn lg() -> LabelGroup {
    LabelGroup::standard()
}

#[test]
fn classification_of_presets() {
    use GaloisCase::*;
    let lg = lg();
    let expect: &[(&str, GaloisCase)] = &[
        ("sp4-1", Sp4C1),
        ("sp4-2", Sp4C2),
        ("sp4-3", Sp4C3),
        ("sp4-4a", Sp4C4a),
        ("sp4-4b", Sp4C4b),
        ("sp4-4c", Sp4C4c),
        ("sp4-5a", Sp4C5a),
        ("sp4-5b", Sp4C5b),
        ("sp4-5b-regular", Sp4C5b),
        ("sp4-5c", Sp4C5c),
        ("sp4-5d", Sp4C5d),
        ("sp4-6a", Sp4C6a),
        ("sp4-6b", Sp4C6b),
        ("sp4-6c", Sp4C6c),
        ("sp4-6d", Sp4C6d),
        ("sp4-7a-trivial", Sp4C7a),
        ("sp4-7a-steinberg", Sp4C7a),
        ("sp4-7b", Sp4C7b),
        ("sp4-7b-diagonal-eta", Sp4C7b),
        ("sp4-7c", Sp4C7c),
        ("sp4-7d", Sp4C7d),
        ("sp4-7e", Sp4C7e),
        ("sp4-7f", Sp4C7f),
        ("sp4-7f-steinberg", Sp4C7f),
        ("sp4-7j", Sp4C7j),
        ("gsp4-1", GSp4C1),
        ("gsp4-2a", GSp4C2a),
        ("gsp4-2b", GSp4C2b),
        ("gsp4-2c", GSp4C2c),
        ("gsp4-3a", GSp4C3a),
        ("gsp4-3b", GSp4C3b),
        ("gsp4-4a-trivial", GSp4C4a),
        ("gsp4-4b-regular-eta2", GSp4C4b),
        ("gsp4-4c", GSp4C4c),
        ("gsp4-4d", GSp4C4d),
        ("gsp4-4e", GSp4C4e),
        ("gsp4-4e-steinberg", GSp4C4e),
    ];
    for (name, case) in expect {
        let p = preset(name, &lg).unwrap();
        assert_eq!(classify(&p).unwrap(), *case, "{name}");
    }
}

#[test]
fn irreducible_parameter_has_trivial_centralizer() {
    let p = preset("sp4-1", &lg()).unwrap();
    let c = centralizer(&p).unwrap();
    assert_eq!(c.g_phi, "1");
    assert_eq!(c.s_rank, 0);
    assert_eq!(c.irr_count, 1);
    assert!(c.finite_mod_center);
    let packet = assemble_packet(&p).unwrap();
    assert_eq!(packet.members.len(), 1);
    assert!(packet.discrete);
    assert_eq!(packet.members[0].kind, MemberKind::Supercuspidal);
}

#[test]
fn three_quadratics_give_rank_three() {
    let p = preset("sp4-6c", &lg()).unwrap();
    let c = centralizer(&p).unwrap();
    assert_eq!(c.s_phi, "mu2^3");
    assert_eq!(c.irr_count, 8);
    let packet = assemble_packet(&p).unwrap();
    assert_eq!(packet.members.len(), 8);
    assert!(packet.discrete);
    assert!(packet.members.iter().all(|m| m.kind == MemberKind::Supercuspidal));
}

#[test]
fn regular_double_pair_is_mixed() {
    let p = preset("gsp4-4b-regular-eta2", &lg()).unwrap();
    let c = centralizer(&p).unwrap();
    assert_eq!(c.g_phi, "GSp_{2,2}");
    assert_eq!(c.s_rank, 1);
    let packet = assemble_packet(&p).unwrap();
    assert_eq!(packet.members.len(), 2);
    assert!(packet.discrete && packet.tempered);
    assert_eq!(packet.members[0].kind, MemberKind::PrincipalSeries);
    assert_eq!(packet.members[0].label, "delta([eta2, nu * eta2], nu^{-1/2})");
    assert_eq!(packet.members[1].kind, MemberKind::Supercuspidal);
    assert_eq!(packet.members[1].sc_ref.as_deref(), Some("pi_alpha_eta2_chi"));
}

#[test]
fn packet_census_over_all_presets() {
    let lg = lg();
    for name in preset_names() {
        let p = preset(name, &lg).unwrap();
        let c = centralizer(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
        let packet = assemble_packet(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(packet.members.len() as u64, 1 << c.s_rank, "{name}");
        assert_eq!(c.irr_count, 1 << c.s_rank, "{name}");
        // Enhancements are distinct, trivial first.
        let mut enh: Vec<&str> = packet.members.iter().map(|m| m.enhancement.as_str()).collect();
        assert_eq!(enh[0], "1", "{name}");
        enh.sort_unstable();
        enh.dedup();
        assert_eq!(enh.len(), packet.members.len(), "{name}");
        // Exactly one generic member in a tempered packet, none otherwise.
        let generics = packet.members.iter().filter(|m| m.generic).count();
        assert_eq!(generics, usize::from(packet.tempered), "{name}");
        if packet.discrete {
            assert!(packet.tempered, "{name}: discrete must be tempered");
        }
        assert_eq!(packet.discrete, c.finite_mod_center, "{name}");
        // Supercuspidal members have full-group support.
        for m in &packet.members {
            if m.kind == MemberKind::Supercuspidal {
                assert_eq!(m.support, LeviLabel::G, "{name}");
            }
        }
    }
}

#[test]
fn springer_tables_are_bijections_with_expected_cuspidals() {
    let expect = [("SL2", 3, 1), ("SO3", 2, 0), ("SO5", 5, 0), ("O4", 7, 2), ("GSp4", 5, 0), ("GSp22", 5, 1)];
    for (group, rows, cusps) in expect {
        let t = springer_table(group).unwrap();
        assert_eq!(t.rows.len(), rows, "{group}");
        let cusp_count = t.rows.iter().filter(|r| r.weyl_rep == "cusp").count();
        assert_eq!(cusp_count, cusps, "{group}");
        // Pairs are distinct and the non-cuspidal rows biject onto distinct
        // Weyl representations.
        let mut pairs: Vec<&str> = t.rows.iter().map(|r| r.pair).collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), t.rows.len(), "{group}");
        let mut reps: Vec<&str> =
            t.rows.iter().filter(|r| r.weyl_rep != "cusp").map(|r| r.weyl_rep).collect();
        let n = reps.len();
        reps.sort_unstable();
        reps.dedup();
        assert_eq!(reps.len(), n, "{group}");
    }
    assert!(springer_table("E8").is_err());
}

#[test]
fn malformed_descriptors_are_rejected() {
    let lg = lg();
    let one = lg.one();
    // GSp4 has no 3+1 decomposition.
    let p = ParamDescriptor::gsp4(
        vec![
            Summand::irr("V3", 3, SelfDuality::None, &one),
            Summand::character(&one),
        ],
        &one,
        Sl2Data::trivial(),
    );
    assert!(matches!(classify(&p), Err(EngineError::MalformedDescriptor(_))));
    // Sp4 with nontrivial total determinant.
    let p = ParamDescriptor::sp4(
        vec![Summand::character(&lg.eta2()), Summand::character_mult(&one, 4)],
        Sl2Data::trivial(),
    );
    assert!(matches!(classify(&p), Err(EngineError::MalformedDescriptor(_))));
    // Wrong total dimension.
    let p = ParamDescriptor::sp4(vec![Summand::character_mult(&one, 4)], Sl2Data::trivial());
    assert!(matches!(classify(&p), Err(EngineError::MalformedDescriptor(_))));
    // GSp4 characters not closed under the xi-duality.
    let p = ParamDescriptor::gsp4(
        vec![
            Summand::character(&lg.nu_frac(1, 3)),
            Summand::character_mult(&one, 2),
            Summand::character(&lg.nu_frac(1, 5)),
        ],
        &one,
        Sl2Data::trivial(),
    );
    assert!(matches!(classify(&p), Err(EngineError::MalformedDescriptor(_))));
}

#[test]
fn levi_shaped_centralizer_with_sl2_is_unsupported() {
    let lg = lg();
    let mut p = preset("gsp4-4d", &lg).unwrap();
    p.sl2 = Sl2Data::partition(&[2]);
    assert!(matches!(assemble_packet(&p), Err(EngineError::Unsupported(_))));
}

#[test]
fn cuspidal_support_and_enhancements() {
    let lg = lg();
    let p = preset("sp4-4c", &lg).unwrap();
    let s = cuspidal_support(&p, "1").unwrap();
    assert_eq!(s.group_levi, LeviLabel::Klingen);
    assert_eq!(s.dual_levi, "GL1(C) x SO3(C)");
    assert!(matches!(
        cuspidal_support(&p, "eps"),
        Err(EngineError::InvalidEnhancement(_))
    ));
    let p = preset("gsp4-3b", &lg).unwrap();
    let s = cuspidal_support(&p, "1").unwrap();
    assert_eq!(s.group_levi, LeviLabel::Siegel);
    assert_eq!(s.dual_levi, "GL1(C) x GSp2(C)");
    // Discrete members live on the full group.
    let p = preset("sp4-2", &lg).unwrap();
    let s = cuspidal_support(&p, "eps").unwrap();
    assert_eq!(s.group_levi, LeviLabel::G);
    assert_eq!(s.dual_levi, "SO5(C)");
}

#[test]
fn dual_levi_swap_matches_levi_duality() {
    // The dual-side shape of a Levi is the group-side shape of its dual.
    assert_eq!(dual_levi_label(Group::GSp4, LeviLabel::Siegel), "GL1(C) x GSp2(C)");
    assert_eq!(LeviLabel::Siegel.dual(), LeviLabel::Klingen);
    assert_eq!(LeviLabel::Klingen.name(Group::GSp4), "GL1xGSp2");
    assert_eq!(dual_levi_label(Group::GSp4, LeviLabel::Klingen), "GL2(C) x GSp0(C)");
    assert_eq!(LeviLabel::Siegel.name(Group::GSp4), "GL2xGSp0");
}

#[test]
fn torus_packets_match_parabolic_induction() {
    let lg = lg();
    // Two distinct quadratic pairs: the length-four principal-series packet.
    let p = preset("sp4-7e", &lg).unwrap();
    let packet = assemble_packet(&p).unwrap();
    let rep =
        InducedRep::principal_series(Group::Sp4, lg.eta(), lg.eta2(), lg.one()).unwrap();
    let report = decide_reducibility(&rep).unwrap();
    let mut got: Vec<String> = packet.members.iter().map(|m| m.label.clone()).collect();
    let mut want: Vec<String> = report.constituents.iter().map(|c| c.label.clone()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    // A generic-position torus parameter is a singleton irreducible series.
    let p = preset("gsp4-4b-trivial", &lg).unwrap();
    let packet = assemble_packet(&p).unwrap();
    let rep =
        InducedRep::principal_series(Group::GSp4, lg.eta2(), lg.eta2(), lg.one()).unwrap();
    let report = decide_reducibility(&rep).unwrap();
    assert_eq!(report.length, 1);
    assert_eq!(packet.members[0].label, report.constituents[0].label);
    // Same check for a five-distinct-character parameter.
    let p = preset("sp4-7j", &lg).unwrap();
    let packet = assemble_packet(&p).unwrap();
    assert_eq!(packet.members.len(), 1);
    let gen = lg.eta2().times_nu_frac(1, 4);
    let b = lg.eta().times_nu_frac(1, 3);
    let rep = InducedRep::principal_series(Group::Sp4, gen, b, lg.one()).unwrap();
    let report = decide_reducibility(&rep).unwrap();
    assert_eq!(report.length, 1);
}

#[test]
fn langlands_quotient_branches_of_the_gl2_case() {
    let lg = lg();
    let expect = [
        ("sp4-7f-steinberg", "J(nu^{3/2} St_GL2; 1)"),
        ("sp4-7f-limit", "J(nu^{1/2} St_GL2; 1)"),
        ("sp4-7f-ram-limit", "J(nu^{1/2} * eta2 St_GL2; 1)"),
        ("sp4-7f-generic", "nu^{1/4} * eta2 St_GL2 x| 1"),
    ];
    for (name, label) in expect {
        let packet = assemble_packet(&preset(name, &lg).unwrap()).unwrap();
        assert_eq!(packet.members[0].label, label, "{name}");
    }
    assert!(!assemble_packet(&preset("sp4-7f-limit", &lg).unwrap()).unwrap().tempered);
}

#[test]
fn central_character_twist_is_recovered() {
    let lg = lg();
    let packet = assemble_packet(&preset("gsp4-4a-steinberg", &lg).unwrap()).unwrap();
    assert_eq!(packet.members[0].label, "eta2 St_GSp4");
    let packet = assemble_packet(&preset("gsp4-4a-22", &lg).unwrap()).unwrap();
    assert_eq!(packet.members[0].label, "tau(S, nu^{-1/2} * eta2)");
    assert_eq!(packet.members[1].label, "tau(T, nu^{-1/2} * eta2)");
}

#[test]
fn infinitesimal_parameters() {
    let lg = lg();
    let shifts = |name: &str| -> Vec<String> {
        infinitesimal(&preset(name, &lg).unwrap())
            .unwrap()
            .iter()
            .map(|e| e.shift.to_string())
            .collect()
    };
    assert_eq!(shifts("sp4-7a-steinberg"), ["3/2", "1/2", "-1/2", "-3/2", "0"]);
    assert_eq!(shifts("sp4-7a-trivial"), ["0"; 5]);
    assert_eq!(shifts("sp4-7b-diagonal-eta2"), ["1", "0", "0", "-1", "0"]);
    assert_eq!(shifts("gsp4-3a-regular"), ["1/2", "0", "-1/2"]);
    assert_eq!(shifts("sp4-5b-regular"), ["1/2", "-1/2", "0"]);
    // Every shift multiset is symmetric about zero.
    for name in preset_names() {
        let p = preset(name, &lg).unwrap();
        if let Ok(entries) = infinitesimal(&p) {
            let mut sum = num_rational::BigRational::from_integer(0.into());
            for e in &entries {
                sum += e.shift.clone();
            }
            assert!(sum.is_zero(), "{name}");
        }
    }
}

#[test]
fn restriction_to_sp4() {
    let lg = lg();
    // The size-two mixed packet restricts to the size-four one.
    let packet = assemble_packet(&preset("gsp4-4b-regular-eta2", &lg).unwrap()).unwrap();
    let restricted = sp4_from_gsp4(&packet).unwrap();
    assert_eq!(restricted.case, GaloisCase::Sp4C7b);
    assert_eq!(restricted.s_rank, 2);
    let labels: Vec<&str> = restricted.members.iter().map(|m| m.label.as_str()).collect();
    assert_eq!(
        labels,
        ["pi_1(eta2)", "pi_2(eta2)", "pi_alpha^+(eta2)", "pi_alpha^-(eta2)"]
    );
    // Unramified variant goes through the depth-zero family instead.
    let packet = assemble_packet(&preset("gsp4-4b-regular-eta", &lg).unwrap()).unwrap();
    let restricted = sp4_from_gsp4(&packet).unwrap();
    let labels: Vec<&str> = restricted.members.iter().map(|m| m.label.as_str()).collect();
    assert_eq!(
        labels,
        ["pi_1(eta)", "pi_2(eta)", "pi_beta(theta10)", "pi_gamma(theta10)"]
    );
    // With a nontrivial twist the restriction data is not declared.
    let packet = assemble_packet(&preset("gsp4-4b-regular-mixed", &lg).unwrap()).unwrap();
    assert!(matches!(sp4_from_gsp4(&packet), Err(EngineError::IncompleteData(_))));
    // Singletons pass through.
    let packet = assemble_packet(&preset("gsp4-1", &lg).unwrap()).unwrap();
    let restricted = sp4_from_gsp4(&packet).unwrap();
    assert_eq!(restricted.case, GaloisCase::Sp4C1);
    assert_eq!(restricted.members.len(), 1);
    // Only GSp4 packets restrict.
    let packet = assemble_packet(&preset("sp4-1", &lg).unwrap()).unwrap();
    assert!(matches!(sp4_from_gsp4(&packet), Err(EngineError::InvalidOperand(_))));
}

#[test]
fn depth_dichotomy_in_mixed_packets() {
    let lg = lg();
    // Depth zero: the non-series member comes from a depth-zero family.
    let packet = assemble_packet(&preset("sp4-5b-regular", &lg).unwrap()).unwrap();
    assert_eq!(packet.members[1].label, "pi_alpha(eta)");
    assert_eq!(packet.members[1].sc_ref.as_deref(), Some("pi_alpha_theta"));
    // Positive depth: a positive-depth construction with no table reference.
    let packet = assemble_packet(&preset("sp4-5b-regular-deep", &lg).unwrap()).unwrap();
    assert_eq!(packet.members[1].label, "pi_chi(V2)");
    assert!(packet.members[1].sc_ref.is_none());
    let packet = assemble_packet(&preset("gsp4-3a-regular", &lg).unwrap()).unwrap();
    assert_eq!(packet.members[1].sc_ref.as_deref(), Some("pi_S_theta_theta_chi"));
    let packet = assemble_packet(&preset("gsp4-3a-regular-deep", &lg).unwrap()).unwrap();
    assert!(packet.members[1].sc_ref.is_none());
}

#[test]
fn diagonal_quadratic_families_cover_all_three_characters() {
    let lg = lg();
    for (name, labels) in [
        ("sp4-7b-diagonal-eta", vec!["pi_1(eta)", "pi_2(eta)", "pi_beta(theta10)", "pi_gamma(theta10)"]),
        (
            "sp4-7b-diagonal-eta2",
            vec!["pi_1(eta2)", "pi_2(eta2)", "pi_alpha^+(eta2)", "pi_alpha^-(eta2)"],
        ),
        (
            "sp4-7b-diagonal-eta2p",
            vec!["pi_1(eta2p)", "pi_2(eta2p)", "pi_alpha^+(eta2p)", "pi_alpha^-(eta2p)"],
        ),
    ] {
        let packet = assemble_packet(&preset(name, &lg).unwrap()).unwrap();
        let got: Vec<&str> = packet.members.iter().map(|m| m.label.as_str()).collect();
        assert_eq!(got, labels, "{name}");
        assert!(packet.discrete, "{name}");
    }
}

#[test]
fn klingen_series_splits_into_four_for_repeated_quadratic() {
    // The two-orthogonal-pair case: rank two, four Klingen constituents.
    let lg = lg();
    let packet = assemble_packet(&preset("sp4-6b", &lg).unwrap()).unwrap();
    assert_eq!(packet.s_rank, 2);
    let got: Vec<&str> = packet.members.iter().map(|m| m.label.as_str()).collect();
    assert_eq!(
        got,
        [
            "(eta x| pi_1(V2))^+",
            "(eta x| pi_1(V2))^-",
            "(eta x| pi_2(V2))^+",
            "(eta x| pi_2(V2))^-"
        ]
    );
    assert!(packet.members.iter().all(|m| m.support == LeviLabel::Klingen));
}
