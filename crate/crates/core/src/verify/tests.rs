use super::*;
use crate::spectra::EigenMultiset;

fn desc(s: &str) -> FamilyDescriptor {
    parse_descriptor(s).unwrap()
}

fn ms(pairs: &[(i64, usize)]) -> EigenMultiset {
    EigenMultiset::from_pairs(pairs.iter().copied())
}

#[test]
fn qd16_matches_on_all_kinds() {
    let r = verify_instance(&desc("QD:16"), TheoremId::QuasidihedralProp, true).unwrap();
    assert_eq!(r.verdicts.adjacency, Verdict::Match);
    assert_eq!(r.verdicts.laplacian, Verdict::Match);
    assert_eq!(r.verdicts.signless, Verdict::Match);
    assert_eq!(
        r.oracle.laplacian.integer_eigenvalues,
        ms(&[(0, 5), (6, 5), (2, 4)])
    );
    assert!(r.errata.is_empty());
    assert_eq!(r.crosscheck_errors, Some(vec![]));
}

#[test]
fn odd_dihedral_hits_the_stray_term_erratum() {
    let r = verify_instance(&desc("D:14"), TheoremId::DihedralCor, false).unwrap();
    assert_eq!(r.verdicts.laplacian, Verdict::Match);
    assert_eq!(r.verdicts.signless, Verdict::MatchDerivedOnly);
    assert_eq!(r.errata, vec![ErratumId::DihedralCorOddQStray]);
    assert!(r.undocumented.is_empty());

    let r = verify_instance(&desc("D:16"), TheoremId::DihedralCor, false).unwrap();
    assert_eq!(r.verdicts.signless, Verdict::Match);
    assert!(r.errata.is_empty());
}

#[test]
fn gl23_hits_the_sign_erratum() {
    let r = verify_instance(&desc("GL2:3"), TheoremId::GLProp, false).unwrap();
    assert_eq!(r.verdicts.laplacian, Verdict::Match);
    assert_eq!(r.verdicts.signless, Verdict::MatchDerivedOnly);
    assert_eq!(r.errata, vec![ErratumId::GLPropQSign]);
    assert!(r.undocumented.is_empty());
}

#[test]
fn p_cubed_hits_the_exponent_erratum() {
    for s in ["HP:1,3", "P3:3", "HP:1,2", "P3:2"] {
        let r = verify_instance(&desc(s), TheoremId::PCubedCor, false).unwrap();
        assert_eq!(r.verdicts.laplacian, Verdict::MatchDerivedOnly, "{s}");
        assert_eq!(r.verdicts.signless, Verdict::Match, "{s}");
        assert_eq!(r.errata, vec![ErratumId::PCubedCorLExponent], "{s}");
    }
}

#[test]
fn dihedral_cor_sweep_defaults() {
    let s = verify_range(TheoremId::DihedralCor, &RangeOverrides::new(), false, false).unwrap();
    assert_eq!(s.reports.len(), 10); // m = 3..=12
    for r in &s.reports {
        assert_eq!(r.verdicts.laplacian, Verdict::Match, "{}", r.descriptor);
        assert_ne!(r.verdicts.signless, Verdict::Mismatch, "{}", r.descriptor);
    }
    // odd m hit the erratum, even m are clean
    assert_eq!(s.derived_only_count, 5);
    assert_eq!(s.match_count, 5);
    assert!(s.is_clean());
}

#[test]
fn sz_quotient_with_nontrivial_center() {
    let s = verify_range(TheoremId::SzQuotient, &RangeOverrides::new(), false, false).unwrap();
    assert_eq!(s.reports.len(), 2); // z = 1 and z = 2
    assert!(s
        .reports
        .iter()
        .all(|r| r.verdicts.worst() == Verdict::Match));
    assert_eq!(s.reports[1].group_order, 40);
}

#[test]
fn not_applicable_cases() {
    assert!(matches!(
        verify_instance(&desc("D:8"), TheoremId::QuaternionCor, false),
        Err(VerifyError::NotApplicable { .. })
    ));
    assert!(matches!(
        verify_instance(&desc("S:4"), TheoremId::ACTheorem, false),
        Err(VerifyError::NotApplicable { .. })
    ));
    assert!(matches!(
        verify_instance(&desc("S:4"), TheoremId::CliqueUnion, false),
        Err(VerifyError::NotApplicable { .. })
    ));
    assert!(matches!(
        verify_instance(&desc("D:10"), TheoremId::Order16Lemma, false),
        Err(VerifyError::NotApplicable { .. })
    ));
    // range override for a fixed-instance theorem is rejected
    let mut ranges = RangeOverrides::new();
    ranges.insert("m".into(), (3, 5));
    assert!(matches!(
        plan_instances(TheoremId::Order16Lemma, &ranges, false),
        Err(VerifyError::UnsupportedRange { .. })
    ));
}

#[test]
fn ac_theorem_is_the_master_invariant_on_the_corpus() {
    // every AC-group's oracle spectra equal the ACTheorem expectation
    // computed from its actual distinct centralizer sizes
    for d in default_corpus(false) {
        let g = build_group(&d).unwrap();
        if !g.is_ac_group().unwrap() {
            continue;
        }
        let r = verify_instance(&d, TheoremId::ACTheorem, false).unwrap();
        assert_eq!(r.verdicts.worst(), Verdict::Match, "{d}");
    }
}

#[test]
fn s4_report_matches_the_paper_exactly() {
    let s4 = verify_s4().unwrap();
    assert!(s4.l_char_poly_matches_printed);
    assert!(s4.q_char_poly_matches_printed);
    assert!(s4.l_integer_part_matches_printed);
    assert!(s4.l_residual_matches);
    assert!(s4.q_residual_matches);
    assert!(!s4.super_integral);
    assert_eq!(s4.q_printed_minus_oracle, vec![(5, 1)]);
    assert_eq!(s4.errata, vec![ErratumId::S4QSpecFiveTerm]);
    assert!(s4.is_as_documented());
}

#[test]
fn classify_s4() {
    let r = classify(&desc("S:4"), false).unwrap();
    assert!(!r.super_integral);
    assert!(!r.l_integral);
    assert!(!r.q_integral);
    assert_eq!(
        r.spectra.laplacian.residual.coeff_string(),
        "9,-48,70,-16,1"
    );
    assert!(r.clique_decomposition.is_none());
    assert!(!r.is_ac_group);
    assert!(r.solvable);
}

#[test]
fn classify_d8() {
    let r = classify(&desc("D:8"), true).unwrap();
    assert!(r.super_integral);
    assert_eq!(r.centralizer_count, 4);
    assert_eq!(r.commutativity_degree, ExactRational::new(5, 8));
    assert_eq!(r.crosscheck_errors, Some(vec![]));
    assert!(r.applicable_theorems.contains(&TheoremId::DihedralCor));
    assert!(r
        .applicable_theorems
        .contains(&TheoremId::ElemAbelianQuotient));
    assert!(r.applicable_theorems.contains(&TheoremId::PCubedCor));
}

#[test]
fn classify_d6_z3_uses_the_product_corollary() {
    let r = classify(&desc("prod(D:6,Z:3)"), false).unwrap();
    assert!(r.super_integral);
    assert!(r.applicable_theorems.contains(&TheoremId::ACProductCor));
    assert!(r.applicable_theorems.contains(&TheoremId::ACTheorem));
    assert_eq!(
        r.clique_decomposition.as_ref().unwrap().parts,
        vec![(6, 1), (3, 3)]
    );
}

#[test]
fn classify_is_deterministic() {
    let a = serde_json::to_string(&classify(&desc("SL2:3"), true).unwrap()).unwrap();
    let b = serde_json::to_string(&classify(&desc("SL2:3"), true).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn analysis_report_round_trips_through_json() {
    let r = classify(&desc("D:8"), false).unwrap();
    let json = serde_json::to_string_pretty(&r).unwrap();
    let back: AnalysisReport = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
    assert_eq!(back, r);
}

#[test]
fn default_corpus_is_deduplicated_and_buildable() {
    let corpus = default_corpus(false);
    // D_8 x Z_2 appears once even though it is listed twice
    let d8z2 = desc("prod(Z:2,D:8)");
    assert_eq!(corpus.iter().filter(|d| d.matches(&d8z2)).count(), 1);
    // metacyclic entries with n = 1 duplicate the dihedral families up to m = 20
    assert!(!corpus
        .iter()
        .any(|d| matches!(d, FamilyDescriptor::Metacyclic(m, 1) if *m <= 20)));
    for d in &corpus {
        build_group(d).unwrap_or_else(|e| panic!("{d}: {e}"));
    }
}

#[test]
fn applications_hold_over_the_default_corpus() {
    let corpus = default_corpus(false);
    let report = check_applications(&corpus).unwrap();
    assert_eq!(report.failures, 0, "{:?}", report.failed_rows());

    let find = |d: &str, c: CriterionId| {
        let dd = desc(d);
        report
            .rows
            .iter()
            .find(|r| r.descriptor == dd && r.criterion == c)
            .unwrap()
    };
    // D_8: 4-centralizer, Pr = 5/8, r = 3
    assert!(find("D:8", CriterionId::Cent4).holds);
    assert!(find("D:8", CriterionId::PrInSet).holds);
    assert!(find("D:8", CriterionId::NoncommutingRank)
        .hypothesis
        .contains("r = 3"));
    // D_6: 5-centralizer, Pr = 1/2, r = 4
    assert!(find("D:6", CriterionId::Cent5).holds);
    assert!(find("D:6", CriterionId::NoncommutingRank)
        .hypothesis
        .contains("r = 4"));
    // S_4 is in the planar list but excluded, predicted not super integral
    let s4_row = find("S:4", CriterionId::PlanarList);
    assert!(s4_row.holds);
    assert_eq!(s4_row.prediction, Some(false));
    assert!(s4_row.pass);
    // A_5 exercises the non-solvable Pr = 1/12 criterion
    assert!(find("A:5", CriterionId::PrNonSolvable).holds);
    // order-27 groups exercise the (p^2+p-1)/p^3 criterion at p = 3
    assert!(find("P3:3", CriterionId::PrPSquared).holds);
    assert!(find("HP:1,3", CriterionId::PrPSquared).holds);
}

#[test]
fn hanaki_p_range_sweep() {
    let mut ranges = RangeOverrides::new();
    ranges.insert("n".into(), (1, 1));
    ranges.insert("p".into(), (2, 5));
    let s = verify_range(TheoremId::HanakiPProp, &ranges, false, false).unwrap();
    // p = 4 is filtered out as non-prime
    assert_eq!(s.reports.len(), 3);
    assert!(s
        .reports
        .iter()
        .all(|r| r.verdicts.worst() == Verdict::Match));
}

#[test]
fn four_and_five_centralizer_groups_match_the_displayed_spectra() {
    use crate::spectra::EigenMultiset;
    let ms = |pairs: Vec<(i64, usize)>| EigenMultiset::from_pairs(pairs);
    for d in default_corpus(false) {
        let r = classify(&d, false).unwrap();
        let z = r.center_size as i64;
        let zu = r.center_size;
        if r.centralizer_count == 4 {
            // 4-centralizer forces G/Z = Z_2 x Z_2:
            // L-spec {0^3, z^{3z-3}}, Q-spec {(2z-2)^3, (z-2)^{3z-3}}
            assert_eq!(
                r.spectra.laplacian.integer_eigenvalues,
                ms(vec![(0, 3), (z, 3 * zu - 3)]),
                "{d}"
            );
            assert_eq!(
                r.spectra.signless.integer_eigenvalues,
                ms(vec![(2 * z - 2, 3), (z - 2, 3 * zu - 3)]),
                "{d}"
            );
        }
        if r.centralizer_count == 5 {
            // 5-centralizer forces G/Z = Z_3 x Z_3 or D_6
            let elem_abelian = ms(vec![(0, 4), (2 * z, 8 * zu - 4)]);
            let dihedral = ms(vec![(0, 4), (2 * z, 2 * zu - 1), (z, 3 * (zu - 1))]);
            let l = &r.spectra.laplacian.integer_eigenvalues;
            assert!(
                *l == elem_abelian || *l == dihedral,
                "{d}: L-spec {} fits neither 5-centralizer shape",
                l.to_text()
            );
        }
    }
}

#[test]
fn small_psl_identifications_hold_in_the_models() {
    // PSL(2,2) = S_3 = D_6 and PSL(2,3) = A_4: the fingerprints that back
    // descriptor matching agree between the models
    for (a, b) in [("PSL2:2", "D:6"), ("PSL2:3", "A:4"), ("PSL2:4", "A:5")] {
        let ga = build_group(&desc(a)).unwrap();
        let gb = build_group(&desc(b)).unwrap();
        assert_eq!(ga.order(), gb.order(), "{a} vs {b}");
        assert_eq!(ga.center().len(), gb.center().len(), "{a} vs {b}");
        assert_eq!(
            ga.commutativity_degree(),
            gb.commutativity_degree(),
            "{a} vs {b}"
        );
        assert_eq!(
            ga.centralizer_census().0,
            gb.centralizer_census().0,
            "{a} vs {b}"
        );
        assert_eq!(ga.order_histogram(), gb.order_histogram(), "{a} vs {b}");
    }
}

#[test]
fn pq_range_sweep_filters_to_valid_prime_pairs() {
    let mut ranges = RangeOverrides::new();
    ranges.insert("p".into(), (2, 3));
    ranges.insert("q".into(), (3, 7));
    let s = verify_range(TheoremId::PQProp, &ranges, false, false).unwrap();
    // valid (p, q) with p | q-1: (2,3), (2,5), (2,7), (3,7)
    let descs: Vec<String> = s.reports.iter().map(|r| r.descriptor.to_string()).collect();
    assert_eq!(descs, vec!["PQ:2,3", "PQ:2,5", "PQ:2,7", "PQ:3,7"]);
    assert!(s.reports.iter().all(|r| r.verdicts.worst() == Verdict::Match));
}

#[test]
fn a5_times_z2_keeps_commutativity_degree_one_twelfth() {
    // direct products with abelian factors preserve Pr(G), so A_5 x Z_2
    // satisfies the non-solvable Pr = 1/12 hypothesis and the prediction
    // holds: it is an AC-group product, hence super integral
    let d = desc("prod(A:5,Z:2)");
    let g = build_group(&d).unwrap();
    assert_eq!(g.commutativity_degree(), ExactRational::new(1, 12));
    assert!(!g.is_solvable());
    let r = classify(&d, false).unwrap();
    assert!(r.super_integral);
    assert!(r.applicable_theorems.contains(&TheoremId::ACProductCor));
    let report = check_applications(&[d]).unwrap();
    assert_eq!(report.failures, 0);
    let row = report
        .rows
        .iter()
        .find(|r| r.criterion == CriterionId::PrNonSolvable)
        .unwrap();
    assert!(row.holds);
    assert_eq!(row.prediction, Some(true));
}

#[test]
fn planar_and_toroidal_lists_verify() {
    for d in planar_list() {
        let r = classify(&d, false).unwrap();
        if d.matches(&FamilyDescriptor::Symmetric(4)) {
            assert!(!r.super_integral, "{d}");
        } else {
            assert!(r.super_integral, "{d}");
        }
    }
    for d in toroidal_list() {
        assert!(classify(&d, false).unwrap().super_integral, "{d}");
    }
    for d in complement_planar_list() {
        assert!(classify(&d, false).unwrap().super_integral, "{d}");
    }
}

#[test]
fn verification_report_round_trips_through_json() {
    let r = verify_instance(&desc("D:14"), TheoremId::DihedralCor, true).unwrap();
    let json = serde_json::to_string_pretty(&r).unwrap();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
}
