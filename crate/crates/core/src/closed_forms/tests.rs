use super::*;
use crate::graph::CliqueDecomposition;

fn ms(pairs: &[(i64, usize)]) -> EigenMultiset {
    EigenMultiset::from_pairs(pairs.iter().copied())
}

#[test]
fn clique_union_rule_examples() {
    // Gamma of Sz(2): K_4 + 5K_3
    let d = CliqueDecomposition::new(vec![(4, 1), (3, 5)]);
    let s = clique_union_spectra(&d);
    assert_eq!(s.laplacian, ms(&[(0, 6), (4, 3), (3, 10)]));
    assert_eq!(s.signless, ms(&[(6, 1), (2, 3), (4, 5), (1, 10)]));
    assert_eq!(s.vertex_count, 19);

    // 3K_2
    let d = CliqueDecomposition::new(vec![(2, 3)]);
    let s = clique_union_spectra(&d);
    assert_eq!(s.laplacian, ms(&[(0, 3), (2, 3)]));
    assert_eq!(s.signless, ms(&[(2, 3), (0, 3)]));

    // isolated vertices: kK_1
    let d = CliqueDecomposition::new(vec![(1, 7)]);
    let s = clique_union_spectra(&d);
    assert_eq!(s.laplacian, ms(&[(0, 7)]));
    assert_eq!(s.signless, ms(&[(0, 7)]));
    assert_eq!(s.adjacency, ms(&[(0, 7)]));
}

#[test]
fn expected_decompositions() {
    let d =
        expected_clique_decomposition(TheoremId::SzQuotient, &Params::new().with("z", 1)).unwrap();
    assert_eq!(d.parts, vec![(4, 1), (3, 5)]);

    let d =
        expected_clique_decomposition(TheoremId::PQProp, &Params::new().with("p", 3).with("q", 7))
            .unwrap();
    assert_eq!(d.parts, vec![(6, 1), (2, 7)]);

    let d = expected_clique_decomposition(
        TheoremId::HanakiPProp,
        &Params::new().with("n", 1).with("p", 2),
    )
    .unwrap();
    assert_eq!(d.parts, vec![(2, 3)]);

    let d = expected_clique_decomposition(TheoremId::PSLProp, &Params::new().with("k", 2)).unwrap();
    assert_eq!(d.parts, vec![(4, 6), (3, 5), (2, 10)]);
    assert_eq!(d.vertex_count(), 59);
}

#[test]
fn quaternion_cor_at_n4() {
    let s = expected_spectra(TheoremId::QuaternionCor, &Params::new().with("n", 4)).unwrap();
    assert_eq!(s.laplacian, ms(&[(0, 5), (6, 5), (2, 4)]));
    assert_eq!(s.signless, ms(&[(10, 1), (4, 5), (2, 4), (0, 4)]));
}

#[test]
fn psl_prop_at_k2_matches_paper() {
    let s = expected_spectra(TheoremId::PSLProp, &Params::new().with("k", 2)).unwrap();
    assert_eq!(s.laplacian, ms(&[(0, 21), (3, 10), (2, 10), (4, 18)]));
    // printed A_5 Q-spec {4^5, 1^10, 2^10, 0^10, 6^6, 2^18} merged
    assert_eq!(s.signless, ms(&[(6, 6), (4, 5), (2, 28), (1, 10), (0, 10)]));
}

#[test]
fn order16_lemma_spectra() {
    let s = expected_spectra(TheoremId::Order16Lemma, &Params::new()).unwrap();
    assert_eq!(s.laplacian, ms(&[(0, 3), (4, 9)]));
    assert_eq!(s.signless, ms(&[(6, 3), (2, 9)]));
    assert_eq!(s.vertex_count, 12);
}

#[test]
fn ac_theorem_for_a4_and_sl23() {
    // A_4: distinct centralizer sizes 4, 3, 3, 3, 3 with |Z| = 1
    let p = Params::new().with("z", 1).with_sizes(vec![4, 3, 3, 3, 3]);
    let s = expected_spectra(TheoremId::ACTheorem, &p).unwrap();
    assert_eq!(s.laplacian, ms(&[(0, 5), (3, 2), (2, 4)]));
    assert_eq!(s.signless, ms(&[(4, 1), (1, 2), (2, 4), (0, 4)]));

    // SL(2,3): sizes 4,4,4,6,6,6,6 with |Z| = 2 -> 3K_2 + 4K_4
    let p = Params::new()
        .with("z", 2)
        .with_sizes(vec![4, 4, 4, 6, 6, 6, 6]);
    let s = expected_spectra(TheoremId::ACTheorem, &p).unwrap();
    assert_eq!(s.laplacian, ms(&[(0, 7), (2, 3), (4, 12)]));
    assert_eq!(s.signless, ms(&[(0, 3), (2, 15), (6, 4)]));
}

#[test]
fn ac_product_cor_for_d6_z3() {
    // H = D_6 has centralizer sizes 3, 2, 2, 2 and |Z(H)| = 1; A = Z_3
    let p = Params::new()
        .with("a", 3)
        .with("z", 1)
        .with_sizes(vec![3, 2, 2, 2]);
    let s = expected_spectra(TheoremId::ACProductCor, &p).unwrap();
    let d = expected_clique_decomposition(TheoremId::ACProductCor, &p).unwrap();
    assert_eq!(d.parts, vec![(6, 1), (3, 3)]);
    assert_eq!(s.laplacian, ms(&[(0, 4), (6, 5), (3, 6)]));
    assert_eq!(s.vertex_count, 15);
}

#[test]
fn parameter_errors() {
    assert!(matches!(
        expected_spectra(TheoremId::QuaternionCor, &Params::new()),
        Err(ClosedFormError::MissingParameter { .. })
    ));
    let err = expected_spectra(TheoremId::QuasidihedralProp, &Params::new().with("n", 3));
    assert!(matches!(err, Err(ClosedFormError::DomainViolation { .. })));
    let msg = err.unwrap_err().to_string();
    assert!(msg.contains("n >= 4"), "{msg}");
    assert!(matches!(
        expected_spectra(TheoremId::PQProp, &Params::new().with("p", 3).with("q", 5)),
        Err(ClosedFormError::DomainViolation { .. })
    ));
    assert!(matches!(
        expected_clique_decomposition(TheoremId::CliqueUnion, &Params::new()),
        Err(ClosedFormError::DecompositionSuppliedDirectly { .. })
    ));
}

/// Sample parameter assignments per theorem, used by the consistency and
/// diff sweeps below.
fn sample_instances() -> Vec<(TheoremId, Params)> {
    use TheoremId::*;
    let mut out = Vec::new();
    for z in 1..=3 {
        out.push((SzQuotient, Params::new().with("z", z)));
    }
    for p in [2i64, 3, 5] {
        for z in 1..=3 {
            out.push((ElemAbelianQuotient, Params::new().with("p", p).with("z", z)));
        }
    }
    for m in 2..=8 {
        for z in 1..=3 {
            out.push((DihedralQuotient, Params::new().with("m", m).with("z", z)));
        }
    }
    for m in 3..=10 {
        for n in 1..=4 {
            out.push((MetacyclicCor, Params::new().with("m", m).with("n", n)));
        }
    }
    for m in 3..=12 {
        out.push((DihedralCor, Params::new().with("m", m)));
    }
    for n in 2..=8 {
        out.push((QuaternionCor, Params::new().with("n", n)));
    }
    for p in [2i64, 3, 5] {
        out.push((PCubedCor, Params::new().with("p", p)));
    }
    for (p, q) in [(2i64, 3i64), (2, 5), (3, 7), (5, 11), (2, 7)] {
        out.push((PQProp, Params::new().with("p", p).with("q", q)));
    }
    for n in 4..=6 {
        out.push((QuasidihedralProp, Params::new().with("n", n)));
    }
    for k in 2..=4 {
        out.push((PSLProp, Params::new().with("k", k)));
    }
    for q in [3i64, 4, 5] {
        out.push((GLProp, Params::new().with("q", q)));
    }
    for n in 2..=4 {
        out.push((HanakiThetaProp, Params::new().with("n", n)));
    }
    for (n, p) in [(1i64, 2i64), (1, 3), (1, 5), (2, 2)] {
        out.push((HanakiPProp, Params::new().with("n", n).with("p", p)));
    }
    out.push((
        ACTheorem,
        Params::new().with("z", 1).with_sizes(vec![4, 3, 3, 3, 3]),
    ));
    out.push((
        ACTheorem,
        Params::new()
            .with("z", 2)
            .with_sizes(vec![4, 4, 4, 6, 6, 6, 6]),
    ));
    out.push((
        ACProductCor,
        Params::new()
            .with("a", 3)
            .with("z", 1)
            .with_sizes(vec![3, 2, 2, 2]),
    ));
    out.push((
        ACProductCor,
        Params::new()
            .with("a", 2)
            .with("z", 1)
            .with_sizes(vec![4, 3, 3, 3, 3]),
    ));
    out.push((Order16Lemma, Params::new()));
    out
}

#[test]
fn derived_branch_routes_through_decomposition() {
    for (id, params) in sample_instances() {
        let d = expected_clique_decomposition(id, &params).unwrap();
        let via_rule = clique_union_spectra(&d);
        let derived = expected_spectra(id, &params).unwrap();
        assert_eq!(derived.adjacency, via_rule.adjacency, "{id} {params:?}");
        assert_eq!(derived.laplacian, via_rule.laplacian, "{id} {params:?}");
        assert_eq!(derived.signless, via_rule.signless, "{id} {params:?}");
        assert_eq!(derived.vertex_count, d.vertex_count());
    }
}

#[test]
fn verbatim_diff_is_exactly_the_documented_errata() {
    use std::collections::BTreeSet;
    let mut diffs: BTreeSet<(TheoremId, &'static str, ErratumId)> = BTreeSet::new();
    for (id, params) in sample_instances() {
        let derived = expected_spectra(id, &params).unwrap();
        let verbatim = verbatim_spectra(id, &params).unwrap();
        for (kind, side) in [
            (MatrixKind::Laplacian, &verbatim.laplacian),
            (MatrixKind::SignlessLaplacian, &verbatim.signless),
        ] {
            let expect = derived.for_kind(kind);
            let disagrees = side.terms != *expect || !side.defects.is_empty();
            if disagrees {
                assert!(
                    !side.defects.is_empty(),
                    "undocumented verbatim/derived disagreement at {id} {kind:?} {params:?}: \
                     verbatim {:?} vs derived {:?}",
                    side.terms,
                    expect
                );
                for d in &side.defects {
                    diffs.insert((id, kind.short_name(), d.erratum));
                }
            }
        }
    }
    let expected: BTreeSet<(TheoremId, &'static str, ErratumId)> = BTreeSet::from([
        (TheoremId::DihedralCor, "Q", ErratumId::DihedralCorOddQStray),
        (TheoremId::PCubedCor, "L", ErratumId::PCubedCorLExponent),
        (TheoremId::GLProp, "Q", ErratumId::GLPropQSign),
    ]);
    assert_eq!(diffs, expected);
}

#[test]
fn even_dihedral_verbatim_is_clean() {
    for m in [4i64, 6, 8, 10, 12] {
        let params = Params::new().with("m", m);
        let derived = expected_spectra(TheoremId::DihedralCor, &params).unwrap();
        let verbatim = verbatim_spectra(TheoremId::DihedralCor, &params).unwrap();
        assert!(verbatim.signless.defects.is_empty(), "m = {m}");
        assert_eq!(verbatim.signless.terms, derived.signless, "m = {m}");
        assert_eq!(verbatim.laplacian.terms, derived.laplacian, "m = {m}");
    }
}

#[test]
fn multiplicity_sums_match_group_sizes() {
    // vertex counts |G| - |Z(G)| from the known order and center formulas
    let cases: Vec<(TheoremId, Params, usize)> = vec![
        (TheoremId::DihedralCor, Params::new().with("m", 7), 13),
        (TheoremId::DihedralCor, Params::new().with("m", 8), 14),
        (TheoremId::QuaternionCor, Params::new().with("n", 4), 14),
        (TheoremId::QuasidihedralProp, Params::new().with("n", 4), 14),
        (
            TheoremId::MetacyclicCor,
            Params::new().with("m", 5).with("n", 2),
            18,
        ),
        (
            TheoremId::PQProp,
            Params::new().with("p", 3).with("q", 7),
            20,
        ),
        (TheoremId::PSLProp, Params::new().with("k", 2), 59),
        (TheoremId::GLProp, Params::new().with("q", 3), 46),
        (TheoremId::HanakiThetaProp, Params::new().with("n", 2), 12),
        (
            TheoremId::HanakiPProp,
            Params::new().with("n", 1).with("p", 3),
            24,
        ),
        (TheoremId::PCubedCor, Params::new().with("p", 3), 24),
        (TheoremId::SzQuotient, Params::new().with("z", 2), 38),
        (TheoremId::Order16Lemma, Params::new(), 12),
    ];
    for (id, params, expected_vertices) in cases {
        let s = expected_spectra(id, &params).unwrap();
        assert_eq!(s.vertex_count, expected_vertices, "{id}");
        for kind in [
            MatrixKind::Adjacency,
            MatrixKind::Laplacian,
            MatrixKind::SignlessLaplacian,
        ] {
            assert_eq!(
                s.for_kind(kind).total_multiplicity(),
                expected_vertices,
                "{id} {kind:?}"
            );
        }
    }
}

#[test]
fn s4_reference_data() {
    let l = s4::printed_l_char_poly();
    assert_eq!(l.degree(), Some(23));
    assert!(l.is_monic());
    let q = s4::printed_q_char_poly();
    assert_eq!(q.degree(), Some(23));
    assert!(q.is_monic());
    // the printed Q multiset overshoots the vertex count by one
    assert_eq!(s4::PRINTED_Q_MULTIPLICITY_SUM, s4::VERTEX_COUNT + 1);
    // 5 is not a root of the printed Q characteristic polynomial
    assert!(!q.eval_i64(5).eq(&crate::Coeff::from(0)));
    assert_eq!(
        s4::printed_l_integer_part().total_multiplicity() + 4,
        s4::VERTEX_COUNT
    );
}

#[test]
fn extraction_over_wide_bounds_matches_printed_s4_spectrum() {
    // the printed L characteristic polynomial of S_4 scanned over [0, 46]
    let out = crate::spectra::extract_integer_spectrum(&s4::printed_l_char_poly(), 0, 46);
    assert_eq!(
        out.integer_eigenvalues,
        ms(&[(0, 5), (1, 3), (2, 4), (3, 6), (5, 1)])
    );
    assert_eq!(out.residual, s4::expected_l_residual());
}

#[test]
fn dispatch_table_covers_every_theorem() {
    let table = dispatch_table();
    assert_eq!(table.len(), TheoremId::ALL.len());
    for id in TheoremId::ALL {
        assert!(table.iter().any(|t| t.id == id), "{id} missing");
    }
    // the listing serializes
    let json = serde_json::to_string(&table).unwrap();
    assert!(json.contains("clique_structure"));
}

#[test]
fn documented_errata_list_is_the_four_known_ones() {
    let errata = documented_errata();
    assert_eq!(errata.len(), 4);
    let ids: Vec<ErratumId> = errata.iter().map(|e| e.id).collect();
    assert_eq!(ids, ErratumId::ALL.to_vec());
}

#[test]
fn theorem_names_round_trip() {
    for id in TheoremId::ALL {
        assert_eq!(TheoremId::from_name(id.name()), Some(id));
    }
    assert_eq!(TheoremId::from_name("nope"), None);
}
