//! Property tests: the clique-union spectrum rule against the general
//! exact characteristic-polynomial route, Faddeev-LeVerrier against
//! Bareiss determinants and ranks on random symmetric matrices, and the
//! spec's structural invariants over the default corpus.

use comspec::closed_forms::clique_union_spectra;
use comspec::graph::{clique_decomposition, commuting_graph, CliqueDecomposition, SimpleGraph};
use comspec::group::build_group;
use comspec::matrix::SquareMatrix;
use comspec::poly::Poly;
use comspec::spectra::{
    extract_integer_spectrum, matrix_of, spectrum, spectrum_with_route, CharPolyRoute,
    EigenMultiset, MatrixKind,
};
use comspec::verify::{default_corpus, noncentral_centralizer_sizes};
use comspec::{Coeff, ExactRational, IntPolynomial};
use proptest::prelude::*;

fn parts_strategy() -> impl Strategy<Value = Vec<(usize, usize)>> {
    // up to 6 parts with sizes <= 6 here; the acceptance suite runs the
    // full-size version (20 parts, sizes <= 10, 200 cases)
    prop::collection::vec((1usize..=6, 1usize..=3), 1..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clique_union_spectra_match_general_oracle(parts in parts_strategy()) {
        let graph = SimpleGraph::clique_union(&parts);
        let decomposition = CliqueDecomposition::new(parts);
        let expected = clique_union_spectra(&decomposition);
        for kind in MatrixKind::ALL {
            let oracle = spectrum_with_route(&graph, kind, CharPolyRoute::GeneralOnly).unwrap();
            prop_assert!(oracle.is_integral());
            prop_assert_eq!(
                &oracle.integer_eigenvalues,
                expected.for_kind(kind),
                "{:?}", kind
            );
        }
    }

    #[test]
    fn char_poly_agrees_with_bareiss_det_and_rank(
        entries in prop::collection::vec(-5i64..=5, 21),
        shift in -6i64..=6,
    ) {
        // symmetric 6x6 from 21 free entries
        let n = 6;
        let mut m = SquareMatrix::<Coeff>::zeros(n);
        let mut it = entries.into_iter();
        for i in 0..n {
            for j in i..n {
                let v = Coeff::from(it.next().unwrap());
                m[(i, j)] = v.clone();
                m[(j, i)] = v;
            }
        }
        let p = m.char_poly();
        // constant term is (-1)^n det(M)
        prop_assert_eq!(p.coeff(0), m.det_bareiss());
        // coefficient of x^{n-1} is -trace
        prop_assert_eq!(p.coeff(n - 1), -m.trace());
        // symmetric matrices are diagonalizable: algebraic multiplicity of
        // an integer eigenvalue equals n - rank(M - vI)
        let (mult, _) = p.root_multiplicity(shift);
        let nullity = n - m.shift_diagonal(shift).rank_bareiss();
        prop_assert_eq!(mult, nullity);
    }

    #[test]
    fn extraction_recovers_planted_roots(
        roots in prop::collection::btree_map(-8i64..=8, 1usize..=3, 0..=4),
        with_residual in any::<bool>(),
    ) {
        let mut factors: Vec<(IntPolynomial, u32)> = roots
            .iter()
            .map(|(&v, &m)| (Poly::linear(v), m as u32))
            .collect();
        if with_residual {
            // x^2 + 1 has no integer roots
            factors.push((Poly::new(vec![1.into(), 0.into(), 1.into()]), 1));
        }
        let p = Poly::from_factors(&factors);
        let out = extract_integer_spectrum(&p, -10, 10);
        let expected = EigenMultiset::from_pairs(roots.iter().map(|(&v, &m)| (v, m)));
        prop_assert_eq!(out.integer_eigenvalues, expected);
        if with_residual {
            prop_assert_eq!(out.residual.coeff_string(), "1,0,1");
        } else {
            prop_assert!(out.residual.is_one());
        }
    }
}

#[test]
fn corpus_structural_invariants() {
    for desc in default_corpus(false) {
        let g = build_group(&desc).unwrap();
        let order = g.order();
        let center = g.center();

        // center = intersection of all centralizers
        let mut inter = comspec::group::ElementSet::full(order);
        for x in 0..order {
            inter.intersect_with(&g.centralizer(x).unwrap());
        }
        assert_eq!(inter.members(), center.members(), "{desc}");

        // Pr(G) * |G|^2 = sum of centralizer sizes
        let sum: u64 = (0..order)
            .map(|x| g.centralizer(x).unwrap().len() as u64)
            .sum();
        assert_eq!(
            g.commutativity_degree(),
            ExactRational::new(sum, (order * order) as u64),
            "{desc}"
        );

        // non-abelian bound Pr(G) <= 5/8 and |Cent(G)| >= 4
        assert!(
            g.commutativity_degree() <= ExactRational::new(5, 8),
            "{desc}"
        );
        assert!(g.centralizer_census().0 >= 4, "{desc}");

        // quotient order times center order is the group order
        assert_eq!(
            g.quotient_by_center().order() * center.len(),
            order,
            "{desc}"
        );

        let graph = commuting_graph(&g).unwrap();

        // vertex degrees track centralizer sizes
        let labels = graph.vertex_labels.clone().unwrap();
        for (v, &x) in labels.iter().enumerate() {
            assert_eq!(
                graph.degree(v),
                g.centralizer(x).unwrap().len() - center.len() - 1,
                "{desc} vertex {v}"
            );
        }

        // AC iff the commuting graph decomposes into cliques, and then the
        // cliques are exactly the distinct non-central centralizers
        let decomposition = clique_decomposition(&graph);
        assert_eq!(g.is_ac_group().unwrap(), decomposition.is_some(), "{desc}");
        if let Some(d) = &decomposition {
            assert_eq!(
                d.clique_count(),
                noncentral_centralizer_sizes(&g).len(),
                "{desc}"
            );
            assert_eq!(d.vertex_count(), order - center.len(), "{desc}");
        }

        // Laplacian zero multiplicity counts connected components
        let l = spectrum(&graph, MatrixKind::Laplacian).unwrap();
        assert_eq!(
            l.integer_eigenvalues.multiplicity_of(0),
            graph.connected_components().len(),
            "{desc}"
        );

        // eigenvalue sums match traces
        for kind in MatrixKind::ALL {
            let p: IntPolynomial = matrix_of::<Coeff>(&graph, kind).char_poly();
            let trace: i64 = match kind {
                MatrixKind::Adjacency => 0,
                _ => (0..graph.vertex_count())
                    .map(|v| graph.degree(v) as i64)
                    .sum(),
            };
            assert_eq!(
                p.coeff(graph.vertex_count() - 1),
                Coeff::from(-trace),
                "{desc} {kind:?}"
            );
        }
    }
}

#[test]
fn product_center_sizes_multiply() {
    use comspec::group::{direct_product, parse_descriptor};
    for (a, b) in [
        ("D:6", "Z:3"),
        ("Q:8", "Z:2"),
        ("A:4", "Z:2"),
        ("D:8", "D:6"),
    ] {
        let ga = build_group(&parse_descriptor(a).unwrap()).unwrap();
        let gb = build_group(&parse_descriptor(b).unwrap()).unwrap();
        let p = direct_product(&ga, &gb).unwrap();
        assert_eq!(
            p.center().len(),
            ga.center().len() * gb.center().len(),
            "{a} x {b}"
        );
        assert_eq!(p.order(), ga.order() * gb.order());
    }
}
