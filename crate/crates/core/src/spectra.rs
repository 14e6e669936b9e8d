//! Exact spectra of graph matrices: characteristic polynomials per
//! connected component (closed forms for complete components,
//! Faddeev–LeVerrier otherwise), integer-eigenvalue extraction over the
//! Gershgorin interval, and a rank-based multiplicity cross-check.

use crate::graph::SimpleGraph;
use crate::matrix::SquareMatrix;
use crate::poly::Poly;
use crate::scalar::ExactScalar;
use crate::{Coeff, IntPolynomial};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest non-complete component the general exact path will accept.
pub const MAX_GENERAL_COMPONENT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectraError {
    #[error(
        "component with {0} vertices is not complete and exceeds the {MAX_GENERAL_COMPONENT}-vertex \
         limit for exact characteristic polynomials"
    )]
    ComponentTooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "A",
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
        }
    }
}

/// Whether complete components may use the closed-form characteristic
/// polynomial or every component must run Faddeev–LeVerrier. The general
/// route is the independent oracle in tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharPolyRoute {
    Auto,
    GeneralOnly,
}

/// Multiset of integer eigenvalues, descending by value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct EigenMultiset {
    /// (eigenvalue, multiplicity), sorted descending by eigenvalue.
    pub values: Vec<(i64, usize)>,
}

impl EigenMultiset {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut map = std::collections::BTreeMap::new();
        for (v, m) in pairs {
            if m > 0 {
                *map.entry(v).or_insert(0) += m;
            }
        }
        EigenMultiset {
            values: map.into_iter().rev().collect(),
        }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.values.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, v: i64) -> usize {
        self.values
            .iter()
            .find(|&&(val, _)| val == v)
            .map_or(0, |&(_, m)| m)
    }

    pub fn merge(&self, other: &EigenMultiset) -> EigenMultiset {
        EigenMultiset::from_pairs(self.values.iter().chain(other.values.iter()).copied())
    }

    /// `value^multiplicity` terms, descending by value.
    pub fn to_text(&self) -> String {
        if self.values.is_empty() {
            return "{}".to_string();
        }
        self.values
            .iter()
            .map(|&(v, m)| format!("{v}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Integer part of a spectrum plus the residual factor with no integer
/// roots (constant 1 when the spectrum is fully integral).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumOutcome {
    pub integer_eigenvalues: EigenMultiset,
    pub residual: IntPolynomial,
}

impl SpectrumOutcome {
    pub fn is_integral(&self) -> bool {
        self.residual.is_one()
    }

    pub fn vertex_count(&self) -> usize {
        self.integer_eigenvalues.total_multiplicity() + self.residual.degree().unwrap_or(0)
    }

    /// Serialized as `value^mult ...` descending, plus ` residual=<coeffs>`
    /// when the residual is non-trivial.
    pub fn to_text(&self) -> String {
        let mut out = self.integer_eigenvalues.to_text();
        if !self.is_integral() {
            out.push_str(&format!(" residual={}", self.residual.coeff_string()));
        }
        out
    }
}

/// The A, L = D - A, or Q = D + A matrix of a graph, over any exact scalar.
pub fn matrix_of<S: ExactScalar>(g: &SimpleGraph, kind: MatrixKind) -> SquareMatrix<S> {
    let n = g.vertex_count();
    let mut m = SquareMatrix::zeros(n);
    for u in 0..n {
        for v in g.neighbors(u) {
            m[(u, v)] = match kind {
                MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => S::one(),
                MatrixKind::Laplacian => -S::one(),
            };
        }
        match kind {
            MatrixKind::Adjacency => {}
            MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
                m[(u, u)] = S::from(g.degree(u) as i64);
            }
        }
    }
    m
}

/// Closed-form characteristic polynomial of K_s:
/// A: (x - s + 1)(x + 1)^{s-1};  L: x(x - s)^{s-1};
/// Q: (x - 2s + 2)(x - s + 2)^{s-1}.
pub fn complete_char_poly<S: ExactScalar>(s: usize, kind: MatrixKind) -> Poly<S> {
    let s = s as i64;
    let (single, repeated) = match kind {
        MatrixKind::Adjacency => (s - 1, -1),
        MatrixKind::Laplacian => (0, s),
        MatrixKind::SignlessLaplacian => (2 * s - 2, s - 2),
    };
    Poly::from_factors(&[
        (Poly::linear(single), 1),
        (Poly::linear(repeated), (s - 1) as u32),
    ])
}

/// Whether the vertex set induces a complete subgraph (components only,
/// so a degree check suffices).
fn component_is_complete(g: &SimpleGraph, comp: &[usize]) -> bool {
    comp.iter().all(|&v| g.degree(v) == comp.len() - 1)
}

fn induced_matrix<S: ExactScalar>(
    g: &SimpleGraph,
    comp: &[usize],
    kind: MatrixKind,
) -> SquareMatrix<S> {
    let k = comp.len();
    let mut m = SquareMatrix::zeros(k);
    for (i, &u) in comp.iter().enumerate() {
        for (j, &v) in comp.iter().enumerate() {
            if i != j && g.has_edge(u, v) {
                m[(i, j)] = match kind {
                    MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => S::one(),
                    MatrixKind::Laplacian => -S::one(),
                };
            }
        }
        if kind != MatrixKind::Adjacency {
            // degrees within the component equal degrees in the graph
            m[(i, i)] = S::from(g.degree(u) as i64);
        }
    }
    m
}

fn component_char_poly<S: ExactScalar>(
    g: &SimpleGraph,
    comp: &[usize],
    kind: MatrixKind,
    route: CharPolyRoute,
) -> Result<Poly<S>, SpectraError> {
    if route == CharPolyRoute::Auto && component_is_complete(g, comp) {
        return Ok(complete_char_poly(comp.len(), kind));
    }
    if comp.len() > MAX_GENERAL_COMPONENT && !component_is_complete(g, comp) {
        return Err(SpectraError::ComponentTooLarge(comp.len()));
    }
    Ok(induced_matrix::<S>(g, comp, kind).char_poly())
}

/// Characteristic polynomial of the whole graph matrix, computed per
/// connected component and multiplied.
pub fn graph_char_poly<S: ExactScalar>(
    g: &SimpleGraph,
    kind: MatrixKind,
    route: CharPolyRoute,
) -> Result<Poly<S>, SpectraError> {
    let mut acc = Poly::one();
    for comp in g.connected_components() {
        acc = acc.mul(&component_char_poly(g, &comp, kind, route)?);
    }
    Ok(acc)
}

/// Gershgorin interval for the given matrix kind of a graph with maximum
/// degree `max_deg`.
pub fn gershgorin_bounds(kind: MatrixKind, max_deg: usize) -> (i64, i64) {
    let d = max_deg as i64;
    match kind {
        MatrixKind::Adjacency => (-d, d),
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => (0, 2 * d),
    }
}

/// Extracts every integer root in [lo, hi] with its multiplicity by
/// repeated exact synthetic division; the residual is the quotient left
/// after all integer roots are removed.
pub fn extract_integer_spectrum(p: &IntPolynomial, lo: i64, hi: i64) -> SpectrumOutcome {
    let mut residual = p.clone();
    let mut pairs = Vec::new();
    for v in lo..=hi {
        let (mult, rest) = residual.root_multiplicity(v);
        if mult > 0 {
            pairs.push((v, mult));
            residual = rest;
        }
    }
    SpectrumOutcome {
        integer_eigenvalues: EigenMultiset::from_pairs(pairs),
        residual,
    }
}

/// Full spectrum computation: per-component characteristic polynomials,
/// integer extraction over the Gershgorin interval, outcomes merged.
pub fn spectrum_with_route(
    g: &SimpleGraph,
    kind: MatrixKind,
    route: CharPolyRoute,
) -> Result<SpectrumOutcome, SpectraError> {
    let (lo, hi) = gershgorin_bounds(kind, g.max_degree());
    let mut merged = EigenMultiset::default();
    let mut residual = IntPolynomial::one();
    for comp in g.connected_components() {
        let p: Poly<Coeff> = component_char_poly(g, &comp, kind, route)?;
        let outcome = extract_integer_spectrum(&p, lo, hi);
        merged = merged.merge(&outcome.integer_eigenvalues);
        residual = residual.mul(&outcome.residual);
    }
    Ok(SpectrumOutcome {
        integer_eigenvalues: merged,
        residual,
    })
}

pub fn spectrum(g: &SimpleGraph, kind: MatrixKind) -> Result<SpectrumOutcome, SpectraError> {
    spectrum_with_route(g, kind, CharPolyRoute::Auto)
}

/// Integrality of the adjacency, Laplacian and signless Laplacian spectra,
/// and their conjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralityFlags {
    pub integral: bool,
    pub l_integral: bool,
    pub q_integral: bool,
    pub super_integral: bool,
}

pub fn integrality_flags(g: &SimpleGraph) -> Result<IntegralityFlags, SpectraError> {
    let a = spectrum(g, MatrixKind::Adjacency)?.is_integral();
    let l = spectrum(g, MatrixKind::Laplacian)?.is_integral();
    let q = spectrum(g, MatrixKind::SignlessLaplacian)?.is_integral();
    Ok(IntegralityFlags {
        integral: a,
        l_integral: l,
        q_integral: q,
        super_integral: a && l && q,
    })
}

/// Independent multiplicity verification: for each claimed integer
/// eigenvalue v, the multiplicity must equal n - rank(M - vI), computed by
/// exact fraction-free elimination per component. Valid because the
/// matrices are real symmetric, hence diagonalizable.
pub fn verify_multiplicities_by_rank(
    g: &SimpleGraph,
    kind: MatrixKind,
    outcome: &SpectrumOutcome,
) -> Result<(), String> {
    let comps = g.connected_components();
    for &(v, claimed) in &outcome.integer_eigenvalues.values {
        let mut nullity = 0usize;
        for comp in &comps {
            let m: SquareMatrix<Coeff> = induced_matrix(g, comp, kind);
            nullity += comp.len() - m.shift_diagonal(v).rank_bareiss();
        }
        if nullity != claimed {
            return Err(format!(
                "{} eigenvalue {v}: synthetic division says {claimed}, rank says {nullity}",
                kind.short_name()
            ));
        }
    }
    Ok(())
}
