//! Commuting graphs of finite non-abelian groups and their exact spectra.
//!
//! The pipeline: build a concrete group from a family descriptor, form its
//! commuting graph on the non-central elements, compute exact integer
//! characteristic polynomials of the adjacency / Laplacian / signless
//! Laplacian matrices, extract integer eigenvalues with multiplicities, and
//! compare against the closed-form spectra predicted per family. Groups are
//! classified as integral / L-integral / Q-integral / super integral.

pub mod closed_forms;
pub mod gf;
pub mod graph;
pub mod group;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod spectra;
pub mod verify;

/// Default coefficient type for exact spectral computations.
pub type Coeff = num_bigint::BigInt;
/// Exact integer-coefficient polynomial (characteristic polynomials).
pub type IntPolynomial = poly::Poly<Coeff>;
/// Exact integer matrix at the default coefficient type.
pub type IntMatrix = matrix::SquareMatrix<Coeff>;
/// Reduced non-negative rational, used for commutativity degrees.
pub type ExactRational = num_rational::Ratio<u64>;
