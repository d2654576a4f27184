//! Exact GKM graph cohomology of the flag manifolds of types `A2` and `G2`.
//!
//! The crate builds the labeled graphs from their root systems, decides
//! membership in the graph cohomology ring, reduces classes to the module
//! basis over `Z[t1,t2,t3]`, and computes graded ranks by exact linear
//! algebra. All arithmetic is generic over the integer coefficient type; the
//! aliases below fix it to arbitrary-precision integers.

pub mod cohomology;
pub mod exactla;
pub mod gkmgraph;
pub mod polyring;
pub mod rootsys;
pub mod scalar;

pub use num_bigint::BigInt;

pub use cohomology::{CohomologyClass, CohomologyError, GeneratorSet, ReductionCertificate};
pub use gkmgraph::LabeledGraph;
pub use polyring::{LinearForm, Weight};
pub use rootsys::{Permutation, RootSystem, Sign, WeylElement};
pub use scalar::{Coefficient, IntegralDomain};

/// Polynomials in `t1, t2, t3` with arbitrary-precision coefficients.
pub type Poly = polyring::Polynomial<BigInt>;

/// A class with arbitrary-precision coefficients.
pub type Class = cohomology::CohomologyClass<BigInt>;

/// A basis expansion with arbitrary-precision coefficients.
pub type Certificate = cohomology::ReductionCertificate<BigInt>;

/// Generator classes with arbitrary-precision coefficients.
pub type Generators = cohomology::GeneratorSet<BigInt>;
