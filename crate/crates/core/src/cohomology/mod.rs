//! Graph cohomology classes, the generators and their relations, reduction
//! to the module basis, and graded ranks.

mod class;
mod generators;
mod random;
mod ranks;
mod reduce;
mod symbolic;

pub use class::{ClassJson, CohomologyClass, GkmViolation};
pub use generators::{
    check_relations, f_value, make_generators, tau_restricts_to_a2, tau_value, GeneratorSet, RelationCheck,
};
pub use random::{random_class, random_symbol_poly};
pub use ranks::{
    constraint_matrix, evaluation_matrix, graded_rank, hilbert_closed_form, hilbert_numerator, monomial_count,
    presentation_report, spanning_rank, verify_presentation, DegreeReport, PresentationCheck, PresentationMismatch,
    PresentationReport,
};
pub use reduce::{reduce_class, reduce_to_symbol};
pub use symbolic::{
    evaluate_certificate, normal_form, BasisMonomial, CertificateJson, ReductionCertificate, SymbolMonomial, SymbolPoly,
};

use crate::rootsys::{RootSystem, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("expected {expected} vertex values, got {got}")]
    WrongVertexCount { expected: usize, got: usize },
    #[error("value at {vertex} is not homogeneous of degree {degree}")]
    NotHomogeneous { vertex: WeylElement, degree: u32 },
    #[error("not a graph cohomology class: divisibility fails on edge {}--{}", edge.0, edge.1)]
    NotGkm { edge: (WeylElement, WeylElement) },
    #[error("reduction is only implemented on the combinatorial g2 graph, not {0}")]
    UnsupportedGraph(RootSystem),
    #[error("internal error: exact division failed at {vertex}")]
    InternalNonDivisible { vertex: WeylElement },
    #[error("internal error: reduced expression does not reproduce the class")]
    InternalResidual,
    #[error("{0}")]
    Malformed(String),
}
