use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::symbolic::BasisMonomial;
use crate::exactla::{integer_rank, nonzero_determinant, Matrix, PolyMatrix};
use crate::gkmgraph::LabeledGraph;
use crate::polyring::{monomials_of_degree, Exponent, LinearForm, Polynomial};
use crate::rootsys::RootSystem;

/// `dim Z[t1,t2,t3]_k = (k+1)(k+2)/2`.
pub fn monomial_count(k: u32) -> usize {
    let k = k as usize;
    (k + 1) * (k + 2) / 2
}

/// Coefficients `c_j` of the Hilbert series numerator `sum_j c_j x^j`, with
/// denominator `(1-x)^3`.
pub fn hilbert_numerator(system: RootSystem) -> &'static [usize] {
    match system {
        RootSystem::A2 => &[1, 2, 2, 1],
        RootSystem::G2 => &[1, 2, 2, 2, 2, 2, 1],
    }
}

/// Expected rank of the degree-`k` part as a free module quotient:
/// `sum_j c_j * (k-j+1)(k-j+2)/2`.
pub fn hilbert_closed_form(system: RootSystem, k: u32) -> usize {
    hilbert_numerator(system)
        .iter()
        .enumerate()
        .filter(|&(j, _)| j as u32 <= k)
        .map(|(j, c)| c * monomial_count(k - j as u32))
        .sum()
}

fn monomial_index(k: u32) -> HashMap<Exponent, usize> {
    monomials_of_degree(k).into_iter().enumerate().map(|(i, e)| (e, i)).collect()
}

/// Images of the degree-`k` monomials in `Q[t]/(label)`, scaled to stay
/// integral: with `c` the first nonzero coefficient of the label, at variable
/// `v`, the monomial `m` maps to `c^k m` with `c t_v` replaced by
/// `-(sum_{j != v} c_j t_j)`. Scaling by `c^k` does not change any kernel.
fn quotient_images(label: &LinearForm, k: u32) -> Vec<Polynomial<BigInt>> {
    let coeffs = label.coeffs();
    let v = coeffs.iter().position(|&c| c != 0).expect("labels are nonzero");
    let c = BigInt::from(coeffs[v]);
    let mut rest = [0i64; 3];
    for j in 0..3 {
        if j != v {
            rest[j] = -coeffs[j];
        }
    }
    let replacement = Polynomial::<BigInt>::linear(&rest);
    let mut powers = vec![Polynomial::one()];
    let mut c_powers = vec![BigInt::from(1)];
    for _ in 0..k {
        powers.push(powers.last().unwrap() * &replacement);
        c_powers.push(c_powers.last().unwrap() * &c);
    }
    monomials_of_degree(k)
        .into_iter()
        .map(|e| {
            let ev = e[v] as usize;
            let mut others = e;
            others[v] = 0;
            let scale = &c_powers[k as usize - ev];
            powers[ev].shift(&others).scale(scale)
        })
        .collect()
}

/// The constraint matrix whose kernel is the degree-`k` part of the graph
/// cohomology: one block of rows per edge `{u,v}` expressing
/// `h(u) - h(v) = 0` modulo the label, columns indexed by
/// `(vertex, monomial)`.
pub fn constraint_matrix(graph: &LabeledGraph, k: u32) -> Matrix<BigInt> {
    let r = monomial_count(k);
    let index = monomial_index(k);
    let mut cache: HashMap<LinearForm, Vec<Polynomial<BigInt>>> = HashMap::new();
    let mut m = Matrix::with_cols(graph.num_vertices() * r);
    for edge in graph.edges() {
        let images = cache.entry(edge.label).or_insert_with(|| quotient_images(&edge.label, k));
        let mut block = vec![vec![BigInt::from(0); graph.num_vertices() * r]; r];
        let mut used = vec![false; r];
        for (col, image) in images.iter().enumerate() {
            for (e, c) in image.terms() {
                let row = index[e];
                used[row] = true;
                block[row][edge.u * r + col] += c;
                block[row][edge.v * r + col] -= c;
            }
        }
        for (row, used) in block.into_iter().zip(used) {
            if used {
                m.push_row(row);
            }
        }
    }
    m
}

/// Dimension over `Q` of the degree-`k` graph cohomology (cohomological
/// degree `2k`), as the kernel of [`constraint_matrix`].
pub fn graded_rank(graph: &LabeledGraph, k: u32) -> usize {
    let m = constraint_matrix(graph, k);
    m.cols() - integer_rank(&m)
}

/// Rank over `Q` of the classes `q * m` with `m` a basis monomial and `q` a
/// monomial in `t`, all of total degree `k`.
pub fn spanning_rank(graph: &LabeledGraph, k: u32) -> usize {
    let system = graph.system();
    let r = monomial_count(k);
    let index = monomial_index(k);
    let mut m = Matrix::with_cols(graph.num_vertices() * r);
    for b in BasisMonomial::all(system) {
        if b.degree() > k {
            continue;
        }
        let values: Vec<Polynomial<BigInt>> = graph.vertices().iter().map(|w| b.evaluate_at(system, w)).collect();
        for q in monomials_of_degree(k - b.degree()) {
            let mut row = vec![BigInt::from(0); graph.num_vertices() * r];
            for (vertex, value) in values.iter().enumerate() {
                for (e, c) in value.shift(&q).terms() {
                    row[vertex * r + index[e]] = c.clone();
                }
            }
            m.push_row(row);
        }
    }
    integer_rank(&m)
}

/// `M[w][m] = m(w)` for the vertices `w` and basis monomials `m`.
pub fn evaluation_matrix(graph: &LabeledGraph) -> PolyMatrix<BigInt> {
    let system = graph.system();
    let basis = BasisMonomial::all(system);
    Matrix::from_rows(
        graph.vertices().iter().map(|w| basis.iter().map(|b| b.evaluate_at(system, w)).collect()).collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationCheck {
    /// Graded rank against the closed form.
    GradedRank,
    /// Span of the basis monomials against the closed form.
    Spanning,
    /// Nonvanishing of the evaluation determinant.
    Determinant,
}

impl fmt::Display for PresentationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationCheck::GradedRank => "graded rank",
            PresentationCheck::Spanning => "spanning rank",
            PresentationCheck::Determinant => "evaluation determinant",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    pub closed_form: usize,
    pub graded_rank: usize,
    pub spanning_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub system: RootSystem,
    pub degrees: Vec<DegreeReport>,
    pub determinant_nonzero: bool,
}

impl PresentationReport {
    /// The first failing check, lowest degree first.
    pub fn first_mismatch(&self) -> Option<PresentationMismatch> {
        for d in &self.degrees {
            if d.graded_rank != d.closed_form {
                return Some(PresentationMismatch { degree: Some(d.degree), check: PresentationCheck::GradedRank });
            }
            if d.spanning_rank != d.closed_form {
                return Some(PresentationMismatch { degree: Some(d.degree), check: PresentationCheck::Spanning });
            }
        }
        (!self.determinant_nonzero)
            .then_some(PresentationMismatch { degree: None, check: PresentationCheck::Determinant })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("presentation check failed: {check}{}", degree.map(|k| format!(" in degree {k}")).unwrap_or_default())]
pub struct PresentationMismatch {
    pub degree: Option<u32>,
    pub check: PresentationCheck,
}

/// Runs all three checks for degrees `0..=k_max`, degrees in parallel.
pub fn presentation_report(graph: &LabeledGraph, k_max: u32, seed: u64) -> PresentationReport {
    let system = graph.system();
    let degrees = (0..=k_max)
        .into_par_iter()
        .map(|k| DegreeReport {
            degree: k,
            closed_form: hilbert_closed_form(system, k),
            graded_rank: graded_rank(graph, k),
            spanning_rank: spanning_rank(graph, k),
        })
        .collect();
    let determinant_nonzero = nonzero_determinant(&evaluation_matrix(graph), seed);
    PresentationReport { system, degrees, determinant_nonzero }
}

/// Checks that the graded ranks match the closed form, that the basis
/// monomials span every degree, and that they are independent over the
/// coefficient ring.
pub fn verify_presentation(
    graph: &LabeledGraph,
    k_max: u32,
    seed: u64,
) -> Result<PresentationReport, PresentationMismatch> {
    let report = presentation_report(graph, k_max, seed);
    match report.first_mismatch() {
        Some(m) => Err(m),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkmgraph::{build_from_root_system, build_g2_combinatorial};

    #[test]
    fn closed_form_values() {
        let g2: Vec<usize> = (0..=10).map(|k| hilbert_closed_form(RootSystem::G2, k)).collect();
        assert_eq!(g2, [1, 5, 14, 30, 55, 91, 139, 199, 271, 355, 451]);
        let a2: Vec<usize> = (0..=4).map(|k| hilbert_closed_form(RootSystem::A2, k)).collect();
        assert_eq!(a2, [1, 5, 14, 29, 50]);
    }

    #[test]
    fn small_graded_ranks() {
        let g = build_g2_combinatorial();
        for k in 0..=3 {
            assert_eq!(graded_rank(&g, k), hilbert_closed_form(RootSystem::G2, k), "k = {k}");
        }
        let a = build_from_root_system(RootSystem::A2);
        for k in 0..=4 {
            assert_eq!(graded_rank(&a, k), hilbert_closed_form(RootSystem::A2, k), "k = {k}");
        }
    }

    #[test]
    fn images_for_non_unit_labels() {
        let label = LinearForm::new([2, 3, 0]).unwrap();
        let images = quotient_images(&label, 1);
        // t1 -> -(3/2) t2, scaled by 2
        assert_eq!(images[monomial_index(1)[&[1, 0, 0]]], Polynomial::linear(&[0, -3, 0]));
        assert_eq!(images[monomial_index(1)[&[0, 1, 0]]], Polynomial::linear(&[0, 2, 0]));
    }

    #[test]
    fn a2_presentation_holds() {
        let a = build_from_root_system(RootSystem::A2);
        assert!(verify_presentation(&a, 4, 3).is_ok());
    }
}
