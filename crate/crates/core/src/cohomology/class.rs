use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::CohomologyError;
use crate::gkmgraph::{parse_vertex_id, vertex_id, Edge, LabeledGraph};
use crate::polyring::Polynomial;
use crate::rootsys::{RootSystem, WeylElement};
use crate::scalar::Coefficient;

/// A vertex-indexed family of homogeneous polynomials of a common degree `k`
/// (cohomological degree `2k`). Whether it is a graph cohomology class is
/// decided by [`CohomologyClass::gkm_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass<C> {
    graph: Arc<LabeledGraph>,
    degree: u32,
    values: Vec<Polynomial<C>>,
}

/// An edge whose endpoint difference is not divisible by its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmViolation<C> {
    pub edge: Edge,
    pub difference: Polynomial<C>,
}

impl<C: Coefficient> CohomologyClass<C> {
    pub fn new(graph: Arc<LabeledGraph>, degree: u32, values: Vec<Polynomial<C>>) -> Result<Self, CohomologyError> {
        if values.len() != graph.num_vertices() {
            return Err(CohomologyError::WrongVertexCount { expected: graph.num_vertices(), got: values.len() });
        }
        if let Some(i) = values.iter().position(|p| !p.is_homogeneous_of_degree(degree)) {
            return Err(CohomologyError::NotHomogeneous { vertex: graph.vertex(i), degree });
        }
        Ok(CohomologyClass { graph, degree, values })
    }

    pub fn from_fn(
        graph: Arc<LabeledGraph>,
        degree: u32,
        f: impl Fn(&WeylElement) -> Polynomial<C>,
    ) -> Result<Self, CohomologyError> {
        let values = graph.vertices().iter().map(f).collect();
        Self::new(graph, degree, values)
    }

    pub fn zero(graph: Arc<LabeledGraph>, degree: u32) -> Self {
        let values = vec![Polynomial::zero(); graph.num_vertices()];
        CohomologyClass { graph, degree, values }
    }

    /// The same homogeneous polynomial at every vertex.
    pub fn constant(graph: Arc<LabeledGraph>, p: Polynomial<C>) -> Result<Self, CohomologyError> {
        let degree = p.degree().unwrap_or(0);
        Self::from_fn(graph, degree, |_| p.clone())
    }

    pub fn graph(&self) -> &Arc<LabeledGraph> {
        &self.graph
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn values(&self) -> &[Polynomial<C>] {
        &self.values
    }

    pub fn value(&self, vertex: usize) -> &Polynomial<C> {
        &self.values[vertex]
    }

    pub fn value_at(&self, w: &WeylElement) -> Option<&Polynomial<C>> {
        self.graph.index_of(w).map(|i| &self.values[i])
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    /// A copy with one vertex value replaced; the new value must have the
    /// class degree.
    pub fn with_value(&self, vertex: usize, value: Polynomial<C>) -> Result<Self, CohomologyError> {
        let mut values = self.values.clone();
        values[vertex] = value;
        Self::new(self.graph.clone(), self.degree, values)
    }

    /// Multiplies every value by the homogeneous polynomial `p`.
    pub fn scale_by(&self, p: &Polynomial<C>) -> Self {
        assert!(p.is_homogeneous(), "scaling by a non-homogeneous polynomial");
        CohomologyClass {
            graph: self.graph.clone(),
            degree: self.degree + p.degree().unwrap_or(0),
            values: self.values.iter().map(|v| v * p).collect(),
        }
    }

    /// Checks divisibility of `h(u) - h(v)` by the label of every edge `{u,v}`,
    /// reporting the first failing edge in edge order.
    pub fn gkm_check(&self) -> Result<(), GkmViolation<C>> {
        for edge in self.graph.edges() {
            let difference = &self.values[edge.u] - &self.values[edge.v];
            if difference.div_exact_linear(&edge.label).is_err() {
                return Err(GkmViolation { edge: *edge, difference });
            }
        }
        Ok(())
    }

    pub fn is_gkm(&self) -> bool {
        self.gkm_check().is_ok()
    }

    fn same_graph(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph,
            "classes live on different graphs"
        );
    }

    fn combine(&self, other: &Self, op: impl Fn(&Polynomial<C>, &Polynomial<C>) -> Polynomial<C>) -> Self {
        self.same_graph(other);
        let degree = if self.is_zero() {
            other.degree
        } else if other.is_zero() {
            self.degree
        } else {
            assert_eq!(self.degree, other.degree, "adding classes of different degrees");
            self.degree
        };
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        CohomologyClass { graph: self.graph.clone(), degree, values }
    }

    pub fn to_json(&self) -> ClassJson<C> {
        let system = self.graph.system();
        ClassJson {
            graph: system,
            degree: self.degree,
            values: self
                .graph
                .vertices()
                .iter()
                .zip(&self.values)
                .map(|(w, p)| (vertex_id(system, w), p.clone()))
                .collect(),
        }
    }

    /// Every vertex of `graph` must be assigned exactly once.
    pub fn from_json(json: &ClassJson<C>, graph: Arc<LabeledGraph>) -> Result<Self, CohomologyError> {
        if json.graph != graph.system() {
            return Err(CohomologyError::Malformed(format!(
                "class is for {} but the graph is {}",
                json.graph,
                graph.system()
            )));
        }
        let mut values = vec![None; graph.num_vertices()];
        for (id, p) in &json.values {
            let w = parse_vertex_id(id).ok_or_else(|| CohomologyError::Malformed(format!("bad vertex id {id:?}")))?;
            let i = graph
                .index_of(&w)
                .filter(|&i| vertex_id(graph.system(), &graph.vertex(i)) == *id)
                .ok_or_else(|| CohomologyError::Malformed(format!("unknown vertex {id:?}")))?;
            values[i] = Some(p.clone());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| CohomologyError::Malformed(format!("no value at vertex {}", graph.vertex(i))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(graph, json.degree, values)
    }
}

/// `{"graph":"g2","degree":k,"values":{"213:-":<polynomial>,...}}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(bound(serialize = "C: Coefficient", deserialize = "C: Coefficient"))]
pub struct ClassJson<C> {
    pub graph: RootSystem,
    pub degree: u32,
    pub values: BTreeMap<String, Polynomial<C>>,
}

impl<C: Coefficient> Add for &CohomologyClass<C> {
    type Output = CohomologyClass<C>;
    fn add(self, rhs: Self) -> CohomologyClass<C> {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<C: Coefficient> Sub for &CohomologyClass<C> {
    type Output = CohomologyClass<C>;
    fn sub(self, rhs: Self) -> CohomologyClass<C> {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<C: Coefficient> Neg for &CohomologyClass<C> {
    type Output = CohomologyClass<C>;
    fn neg(self) -> CohomologyClass<C> {
        CohomologyClass {
            graph: self.graph.clone(),
            degree: self.degree,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl<C: Coefficient> Mul for &CohomologyClass<C> {
    type Output = CohomologyClass<C>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> CohomologyClass<C> {
        self.same_graph(rhs);
        CohomologyClass {
            graph: self.graph.clone(),
            degree: self.degree + rhs.degree,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a * b).collect(),
        }
    }
}
