//! JSON and DOT forms of a labeled graph.

use serde::{Deserialize, Serialize};

use super::{GraphError, LabeledGraph};
use crate::polyring::{LinearForm, Weight};
use crate::rootsys::{RootSystem, Sign, WeylElement};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub perm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub label: [i64; 3],
}

/// `{"system":"g2","vertices":[{"perm":"213","sign":"-"},...],"edges":[{"u":0,"v":3,"label":[1,-2,1]},...]}`.
/// `A2` vertices carry no sign.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub system: RootSystem,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

/// `"213:-"` for `G2` vertices, `"213"` for `A2`.
pub fn vertex_id(system: RootSystem, w: &WeylElement) -> String {
    match system {
        RootSystem::A2 => w.perm.to_string(),
        RootSystem::G2 => format!("{}:{}", w.perm, w.sign.symbol()),
    }
}

pub fn parse_vertex_id(id: &str) -> Option<WeylElement> {
    let (perm, sign) = match id.split_once(':') {
        Some((p, s)) => (p, Sign::parse(s)?),
        None => (id, Sign::Plus),
    };
    Some(WeylElement::new(perm.parse().ok()?, sign))
}

impl LabeledGraph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            system: self.system,
            vertices: self
                .vertices
                .iter()
                .map(|w| VertexJson {
                    perm: w.perm.to_string(),
                    sign: (self.system == RootSystem::G2).then(|| w.sign.symbol().to_string()),
                })
                .collect(),
            edges: self.edges.iter().map(|e| EdgeJson { u: e.u, v: e.v, label: e.label.coeffs() }).collect(),
        }
    }

    /// Labels must already be canonical; vertices must be listed in canonical
    /// order so that edge indices mean what the file says.
    pub fn from_json(json: &GraphJson) -> Result<Self, GraphError> {
        let mut vertices = Vec::with_capacity(json.vertices.len());
        for v in &json.vertices {
            let perm = v.perm.parse()?;
            let sign = match &v.sign {
                None => Sign::Plus,
                Some(s) => Sign::parse(s).ok_or_else(|| GraphError::Malformed(format!("bad sign {s:?}")))?,
            };
            vertices.push(WeylElement::new(perm, sign));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::Malformed("vertices are not in canonical order".into()));
        }
        let mut edges = Vec::with_capacity(json.edges.len());
        for e in &json.edges {
            let label = LinearForm::from_canonical(e.label)
                .map_err(|err| GraphError::Malformed(format!("edge ({}, {}): {err}", e.u, e.v)))?;
            edges.push((e.u, e.v, label));
        }
        LabeledGraph::new(json.system, vertices, edges)
    }

    /// Graphviz rendering; labels are for display only.
    pub fn to_dot(&self) -> String {
        let name = |w: &WeylElement| match self.system {
            RootSystem::A2 => w.perm.to_string(),
            RootSystem::G2 => format!("{},{}", w.perm, w.sign.symbol()),
        };
        let mut out = format!("graph {} {{\n", self.system);
        for (i, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{}\"];\n", name(w)));
        }
        for e in &self.edges {
            out.push_str(&format!("  v{} -- v{} [label=\"{}\"];\n", e.u, e.v, Weight(e.label.coeffs())));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkmgraph::{build_from_root_system, build_g2_combinatorial};

    #[test]
    fn json_round_trip() {
        for g in [build_g2_combinatorial(), build_from_root_system(RootSystem::A2)] {
            let text = serde_json::to_string(&g.to_json()).unwrap();
            let back: GraphJson = serde_json::from_str(&text).unwrap();
            assert_eq!(LabeledGraph::from_json(&back).unwrap(), g);
        }
    }

    #[test]
    fn json_shape() {
        let g = build_g2_combinatorial();
        let v = serde_json::to_value(g.to_json()).unwrap();
        assert_eq!(v["system"], "g2");
        assert_eq!(v["vertices"][0], serde_json::json!({"perm": "123", "sign": "+"}));
        assert_eq!(v["vertices"][1], serde_json::json!({"perm": "123", "sign": "-"}));
        assert_eq!(v["edges"].as_array().unwrap().len(), 36);
        let a2 = serde_json::to_value(build_from_root_system(RootSystem::A2).to_json()).unwrap();
        assert_eq!(a2["vertices"][0], serde_json::json!({"perm": "123"}));
    }

    #[test]
    fn malformed_json_is_rejected() {
        let mut j = build_g2_combinatorial().to_json();
        j.edges[0].label = [-1, 1, 0];
        assert!(matches!(LabeledGraph::from_json(&j), Err(GraphError::Malformed(_))));
        let mut j = build_g2_combinatorial().to_json();
        j.vertices.swap(0, 1);
        assert!(matches!(LabeledGraph::from_json(&j), Err(GraphError::Malformed(_))));
    }

    #[test]
    fn vertex_ids() {
        let w = parse_vertex_id("213:-").unwrap();
        assert_eq!(vertex_id(RootSystem::G2, &w), "213:-");
        assert_eq!(parse_vertex_id("213").unwrap().sign, Sign::Plus);
        assert!(parse_vertex_id("213:x").is_none());
    }

    #[test]
    fn dot_output() {
        let dot = build_from_root_system(RootSystem::A2).to_dot();
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert!(dot.contains("label=\"t1 - t2\""));
        let dot = build_g2_combinatorial().to_dot();
        assert_eq!(dot.matches(" -- ").count(), 36);
        assert!(dot.contains("[label=\"213,-\"]"));
    }
}
