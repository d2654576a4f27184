use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use gkm_core::cohomology::{
    check_relations, evaluate_certificate, evaluation_matrix, graded_rank, hilbert_closed_form, make_generators,
    presentation_report, reduce_class, tau_restricts_to_a2, BasisMonomial, ClassJson, CohomologyError,
};
use gkm_core::exactla::nonzero_determinant;
use gkm_core::gkmgraph::{
    build_from_root_system, build_g2_combinatorial, label_isomorphic, parallel_edges_share_labels, vertex_id, GraphJson,
};
use gkm_core::{BigInt, Class, LabeledGraph, RootSystem, Weight};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{Cli, Command, Format, System};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad flags, unreadable or malformed files.
    Input(String),
    /// A mathematical check failed.
    Math(String),
    /// Two independent constructions disagree.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Input(_) | CliError::Internal(_) => 2,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Input(m) => m.clone(),
            CliError::Math(m) => format!("check failed: {m}"),
            CliError::Internal(m) => format!("internal mismatch: {m}"),
        }
    }
}

/// What a command prints, and the failure it reports after printing.
pub struct Outcome {
    pub text: String,
    pub failure: Option<CliError>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failure: None }
    }
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::Graph | Command::Generators | Command::Reduce { .. } => Format::Json,
        _ => Format::Text,
    });
    if format == Format::Dot && !matches!(cli.command, Command::Graph) {
        return Err(CliError::Input("--format dot is only available for the graph command".into()));
    }
    let graph = load_graph(cli)?;
    match &cli.command {
        Command::Graph => cmd_graph(&graph, format),
        Command::Check { class } => cmd_check(&graph, &load_class(class, &graph)?, format),
        Command::Generators => cmd_generators(&graph, format),
        Command::Hilbert => cmd_hilbert(&graph, cli.k_max, format),
        Command::Verify => cmd_verify(&graph, cli.k_max, cli.seed, format),
        Command::Reduce { class } => cmd_reduce(&load_class(class, &graph)?, format),
        Command::Basis => cmd_basis(&graph, cli.seed, format),
    }
}

fn load_graph(cli: &Cli) -> Result<Arc<LabeledGraph>, CliError> {
    let requested = cli.system.map(|s| match s {
        System::A2 => RootSystem::A2,
        System::G2 => RootSystem::G2,
    });
    let graph = match &cli.graph_file {
        Some(path) => {
            let json: GraphJson = read_json(path)?;
            let g = LabeledGraph::from_json(&json).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            if requested.is_some_and(|s| s != g.system()) {
                return Err(CliError::Input(format!("{} holds a {} graph", path.display(), g.system())));
            }
            g
        }
        None => match requested.unwrap_or(RootSystem::G2) {
            RootSystem::G2 => build_g2_combinatorial(),
            RootSystem::A2 => build_from_root_system(RootSystem::A2),
        },
    };
    Ok(Arc::new(graph))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_class(path: &Path, graph: &Arc<LabeledGraph>) -> Result<Class, CliError> {
    let json: ClassJson<BigInt> = read_json(path)?;
    Class::from_json(&json, graph.clone()).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_graph(graph: &LabeledGraph, format: Format) -> Result<Outcome, CliError> {
    let isomorphic = (graph.system() == RootSystem::G2)
        .then(|| label_isomorphic(graph, &build_from_root_system(RootSystem::G2)).is_ok());
    let text = match format {
        Format::Dot => graph.to_dot(),
        Format::Json => {
            let mut value = serde_json::to_value(graph.to_json()).expect("graph serializes");
            if let Some(iso) = isomorphic {
                value["isomorphic_to_generic"] = Value::Bool(iso);
            }
            pretty(&value)
        }
        Format::Text => {
            let mut out =
                format!("{} graph: {} vertices, {} edges\n", graph.system(), graph.num_vertices(), graph.edges().len());
            for (i, w) in graph.vertices().iter().enumerate() {
                let _ = writeln!(out, "v{i} {}", vertex_id(graph.system(), w));
            }
            for e in graph.edges() {
                let _ = writeln!(out, "v{} -- v{}  {}", e.u, e.v, Weight(e.label.coeffs()));
            }
            if let Some(iso) = isomorphic {
                let _ = writeln!(out, "isomorphic to generic construction: {iso}");
            }
            out
        }
    };
    let failure = (isomorphic == Some(false))
        .then(|| CliError::Internal("the graph is not label-isomorphic to the root-system construction".into()));
    Ok(Outcome { text, failure })
}

fn cmd_check(graph: &LabeledGraph, class: &Class, format: Format) -> Result<Outcome, CliError> {
    let system = graph.system();
    match class.gkm_check() {
        Ok(()) => Ok(Outcome::ok(match format {
            Format::Json => pretty(&json!({ "gkm": true })),
            _ => "true\n".into(),
        })),
        Err(v) => {
            let (u, w) = (vertex_id(system, &graph.vertex(v.edge.u)), vertex_id(system, &graph.vertex(v.edge.v)));
            let label = Weight(v.edge.label.coeffs());
            let text = match format {
                Format::Json => pretty(&json!({
                    "gkm": false,
                    "edge": { "u": u, "v": w, "label": v.edge.label.coeffs() },
                    "difference": v.difference,
                })),
                _ => format!("Violation: edge {u} -- {w} with label {label}: {} is not divisible\n", v.difference),
            };
            Ok(Outcome { text, failure: Some(CliError::Math(format!("not a class: edge {u} -- {w}"))) })
        }
    }
}

fn cmd_generators(graph: &Arc<LabeledGraph>, format: Format) -> Result<Outcome, CliError> {
    let gs = make_generators::<BigInt>(graph.clone()).map_err(|e| CliError::Internal(e.to_string()))?;
    let text = match format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, class) in gs.all() {
                map.insert(name.into(), serde_json::to_value(class.to_json()).expect("class serializes"));
            }
            pretty(&Value::Object(map))
        }
        _ => {
            let mut out = String::new();
            for (name, class) in gs.all() {
                let _ = writeln!(out, "{name} (degree {})", class.degree());
                for (w, p) in graph.vertices().iter().zip(class.values()) {
                    let _ = writeln!(out, "  {}: {p}", vertex_id(graph.system(), w));
                }
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_hilbert(graph: &LabeledGraph, k_max: u32, format: Format) -> Result<Outcome, CliError> {
    let system = graph.system();
    let rows: Vec<(u32, usize, usize)> =
        (0..=k_max).into_par_iter().map(|k| (k, graded_rank(graph, k), hilbert_closed_form(system, k))).collect();
    let text = match format {
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|&(k, r, c)| json!({ "k": k, "graded_rank": r, "closed_form": c, "match": r == c }))
                .collect(),
        )),
        _ => {
            let mut out = format!("{:>3} {:>12} {:>12} {:>6}\n", "k", "graded_rank", "closed_form", "match");
            for &(k, r, c) in &rows {
                let _ = writeln!(out, "{k:>3} {r:>12} {c:>12} {:>6}", r == c);
            }
            out
        }
    };
    let failure = rows
        .iter()
        .find(|(_, r, c)| r != c)
        .map(|(k, r, c)| CliError::Math(format!("graded rank {r} differs from closed form {c} in degree {k}")));
    Ok(Outcome { text, failure })
}

fn cmd_verify(graph: &Arc<LabeledGraph>, k_max: u32, seed: u64, format: Format) -> Result<Outcome, CliError> {
    let mut items: Vec<(String, bool)> = Vec::new();
    let gs = make_generators::<BigInt>(graph.clone()).map_err(|e| CliError::Internal(e.to_string()))?;
    for (name, class) in gs.all() {
        items.push((format!("generator {name} is a class"), class.is_gkm()));
    }
    for rel in check_relations(&gs) {
        items.push((format!("relation {} vanishes", rel.name), rel.holds));
    }
    let report = presentation_report(graph, k_max, seed);
    for d in &report.degrees {
        items.push((
            format!("degree {}: graded rank {} = closed form {}", d.degree, d.graded_rank, d.closed_form),
            d.graded_rank == d.closed_form,
        ));
        items.push((
            format!("degree {}: spanning rank {} = closed form {}", d.degree, d.spanning_rank, d.closed_form),
            d.spanning_rank == d.closed_form,
        ));
    }
    items.push(("evaluation determinant is nonzero".into(), report.determinant_nonzero));
    items.push(("parallel edges share labels".into(), parallel_edges_share_labels(graph)));
    if graph.system() == RootSystem::G2 {
        items.push(("tau restricts to the A2 generators on each sheet".into(), tau_restricts_to_a2(&gs)));
    }

    let text = match format {
        Format::Json => pretty(&json!({
            "system": graph.system(),
            "k_max": k_max,
            "items": items.iter().map(|(n, p)| json!({ "name": n, "pass": p })).collect::<Vec<_>>(),
            "all_pass": items.iter().all(|(_, p)| *p),
        })),
        _ => items.iter().map(|(n, p)| format!("{} {n}\n", if *p { "PASS" } else { "FAIL" })).collect(),
    };
    let failure = items.iter().find(|(_, p)| !p).map(|(n, _)| CliError::Math(format!("first failing item: {n}")));
    Ok(Outcome { text, failure })
}

fn cmd_reduce(class: &Class, format: Format) -> Result<Outcome, CliError> {
    let cert = reduce_class(class).map_err(|e| match e {
        CohomologyError::NotGkm { .. } => CliError::Math(e.to_string()),
        CohomologyError::UnsupportedGraph(_) | CohomologyError::Malformed(_) => CliError::Input(e.to_string()),
        _ => CliError::Internal(e.to_string()),
    })?;
    let gs = make_generators::<BigInt>(class.graph().clone()).map_err(|e| CliError::Internal(e.to_string()))?;
    let back = evaluate_certificate(&cert, &gs).map_err(|e| CliError::Internal(e.to_string()))?;
    if back != *class {
        return Err(CliError::Internal("certificate does not evaluate back to the class".into()));
    }
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(cert.to_json()).expect("certificate serializes")),
        _ => {
            let mut out = String::new();
            for (m, c) in cert.coefficients().filter(|(_, c)| !c.is_zero()) {
                let _ = writeln!(out, "{m}: {c}");
            }
            if out.is_empty() {
                out.push_str("0\n");
            }
            out
        }
    };
    Ok(Outcome::ok(text))
}

/// Coefficients of `prod (1 + x^a + x^{2a} + ... + x^{(n-1)a})` over factors `(a, n)`.
fn product_of_geometric(factors: &[(usize, usize)]) -> Vec<usize> {
    let mut out = vec![1usize];
    for &(step, n) in factors {
        let mut next = vec![0; out.len() + step * (n - 1)];
        for (i, c) in out.iter().enumerate() {
            for j in 0..n {
                next[i + step * j] += c;
            }
        }
        out = next;
    }
    out
}

fn format_series(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| match (i, c) {
            (0, c) => c.to_string(),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

fn cmd_basis(graph: &Arc<LabeledGraph>, seed: u64, format: Format) -> Result<Outcome, CliError> {
    let system = graph.system();
    let basis = BasisMonomial::all(system);
    let mut generating = Vec::new();
    for m in &basis {
        let d = 2 * m.degree() as usize;
        if generating.len() <= d {
            generating.resize(d + 1, 0);
        }
        generating[d] += 1;
    }
    let (factors, expected_name): (&[(usize, usize)], _) = match system {
        RootSystem::A2 => (&[(2, 2), (2, 3)], "(1+x^2)(1+x^2+x^4)"),
        RootSystem::G2 => (&[(2, 2), (2, 3), (6, 2)], "(1+x^2)(1+x^2+x^4)(1+x^6)"),
    };
    let expected = product_of_geometric(factors);
    let matches = generating == expected;
    let determinant_nonzero = nonzero_determinant(&evaluation_matrix(graph), seed);

    let text = match format {
        Format::Json => pretty(&json!({
            "system": system,
            "monomials": basis.iter().map(|m| json!({
                "name": m.to_string(),
                "degree": m.degree(),
                "cohomological_degree": 2 * m.degree(),
            })).collect::<Vec<_>>(),
            "generating_polynomial": generating,
            "expected": expected_name,
            "matches_expected": matches,
            "determinant_nonzero": determinant_nonzero,
        })),
        _ => {
            let mut out = String::new();
            for m in &basis {
                let _ = writeln!(out, "{m}  degree {} (cohomological {})", m.degree(), 2 * m.degree());
            }
            let _ = writeln!(out, "generating polynomial: {}", format_series(&generating));
            let _ = writeln!(out, "expected {expected_name}: {}", if matches { "match" } else { "MISMATCH" });
            let _ = writeln!(out, "evaluation determinant nonzero: {determinant_nonzero}");
            out
        }
    };
    let failure = if !matches {
        Some(CliError::Math("basis degrees do not match the expected generating polynomial".into()))
    } else if !determinant_nonzero {
        Some(CliError::Math("evaluation determinant vanishes".into()))
    } else {
        None
    };
    Ok(Outcome { text, failure })
}
