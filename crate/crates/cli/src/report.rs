//! JSON and text renderings of validation and axiom reports. Vertex ids and
//! part numbers are 1-indexed.

use serde_json::{json, Value};

use hpart::{AxiomReport, Graph, ValidationReport};

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v.wrapping_add(1)).collect()
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect();
    json!({ "n": g.n(), "edges": edges })
}

pub fn validation_json(report: &ValidationReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind.as_str(),
                "part": v.part.map(|p| p + 1),
                "vertices": one_based(&v.vertices),
                "detail": v.detail,
            })
        })
        .collect();
    json!({ "ok": report.is_ok(), "violations": violations })
}

pub fn validation_text(report: &ValidationReport) -> String {
    if report.is_ok() {
        return "ok\n".into();
    }
    report
        .violations
        .iter()
        .map(|v| {
            let part = v
                .part
                .map(|p| format!(" part {}", p + 1))
                .unwrap_or_default();
            format!(
                "violation {}{part} vertices {:?}: {}\n",
                v.kind.as_str(),
                one_based(&v.vertices),
                v.detail
            )
        })
        .collect()
}

pub fn axiom_json(report: &AxiomReport) -> Value {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "property": f.property,
                "witness": graph_json(&f.witness),
                "vertices": one_based(&f.vertices),
            })
        })
        .collect();
    json!({
        "ok": report.is_ok(),
        "graphs_checked": report.graphs_checked,
        "failures": failures,
    })
}

pub fn axiom_text(report: &AxiomReport) -> String {
    if report.is_ok() {
        return format!("ok ({} graphs checked)\n", report.graphs_checked);
    }
    report
        .failures
        .iter()
        .map(|f| {
            let edges: Vec<String> = f
                .witness
                .edges()
                .iter()
                .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
                .collect();
            format!(
                "property {} fails on n={} edges [{}] at vertices {:?}\n",
                f.property,
                f.witness.n(),
                edges.join(" "),
                one_based(&f.vertices)
            )
        })
        .collect()
}
