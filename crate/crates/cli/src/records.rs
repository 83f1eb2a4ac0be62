//! JSON output records. Vertex labels are 1-based.

use anyhow::{Context, Result};
use domiperf::{parameter_profile, Embedding, GraphRecord, Pattern, PerfectionVerdict, VertexSet, Witness};
use serde::Serialize;
use serde_json::json;

fn one_based(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn map_one_based(e: &Embedding) -> Vec<usize> {
    e.map.iter().map(|v| v + 1).collect()
}

#[derive(Serialize)]
struct Witnesses {
    gamma: Vec<usize>,
    i: Vec<usize>,
    alpha: Vec<usize>,
}

#[derive(Serialize)]
struct ComputeRecord<'a> {
    line: usize,
    graph6: &'a str,
    n: usize,
    m: usize,
    gamma: usize,
    i: usize,
    alpha_c: usize,
    alpha: usize,
    witnesses: Witnesses,
}

pub fn compute(r: &GraphRecord) -> Result<String> {
    let p = parameter_profile(&r.graph).with_context(|| format!("line {}", r.line))?;
    Ok(serde_json::to_string(&ComputeRecord {
        line: r.line,
        graph6: &r.token,
        n: r.graph.order(),
        m: r.graph.size(),
        gamma: p.gamma,
        i: p.ind_dom,
        alpha_c: p.common_ind,
        alpha: p.ind,
        witnesses: Witnesses {
            gamma: one_based(p.witness_gamma),
            i: one_based(p.witness_ind_dom),
            alpha: one_based(p.witness_ind),
        },
    })?)
}

pub fn verdict(r: &GraphRecord, v: &PerfectionVerdict) -> Result<String> {
    let witness = match &v.witness {
        None => serde_json::Value::Null,
        Some(Witness::Subgraph { vertices, gamma, common_ind }) => json!({
            "kind": "subgraph",
            "vertices": one_based(*vertices),
            "gamma": gamma,
            "alpha_c": common_ind,
        }),
        Some(Witness::Pattern { pattern, embedding }) => json!({
            "kind": "pattern",
            "pattern": pattern.as_str(),
            "map": map_one_based(embedding),
        }),
    };
    Ok(serde_json::to_string(&json!({
        "line": r.line,
        "graph6": r.token,
        "perfect": v.perfect,
        "method": v.method.as_str(),
        "witness": witness,
    }))?)
}

pub fn embedding(r: &GraphRecord, p: &Pattern, e: Option<&Embedding>) -> Result<String> {
    Ok(serde_json::to_string(&json!({
        "line": r.line,
        "graph6": r.token,
        "pattern": p.name().as_str(),
        "found": e.is_some(),
        "map": e.map(map_one_based),
    }))?)
}
