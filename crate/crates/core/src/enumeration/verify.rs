use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_graphs, ClassFilter, EnumerationError, GRAPH_MAX_ORDER, TREE_MAX_ORDER};
use crate::classes::{
    block_graph_corollary, chordal_corollary, claw_free_corollary, is_chordal, line_graph, line_graph_criterion,
    middle_graph, middle_graph_criterion, single_star_component, tree_corollary_conditions,
};
use crate::formats::emit_graph6;
use crate::graph::Graph;
use crate::invariants::parameter_profile;
use crate::patterns::is_claw_free;
use crate::perfection::{perfect_by_definition, perfect_by_gamma2, perfect_by_theorem, PerfectionVerdict, Witness};

/// Counterexample lists are truncated to this many entries.
pub const COUNTEREXAMPLE_CAP: usize = 100;

/// Largest host order for the line-graph sweep.
pub const LINE_HOST_MAX_ORDER: usize = 7;
/// Largest host order for the middle-graph sweep.
pub const MIDDLE_HOST_MAX_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Universe {
    pub suite: String,
    pub order_min: usize,
    pub order_max: usize,
    pub class_filter: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub universe: Universe,
    pub checked: usize,
    pub agreements: usize,
    pub counterexample_total: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub minimal_imperfect: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexample_total == 0 && self.sections.iter().all(VerificationReport::passed)
    }

    /// Copy with all timings zeroed, for comparing runs.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        r.sections = r.sections.iter().map(VerificationReport::without_timing).collect();
        r
    }

    /// Combines section reports under one universe.
    pub fn aggregate(universe: Universe, sections: Vec<VerificationReport>, elapsed_ms: u128) -> Self {
        let mut counterexamples: Vec<Counterexample> =
            sections.iter().flat_map(|s| s.counterexamples.iter().cloned()).collect();
        counterexamples.truncate(COUNTEREXAMPLE_CAP);
        VerificationReport {
            universe,
            checked: sections.iter().map(|s| s.checked).sum(),
            agreements: sections.iter().map(|s| s.agreements).sum(),
            counterexample_total: sections.iter().map(|s| s.counterexample_total).sum(),
            counterexamples,
            minimal_imperfect: sections.iter().flat_map(|s| s.minimal_imperfect.iter().cloned()).collect(),
            notes: sections.iter().flat_map(|s| s.notes.iter().cloned()).collect(),
            elapsed_ms,
            sections,
        }
    }
}

/// Result of checking one graph.
#[derive(Default)]
struct Outcome {
    failure: Option<(BTreeMap<String, bool>, Vec<String>)>,
    minimal: bool,
    note: Option<String>,
}

impl Outcome {
    fn agree() -> Self {
        Outcome::default()
    }

    fn disagree(verdicts: &[(&str, bool)], witnesses: Vec<String>) -> Self {
        let map = verdicts.iter().map(|&(k, v)| (k.to_owned(), v)).collect();
        Outcome { failure: Some((map, witnesses)), ..Outcome::default() }
    }
}

fn token(g: &Graph) -> String {
    emit_graph6(g).expect("enumerated graphs fit graph6")
}

fn sweep<F>(universe: Universe, graphs: &[Graph], check: F) -> VerificationReport
where
    F: Fn(&Graph) -> Outcome + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Outcome> = graphs.par_iter().map(&check).collect();
    let mut report = VerificationReport {
        universe,
        checked: graphs.len(),
        agreements: 0,
        counterexample_total: 0,
        counterexamples: Vec::new(),
        minimal_imperfect: Vec::new(),
        notes: Vec::new(),
        elapsed_ms: 0,
        sections: Vec::new(),
    };
    for (g, o) in graphs.iter().zip(outcomes) {
        match o.failure {
            None => report.agreements += 1,
            Some((verdicts, witnesses)) => {
                report.counterexample_total += 1;
                if report.counterexamples.len() < COUNTEREXAMPLE_CAP {
                    report.counterexamples.push(Counterexample { graph6: token(g), verdicts, witnesses });
                }
            }
        }
        if o.minimal {
            report.minimal_imperfect.push(token(g));
        }
        report.notes.extend(o.note);
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

fn cap(order: usize, max: usize, what: &'static str) -> Result<(), EnumerationError> {
    if order > max {
        Err(EnumerationError::CapExceeded { order, cap: max, what })
    } else {
        Ok(())
    }
}

fn universe(suite: &str, order_max: usize, filter: Option<&str>) -> Universe {
    Universe {
        suite: suite.to_owned(),
        order_min: 1,
        order_max,
        class_filter: filter.map(str::to_owned),
    }
}

fn collect(order_max: usize, filter: Option<ClassFilter>) -> Result<Vec<Graph>, EnumerationError> {
    let mut graphs = Vec::new();
    for n in 1..=order_max {
        graphs.extend(enumerate_graphs(n, filter)?);
    }
    Ok(graphs)
}

fn describe(v: &PerfectionVerdict) -> String {
    match &v.witness {
        None => format!("{}: perfect", v.method.as_str()),
        Some(Witness::Subgraph { vertices, gamma, common_ind }) => format!(
            "{}: induced {:?} has gamma={} alpha_c={}",
            v.method.as_str(),
            vertices.iter().map(|x| x + 1).collect::<Vec<_>>(),
            gamma,
            common_ind
        ),
        Some(Witness::Pattern { pattern, embedding }) => format!(
            "{}: {} at {:?}",
            v.method.as_str(),
            pattern,
            embedding.map.iter().map(|x| x + 1).collect::<Vec<_>>()
        ),
    }
}

/// Compares the three perfection deciders on every graph of order
/// `1..=order_max` and lists the minimal imperfect graphs met.
pub fn verify_theorem(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, GRAPH_MAX_ORDER, "theorem verification")?;
    let graphs = collect(order_max, None)?;
    Ok(sweep(universe("theorem", order_max, None), &graphs, |g| {
        let def = perfect_by_definition(g).expect("order within cap");
        let g2 = perfect_by_gamma2(g).expect("order within cap");
        let thm = perfect_by_theorem(g);
        let sound = [&def, &g2, &thm].iter().all(|v| v.reverify(g));
        let minimal = matches!(&def.witness, Some(Witness::Subgraph { vertices, .. }) if *vertices == g.vertices());
        if def.perfect == thm.perfect && g2.perfect == thm.perfect && sound {
            Outcome { minimal, ..Outcome::agree() }
        } else {
            let mut o = Outcome::disagree(
                &[("definition", def.perfect), ("gamma2", g2.perfect), ("theorem", thm.perfect), ("witnesses_sound", sound)],
                vec![describe(&def), describe(&g2), describe(&thm)],
            );
            o.minimal = minimal;
            o
        }
    }))
}

/// Checks `γ <= i <= α_c <= α` and witness validity on every graph of order
/// `1..=order_max`.
pub fn verify_chain(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, GRAPH_MAX_ORDER, "chain verification")?;
    let graphs = collect(order_max, None)?;
    Ok(sweep(universe("chain", order_max, None), &graphs, |g| match parameter_profile(g) {
        Err(e) => Outcome::disagree(&[("chain", false)], vec![e.to_string()]),
        Ok(p) => {
            let witnesses_ok = g.is_dominating(p.witness_gamma)
                && p.witness_gamma.len() == p.gamma
                && g.is_dominating(p.witness_ind_dom)
                && g.is_independent(p.witness_ind_dom)
                && p.witness_ind_dom.len() == p.ind_dom
                && g.is_independent(p.witness_ind)
                && p.witness_ind.len() == p.ind
                && p.per_vertex_ind.iter().min() == Some(&p.common_ind);
            if witnesses_ok {
                Outcome::agree()
            } else {
                Outcome::disagree(&[("chain", true), ("witnesses", false)], vec![format!("{p:?}")])
            }
        }
    }))
}

/// The four tree conditions agree on every tree of order `1..=order_max`.
pub fn verify_tree_corollary(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, TREE_MAX_ORDER, "tree corollary")?;
    let trees = collect(order_max, Some(ClassFilter::Tree))?;
    Ok(sweep(universe("tree-corollary", order_max, Some("tree")), &trees, |t| {
        let c = tree_corollary_conditions(t).expect("enumerated trees");
        if c.agree() {
            Outcome::agree()
        } else {
            Outcome::disagree(
                &[
                    ("perfect", c.perfect),
                    ("h1_h7_h8_free", c.reduced_free),
                    ("diameter_degree", c.diameter_degree),
                    ("family", c.family),
                ],
                Vec::new(),
            )
        }
    }))
}

/// `{H1, H7, H8}`-freeness against the theorem on chordal graphs.
pub fn verify_chordal_corollary(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, GRAPH_MAX_ORDER, "chordal corollary")?;
    let graphs = collect(order_max, Some(ClassFilter::Chordal))?;
    Ok(sweep(universe("chordal-corollary", order_max, Some("chordal")), &graphs, |g| {
        let reduced = chordal_corollary(g).expect("chordal filter");
        let thm = perfect_by_theorem(g);
        if reduced == thm.perfect {
            Outcome::agree()
        } else {
            Outcome::disagree(&[("h1_h7_h8_free", reduced), ("theorem", thm.perfect)], vec![describe(&thm)])
        }
    }))
}

/// `{H7, H8, H9}`-freeness against the theorem on claw-free graphs.
pub fn verify_claw_free_corollary(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, GRAPH_MAX_ORDER, "claw-free corollary")?;
    let graphs = collect(order_max, Some(ClassFilter::ClawFree))?;
    Ok(sweep(universe("claw-free-corollary", order_max, Some("claw-free")), &graphs, |g| {
        let reduced = claw_free_corollary(g).expect("claw-free filter");
        let thm = perfect_by_theorem(g);
        if reduced == thm.perfect {
            Outcome::agree()
        } else {
            Outcome::disagree(&[("h7_h8_h9_free", reduced), ("theorem", thm.perfect)], vec![describe(&thm)])
        }
    }))
}

/// The block-graph conditions against the theorem on connected block
/// graphs; also checks that each of them is chordal.
pub fn verify_block_graph_corollary(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, GRAPH_MAX_ORDER, "block-graph corollary")?;
    let graphs: Vec<Graph> =
        collect(order_max, Some(ClassFilter::BlockGraph))?.into_iter().filter(Graph::is_connected).collect();
    Ok(sweep(universe("block-graph-corollary", order_max, Some("connected block-graph")), &graphs, |g| {
        let conditions = block_graph_corollary(g).expect("connected block graph");
        let thm = perfect_by_theorem(g);
        let chordal = is_chordal(g);
        if conditions == thm.perfect && chordal {
            Outcome::agree()
        } else {
            Outcome::disagree(
                &[("block_conditions", conditions), ("theorem", thm.perfect), ("chordal", chordal)],
                vec![describe(&thm)],
            )
        }
    }))
}

/// For every host `H`: the subgraph criterion on `H` against the theorem on
/// `L(H)`; also checks that `L(H)` is claw-free.
pub fn verify_line_graph_corollary(host_order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(host_order_max, LINE_HOST_MAX_ORDER, "line-graph hosts")?;
    let hosts = collect(host_order_max, None)?;
    Ok(sweep(universe("line-graph-corollary", host_order_max, Some("line-graph host")), &hosts, |h| {
        let criterion = line_graph_criterion(h);
        let l = line_graph(h).expect("at most 21 edges");
        let thm = perfect_by_theorem(&l);
        let claw_free = is_claw_free(&l);
        if criterion == thm.perfect && claw_free {
            Outcome::agree()
        } else {
            Outcome::disagree(
                &[("host_criterion", criterion), ("theorem_on_line_graph", thm.perfect), ("claw_free", claw_free)],
                vec![describe(&thm)],
            )
        }
    }))
}

/// For every host `H`: "no two non-adjacent edges" against the theorem on
/// `M(H)`. Hosts where that criterion holds but `H` is not a single star
/// (plus isolated vertices) are recorded as notes.
pub fn verify_middle_graph_corollary(host_order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(host_order_max, MIDDLE_HOST_MAX_ORDER, "middle-graph hosts")?;
    let hosts = collect(host_order_max, None)?;
    Ok(sweep(universe("middle-graph-corollary", host_order_max, Some("middle-graph host")), &hosts, |h| {
        let criterion = middle_graph_criterion(h);
        let thm = perfect_by_theorem(&middle_graph(h).expect("small host"));
        let star = single_star_component(h);
        let note = (criterion && !star).then(|| {
            format!(
                "host {} has no two non-adjacent edges and M(H) is perfect={}, but its nontrivial component is not a star",
                token(h),
                thm.perfect
            )
        });
        let mut o = if criterion == thm.perfect {
            Outcome::agree()
        } else {
            Outcome::disagree(
                &[("host_criterion", criterion), ("theorem_on_middle_graph", thm.perfect), ("star_phrasing", star)],
                vec![describe(&thm)],
            )
        };
        o.note = note;
        o
    }))
}

/// Runs every class-restricted sweep. Each sweep is clamped to its own cap:
/// trees up to 12, line-graph hosts up to 7, middle-graph hosts up to 5,
/// the rest up to 8.
pub fn verify_corollaries(order_max: usize) -> Result<VerificationReport, EnumerationError> {
    cap(order_max, TREE_MAX_ORDER, "corollary verification")?;
    let start = Instant::now();
    let sections = vec![
        verify_tree_corollary(order_max)?,
        verify_chordal_corollary(order_max.min(GRAPH_MAX_ORDER))?,
        verify_block_graph_corollary(order_max.min(GRAPH_MAX_ORDER))?,
        verify_claw_free_corollary(order_max.min(GRAPH_MAX_ORDER))?,
        verify_line_graph_corollary(order_max.min(LINE_HOST_MAX_ORDER))?,
        verify_middle_graph_corollary(order_max.min(MIDDLE_HOST_MAX_ORDER))?,
    ];
    Ok(VerificationReport::aggregate(
        universe("corollaries", order_max, None),
        sections,
        start.elapsed().as_millis(),
    ))
}
