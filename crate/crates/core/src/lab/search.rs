//! The conjecture-search harness: corpus enumeration (family parameter
//! ranges and all connected multigraphs up to an edge budget) and the
//! per-instance packing-then-inequality check. Any instance that satisfies
//! the two-bases hypothesis but fails the max inequality is a counterexample
//! and is dumped in full.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::catalog;
use crate::error::{Error, Result};
use crate::graph::{canonical_key, CanonKey, Multigraph};
use crate::limits::Limits;
use crate::matroid::Matroid;
use crate::packing;
use crate::report::{CheckReport, InstanceRef, Verdict};

/// All connected multigraphs (loops and parallel edges allowed) with 1..=max
/// edges, one representative per isomorphism class, in a deterministic
/// order. Enumeration is by edge addition: every connected multigraph with
/// e+1 edges arises from a connected multigraph with e edges by adding an
/// edge between existing vertices or a pendant edge to a new vertex.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    let mut level: BTreeSet<CanonKey> = BTreeSet::new();
    level.insert(canonical_key(&Multigraph { vertices: 1, edges: vec![(0, 0)] }));
    level.insert(canonical_key(&Multigraph { vertices: 2, edges: vec![(0, 1)] }));
    for key in &level {
        out.push(graph_of_key(key));
    }
    for _ in 1..max_edges {
        let parents: Vec<Multigraph> = level.iter().map(graph_of_key).collect();
        let children: Vec<CanonKey> = parents
            .par_iter()
            .flat_map_iter(|g| {
                let mut keys = Vec::new();
                for u in 0..g.vertices {
                    for v in u..g.vertices {
                        let mut edges = g.edges.clone();
                        edges.push((u, v));
                        keys.push(canonical_key(&Multigraph { vertices: g.vertices, edges }));
                    }
                    let mut edges = g.edges.clone();
                    edges.push((u, g.vertices));
                    keys.push(canonical_key(&Multigraph { vertices: g.vertices + 1, edges }));
                }
                keys
            })
            .collect();
        level = children.into_iter().collect();
        for key in &level {
            out.push(graph_of_key(key));
        }
    }
    out
}

fn graph_of_key(key: &CanonKey) -> Multigraph {
    Multigraph {
        vertices: key.0,
        edges: key.1.iter().map(|&(u, v)| (u as usize, v as usize)).collect(),
    }
}

/// A list of instances to sweep: ids plus matroids.
pub type InstanceList = Vec<(String, Matroid)>;

/// Expand a family name over an inclusive parameter range into instances.
/// Families follow the shorthand grammar; the complete-bipartite family
/// sweeps n <= m over the given range for both sides.
pub fn family_range_corpus(family: &str, lo: usize, hi: usize) -> Result<InstanceList> {
    let mut out = Vec::new();
    if lo > hi {
        return Err(Error::InvalidConstruction(format!(
            "empty parameter range {lo}..{hi} for family '{family}'"
        )));
    }
    match family {
        "Knm" => {
            for n in lo..=hi {
                for m in n..=hi {
                    let id = format!("Knm:{n},{m}");
                    out.push((id.clone(), catalog::parse_shorthand(&id)?));
                }
            }
        }
        _ => {
            for n in lo..=hi {
                let id = format!("{family}:{n}");
                out.push((id.clone(), catalog::parse_shorthand(&id)?));
            }
        }
    }
    Ok(out)
}

/// The multigraph corpus as graphic-matroid instances with stable ids.
pub fn multigraph_corpus(max_edges: usize) -> Result<InstanceList> {
    let graphs = connected_multigraphs(max_edges);
    graphs
        .into_iter()
        .enumerate()
        .map(|(idx, g)| {
            let id = format!("mg:e{:02}:{idx:06}", g.edge_count());
            Ok((id, Matroid::graphic(&g)?))
        })
        .collect()
}

/// Run the conjecture check over a corpus: packing certificate first, then
/// the max inequality for instances satisfying the hypothesis. Reports come
/// back in corpus order. A `fail` report is a counterexample.
pub fn conjecture_search(instances: &InstanceList, limits: &Limits) -> Result<Vec<CheckReport>> {
    let reports: Result<Vec<CheckReport>> = instances
        .par_iter()
        .map(|(id, m)| check_conjecture_instance(id, m, limits))
        .collect();
    reports
}

pub fn check_conjecture_instance(
    id: &str,
    m: &Matroid,
    limits: &Limits,
) -> Result<CheckReport> {
    let cert = packing::packing_certificate(m)?;
    if !cert.hypothesis_holds() {
        let mut report =
            CheckReport::new("merino-welsh", InstanceRef::name(id), Verdict::Skip);
        report.set_value("packing", cert.verdict().as_str());
        report.set_value("note", "hypothesis unmet: neither packing certificate");
        return Ok(report);
    }
    let mut report = super::check_merino_welsh(m, limits, InstanceRef::name(id))?;
    report.set_value("packing", cert.verdict().as_str());
    if report.verdict == Verdict::Fail {
        // Counterexample: dump the full instance.
        let mut dump = serde_json::Map::new();
        if let Some(w) = report.witness.take() {
            dump.insert("inequality".into(), w);
        }
        dump.insert(
            "descriptor".into(),
            serde_json::to_value(m.descriptor()).unwrap_or(serde_json::Value::Null),
        );
        if let Some((b1, b2)) = cert.disjoint.witness.or(cert.union.witness) {
            dump.insert(
                "packing_witness".into(),
                serde_json::json!([b1.elements(), b2.elements()]),
            );
        }
        report.witness = Some(serde_json::Value::Object(dump));
    }
    Ok(report)
}
