//! Exhaustive checks of structural inequalities over small connected graphs.

use super::{contains_subgraph, pendant_path, pendant_star};
use crate::error::{param, Result};
use crate::experiments::{Report, Verdict};
use crate::families::sparkler;
use crate::graph::{connected_graphs, format_graph6, Graph};
use rayon::prelude::*;
use serde_json::json;

fn all_up_to(nmax: usize, from: usize) -> Result<Vec<Graph>> {
    if nmax > 9 {
        return Err(param(format!("nmax must be at most 9, got {nmax}")));
    }
    let mut out = Vec::new();
    for n in from..=nmax {
        out.extend(connected_graphs(n)?.iter().cloned());
    }
    Ok(out)
}

fn is_star(f: &Graph) -> bool {
    f.n() >= 2 && f.edge_count() == f.n() - 1 && f.max_degree() == f.n() - 1
}

fn is_path(f: &Graph) -> bool {
    f.edge_count() + 1 == f.n() && f.max_degree() <= 2
}

/// Connected `H` on at most `nmax` vertices containing `K_{1,4}` but not
/// `S_{4,4}` must have a vertex of degree above `(v(H)/2)^(1/7)`.
pub fn check_large_degree_lemma(nmax: usize) -> Result<Report> {
    let graphs = all_up_to(nmax, 1)?;
    let claw4 = Graph::star(4);
    let s44 = sparkler(4, 4)?;
    let results: Vec<(bool, Option<String>)> = graphs
        .par_iter()
        .map(|h| {
            if !contains_subgraph(h, &claw4) || contains_subgraph(h, &s44) {
                return (false, None);
            }
            let bound = (h.n() as f64 / 2.0).powf(1.0 / 7.0);
            let bad = (h.max_degree() as f64) <= bound;
            (true, bad.then(|| format_graph6(h).expect("n <= 9")))
        })
        .collect();
    let checked = results.iter().filter(|r| r.0).count();
    let bad: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
    Ok(Report::new(
        "large-degree-lemma",
        "every connected graph containing K_{1,4} but not S_{4,4} has a vertex of degree greater than (v/2)^(1/7)",
        json!({ "nmax": nmax }),
        json!({ "graphs_checked": checked, "counterexamples": bad }),
        Verdict::from_bool(bad.is_empty()),
    ))
}

/// `p(F) + s(F) < v(F)` for connected `F` on `4..=nmax` vertices that are
/// neither stars nor paths.
pub fn check_stell(nmax: usize) -> Result<Report> {
    let graphs = all_up_to(nmax, 4)?;
    let results: Vec<Option<Option<String>>> = graphs
        .par_iter()
        .map(|f| {
            if is_star(f) || is_path(f) {
                return None;
            }
            let (t, s) = (pendant_path(f).ok()?, pendant_star(f).ok()?);
            Some((t + s >= f.n()).then(|| format_graph6(f).expect("n <= 9")))
        })
        .collect();
    let checked = results.iter().filter(|r| r.is_some()).count();
    let bad: Vec<String> = results.into_iter().flatten().flatten().collect();
    Ok(Report::new(
        "pendant-sum",
        "p(F) + s(F) < v(F) for every connected F that is neither a star nor a path",
        json!({ "nmax": nmax }),
        json!({ "graphs_checked": checked, "counterexamples": bad }),
        Verdict::from_bool(bad.is_empty()),
    ))
}
