use super::{evaluate_sentence, Formula};
use crate::error::{param, Error, Result};
use crate::experiments::{Report, Verdict};
use crate::graph::{all_graphs, connected_graphs, format_graph6, vertex_connectivity, Graph};
use crate::pattern::{contains_subgraph, treewidth};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

/// Selects the graphs a definability check ranges over.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFilter {
    #[serde(default)]
    pub connected: bool,
    #[serde(default)]
    pub min_vertices: usize,
    #[serde(default)]
    pub min_treewidth: usize,
    #[serde(default)]
    pub min_connectivity: usize,
}

impl ClassFilter {
    pub fn connected() -> Self {
        ClassFilter {
            connected: true,
            ..Default::default()
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && g.n() >= self.min_vertices
            && (self.min_connectivity == 0 || vertex_connectivity(g) >= self.min_connectivity)
            && (self.min_treewidth == 0 || treewidth(g).is_ok_and(|t| t >= self.min_treewidth))
    }
}

pub const DEFINES_CEILING: usize = 8;

/// Checks `G |= phi  <=>  F is a subgraph of G` on every graph with at most
/// `nmax` vertices that passes `filter`.
pub fn defines_check(
    phi: &Formula,
    f: &Graph,
    filter: &ClassFilter,
    nmax: usize,
) -> Result<Report> {
    if nmax > DEFINES_CEILING {
        return Err(param(format!(
            "defines_check supports nmax <= {DEFINES_CEILING}, got {nmax}"
        )));
    }
    if !phi.is_sentence() {
        let free: Vec<String> = phi.free_variables().into_iter().collect();
        return Err(Error::Precondition(format!(
            "formula has free variables {free:?}"
        )));
    }
    let mut corpus = Vec::new();
    for n in 0..=nmax {
        if filter.connected {
            corpus.extend(connected_graphs(n)?.iter().cloned());
        } else {
            corpus.extend(all_graphs(n)?);
        }
    }
    let outcomes: Vec<Option<(bool, bool, String)>> = corpus
        .par_iter()
        .map(|g| {
            if !filter.accepts(g) {
                return None;
            }
            let says = evaluate_sentence(g, phi).expect("sentence has no free variables");
            let has = contains_subgraph(g, f);
            Some((says, has, format_graph6(g).expect("small graph")))
        })
        .collect();
    let checked = outcomes.iter().flatten().count();
    let false_positives: Vec<&str> = outcomes
        .iter()
        .flatten()
        .filter(|o| o.0 && !o.1)
        .map(|o| o.2.as_str())
        .collect();
    let false_negatives: Vec<&str> = outcomes
        .iter()
        .flatten()
        .filter(|o| !o.0 && o.1)
        .map(|o| o.2.as_str())
        .collect();
    let ok = false_positives.is_empty() && false_negatives.is_empty();
    Ok(Report::new(
        "defines",
        "the sentence holds exactly on the graphs containing the pattern, within the filtered corpus",
        json!({
            "formula": phi.to_string(),
            "pattern": format_graph6(f)?,
            "filter": filter,
            "nmax": nmax,
        }),
        json!({
            "graphs_checked": checked,
            "true_without_pattern": false_positives,
            "false_with_pattern": false_negatives,
        }),
        Verdict::from_bool(ok),
    ))
}
