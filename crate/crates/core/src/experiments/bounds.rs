//! Exhaustive checks of the upper bounds for `P4` and `K_{1,3}`.

use super::{Report, Verdict};
use crate::ef::{duplicator_survives, DepthSolver};
use crate::error::{param, Result};
use crate::graph::{connected_graphs, format_graph6, Graph};
use crate::pattern::{contains_subgraph, treewidth};
use rayon::prelude::*;
use serde_json::json;

pub const UPPER_BOUNDS_CEILING: usize = 8;

fn corpus(from: usize, nmax: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in from..=nmax {
        out.extend(connected_graphs(n)?.iter().cloned());
    }
    Ok(out)
}

fn label(g: &Graph) -> String {
    format_graph6(g).expect("enumerated graphs are small")
}

/// A pattern `f` with the depth and width it should force on pairs of
/// connected graphs with at least `min_vertices` vertices.
struct Bound<'a> {
    name: &'a str,
    claim: &'a str,
    f: Graph,
    depth: usize,
    width: usize,
    min_vertices: usize,
}

/// Checks `D <= depth` and `W <= width` on every pair `(G, H)` with `G`
/// containing `f` and `H` not.
fn pair_check(b: &Bound<'_>, nmax: usize) -> Result<Report> {
    let Bound {
        name,
        claim,
        ref f,
        depth,
        width,
        min_vertices,
    } = *b;
    let graphs = corpus(min_vertices, nmax)?;
    let (with, without): (Vec<&Graph>, Vec<&Graph>) =
        graphs.iter().partition(|g| contains_subgraph(g, f));
    let pairs: Vec<(&Graph, &Graph)> = with
        .iter()
        .flat_map(|&g| without.iter().map(move |&h| (g, h)))
        .collect();
    let outcomes: Vec<(bool, bool)> = pairs
        .par_iter()
        .map(|&(g, h)| -> Result<(bool, bool)> {
            let deep = !DepthSolver::new(g, h)?.spoiler_wins(depth)?;
            let wide = duplicator_survives(g, h, width)?;
            Ok((deep, wide))
        })
        .collect::<Result<_>>()?;
    let mut depth_violations = Vec::new();
    let mut width_violations = Vec::new();
    for (&(g, h), &(deep, wide)) in pairs.iter().zip(&outcomes) {
        if deep {
            depth_violations.push([label(g), label(h)]);
        }
        if wide {
            width_violations.push([label(g), label(h)]);
        }
    }
    let mut free: Vec<String> = without.iter().map(|h| label(h)).collect();
    free.sort();
    let ok = depth_violations.is_empty() && width_violations.is_empty();
    Ok(Report::new(
        name,
        claim,
        json!({ "nmax": nmax, "min_vertices": min_vertices }),
        json!({
            "pairs_checked": pairs.len(),
            "pattern_free_graphs": free,
            "depth_violations": depth_violations,
            "width_violations": width_violations,
        }),
        Verdict::from_bool(ok),
    ))
}

fn treewidth_check(nmax: usize) -> Result<Report> {
    let graphs = corpus(1, nmax)?;
    let (p4, claw) = (Graph::path(4), Graph::star(3));
    let results: Vec<Option<Option<String>>> = graphs
        .par_iter()
        .map(|g| {
            if treewidth(g).expect("small graphs") < 3 {
                return None;
            }
            Some((!contains_subgraph(g, &p4) || !contains_subgraph(g, &claw)).then(|| label(g)))
        })
        .collect();
    let checked = results.iter().flatten().count();
    let bad: Vec<String> = results.into_iter().flatten().flatten().collect();
    Ok(Report::new(
        "upper-bound-treewidth",
        "every connected graph of treewidth at least 3 contains both P4 and K_{1,3}",
        json!({ "nmax": nmax }),
        json!({ "graphs_checked": checked, "counterexamples": bad }),
        Verdict::from_bool(bad.is_empty()),
    ))
}

/// Exhaustive upper-bound checks over connected graphs on at most `nmax`
/// vertices.
pub fn upper_bounds(nmax: usize) -> Result<Vec<Report>> {
    if nmax > UPPER_BOUNDS_CEILING {
        return Err(param(format!(
            "upper bounds run with nmax <= {UPPER_BOUNDS_CEILING}, got {nmax}"
        )));
    }
    let p4 = Bound {
        name: "upper-bound-p4",
        claim: "D(G, H) <= 3 and W(G, H) <= 2 whenever G contains P4 and H does not, both connected on at least 4 vertices",
        f: Graph::path(4),
        depth: 3,
        width: 2,
        min_vertices: 4,
    };
    let claw = Bound {
        name: "upper-bound-claw",
        claim: "D(G, H) <= 4 and W(G, H) <= 3 whenever G contains K_{1,3} and H does not, both connected on at least 7 vertices",
        f: Graph::star(3),
        depth: 4,
        width: 3,
        min_vertices: 7,
    };
    Ok(vec![
        pair_check(&p4, nmax)?,
        pair_check(&claw, nmax)?,
        treewidth_check(nmax)?,
    ])
}
