//! Lower-bound witnesses for the patterns on four vertices.

use super::{Named, Report, Verdict};
use crate::ef::{distinguishing_depth, distinguishing_width, duplicator_survives, DepthSolver};
use crate::error::{param, Result};
use crate::families::Family;
use crate::graph::{girth, is_rigid, vertex_connectivity, Graph};
use crate::pattern::{contains_subgraph, density_lower_bound};
use serde_json::{json, Value};

/// Search length for the random regular specimens.
pub const SPECIMEN_TRIALS: u64 = 10_000;

fn pair_inputs(g: &Named, h: &Named, extra: Value) -> Value {
    let mut v = json!({ "G": g.value(), "H": h.value() });
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

/// Whether Spoiler fails to win the `d`-round game, so `D(G, H) > d`.
fn depth_exceeds(g: &Graph, h: &Graph, d: usize) -> Result<bool> {
    Ok(!DepthSolver::new(g, h)?.spoiler_wins(d)?)
}

/// `G` contains `f` and `H` does not.
fn separates(g: &Graph, h: &Graph, f: &Graph) -> (bool, bool) {
    (contains_subgraph(g, f), contains_subgraph(h, f))
}

fn p4_row(n: usize) -> Result<Report> {
    let g = Named::new(Family::Jellyfish { a: 3, b: n })?;
    let h = Named::new(Family::Star { leaves: n + 1 })?;
    let (in_g, in_h) = separates(&g.graph, &h.graph, &Graph::path(4));
    let d = distinguishing_depth(&g.graph, &h.graph)?;
    let w = distinguishing_width(&g.graph, &h.graph)?;
    let ok = in_g && !in_h && d >= 3 && w >= 2;
    Ok(Report::new(
        "table-p4",
        "D(J_{3,n}, K_{1,n+1}) >= 3 and W >= 2, with P4 in G only",
        pair_inputs(&g, &h, json!({ "n": n })),
        json!({ "G_contains_P4": in_g, "H_contains_P4": in_h, "depth": d, "width": w }),
        Verdict::from_bool(ok),
    ))
}

fn claw_row(n: usize) -> Result<Report> {
    let g = Named::new(Family::Megastar { s: 3, t: n })?;
    let h = Named::new(Family::Path { n: 2 * n + 1 })?;
    let (in_g, in_h) = separates(&g.graph, &h.graph, &Graph::star(3));
    let deep = depth_exceeds(&g.graph, &h.graph, 3)?;
    let wide = duplicator_survives(&g.graph, &h.graph, 2)?;
    let ok = in_g && !in_h && deep && wide;
    Ok(Report::new(
        "table-claw",
        "D(M_{3,n}, P_{2n+1}) >= 4 and W >= 3, with K_{1,3} in G only",
        pair_inputs(&g, &h, json!({ "n": n })),
        json!({
            "G_contains_K13": in_g,
            "H_contains_K13": in_h,
            "depth_exceeds_3": deep,
            "width_exceeds_2": wide,
        }),
        Verdict::from_bool(ok),
    ))
}

fn multipartite_row(
    name: &str,
    claim: &str,
    a: usize,
    n: usize,
    patterns: &[(&str, Graph)],
) -> Result<Report> {
    let g = Named::new(Family::CompleteMultipartite { a, n })?;
    let h = Named::new(Family::CompleteMultipartite { a: a - 1, n })?;
    let mut computed = serde_json::Map::new();
    let mut ok = true;
    for (label, f) in patterns {
        let (in_g, in_h) = separates(&g.graph, &h.graph, f);
        ok &= in_g && !in_h;
        computed.insert(format!("G_contains_{label}"), in_g.into());
        computed.insert(format!("H_contains_{label}"), in_h.into());
    }
    let wide = duplicator_survives(&g.graph, &h.graph, a - 1)?;
    ok &= wide;
    computed.insert(format!("width_exceeds_{}", a - 1), wide.into());
    computed.insert(
        "G_connectivity".into(),
        vertex_connectivity(&g.graph).into(),
    );
    Ok(Report::new(
        name,
        claim,
        pair_inputs(&g, &h, json!({ "n": n })),
        Value::Object(computed),
        Verdict::from_bool(ok),
    ))
}

fn paw_row(n: usize) -> Result<Report> {
    let paw = Named::new(Family::Lollipop { a: 3, b: 1 })?.graph;
    let mut r = multipartite_row(
        "table-paw",
        "W(K(3,n), K(2,n)) >= 3, with the paw in G only",
        3,
        n,
        &[("paw", paw)],
    )?;
    let g = Named::new(Family::CompleteMultipartite { a: 3, n })?;
    let h = Named::new(Family::CompleteMultipartite { a: 2, n })?;
    r.computed["width"] = distinguishing_width(&g.graph, &h.graph)?.into();
    Ok(r)
}

fn diamond_row(n: usize) -> Result<Report> {
    let mut diamond = Graph::complete(4);
    diamond.remove_edge(2, 3);
    let mut r = multipartite_row(
        "table-diamond",
        "W(K(3,n), K(2,n)) >= 3 with the diamond in G only, and e/v + 2 = 13/4 forces depth at least 4",
        3,
        n,
        &[("diamond", diamond.clone())],
    )?;
    let bound = density_lower_bound(&diamond).expect("the diamond has e > v");
    let forced = bound.ceil().to_integer();
    r.computed["density_bound"] = bound.to_string().into();
    r.computed["forced_depth"] = forced.into();
    if forced < 4 {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

fn k4_row(n: usize) -> Result<Report> {
    let mut r = multipartite_row(
        "table-k4",
        "W(K(4,n), K(3,n)) >= 4 with K4 in G only, and e/v + 2 = 7/2 forces depth at least 4",
        4,
        n,
        &[("K4", Graph::complete(4))],
    )?;
    let bound = density_lower_bound(&Graph::complete(4)).expect("K4 has e > v");
    let forced = bound.ceil().to_integer();
    r.computed["density_bound"] = bound.to_string().into();
    r.computed["forced_depth"] = forced.into();
    if forced < 4 {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

/// First connected seeded cubic graph on 14 vertices, from `seed` on, with
/// the requested girth (and no symmetry, for girth 4).
fn specimen(seed: u64, want_girth: usize) -> Result<Option<Named>> {
    for s in seed..seed.saturating_add(SPECIMEN_TRIALS) {
        let g = Named::seeded(Family::RandomRegular { n: 14, d: 3 }, s)?;
        if g.graph.is_connected()
            && girth(&g.graph) == Some(want_girth)
            && (want_girth != 4 || is_rigid(&g.graph))
        {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

fn c4_row(seed: u64) -> Result<Report> {
    let claim = "a rigid cubic graph of girth 4 and a cubic graph of girth 5 on 14 vertices have D > 3 and W > 2";
    let (Some(g), Some(h)) = (specimen(seed, 4)?, specimen(seed, 5)?) else {
        return Ok(Report::new(
            "table-c4",
            claim,
            json!({ "seed": seed, "trials": SPECIMEN_TRIALS }),
            json!({ "specimens_found": false }),
            Verdict::DataOnly,
        ));
    };
    let deep = depth_exceeds(&g.graph, &h.graph, 3)?;
    let wide = duplicator_survives(&g.graph, &h.graph, 2)?;
    let (in_g, in_h) = separates(&g.graph, &h.graph, &Graph::cycle(4)?);
    let ok = deep && wide && in_g && !in_h;
    Ok(Report::new(
        "table-c4",
        claim,
        pair_inputs(&g, &h, json!({ "seed": seed })),
        json!({
            "G_contains_C4": in_g,
            "H_contains_C4": in_h,
            "G_connectivity": vertex_connectivity(&g.graph),
            "H_connectivity": vertex_connectivity(&h.graph),
            "depth_exceeds_3": deep,
            "width_exceeds_2": wide,
        }),
        Verdict::from_bool(ok),
    ))
}

/// One report per row of the four-vertex table, at witness scale `n`.
pub fn reproduce_table(n: usize, seed: u64) -> Result<Vec<Report>> {
    if !(3..=6).contains(&n) {
        return Err(param(format!("the table runs at 3 <= n <= 6, got {n}")));
    }
    Ok(vec![
        p4_row(n)?,
        claw_row(n)?,
        paw_row(n)?,
        c4_row(seed)?,
        diamond_row(n)?,
        k4_row(n)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_at_three() {
        for r in [
            p4_row(3).unwrap(),
            claw_row(3).unwrap(),
            paw_row(3).unwrap(),
        ] {
            assert!(r.passed(), "{r:?}");
        }
        let p4 = p4_row(3).unwrap();
        assert_eq!(p4.computed["depth"], 3);
        assert_eq!(p4.computed["width"], 2);
        assert_eq!(paw_row(3).unwrap().computed["width"], 3);
    }

    #[test]
    fn density_rows() {
        let d = diamond_row(3).unwrap();
        assert!(d.passed(), "{d:?}");
        assert_eq!(d.computed["density_bound"], "13/4");
        let k = k4_row(3).unwrap();
        assert!(k.passed(), "{k:?}");
        assert_eq!(k.computed["density_bound"], "7/2");
    }

    #[test]
    fn scale_is_checked() {
        assert!(reproduce_table(2, 0).is_err());
        assert!(reproduce_table(7, 0).is_err());
    }
}
