use efgraph::experiments::{lollipop_theorem, reproduce_table, s44, Report, Verdict};
use efgraph::families::FamilySpec;
use efgraph::pattern::contains_subgraph;
use efgraph::Graph;
use serde_json::Value;

fn rebuild(v: &Value) -> Graph {
    FamilySpec::from_json(&v.to_string())
        .unwrap()
        .build()
        .unwrap()
}

/// Recomputes the containment fields of a report from its inputs.
fn recheck(r: &Report, label: &str, f: &Graph) {
    let (g, h) = (rebuild(&r.inputs["G"]), rebuild(&r.inputs["H"]));
    assert_eq!(
        r.computed[format!("G_contains_{label}")],
        contains_subgraph(&g, f),
        "{}",
        r.experiment
    );
    assert_eq!(
        r.computed[format!("H_contains_{label}")],
        contains_subgraph(&h, f),
        "{}",
        r.experiment
    );
}

#[test]
fn table_reports_rebuild_from_their_inputs() {
    let reports = reproduce_table(3, 1).unwrap();
    assert_eq!(reports.len(), 6);
    let mut diamond = Graph::complete(4);
    diamond.remove_edge(2, 3);
    let paw = efgraph::families::lollipop(3, 1).unwrap();
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.runtime_ms, 0);
        match r.experiment.as_str() {
            "table-p4" => recheck(r, "P4", &Graph::path(4)),
            "table-claw" => recheck(r, "K13", &Graph::star(3)),
            "table-paw" => recheck(r, "paw", &paw),
            "table-c4" => recheck(r, "C4", &Graph::cycle(4).unwrap()),
            "table-diamond" => recheck(r, "diamond", &diamond),
            "table-k4" => recheck(r, "K4", &Graph::complete(4)),
            other => panic!("unexpected row {other}"),
        }
    }
    assert_eq!(reproduce_table(3, 1).unwrap(), reports);
}

#[test]
fn s44_embedding_lands_in_the_rebuilt_graph() {
    let r = s44(3).unwrap();
    let g = rebuild(&r.inputs["G"]);
    let map: Vec<usize> = serde_json::from_value(r.computed["embedding"].clone()).unwrap();
    let f = efgraph::families::sparkler(4, 4).unwrap();
    assert!(efgraph::pattern::is_embedding(&g, &f, &map));
}

#[test]
fn report_json_has_the_fixed_field_order() {
    let r = lollipop_theorem(3, 2).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let keys: Vec<&str> = [
        "experiment",
        "claim",
        "inputs",
        "computed",
        "verdict",
        "runtime_ms",
    ]
    .to_vec();
    let mut at = 0;
    for k in keys {
        let i = text[at..].find(&format!("\"{k}\"")).unwrap();
        at += i;
    }
    assert!(text.contains("\"verdict\":\"pass\""));
}
