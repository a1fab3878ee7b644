//! JSON descriptions of graphs: `{"family": ..., "params": {...}, "seed": n}`.

use super::*;
use crate::graph::{parse_graph6, JsonGraph};
use serde::{Deserialize, Serialize};

/// A graph given inline: a nested family spec, an edge list, or graph6.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Spec(Box<FamilySpec>),
    EdgeList(JsonGraph),
    Graph6(String),
}

impl GraphSource {
    pub fn resolve(&self) -> Result<Graph> {
        match self {
            GraphSource::Spec(s) => s.build(),
            GraphSource::EdgeList(j) => Graph::try_from(j.clone()),
            GraphSource::Graph6(s) => parse_graph6(s.trim()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum Family {
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    CompleteMultipartite {
        a: usize,
        n: usize,
    },
    Lollipop {
        a: usize,
        b: usize,
    },
    Sparkler {
        a: usize,
        b: usize,
    },
    Jellyfish {
        a: usize,
        b: usize,
    },
    Megastar {
        s: usize,
        t: usize,
    },
    UniformTree {
        k: usize,
        r: usize,
    },
    Hypercube {
        d: usize,
    },
    Subdivided {
        base: GraphSource,
        l: usize,
    },
    #[serde(rename = "gadget_A")]
    GadgetA {
        l: usize,
        base: GraphSource,
    },
    CliqueGadget {
        l0: usize,
        gadget: GraphSource,
        #[serde(default)]
        center: usize,
    },
    AntipodalProduct {
        base: GraphSource,
        factor: GraphSource,
        a: usize,
        abar: usize,
    },
    RandomRegular {
        n: usize,
        d: usize,
    },
    Gnp {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<f64>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: Family,
    /// Used only by the random families.
    #[serde(default)]
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, seed: 0 }
    }

    pub fn with_seed(family: Family, seed: u64) -> Self {
        FamilySpec { family, seed }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad family spec: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family specs serialize")
    }

    pub fn build(&self) -> Result<Graph> {
        use Family::*;
        let seed = self.seed;
        match &self.family {
            Complete { n } => Ok(Graph::complete(*n)),
            Path { n } => Ok(Graph::path(*n)),
            Cycle { n } => Graph::cycle(*n),
            Star { leaves } => Ok(Graph::star(*leaves)),
            CompleteBipartite { a, b } => Ok(Graph::complete_bipartite(*a, *b)),
            CompleteMultipartite { a, n } => complete_multipartite(*a, *n),
            Lollipop { a, b } => lollipop(*a, *b),
            Sparkler { a, b } => sparkler(*a, *b),
            Jellyfish { a, b } => jellyfish(*a, *b),
            Megastar { s, t } => megastar(*s, *t),
            UniformTree { k, r } => uniform_tree(*k, *r),
            Hypercube { d } => hypercube(*d),
            Subdivided { base, l } => Ok(subdivide_edges(&base.resolve()?, *l)),
            GadgetA { l, base } => gadget_a(*l, &base.resolve()?),
            CliqueGadget { l0, gadget, center } => clique_gadget(*l0, &gadget.resolve()?, *center),
            AntipodalProduct {
                base,
                factor,
                a,
                abar,
            } => antipodal_product(&base.resolve()?, &factor.resolve()?, *a, *abar),
            RandomRegular { n, d } => random_regular(*n, *d, seed),
            Gnp { n, p, alpha } => match (p, alpha) {
                (Some(p), None) => gnp(*n, *p, seed),
                (None, Some(a)) => gnp_alpha(*n, *a, seed),
                _ => Err(param("gnp takes exactly one of p and alpha")),
            },
        }
    }
}

/// Reads a graph from graph6, an edge-list object or a family spec.
pub fn parse_graph_arg(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') {
        let src: GraphSource =
            serde_json::from_str(t).map_err(|e| Error::Input(format!("bad graph JSON: {e}")))?;
        src.resolve()
    } else {
        parse_graph6(t)
    }
}
