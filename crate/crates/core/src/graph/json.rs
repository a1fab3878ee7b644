use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// JSON edge-list form: `{"n": 4, "edges": [[0,1],[1,2]]}`, `u < v`,
/// edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        JsonGraph {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<JsonGraph> for Graph {
    type Error = Error;

    fn try_from(j: JsonGraph) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(j.n, &edges)
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonGraph::from(self)).expect("edge list serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let j: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        Graph::try_from(j)
    }
}
