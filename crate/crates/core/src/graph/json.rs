use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// On-disk graph format: `{"n": 3, "edges": [[0, 1], [1, 2], [2, 2]]}`.
///
/// Pairs are unordered and deduplicated on read; `[v, v]` is a loop. An
/// optional `involution` array is accepted for family members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vertex>>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        for &[u, v] in &self.edges {
            if u as usize >= self.n || v as usize >= self.n {
                return Err(Error::Parse(format!(
                    "edge [{u}, {v}] references a vertex >= n = {}",
                    self.n
                )));
            }
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let raw: GraphJson = serde_json::from_str(text)?;
        raw.to_graph()
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            involution: None,
        }
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("serialisable")
    }
}
