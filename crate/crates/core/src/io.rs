//! Graph input: graph6 text or a JSON adjacency list `{"n": 5, "edges": [[0, 1], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::decode_graph6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeListJson {
    fn from(g: &Graph) -> Self {
        EdgeListJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeListJson> for Graph {
    type Error = Error;

    fn try_from(j: EdgeListJson) -> Result<Graph> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(j.n, &edges)
    }
}

/// Parses a graph from file contents: JSON when the first non-blank
/// character is `{`, otherwise the first non-empty line as graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let j: EdgeListJson =
            serde_json::from_str(trimmed).map_err(|e| Error::Input(e.to_string()))?;
        return Graph::try_from(j);
    }
    let line = trimmed
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Input("no graph found".into()))?;
    decode_graph6(line.as_bytes())
}
