//! Input and output formats: edge lists, graph6, JSON and DOT.

mod dot;
mod edge_list;
mod graph6;
pub mod json;

pub use dot::{factor_graph_to_dot, graph_to_dot};
pub use edge_list::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};

use crate::error::Result;
use crate::graph::Graph;
use crate::split::{Bipartition, SplitGraph};

/// A parsed input graph with its optional bipartition, name and vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub bipartition: Option<Bipartition>,
    pub name: Option<String>,
    /// `labels[v]` is the external name of internal vertex `v`.
    pub labels: Vec<String>,
}

impl GraphDocument {
    pub fn new(graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|v| v.to_string()).collect();
        GraphDocument {
            graph,
            bipartition: None,
            name: None,
            labels,
        }
    }

    pub fn from_split(s: &SplitGraph) -> Self {
        GraphDocument {
            bipartition: Some(s.bipartition()),
            ..Self::new(s.graph().clone())
        }
    }

    /// The split graph with the given bipartition, if any.
    pub fn split(&self) -> Option<Result<SplitGraph>> {
        self.bipartition.map(|b| SplitGraph::new(self.graph.clone(), b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

/// Graph6 when the text is one token that decodes as graph6, otherwise an edge list.
pub fn detect_format(text: &str) -> InputFormat {
    let mut toks = text.split_whitespace();
    match (toks.next(), toks.next()) {
        (Some(t), None) if !t.contains('=') && parse_graph6(t).is_ok() => InputFormat::Graph6,
        _ => InputFormat::EdgeList,
    }
}

pub fn parse_document(text: &str, format: InputFormat) -> Result<GraphDocument> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Graph6 => parse_graph6(text.trim()).map(GraphDocument::new),
    }
}
