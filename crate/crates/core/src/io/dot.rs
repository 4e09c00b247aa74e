use std::fmt::Write;

use crate::factor::FactorGraph;
use crate::graph::Graph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_to_dot(g: &Graph, labels: &[String], name: &str) -> String {
    let mut out = format!("graph {} {{\n", quote(name));
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(&labels[v]));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(&labels[u]), quote(&labels[v]));
    }
    out.push_str("}\n");
    out
}

/// One DOT edge per pair with positive multiplicity, labelled by `σ`.
pub fn factor_graph_to_dot(f: &FactorGraph, labels: &[String]) -> String {
    let mut out = String::from("graph \"phi\" {\n");
    for &v in f.labels() {
        let _ = writeln!(out, "  {};", quote(&labels[v]));
    }
    for ((u, v), sigma) in f.labeled_pairs() {
        let _ = writeln!(
            out,
            "  {} -- {} [label=\"{sigma}\", weight={sigma}];",
            quote(&labels[u]),
            quote(&labels[v])
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;
    use crate::factor::phi;
    use crate::split::SplitGraph;

    #[test]
    fn sigma_labels() {
        let s = SplitGraph::from_neighborhoods(5, &[[0, 1, 2, 3].iter().collect(), VertexSet::singleton(4)]).unwrap();
        let labels: Vec<String> = (0..7).map(|v| v.to_string()).collect();
        let dot = factor_graph_to_dot(&phi(&s), &labels);
        assert!(dot.contains("\"5\" -- \"6\" [label=\"4\", weight=4];"));
        let dot = graph_to_dot(&Graph::path(3), &labels, "p\"3");
        assert!(dot.starts_with("graph \"p\\\"3\" {"));
        assert_eq!(dot.matches(" -- ").count(), 2);
    }
}
