//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! name=P4
//! n=4
//! K=1,2
//! I=0,3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! With `n=` present, vertices are the integers `0..n`. Without it, tokens
//! are labels: if all are non-negative integers the graph has vertices
//! `0..=max`, otherwise labels are numbered in order of first appearance. A
//! line holding a single token declares an isolated vertex.

use std::collections::{BTreeSet, HashMap};

use super::GraphDocument;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::Bipartition;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

enum Line<'a> {
    N(usize),
    Side(bool, Vec<&'a str>),
    Name(&'a str),
    Vertex(&'a str),
    Edge(&'a str, &'a str),
}

fn classify(no: usize, raw: &str) -> Result<Option<Line<'_>>> {
    let line = raw.split('#').next().unwrap_or("").trim();
    if line.is_empty() {
        return Ok(None);
    }
    if let Some((key, value)) = line.split_once('=') {
        let value = value.trim();
        let list = || -> Vec<&str> { value.split(',').map(str::trim).filter(|t| !t.is_empty()).collect() };
        return match key.trim() {
            "n" => value
                .parse()
                .map(|n| Some(Line::N(n)))
                .map_err(|_| parse_err(no, format!("bad vertex count `{value}`"))),
            "K" => Ok(Some(Line::Side(true, list()))),
            "I" => Ok(Some(Line::Side(false, list()))),
            "name" => Ok(Some(Line::Name(value))),
            other => Err(parse_err(no, format!("unknown key `{other}`"))),
        };
    }
    let toks: Vec<&str> = line.split_whitespace().collect();
    match toks.as_slice() {
        [v] => Ok(Some(Line::Vertex(v))),
        [u, v] => Ok(Some(Line::Edge(u, v))),
        _ => Err(parse_err(no, format!("expected `u v`, got `{line}`"))),
    }
}

pub fn parse_edge_list(text: &str) -> Result<GraphDocument> {
    let mut lines = Vec::new();
    let mut n = None;
    let mut name = None;
    for (i, raw) in text.lines().enumerate() {
        match classify(i + 1, raw)? {
            Some(Line::N(m)) if n.is_some() => {
                return Err(parse_err(i + 1, format!("second vertex count {m}")));
            }
            Some(Line::N(m)) => n = Some(m),
            Some(Line::Name(s)) => name = Some(s.to_string()),
            Some(l) => lines.push((i + 1, l)),
            None => {}
        }
    }

    let tokens = lines.iter().flat_map(|(_, l)| match l {
        Line::Side(_, v) => v.clone(),
        Line::Vertex(v) => vec![*v],
        Line::Edge(u, v) => vec![*u, *v],
        _ => vec![],
    });
    let labels: Vec<String> = match n {
        Some(n) => (0..n).map(|v| v.to_string()).collect(),
        None => {
            let toks: Vec<&str> = tokens.collect();
            let ints: Option<Vec<usize>> = toks.iter().map(|t| t.parse().ok()).collect();
            match ints {
                Some(ints) => {
                    let top = ints.iter().max().map_or(0, |&m| m + 1);
                    (0..top).map(|v| v.to_string()).collect()
                }
                None => {
                    let mut seen = BTreeSet::new();
                    toks.into_iter()
                        .filter(|t| seen.insert(*t))
                        .map(str::to_string)
                        .collect()
                }
            }
        }
    };
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let lookup = |no: usize, tok: &str| -> Result<usize> {
        index
            .get(tok)
            .copied()
            .ok_or_else(|| parse_err(no, format!("unknown vertex `{tok}`")))
    };

    let mut g = Graph::new(labels.len())?;
    let mut k = None;
    let mut ind = None;
    for (no, l) in &lines {
        match l {
            Line::Edge(u, v) => {
                let (a, b) = (lookup(*no, u)?, lookup(*no, v)?);
                g.add_edge(a, b).map_err(|e| parse_err(*no, e.to_string()))?;
            }
            Line::Vertex(v) => {
                lookup(*no, v)?;
            }
            Line::Side(is_k, toks) => {
                let set = toks.iter().map(|t| lookup(*no, t)).collect::<Result<VertexSet>>()?;
                let slot = if *is_k { &mut k } else { &mut ind };
                if slot.replace(set).is_some() {
                    return Err(parse_err(*no, "side given twice"));
                }
            }
            _ => {}
        }
    }
    let bipartition = match (k, ind) {
        (None, None) => None,
        (Some(k), None) => Some(Bipartition::new(k, g.vertices() - k)),
        (None, Some(i)) => Some(Bipartition::new(g.vertices() - i, i)),
        (Some(k), Some(i)) => Some(Bipartition::new(k, i)),
    };
    if let Some(b) = bipartition {
        b.validate(&g)?;
    }
    Ok(GraphDocument {
        graph: g,
        bipartition,
        name,
        labels,
    })
}

fn join(set: VertexSet, labels: &[String]) -> String {
    set.iter().map(|v| labels[v].as_str()).collect::<Vec<_>>().join(",")
}

/// Writes `doc` back out; integer labels `0..n` produce an `n=` header.
pub fn to_edge_list(doc: &GraphDocument) -> String {
    let mut out = String::new();
    if let Some(name) = &doc.name {
        out.push_str(&format!("name={name}\n"));
    }
    let dense = doc.labels.iter().enumerate().all(|(i, l)| *l == i.to_string());
    if dense {
        out.push_str(&format!("n={}\n", doc.graph.n()));
    }
    if let Some(b) = doc.bipartition {
        out.push_str(&format!("K={}\nI={}\n", join(b.k, &doc.labels), join(b.i, &doc.labels)));
    }
    let mut touched = VertexSet::EMPTY;
    for (u, v) in doc.graph.edges() {
        out.push_str(&format!("{} {}\n", doc.labels[u], doc.labels[v]));
        touched = touched.with(u).with(v);
    }
    if !dense {
        for v in doc.graph.vertices() - touched {
            out.push_str(&format!("{}\n", doc.labels[v]));
        }
    }
    out
}
