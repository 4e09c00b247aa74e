use super::a4;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::{bipartitions, Bipartition, SplitGraph};

/// One Tyshkevich factor, with local labels mapped back to the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub graph: Graph,
    /// `labels[i]` is the original vertex behind local vertex `i`.
    pub labels: Vec<usize>,
    /// Local bipartition; present for every factor except possibly the innermost.
    pub bipartition: Option<Bipartition>,
}

impl Factor {
    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().collect()
    }
}

/// `G = G_n ∘ … ∘ G_1`, stored outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
}

impl Decomposition {
    /// Folds the factors back together with composition and restores original labels.
    pub fn recompose(&self) -> Result<Graph> {
        let Some((inner, outer)) = self.factors.split_last() else {
            return Graph::new(0);
        };
        let mut acc = inner.graph.clone();
        let mut labels = inner.labels.clone();
        for f in outer.iter().rev() {
            let part = f.bipartition.ok_or(Error::InconsistentDominance)?;
            let s = SplitGraph::new(f.graph.clone(), part)?;
            acc = s.compose(&acc)?.graph;
            let mut l = f.labels.clone();
            l.extend(labels);
            labels = l;
        }
        Ok(acc.relabel(&labels))
    }
}

/// Tyshkevich decomposition with factors read off the components of `A4(g)`.
///
/// A component `Y` can sit outside the union `T` of the remaining components
/// when every vertex of `Y` sees all of `T` or none of it, and the vertices
/// seeing all of `T` form a clique while the rest form an independent set.
/// Components are peeled from the outside in.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    let comps = a4(g).components();
    let mut order = Vec::with_capacity(comps.len());
    if !peel(g, comps, &mut order) {
        return Err(Error::InconsistentDominance);
    }
    let last = order.len().saturating_sub(1);
    let factors = order
        .into_iter()
        .enumerate()
        .map(|(idx, (set, part))| {
            let (graph, labels) = g.induced(set)?;
            let local = |s: VertexSet| {
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| s.contains(v))
                    .map(|(i, _)| i)
                    .collect::<VertexSet>()
            };
            let bipartition = match part {
                Some(b) => Some(Bipartition::new(local(b.k), local(b.i))),
                None if idx == last && graph.n() > 1 => bipartitions(&graph).ok().map(|b| b[0]),
                None => None,
            };
            Ok(Factor {
                graph,
                labels,
                bipartition,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { factors })
}

type Peeled = (VertexSet, Option<Bipartition>);

fn peel(g: &Graph, remaining: Vec<VertexSet>, order: &mut Vec<Peeled>) -> bool {
    match remaining.len() {
        0 => return true,
        1 => {
            order.push((remaining[0], None));
            return true;
        }
        _ => {}
    }
    for (idx, &y) in remaining.iter().enumerate() {
        let rest: VertexSet = remaining
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .fold(VertexSet::EMPTY, |acc, (_, &s)| acc | s);
        let Some(part) = outer_split(g, y, rest) else {
            continue;
        };
        let depth = order.len();
        order.push((y, Some(part)));
        let next: Vec<_> = remaining
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != idx)
            .map(|(_, &s)| s)
            .collect();
        if peel(g, next, order) {
            return true;
        }
        order.truncate(depth);
    }
    false
}

fn outer_split(g: &Graph, y: VertexSet, rest: VertexSet) -> Option<Bipartition> {
    let mut k = VertexSet::EMPTY;
    for v in y {
        let seen = g.neighbors(v) & rest;
        if seen == rest {
            k.insert(v);
        } else if !seen.is_empty() {
            return None;
        }
    }
    let i = y - k;
    let clique = k.iter().all(|v| k.without(v).is_subset(g.neighbors(v)));
    let independent = i.iter().all(|v| g.neighbors(v).is_disjoint(i));
    (clique && independent).then_some(Bipartition::new(k, i))
}
