//! 2-switch moves, active vertices, the `A4` graph and Tyshkevich decomposition.

mod decompose;

pub use decompose::{decompose, Decomposition, Factor};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::split::subsets_of_size;

/// Isomorphism type of an induced 4-vertex subgraph, as far as 2-switches care.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadrupleKind {
    P4,
    C4,
    TwoK2,
    Other,
}

pub fn quadruple_kind(g: &Graph, q: VertexSet) -> Result<QuadrupleKind> {
    if q.len() != 4 {
        return Err(Error::QuadrupleSize(q.len()));
    }
    if let Some(v) = (q - g.vertices()).first() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut degs: Vec<usize> = q.iter().map(|v| (g.neighbors(v) & q).len()).collect();
    degs.sort_unstable();
    Ok(match degs.as_slice() {
        [1, 1, 2, 2] => QuadrupleKind::P4,
        [2, 2, 2, 2] => QuadrupleKind::C4,
        [1, 1, 1, 1] => QuadrupleKind::TwoK2,
        _ => QuadrupleKind::Other,
    })
}

pub type Edge = (usize, usize);

fn norm(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

/// One 2-switch: delete the two `removed` edges, insert the two `added` ones.
///
/// Both pairs are perfect matchings of the same four vertices. The stored form
/// is normalised (each edge `(min, max)`, each pair sorted), so equal moves
/// compare equal however they were written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSwitchMove {
    removed: [Edge; 2],
    added: [Edge; 2],
}

impl TwoSwitchMove {
    /// Builds the move replacing `ab, cd` with `ac, bd`.
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self> {
        let support: VertexSet = [a, b, c, d].into_iter().collect();
        if support.len() != 4 {
            return Err(Error::InvalidMove(format!(
                "vertices {a}, {b}, {c}, {d} are not distinct"
            )));
        }
        Ok(Self::from_matchings([(a, b), (c, d)], [(a, c), (b, d)]))
    }

    fn from_matchings(removed: [Edge; 2], added: [Edge; 2]) -> Self {
        let mut r = removed.map(norm);
        let mut a = added.map(norm);
        r.sort_unstable();
        a.sort_unstable();
        TwoSwitchMove { removed: r, added: a }
    }

    pub fn removed(&self) -> [Edge; 2] {
        self.removed
    }

    pub fn added(&self) -> [Edge; 2] {
        self.added
    }

    pub fn support(&self) -> VertexSet {
        let [(a, b), (c, d)] = self.removed;
        [a, b, c, d].into_iter().collect()
    }

    /// The move that undoes this one.
    pub fn reversed(&self) -> Self {
        TwoSwitchMove {
            removed: self.added,
            added: self.removed,
        }
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let n = g.n();
        self.support().len() == 4
            && self.support().iter().all(|v| v < n)
            && self
                .added
                .iter()
                .all(|&(u, v)| self.support().contains(u) && self.support().contains(v))
            && self.removed.iter().all(|&(u, v)| g.has_edge(u, v))
            && self.added.iter().all(|&(u, v)| !g.has_edge(u, v))
    }
}

/// Every 2-switch available in `g`, each exactly once.
///
/// Each 4-subset has three perfect matchings; a move removes one matching made
/// of edges and adds a different matching made of non-edges.
pub fn switch_moves(g: &Graph) -> Vec<TwoSwitchMove> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(4);
    subsets_of_size(g.n(), 4, &mut buf, &mut |q| {
        let [a, b, c, d] = [q[0], q[1], q[2], q[3]];
        let matchings = [[(a, b), (c, d)], [(a, c), (b, d)], [(a, d), (b, c)]];
        let is_edges = matchings.map(|m| m.iter().all(|&(u, v)| g.has_edge(u, v)));
        let is_gaps = matchings.map(|m| m.iter().all(|&(u, v)| !g.has_edge(u, v)));
        for r in 0..3 {
            for s in 0..3 {
                if r != s && is_edges[r] && is_gaps[s] {
                    out.push(TwoSwitchMove::from_matchings(matchings[r], matchings[s]));
                }
            }
        }
        false
    });
    out
}

/// Applies `m`, checking that it is a legal move in `g` first.
pub fn apply(g: &Graph, m: &TwoSwitchMove) -> Result<Graph> {
    if !m.is_valid_in(g) {
        return Err(Error::InvalidMove(format!("remove {:?}, add {:?}", m.removed, m.added)));
    }
    let mut h = g.clone();
    for (u, v) in m.removed {
        h.clear_edge(u, v);
    }
    for (u, v) in m.added {
        h.set_edge(u, v);
    }
    Ok(h)
}

/// All 4-sets inducing a `P4`.
pub fn induced_p4s(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(4);
    subsets_of_size(g.n(), 4, &mut buf, &mut |q| {
        let w: VertexSet = q.iter().collect();
        if quadruple_kind(g, w) == Ok(QuadrupleKind::P4) {
            out.push(w);
        }
        false
    });
    out
}

/// Number of 2-switches acting on `g`.
pub fn graph_degree(g: &Graph) -> usize {
    switch_moves(g).len()
}

/// Vertices lying in the support of some 2-switch.
pub fn active_vertices(g: &Graph) -> VertexSet {
    switch_moves(g)
        .iter()
        .fold(VertexSet::EMPTY, |acc, m| acc | m.support())
}

pub fn is_active(g: &Graph) -> bool {
    active_vertices(g) == g.vertices()
}

/// `uv` is an edge iff some 2-switch involves both `u` and `v`.
pub fn a4(g: &Graph) -> Graph {
    let mut h = Graph::new(g.n()).expect("same order as g");
    for m in switch_moves(g) {
        let s = m.support();
        for u in s {
            for v in s.iter().filter(|&v| v > u) {
                h.set_edge(u, v);
            }
        }
    }
    h
}

pub fn is_indecomposable(g: &Graph) -> bool {
    a4(g).is_connected()
}

/// Active and indecomposable.
pub fn is_prime(g: &Graph) -> bool {
    is_active(g) && is_indecomposable(g)
}

/// Direct search for a split `g = S ∘ H` with both parts nonempty.
///
/// For each candidate inner set `C`, the outer clique side is forced to be the
/// outer vertices complete to `C`; the split is valid when that side is a
/// clique and the rest is independent and anticomplete to `C`. Returns the
/// inner set of the first split found.
pub fn find_composition_split(g: &Graph) -> Option<VertexSet> {
    let all = g.vertices();
    all.subsets().find(|&c| {
        let outer = all - c;
        if c.is_empty() || outer.is_empty() {
            return false;
        }
        let k: VertexSet = outer.iter().filter(|&v| c.is_subset(g.neighbors(v))).collect();
        let i = outer - k;
        k.iter().all(|v| k.without(v).is_subset(g.neighbors(v))) && i.iter().all(|v| g.neighbors(v).is_disjoint(i | c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::{Bipartition, SplitGraph};
    use std::collections::BTreeSet;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// Moves from every ordered 4-tuple `(a, b, c, d)` with `ab, cd ∈ E` and `ac, bd ∉ E`.
    fn brute_moves(g: &Graph) -> BTreeSet<TwoSwitchMove> {
        let n = g.n();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if set(&[a, b, c, d]).len() == 4
                            && g.has_edge(a, b)
                            && g.has_edge(c, d)
                            && !g.has_edge(a, c)
                            && !g.has_edge(b, d)
                        {
                            out.insert(TwoSwitchMove::new(a, b, c, d).unwrap());
                        }
                    }
                }
            }
        }
        out
    }

    fn p4_split() -> SplitGraph {
        SplitGraph::new(Graph::path(4), Bipartition::new(set(&[1, 2]), set(&[0, 3]))).unwrap()
    }

    #[test]
    fn quadruple_examples() {
        assert_eq!(
            quadruple_kind(&Graph::path(4), set(&[0, 1, 2, 3])),
            Ok(QuadrupleKind::P4)
        );
        assert_eq!(
            quadruple_kind(&Graph::complete(4), set(&[0, 1, 2, 3])),
            Ok(QuadrupleKind::Other)
        );
        assert_eq!(
            quadruple_kind(&Graph::cycle(4), set(&[0, 1, 2, 3])),
            Ok(QuadrupleKind::C4)
        );
        assert_eq!(
            quadruple_kind(&Graph::path(4), set(&[0, 1, 2])),
            Err(Error::QuadrupleSize(3))
        );
    }

    #[test]
    fn move_counts_match_oracle() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(brute_moves(&Graph::path(4)).len(), 1);
        assert_eq!(brute_moves(&Graph::cycle(4)).len(), 2);
        assert_eq!(brute_moves(&two_k2).len(), 2);
        assert_eq!(switch_moves(&Graph::path(4)).len(), 1);
        assert_eq!(switch_moves(&Graph::cycle(4)).len(), 2);
        assert_eq!(switch_moves(&two_k2).len(), 2);
        assert!(switch_moves(&Graph::complete(4)).is_empty());
        for g in [Graph::cycle(5), Graph::path(6), Graph::star(4)] {
            let ours: BTreeSet<_> = switch_moves(&g).into_iter().collect();
            assert_eq!(ours, brute_moves(&g));
        }
    }

    #[test]
    fn applying_moves() {
        let p4 = Graph::path(4);
        let m = switch_moves(&p4)[0];
        let h = apply(&p4, &m).unwrap();
        assert_eq!(h, Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3)]).unwrap());
        assert_eq!(apply(&h, &m.reversed()).unwrap(), p4);
        assert!(apply(&h, &m).is_err());

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        for g in [Graph::cycle(4), two_k2] {
            let kind = quadruple_kind(&g, set(&[0, 1, 2, 3]));
            for m in switch_moves(&g) {
                let h = apply(&g, &m).unwrap();
                assert_eq!(quadruple_kind(&h, set(&[0, 1, 2, 3])), kind);
                assert_ne!(h, g);
            }
        }
    }

    #[test]
    fn degree_counts() {
        assert_eq!(graph_degree(&Graph::complete(5)), 0);
        assert_eq!(induced_p4s(&Graph::cycle(4)).len(), 0);
        assert_eq!(induced_p4s(&Graph::path(4)).len(), 1);
    }

    #[test]
    fn a4_examples() {
        assert_eq!(a4(&Graph::path(4)), Graph::complete(4));
        assert_eq!(a4(&Graph::complete(5)), Graph::new(5).unwrap());
        let c = p4_split().compose(&Graph::new(1).unwrap()).unwrap().graph;
        let expected = Graph::complete(4).disjoint_union(&Graph::new(1).unwrap()).unwrap();
        assert_eq!(a4(&c), expected);
    }

    #[test]
    fn decomposability_examples() {
        assert!(is_indecomposable(&Graph::path(4)));
        assert!(is_prime(&Graph::path(4)));
        assert!(is_prime(&Graph::cycle(4)));
        let c = p4_split().compose(&Graph::new(1).unwrap()).unwrap().graph;
        assert!(!is_indecomposable(&c));
        assert!(find_composition_split(&c).is_some());
        assert!(!is_indecomposable(&Graph::complete(2)));
        assert!(find_composition_split(&Graph::complete(2)).is_some());
        assert!(find_composition_split(&Graph::path(4)).is_none());
        assert!(!is_prime(&Graph::new(1).unwrap()));
    }
}
