//! Simple undirected graphs and loopless multigraphs on dense integer labels.

mod clique;
mod iso;

pub use clique::{clique_number, independence_number, maximal_cliques, maximum_clique};
pub use iso::{are_isomorphic, canonical_form, find_isomorphism, IsoConfig, DEFAULT_ISO_CAP};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A finite simple graph on vertices `0..n`, stored as one adjacency bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Rebuilds a graph from raw adjacency rows, checking symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if row.contains(v) {
                return Err(Error::Loop(v));
            }
            if let Some(w) = (*row - all).first() {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if let Some(w) = row.iter().find(|&w| !adj[w].contains(v)) {
                return Err(Error::AsymmetricAdjacency(v, w));
            }
        }
        Ok(Graph { adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set_edge(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).expect("complete").complement()
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                let above = self.adj[u] - VertexSet::full(u + 1);
                above.iter().map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence((0..self.n()).map(|v| self.degree(v)).collect())
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &row)| (all - row).without(v))
                .collect(),
        }
    }

    /// Subgraph induced by `w`, relabelled densely in increasing order.
    ///
    /// The returned vector maps each new label to the original vertex.
    pub fn induced(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(v) = (w - self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let labels = w.to_vec();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in labels.iter().enumerate() {
            pos[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| (self.adj[v] & w).iter().map(|u| pos[u]).collect())
            .collect();
        Ok((Graph { adj }, labels))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (v, row) in self.adj.iter().enumerate() {
            adj[perm[v]] = row.iter().map(|u| perm[u]).collect();
        }
        Graph { adj }
    }

    /// Disjoint union with `other` placed above `self`'s labels.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut g = Graph::new(off + other.n())?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + off, v + off);
        }
        Ok(g)
    }

    /// Vertices reachable from `start`.
    pub fn reach(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v);
            left = left - c;
            out.push(c);
        }
        out
    }

    /// True iff there is at most one component; the 0-vertex graph is connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0).len() == self.n()
    }

    /// Eccentricity-based diameter; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let n = self.n();
        let mut best = 0;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            let far = *dist.iter().max().unwrap_or(&0);
            if far == usize::MAX {
                return None;
            }
            best = best.max(far);
        }
        Some(best)
    }

    /// Whether some set of at least `min_len` vertices induces a cycle.
    ///
    /// Exhaustive over vertex subsets; meant for small graphs.
    pub fn has_induced_cycle_of_length_at_least(&self, min_len: usize) -> bool {
        self.vertices().subsets().any(|w| {
            w.len() >= min_len.max(3)
                && w.iter().all(|v| (self.adj[v] & w).len() == 2)
                && (self.reach_within(w.first().unwrap(), w) == w)
        })
    }

    fn reach_within(&self, start: usize, w: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v] & w;
            }
            frontier = next - seen;
            seen |= next;
        }
        seen
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        let all = self.vertices();
        (0..self.n()).filter(|&v| self.adj[v] == all.without(v)).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Loopless multigraph: each unordered pair carries a positive multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multigraph {
    n: usize,
    mult: BTreeMap<(usize, usize), u64>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            mult: BTreeMap::new(),
        }
    }

    /// Adds `m` parallel copies of `uv`; `m = 0` is a no-op.
    pub fn add(&mut self, u: usize, v: usize, m: u64) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if m > 0 {
            *self.mult.entry((u.min(v), u.max(v))).or_insert(0) += m;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Pairs with positive multiplicity, `u < v`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.mult.iter().map(|(&k, &m)| (k, m))
    }

    /// Number of edges counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.mult.values().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.values().all(|&m| m == 1)
    }

    /// Simple graph obtained by forgetting multiplicities.
    pub fn support(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("multigraph vertex count");
        for &(u, v) in self.mult.keys() {
            g.set_edge(u, v);
        }
        g
    }
}

/// Degrees indexed by vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if let Some((v, d)) = degrees.iter().enumerate().find(|(_, &d)| d + 1 > n) {
            return Err(Error::InvalidDegreeSequence(format!(
                "vertex {v} has degree {d} but there are only {n} vertices"
            )));
        }
        if degrees.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::InvalidDegreeSequence("degree sum is odd".into()));
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Degree sequence of the complement: `d -> n - 1 - d`.
    pub fn complemented(&self) -> DegreeSequence {
        let n = self.0.len();
        DegreeSequence(self.0.iter().map(|&d| n - 1 - d).collect())
    }
}
