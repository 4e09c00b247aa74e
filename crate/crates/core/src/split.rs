//! Split graphs, their bipartitions, and the structural transforms on them.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{clique_number, independence_number, maximal_cliques, Graph};

/// A clique side `k` and an independent side `i` covering the vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub k: VertexSet,
    pub i: VertexSet,
}

impl Bipartition {
    pub fn new(k: VertexSet, i: VertexSet) -> Self {
        Bipartition { k, i }
    }

    /// Checks the split invariants of this bipartition against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all = g.vertices();
        if !self.k.is_disjoint(self.i) {
            return Err(Error::InvalidBipartition(format!(
                "K and I share {:?}",
                (self.k & self.i).to_vec()
            )));
        }
        if (self.k | self.i) != all {
            let stray = (self.k | self.i) - all;
            return Err(Error::InvalidBipartition(if stray.is_empty() {
                format!("vertices {:?} are on neither side", (all - self.k - self.i).to_vec())
            } else {
                format!("vertices {:?} are out of range", stray.to_vec())
            }));
        }
        if let Some(v) = self.k.iter().find(|&v| !self.k.without(v).is_subset(g.neighbors(v))) {
            return Err(Error::InvalidBipartition(format!("K is not a clique at vertex {v}")));
        }
        if let Some(v) = self.i.iter().find(|&v| !g.neighbors(v).is_disjoint(self.i)) {
            return Err(Error::InvalidBipartition(format!("I is not independent at vertex {v}")));
        }
        Ok(())
    }

    pub fn swapped(self) -> Self {
        Bipartition { k: self.i, i: self.k }
    }
}

/// A graph together with a validated bipartition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitGraph {
    graph: Graph,
    part: Bipartition,
}

/// Result of a Tyshkevich composition: the composed graph plus where the
/// inner graph's vertices ended up (outer vertices keep their labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub graph: Graph,
    pub inner_labels: Vec<usize>,
}

impl SplitGraph {
    pub fn new(graph: Graph, part: Bipartition) -> Result<Self> {
        part.validate(&graph)?;
        Ok(SplitGraph { graph, part })
    }

    /// Split graph with `K = 0..k` and one independent vertex `k + j` per
    /// entry of `neighborhoods`, adjacent to the listed clique vertices.
    pub fn from_neighborhoods(k: usize, neighborhoods: &[VertexSet]) -> Result<Self> {
        let alpha = neighborhoods.len();
        let mut g = Graph::new(k + alpha)?;
        for a in 0..k {
            for b in a + 1..k {
                g.set_edge(a, b);
            }
        }
        let kset = VertexSet::full(k);
        for (j, &nb) in neighborhoods.iter().enumerate() {
            if let Some(x) = (nb - kset).first() {
                return Err(Error::VertexOutOfRange { vertex: x, n: k });
            }
            for x in nb {
                g.set_edge(x, k + j);
            }
        }
        Ok(SplitGraph {
            graph: g,
            part: Bipartition::new(kset, VertexSet::full(k + alpha) - kset),
        })
    }

    /// Uses the first bipartition in [`bipartitions`] order.
    pub fn with_first_bipartition(graph: Graph) -> Result<Self> {
        let part = bipartitions(&graph)?[0];
        Ok(SplitGraph { graph, part })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn bipartition(&self) -> Bipartition {
        self.part
    }

    #[inline]
    pub fn clique_side(&self) -> VertexSet {
        self.part.k
    }

    #[inline]
    pub fn independent_side(&self) -> VertexSet {
        self.part.i
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.graph.neighbors(v)
    }

    pub fn into_parts(self) -> (Graph, Bipartition) {
        (self.graph, self.part)
    }

    /// `|K| = ω(S)` and `|I| = α(S)`.
    pub fn is_balanced(&self) -> bool {
        self.part.k.len() == clique_number(&self.graph) && self.part.i.len() == independence_number(&self.graph)
    }

    /// Vertices `w` with `N(w) = K - w`.
    pub fn swing_vertices(&self) -> VertexSet {
        self.graph
            .vertices()
            .iter()
            .filter(|&w| self.graph.neighbors(w) == self.part.k.without(w))
            .collect()
    }

    /// Balanced and every independent vertex has the same degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.part.i.iter().map(|v| self.graph.degree(v));
        let uniform = match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        };
        uniform && self.is_balanced()
    }

    /// Inversion: `K` becomes independent, `I` becomes a clique, cross edges stay.
    pub fn invert(&self) -> SplitGraph {
        let mut g = self.graph.clone();
        for a in self.part.k {
            for b in self.part.k.iter().filter(|&b| b > a) {
                g.clear_edge(a, b);
            }
        }
        for a in self.part.i {
            for b in self.part.i.iter().filter(|&b| b > a) {
                g.set_edge(a, b);
            }
        }
        SplitGraph {
            graph: g,
            part: self.part.swapped(),
        }
    }

    /// Complement of the inverse: same bipartition, every independent
    /// neighbourhood replaced by its complement inside `K`.
    pub fn co_invert(&self) -> SplitGraph {
        let mut g = self.graph.clone();
        for v in self.part.i {
            for x in self.part.k {
                if g.has_edge(v, x) {
                    g.clear_edge(v, x);
                } else {
                    g.set_edge(v, x);
                }
            }
        }
        SplitGraph {
            graph: g,
            part: self.part,
        }
    }

    /// The complement, with the sides exchanged.
    pub fn complement(&self) -> SplitGraph {
        SplitGraph {
            graph: self.graph.complement(),
            part: self.part.swapped(),
        }
    }

    /// Universal vertices of the graph.
    pub fn universal_set(&self) -> VertexSet {
        let direct = self.graph.universal_vertices();
        debug_assert_eq!(direct, self.universal_set_by_intersection());
        direct
    }

    /// Universal vertices via ⋂_{v∈I} N(v), plus an independent vertex that is
    /// universal on its own (only possible when `|I| = 1` and `N(v) = K`).
    pub(crate) fn universal_set_by_intersection(&self) -> VertexSet {
        let n = self.graph.n();
        if self.part.i.is_empty() {
            return self.part.k;
        }
        let common = self
            .part
            .i
            .iter()
            .fold(self.part.k, |acc, v| acc & self.graph.neighbors(v));
        let lone = self.part.i.iter().filter(|&v| self.graph.degree(v) + 1 == n);
        lone.fold(common, |acc, v| acc.with(v))
    }

    /// `S ∘ G`: disjoint union plus every edge between `K` and `V(G)`.
    pub fn compose(&self, inner: &Graph) -> Result<Composition> {
        let off = self.graph.n();
        let mut g = self.graph.disjoint_union(inner)?;
        for x in self.part.k {
            for y in 0..inner.n() {
                g.set_edge(x, off + y);
            }
        }
        Ok(Composition {
            graph: g,
            inner_labels: (off..off + inner.n()).collect(),
        })
    }

    /// Composition of two split graphs, carrying the union bipartition.
    pub fn compose_split(&self, inner: &SplitGraph) -> Result<SplitGraph> {
        let off = self.graph.n();
        let shift = |s: VertexSet| s.iter().map(|v| v + off).collect::<VertexSet>();
        let c = self.compose(&inner.graph)?;
        SplitGraph::new(
            c.graph,
            Bipartition::new(self.part.k | shift(inner.part.k), self.part.i | shift(inner.part.i)),
        )
    }

    /// Induced split subgraph on `w`, with the inherited bipartition and the label map.
    pub fn induced(&self, w: VertexSet) -> Result<(SplitGraph, Vec<usize>)> {
        let (g, labels) = self.graph.induced(w)?;
        let side = |s: VertexSet| {
            labels
                .iter()
                .enumerate()
                .filter(|(_, &v)| s.contains(v))
                .map(|(i, _)| i)
                .collect::<VertexSet>()
        };
        let part = Bipartition::new(side(self.part.k), side(self.part.i));
        Ok((SplitGraph { graph: g, part }, labels))
    }
}

/// `N(u) - v = N(v) - u`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::SameVertex(u));
    }
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    Ok(g.neighbors(u).without(v) == g.neighbors(v).without(u))
}

/// Split recognition by forbidden induced subgraphs (`C4`, `2K2`, `C5`).
pub fn is_split(g: &Graph) -> bool {
    let verdict = !has_forbidden_split_subgraph(g);
    debug_assert_eq!(verdict, !bipartitions_unchecked(g).is_empty());
    verdict
}

/// Split recognition by exhibiting a bipartition.
pub fn is_split_constructive(g: &Graph) -> bool {
    !bipartitions_unchecked(g).is_empty()
}

fn has_forbidden_split_subgraph(g: &Graph) -> bool {
    let n = g.n();
    let mut quad = Vec::with_capacity(5);
    subsets_of_size(n, 4, &mut quad, &mut |q| {
        let w: VertexSet = q.iter().collect();
        let degs: Vec<usize> = q.iter().map(|&v| (g.neighbors(v) & w).len()).collect();
        let edges: usize = degs.iter().sum::<usize>() / 2;
        // C4: 4 edges, 2-regular. 2K2: 2 edges, 1-regular.
        (edges == 4 && degs.iter().all(|&d| d == 2)) || (edges == 2 && degs.iter().all(|&d| d == 1))
    }) || subsets_of_size(n, 5, &mut quad, &mut |q| {
        let w: VertexSet = q.iter().collect();
        q.iter().all(|&v| (g.neighbors(v) & w).len() == 2) && {
            let (h, _) = g.induced(w).expect("in range");
            h.is_connected()
        }
    })
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order; stops at the first `true`.
pub(crate) fn subsets_of_size(
    n: usize,
    size: usize,
    buf: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn rec(start: usize, n: usize, size: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if buf.len() == size {
            return f(buf);
        }
        for v in start..n {
            if n - v < size - buf.len() {
                break;
            }
            buf.push(v);
            let hit = rec(v + 1, n, size, buf, f);
            buf.pop();
            if hit {
                return true;
            }
        }
        false
    }
    buf.clear();
    rec(0, n, size, buf, f)
}

fn bipartitions_unchecked(g: &Graph) -> Vec<Bipartition> {
    let all = g.vertices();
    let mut out = Vec::new();
    for c in maximal_cliques(g) {
        let candidates = std::iter::once(c).chain(c.iter().map(|x| c.without(x)));
        for k in candidates {
            let i = all - k;
            if i.iter().all(|v| g.neighbors(v).is_disjoint(i)) {
                out.push(Bipartition::new(k, i));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Every bipartition of a split graph, sorted by the `K` bitmask.
///
/// A clique side is always a maximal clique or a maximal clique minus one
/// vertex, so only those candidates are validated.
pub fn bipartitions(g: &Graph) -> Result<Vec<Bipartition>> {
    let out = bipartitions_unchecked(g);
    if out.is_empty() {
        Err(Error::NotSplit)
    } else {
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    /// Hand examples number `K` from 1; this maps `{1..k}` to `0..k`.
    fn nb(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    fn e3() -> SplitGraph {
        SplitGraph::from_neighborhoods(4, &[nb(&[1, 2, 3]), nb(&[2, 3, 4])]).unwrap()
    }

    fn e5() -> SplitGraph {
        SplitGraph::from_neighborhoods(3, &[nb(&[1, 2]), nb(&[2, 3])]).unwrap()
    }

    fn p4_split() -> SplitGraph {
        SplitGraph::new(Graph::path(4), Bipartition::new(set(&[1, 2]), set(&[0, 3]))).unwrap()
    }

    /// Every `(K, I)` pair, by brute force over subsets.
    fn brute_bipartitions(g: &Graph) -> Vec<Bipartition> {
        let all = g.vertices();
        let mut out: Vec<_> = all
            .subsets()
            .map(|k| Bipartition::new(k, all - k))
            .filter(|b| b.validate(g).is_ok())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn recognition_examples() {
        assert!(!is_split(&Graph::cycle(4)));
        assert!(!is_split(&Graph::cycle(5)));
        assert!(!is_split(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()));
        assert!(is_split(&Graph::path(4)));
        assert_eq!(
            bipartitions(&Graph::path(4)).unwrap(),
            vec![Bipartition::new(set(&[1, 2]), set(&[0, 3]))]
        );
        assert_eq!(bipartitions(&Graph::cycle(4)), Err(Error::NotSplit));
    }

    #[test]
    fn bipartition_counts() {
        assert_eq!(brute_bipartitions(&Graph::path(4)).len(), 1);
        assert_eq!(bipartitions(&Graph::path(4)).unwrap().len(), 1);
        let k1 = Graph::new(1).unwrap();
        assert_eq!(bipartitions(&k1).unwrap(), brute_bipartitions(&k1));
        assert_eq!(bipartitions(&k1).unwrap().len(), 2);
        let e3 = e3();
        assert_eq!(brute_bipartitions(e3.graph()).len(), 1);
        assert_eq!(bipartitions(e3.graph()).unwrap().len(), 1);
    }

    #[test]
    fn bipartitions_match_brute_force_on_all_small_graphs() {
        for n in 0..=6 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let brute = brute_bipartitions(&g);
                assert_eq!(bipartitions_unchecked(&g), brute);
                assert_eq!(is_split(&g), !brute.is_empty());
            }
        }
    }

    #[test]
    fn balance_examples() {
        assert!(p4_split().is_balanced());
        let k1 = SplitGraph::new(Graph::new(1).unwrap(), Bipartition::new(set(&[0]), VertexSet::EMPTY)).unwrap();
        assert!(!k1.is_balanced());
        assert!(e5().is_balanced());
    }

    #[test]
    fn swing_examples() {
        // vertex 2 of E5 is 1 in zero-based labels
        assert_eq!(e5().invert().swing_vertices(), set(&[1]));
        assert_eq!(p4_split().swing_vertices(), VertexSet::EMPTY);
        let star = SplitGraph::new(Graph::star(3), Bipartition::new(set(&[0]), set(&[1, 2, 3]))).unwrap();
        assert_eq!(star.swing_vertices(), set(&[1, 2, 3]));
    }

    #[test]
    fn twin_examples() {
        assert!(are_twins(&Graph::star(3), 1, 2).unwrap());
        assert!(!are_twins(&Graph::path(4), 0, 3).unwrap());
        assert_eq!(are_twins(&Graph::path(4), 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn homogeneity_examples() {
        assert!(p4_split().is_homogeneous());
        assert!(e3().is_homogeneous());
    }

    #[test]
    fn compose_examples() {
        let k1 = Graph::new(1).unwrap();
        let c = p4_split().compose(&k1).unwrap();
        assert_eq!(c.inner_labels, vec![4]);
        assert_eq!(c.graph.neighbors(4), set(&[1, 2]));
        assert_eq!(c.graph.edge_count(), 5);

        let c = p4_split().compose(&Graph::new(0).unwrap()).unwrap();
        assert_eq!(&c.graph, p4_split().graph());

        let single = SplitGraph::new(k1.clone(), Bipartition::new(set(&[0]), VertexSet::EMPTY)).unwrap();
        assert_eq!(single.compose(&k1).unwrap().graph, Graph::complete(2));
    }

    #[test]
    fn inversion_examples() {
        // E5 inverted: {1a, 2a, 2b, 3b, ab} with 1,2,3 -> 0,1,2 and a,b -> 3,4
        let inv = e5().invert();
        assert_eq!(inv.graph().edges(), vec![(0, 3), (1, 3), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(inv.invert(), e5());
        let p = p4_split().invert();
        assert_eq!(p.graph(), &Graph::from_edges(4, &[(0, 1), (2, 3), (0, 3)]).unwrap());
        assert_eq!(p.clique_side(), set(&[0, 3]));
    }

    #[test]
    fn co_inversion_examples() {
        let g3 = SplitGraph::from_neighborhoods(3, &[set(&[0]), set(&[1]), set(&[2])]).unwrap();
        let co = g3.co_invert();
        for (j, v) in co.independent_side().iter().enumerate() {
            assert_eq!(co.neighbors(v), VertexSet::full(3).without(j));
        }
        let e4 = SplitGraph::from_neighborhoods(5, &[nb(&[1, 2, 3, 4]), nb(&[5])]).unwrap();
        let co = e4.co_invert();
        assert_eq!(co.neighbors(5) & VertexSet::full(5), nb(&[5]));
        assert_eq!(co.neighbors(6) & VertexSet::full(5), nb(&[1, 2, 3, 4]));
        assert_eq!(co.co_invert(), e4);
        assert_eq!(co, e4.invert().complement());
        assert_eq!(co, e4.complement().invert());
    }

    #[test]
    fn universal_examples() {
        assert_eq!(e3().universal_set(), nb(&[2, 3]));
        assert_eq!(p4_split().universal_set(), VertexSet::EMPTY);
        let k3 = SplitGraph::new(Graph::complete(3), Bipartition::new(set(&[0, 1, 2]), VertexSet::EMPTY)).unwrap();
        assert_eq!(k3.universal_set(), set(&[0, 1, 2]));
        let lone = SplitGraph::new(Graph::new(1).unwrap(), Bipartition::new(VertexSet::EMPTY, set(&[0]))).unwrap();
        assert_eq!(lone.universal_set(), set(&[0]));
    }

    #[test]
    fn invalid_bipartitions_are_rejected() {
        let g = Graph::path(4);
        assert!(SplitGraph::new(g.clone(), Bipartition::new(set(&[0, 1]), set(&[2, 3]))).is_err());
        assert!(SplitGraph::new(g.clone(), Bipartition::new(set(&[1]), set(&[0, 3]))).is_err());
        assert!(SplitGraph::new(g, Bipartition::new(set(&[1, 2, 7]), set(&[0, 3]))).is_err());
    }
}
