//! The factor multigraph of a split graph.
//!
//! Vertices are the independent vertices of `(S, K, I)`; the pair `uv`
//! carries one edge per induced `P4` of `S` through both `u` and `v`. The
//! multiplicity has the closed form
//! `σ_uv = (d_u − η_uv)(d_v − η_uv)` with `η_uv = |N(u) ∩ N(v)|`, because
//! every such `P4` is `u x z v` for some `x ∈ N(u) − N(v)` and
//! `z ∈ N(v) − N(u)`.
//!
//! Connectivity, completeness, cliques and diameter are evaluated on the
//! simple support (pairs with `σ ≥ 1`); multiplicities matter only for
//! simplicity and edge counts.

mod classify;

pub use classify::{
    associated_r, classify_family, classify_simple_complete, classify_simple_connected, clique_dichotomy,
    degree_bounds_check, homogeneity_report, induced_factor, leaf_graph, thm44_report, CliqueShape, DegreeBounds,
    FamilyCase, FamilyProfile, HomogeneityReport, InducedFactor, RKind, SimpleCompleteClass, SimpleConnectedClass,
    Thm44Report,
};

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};
use crate::split::SplitGraph;
use crate::switch::induced_p4s;

fn check_pair(s: &SplitGraph, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if !s.independent_side().contains(w) {
            return Err(Error::NotIndependent(w));
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

/// `|N(u) ∩ N(v)|` for distinct independent vertices.
pub fn eta(s: &SplitGraph, u: usize, v: usize) -> Result<usize> {
    check_pair(s, u, v)?;
    Ok((s.neighbors(u) & s.neighbors(v)).len())
}

/// Multiplicity of `uv` in the factor graph, by the closed form.
pub fn sigma(s: &SplitGraph, u: usize, v: usize) -> Result<u64> {
    let shared = eta(s, u, v)?;
    let du = s.graph().degree(u);
    let dv = s.graph().degree(v);
    Ok(((du - shared) * (dv - shared)) as u64)
}

/// The factor graph with its vertices mapped back to `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorGraph {
    base: Multigraph,
    labels: Vec<usize>,
}

/// Factor graph by the closed-form multiplicity.
pub fn phi(s: &SplitGraph) -> FactorGraph {
    let labels = s.independent_side().to_vec();
    let mut base = Multigraph::new(labels.len());
    for (a, &u) in labels.iter().enumerate() {
        for (b, &v) in labels.iter().enumerate().skip(a + 1) {
            let m = sigma(s, u, v).expect("both independent");
            base.add(a, b, m).expect("indices in range");
        }
    }
    FactorGraph { base, labels }
}

/// Factor graph by counting induced `P4`s through each independent pair.
pub fn phi_oracle(s: &SplitGraph) -> FactorGraph {
    let labels = s.independent_side().to_vec();
    let mut pos = vec![usize::MAX; s.graph().n()];
    for (i, &v) in labels.iter().enumerate() {
        pos[v] = i;
    }
    let mut base = Multigraph::new(labels.len());
    for q in induced_p4s(s.graph()) {
        let inside = (q & s.independent_side()).to_vec();
        for (a, &u) in inside.iter().enumerate() {
            for &v in &inside[a + 1..] {
                base.add(pos[u], pos[v], 1).expect("indices in range");
            }
        }
    }
    FactorGraph { base, labels }
}

impl FactorGraph {
    pub fn multigraph(&self) -> &Multigraph {
        &self.base
    }

    /// Independent vertices of `S`, in the order used for local indices.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().collect()
    }

    fn index_of(&self, v: usize) -> Option<usize> {
        self.labels.iter().position(|&x| x == v)
    }

    /// `σ_uv`, addressed by vertices of `S`; zero for unknown vertices.
    pub fn sigma(&self, u: usize, v: usize) -> u64 {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) if a != b => self.base.multiplicity(a, b),
            _ => 0,
        }
    }

    /// Pairs of `S`-vertices with positive multiplicity.
    pub fn labeled_pairs(&self) -> BTreeMap<(usize, usize), u64> {
        self.base
            .pairs()
            .map(|((a, b), m)| {
                let (u, v) = (self.labels[a], self.labels[b]);
                ((u.min(v), u.max(v)), m)
            })
            .collect()
    }

    /// Same vertices and same multiplicities after translating both through label maps.
    pub fn same_as_translated(&self, mine: &[usize], other: &FactorGraph, theirs: &[usize]) -> bool {
        let tr = |f: &FactorGraph, map: &[usize]| {
            let verts: VertexSet = f.labels.iter().map(|&v| map[v]).collect();
            let pairs: BTreeMap<_, _> = f
                .labeled_pairs()
                .into_iter()
                .map(|((u, v), m)| {
                    let (a, b) = (map[u], map[v]);
                    ((a.min(b), a.max(b)), m)
                })
                .collect();
            (verts, pairs)
        };
        tr(self, mine) == tr(other, theirs)
    }

    /// Total multiplicity, which is the 2-switch degree of `S`.
    pub fn size(&self) -> u64 {
        self.base.size()
    }

    pub fn is_simple(&self) -> bool {
        self.base.is_simple()
    }

    /// Support graph on local indices `0..order()`.
    pub fn support(&self) -> Graph {
        self.base.support()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.base.pairs().count() == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.support().is_connected()
    }

    /// Diameter of the support; `None` when disconnected.
    pub fn support_diameter(&self) -> Option<usize> {
        self.support().diameter()
    }

    /// Support neighbours of `v`, as vertices of `S`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        match self.index_of(v) {
            Some(a) => self.support().neighbors(a).iter().map(|b| self.labels[b]).collect(),
            None => VertexSet::EMPTY,
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Clique labels `1..=k` of the worked examples map to `0..k`.
    pub fn nb(v: &[usize]) -> VertexSet {
        v.iter().map(|x| x - 1).collect()
    }

    /// `K = {1..5}`, `N_a = {1,4,5}`, `N_b = {1,2,3}`, `N_c = {2,3}`.
    pub fn e1() -> SplitGraph {
        SplitGraph::from_neighborhoods(5, &[nb(&[1, 4, 5]), nb(&[1, 2, 3]), nb(&[2, 3])]).unwrap()
    }

    pub fn e3() -> SplitGraph {
        SplitGraph::from_neighborhoods(4, &[nb(&[1, 2, 3]), nb(&[2, 3, 4])]).unwrap()
    }

    pub fn e4() -> SplitGraph {
        SplitGraph::from_neighborhoods(5, &[nb(&[1, 2, 3, 4]), nb(&[5])]).unwrap()
    }

    pub fn p4_split() -> SplitGraph {
        SplitGraph::from_neighborhoods(2, &[nb(&[1]), nb(&[2])]).unwrap()
    }

    pub fn g3() -> SplitGraph {
        SplitGraph::from_neighborhoods(3, &[nb(&[1]), nb(&[2]), nb(&[3])]).unwrap()
    }

    /// `g3` with a twin of its first leaf.
    pub fn g3_twin() -> SplitGraph {
        SplitGraph::from_neighborhoods(3, &[nb(&[1]), nb(&[1]), nb(&[2]), nb(&[3])]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::split::Bipartition;

    const A: usize = 5;
    const B: usize = 6;
    const C: usize = 7;

    #[test]
    fn e1_reproduces_the_worked_counts() {
        let s = e1();
        assert_eq!(induced_p4s(s.graph()).len(), 10);
        assert_eq!(eta(&s, A, B), Ok(1));
        assert_eq!(sigma(&s, A, B), Ok(4));
        assert_eq!(sigma(&s, A, C), Ok(6));
        assert_eq!(sigma(&s, B, C), Ok(0));
        let f = phi(&s);
        assert_eq!(f, phi_oracle(&s));
        assert_eq!(f.size(), 10);
        assert!(f.is_connected());
        assert!(!f.is_simple());
        assert!(!f.is_complete());
        assert_eq!(
            f.labeled_pairs().into_iter().collect::<Vec<_>>(),
            vec![((A, B), 4), ((A, C), 6)]
        );
    }

    #[test]
    fn pair_errors() {
        let s = e4();
        assert_eq!(eta(&s, 5, 6), Ok(0));
        assert_eq!(sigma(&s, 5, 6), Ok(4));
        assert_eq!(eta(&s, 5, 5), Err(Error::SameVertex(5)));
        assert_eq!(sigma(&s, 0, 5), Err(Error::NotIndependent(0)));
    }

    #[test]
    fn factor_graph_examples() {
        let star = SplitGraph::new(
            Graph::star(3),
            Bipartition::new(VertexSet::singleton(0), [1, 2, 3].iter().collect()),
        )
        .unwrap();
        let f = phi(&star);
        assert_eq!(f.order(), 3);
        assert_eq!(f.size(), 0);
        assert_eq!(f, phi_oracle(&star));

        let f = phi(&p4_split());
        assert_eq!(f.size(), 1);
        assert!(f.is_simple() && f.is_complete());

        let f = phi(&e3());
        assert!(f.is_simple() && f.is_complete() && f.is_connected());
        assert_eq!(f.support_diameter(), Some(1));

        let f = phi(&e4());
        assert!(f.is_complete() && f.is_connected() && !f.is_simple());
    }

    #[test]
    fn degenerate_factor_graphs() {
        let lone = SplitGraph::from_neighborhoods(2, &[nb(&[1])]).unwrap();
        let f = phi(&lone);
        assert!(f.is_connected() && f.is_complete() && f.is_simple());
        assert_eq!(f.support_diameter(), Some(0));
    }
}
