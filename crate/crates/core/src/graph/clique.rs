use super::Graph;
use crate::bitset::VertexSet;

/// A maximum clique, found by branch and bound over bitsets.
///
/// Ties are broken towards the clique found first in ascending-vertex search order.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

fn expand(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current;
        }
        return;
    }
    while let Some(v) = candidates.first() {
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        expand(g, current.with(v), candidates & g.neighbors(v), best);
        candidates.remove(v);
    }
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Size of a largest independent set, computed as the clique number of the complement.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// All maximal cliques (Bron–Kerbosch with pivoting), sorted by bitmask.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort();
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u) & p).len())
        .expect("p is nonempty");
    for v in p - g.neighbors(pivot) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_clique_number(g: &Graph) -> usize {
        g.vertices()
            .subsets()
            .filter(|s| s.iter().all(|v| (s.without(v)).is_subset(g.neighbors(v))))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_examples() {
        assert_eq!(clique_number(&Graph::complete(4)), 4);
        assert_eq!(clique_number(&Graph::cycle(5)), 2);
        assert_eq!(clique_number(&Graph::new(0).unwrap()), 0);
        assert_eq!(independence_number(&Graph::cycle(5)), 2);
        assert_eq!(independence_number(&Graph::star(3)), 3);
    }

    #[test]
    fn maximal_cliques_of_p4() {
        let cl = maximal_cliques(&Graph::path(4));
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|c| c.len() == 2));
        assert_eq!(maximal_cliques(&Graph::new(0).unwrap()), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn agrees_with_subset_brute_force() {
        // every graph on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(clique_number(&g), brute_clique_number(&g));
            let mc = maximal_cliques(&g);
            assert_eq!(mc.iter().map(|c| c.len()).max().unwrap(), brute_clique_number(&g));
        }
    }
}
