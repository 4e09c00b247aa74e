use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{canonical_form, Graph};
use crate::split::SplitGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dedupe {
    /// Every assignment of a subset of `K` to each independent vertex.
    Labeled,
    /// One representative per isomorphism class preserving `K` and `I`.
    Canonical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRange {
    pub max_k: usize,
    pub max_alpha: usize,
    pub dedupe: Dedupe,
}

impl EnumerationRange {
    pub fn new(max_k: usize, max_alpha: usize, dedupe: Dedupe) -> Self {
        EnumerationRange {
            max_k,
            max_alpha,
            dedupe,
        }
    }

    pub fn canonical(max_k: usize, max_alpha: usize) -> Self {
        Self::new(max_k, max_alpha, Dedupe::Canonical)
    }
}

impl Default for EnumerationRange {
    fn default() -> Self {
        Self::canonical(4, 4)
    }
}

/// Split graphs with `K = 0..k` and `I = k..k+α`, for `(k, α) ≠ (0, 0)`.
///
/// Order is lexicographic in `(k, α, neighbourhood tuple)`. In canonical
/// mode a tuple is kept when it is non-decreasing and no relabeling of `K`
/// followed by sorting gives a smaller tuple, so each class is represented
/// by its least member.
pub fn enumerate_split_graphs(r: EnumerationRange) -> Vec<SplitGraph> {
    let mut out = Vec::new();
    for k in 0..=r.max_k {
        let perms = permutations(k);
        for alpha in 0..=r.max_alpha {
            if k + alpha == 0 {
                continue;
            }
            let mut tuple = vec![0u64; alpha];
            loop {
                let keep = match r.dedupe {
                    Dedupe::Labeled => true,
                    Dedupe::Canonical => is_least(&tuple, &perms),
                };
                if keep {
                    let nbhds: Vec<VertexSet> = tuple.iter().map(|&b| VertexSet::from_bits(b)).collect();
                    out.push(SplitGraph::from_neighborhoods(k, &nbhds).expect("constructed split graph"));
                }
                if !advance(&mut tuple, 1u64 << k, r.dedupe) {
                    break;
                }
            }
        }
    }
    out
}

/// Next tuple in lexicographic order; canonical mode only visits non-decreasing ones.
fn advance(t: &mut [u64], limit: u64, dedupe: Dedupe) -> bool {
    for pos in (0..t.len()).rev() {
        if t[pos] + 1 < limit {
            t[pos] += 1;
            let fill = if dedupe == Dedupe::Canonical { t[pos] } else { 0 };
            for x in &mut t[pos + 1..] {
                *x = fill;
            }
            return true;
        }
    }
    false
}

fn is_least(t: &[u64], perms: &[Vec<usize>]) -> bool {
    let mut image = vec![0u64; t.len()];
    perms.iter().all(|p| {
        for (dst, &src) in image.iter_mut().zip(t) {
            *dst = permute_bits(src, p);
        }
        image.sort_unstable();
        image.as_slice() >= t
    })
}

fn permute_bits(mask: u64, p: &[usize]) -> u64 {
    VertexSet::from_bits(mask).iter().fold(0, |acc, v| acc | (1 << p[v]))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out
}

fn heap_permute(m: usize, cur: &mut [usize], out: &mut Vec<Vec<usize>>) {
    if m <= 1 {
        out.push(cur.to_vec());
        return;
    }
    for i in 0..m {
        heap_permute(m - 1, cur, out);
        if m.is_multiple_of(2) {
            cur.swap(i, m - 1);
        } else {
            cur.swap(0, m - 1);
        }
    }
}

/// One graph per isomorphism class on exactly `n` vertices.
///
/// Classes on `n` vertices are grown from those on `n − 1` by adding a
/// vertex with every possible neighbourhood; the output is ordered by
/// canonical form.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(0).expect("empty graph")];
    for m in 1..=n {
        let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for h in &level {
            for nb in VertexSet::full(m - 1).subsets() {
                let mut adj = h.adjacency().to_vec();
                for v in nb {
                    adj[v].insert(m - 1);
                }
                adj.push(nb);
                let g = Graph::from_adjacency(adj).expect("symmetric by construction");
                let key = canonical_form(&g).expect("below the isomorphism cap");
                seen.entry(key).or_insert(g);
            }
        }
        level = seen.into_values().collect();
    }
    level
}
