//! Exact isomorphism and canonical forms for small graphs.
//!
//! Canonical labelling is an individualisation-refinement search: colour
//! refinement produces an ordered equitable partition, the first non-singleton
//! cell is split by individualising each of its vertices in turn, and every
//! discrete leaf yields a relabelled adjacency matrix. The lexicographically
//! largest matrix is the canonical form. Twin vertices are interchangeable by
//! an automorphism that fixes everything individualised so far, so only one
//! member of each twin class is branched on.

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub const DEFAULT_ISO_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoConfig {
    /// Largest vertex count accepted; larger inputs are an error, never a guess.
    pub max_vertices: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig {
            max_vertices: DEFAULT_ISO_CAP,
        }
    }
}

impl IsoConfig {
    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_vertices {
            Err(Error::IsomorphismCap {
                n: g.n(),
                cap: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }

    /// Canonical vertex order: position `i` holds the original vertex placed at `i`.
    pub fn canonical_labeling(&self, g: &Graph) -> Result<(Vec<u8>, Vec<usize>)> {
        self.check(g)?;
        let twins = twin_sets(g);
        let initial = refine(g, vec![(0..g.n()).collect()]);
        let mut best = None;
        search(g, initial, &twins, &mut best);
        Ok(best.unwrap_or_else(|| (encode(g, &[]), Vec::new())))
    }

    pub fn canonical_form(&self, g: &Graph) -> Result<Vec<u8>> {
        Ok(self.canonical_labeling(g)?.0)
    }

    /// A bijection `map` with `uv ∈ E(g) ⇔ map[u]map[v] ∈ E(h)`, if one exists.
    pub fn find_isomorphism(&self, g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
        self.check(g)?;
        self.check(h)?;
        if g.n() != h.n() || g.edge_count() != h.edge_count() {
            return Ok(None);
        }
        let mut dg: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
        let mut dh: Vec<_> = (0..h.n()).map(|v| h.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            return Ok(None);
        }
        let (fg, lg) = self.canonical_labeling(g)?;
        let (fh, lh) = self.canonical_labeling(h)?;
        if fg != fh {
            return Ok(None);
        }
        let mut map = vec![0; g.n()];
        for (&a, &b) in lg.iter().zip(&lh) {
            map[a] = b;
        }
        debug_assert!(g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v])));
        Ok(Some(map))
    }

    pub fn are_isomorphic(&self, g: &Graph, h: &Graph) -> Result<bool> {
        Ok(self.find_isomorphism(g, h)?.is_some())
    }
}

pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    IsoConfig::default().canonical_form(g)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    IsoConfig::default().are_isomorphic(g, h)
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    IsoConfig::default().find_isomorphism(g, h)
}

fn twin_sets(g: &Graph) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| {
            (0..g.n())
                .filter(|&u| u != v && g.neighbors(u).without(v) == g.neighbors(v).without(u))
                .collect()
        })
        .collect()
}

/// Colour refinement over an ordered partition. Cells are split by the vector
/// of neighbour counts into every current cell; subcells keep the parent's
/// position and are ordered by that vector.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().collect()).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let nv = g.neighbors(v);
                    (masks.iter().map(|m| (nv & *m).len()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, twins: &[VertexSet], best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = encode(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut tried = VertexSet::EMPTY;
    for &v in &cells[target] {
        if !(twins[v] & tried).is_empty() {
            continue;
        }
        tried.insert(v);
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..target]);
        split.push(vec![v]);
        split.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        split.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, split), twins, best);
    }
}

/// `[n]` followed by the upper triangle of the relabelled adjacency matrix,
/// row-major, packed MSB-first.
fn encode(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = vec![n as u8];
    let mut byte = 0u8;
    let mut nbits = 0;
    for i in 0..n {
        for j in i + 1..n {
            byte = (byte << 1) | g.has_edge(order[i], order[j]) as u8;
            nbits += 1;
            if nbits == 8 {
                out.push(byte);
                byte = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(byte << (8 - nbits));
    }
    out
}
