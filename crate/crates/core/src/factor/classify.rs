//! Structural classifiers built on the factor graph.
//!
//! Each classifier states its preconditions and returns
//! [`Error::Precondition`] when they fail. A structural conclusion that does
//! not hold on an input meeting the preconditions is reported as
//! [`Error::Falsified`]; the verification harness treats that as a
//! counterexample.

use super::{phi, FactorGraph};
use crate::bitset::VertexSet;
use crate::error::{precondition, Error, Result};
use crate::graph::{clique_number, find_isomorphism, Graph};
use crate::split::{are_twins, Bipartition, SplitGraph};
use crate::switch::is_active;

fn union_of_neighborhoods(s: &SplitGraph) -> VertexSet {
    s.independent_side()
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc | s.neighbors(v))
}

fn intersection_of(s: &SplitGraph, w: VertexSet) -> VertexSet {
    w.iter().fold(s.clique_side(), |acc, v| acc & s.neighbors(v))
}

fn is_perfect_square(x: u64) -> bool {
    let r = (x as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|q| q * q == x)
}

fn binom2(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

fn falsified(claim: &'static str, detail: impl Into<String>) -> Error {
    Error::Falsified {
        claim,
        detail: detail.into(),
    }
}

/// Truth values of the six homogeneity conclusions; all must be `true`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub zero_sigma_iff_twins: bool,
    pub sigmas_are_squares: bool,
    pub positive_degree: bool,
    pub no_induced_k2_plus_k1: bool,
    pub diameter_at_most_two: bool,
    pub no_long_induced_cycle: bool,
}

impl HomogeneityReport {
    pub fn all_hold(&self) -> bool {
        self.zero_sigma_iff_twins
            && self.sigmas_are_squares
            && self.positive_degree
            && self.no_induced_k2_plus_k1
            && self.diameter_at_most_two
            && self.no_long_induced_cycle
    }
}

pub fn homogeneity_report(s: &SplitGraph) -> Result<HomogeneityReport> {
    if !s.is_homogeneous() {
        return Err(precondition("T3.2", "S is homogeneous"));
    }
    let f = phi(s);
    let ind = s.independent_side().to_vec();
    let mut zero_sigma_iff_twins = true;
    let mut sigmas_are_squares = true;
    for (a, &u) in ind.iter().enumerate() {
        for &v in &ind[a + 1..] {
            let m = f.sigma(u, v);
            zero_sigma_iff_twins &= (m == 0) == are_twins(s.graph(), u, v)?;
            sigmas_are_squares &= is_perfect_square(m);
        }
    }
    let d = ind.first().map_or(0, |&v| s.graph().degree(v));
    let positive_degree = f.size() >= 1 && d != 0 && d != s.clique_side().len();

    let sup = f.support();
    let n = sup.n();
    let mut no_induced_k2_plus_k1 = true;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = [sup.has_edge(a, b), sup.has_edge(a, c), sup.has_edge(b, c)];
                if e.iter().filter(|&&x| x).count() == 1 {
                    no_induced_k2_plus_k1 = false;
                }
            }
        }
    }
    Ok(HomogeneityReport {
        zero_sigma_iff_twins,
        sigmas_are_squares,
        positive_degree,
        no_induced_k2_plus_k1,
        diameter_at_most_two: sup.diameter().is_some_and(|d| d <= 2),
        no_long_induced_cycle: !sup.has_induced_cycle_of_length_at_least(5),
    })
}

/// Which extremal structure the family `{N(v) : v ∈ I}` has.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCase {
    /// `ω = α + d − 1`: all neighbourhoods share a common core of size `d − 1`.
    CommonCore,
    /// `ω = d + 1`: all neighbourhoods live in a set of size `d + 1`.
    SmallUnion,
    Both,
    Neither,
}

/// FamilyProfile: `alpha = |I|`, `d` common degree, `omega = |⋃ N(v)|`, `u_size = |⋂ N(v)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyProfile {
    pub alpha: usize,
    pub d: usize,
    pub omega: usize,
    pub u_size: usize,
    pub case: FamilyCase,
}

fn require_simple_complete_cover(s: &SplitGraph, claim: &'static str) -> Result<FactorGraph> {
    let f = phi(s);
    if !(f.is_simple() && f.is_complete()) {
        return Err(precondition(claim, "factor graph is simple and complete"));
    }
    if s.independent_side().len() < 2 {
        return Err(precondition(claim, "|I| >= 2"));
    }
    if union_of_neighborhoods(s) != s.clique_side() {
        return Err(precondition(claim, "K is the union of the independent neighbourhoods"));
    }
    Ok(f)
}

/// Intersecting-family profile of the independent neighbourhoods.
///
/// With a simple complete factor graph every independent vertex has the
/// same degree `d` and every two neighbourhoods meet in `d − 1` vertices.
/// For three or more sets, every intersection of a nonempty subfamily `W`
/// has size `d + 1 − |W|` or `d − 1`, and the two extremal cases are each
/// characterised by a triple, by all subfamilies, and by `ω`.
pub fn classify_family(s: &SplitGraph) -> Result<FamilyProfile> {
    const CLAIM: &str = "T4.3";
    require_simple_complete_cover(s, CLAIM)?;
    let ind = s.independent_side();
    let alpha = ind.len();
    let d = s.graph().degree(ind.first().expect("|I| >= 2"));
    for v in ind {
        if s.graph().degree(v) != d {
            return Err(falsified(CLAIM, format!("vertex {v} has degree != {d}")));
        }
    }
    for u in ind {
        for v in ind.iter().filter(|&v| v > u) {
            if (s.neighbors(u) & s.neighbors(v)).len() + 1 != d {
                return Err(falsified(CLAIM, format!("|N({u}) ∩ N({v})| != d - 1")));
            }
        }
    }
    let omega = union_of_neighborhoods(s).len();
    let u_size = intersection_of(s, ind).len();
    let common_core = omega == alpha + d - 1;
    let small_union = omega == d + 1;
    let case = match (common_core, small_union) {
        (true, true) => FamilyCase::Both,
        (true, false) => FamilyCase::CommonCore,
        (false, true) => FamilyCase::SmallUnion,
        (false, false) => FamilyCase::Neither,
    };
    if alpha >= 3 {
        let d = d as i64;
        let mut triple_core = false;
        let mut triple_small = false;
        let mut all_core = true;
        let mut all_small = true;
        for w in ind.subsets().filter(|w| !w.is_empty()) {
            let size = intersection_of(s, w).len() as i64;
            let k = w.len() as i64;
            if size != d + 1 - k && size != d - 1 {
                return Err(falsified(CLAIM, format!("|⋂ N| over {:?} is {size}", w.to_vec())));
            }
            if k == 3 {
                triple_core |= size == d - 1;
                triple_small |= size == d - 2;
            }
            if k >= 2 {
                all_core &= size == d - 1;
            }
            all_small &= size == d + 1 - k;
        }
        if !(triple_core == all_core && all_core == common_core) {
            return Err(falsified(CLAIM, "common-core equivalences disagree"));
        }
        if !(triple_small == all_small && all_small == small_union) {
            return Err(falsified(CLAIM, "small-union equivalences disagree"));
        }
        if case == FamilyCase::Neither {
            return Err(falsified(CLAIM, "neither extremal case holds"));
        }
    }
    Ok(FamilyProfile {
        alpha,
        d,
        omega,
        u_size,
        case,
    })
}

/// The nine conclusions for a simple complete factor graph; all must hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Thm44Report {
    pub items: [bool; 9],
    pub omega: usize,
    pub alpha: usize,
    pub d: usize,
    pub u_size: usize,
    pub active: bool,
}

impl Thm44Report {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|&b| b)
    }

    pub fn failed_items(&self) -> Vec<usize> {
        (1..=9).filter(|&i| !self.items[i - 1]).collect()
    }
}

/// `ω = |K|`, `α = |I|`, `U` the universal vertices.
pub fn thm44_report(s: &SplitGraph) -> Result<Thm44Report> {
    require_simple_complete_cover(s, "T4.4")?;
    let omega = s.clique_side().len() as i64;
    let alpha = s.independent_side().len() as i64;
    let ind = s.independent_side();
    let d = s.graph().degree(ind.first().expect("|I| >= 2")) as i64;
    let u = s.universal_set().len() as i64;
    let active = is_active(s.graph());
    let items = [
        s.is_homogeneous(),
        1 <= d && d < omega,
        u == d - 1 || u == d + 1 - alpha,
        (u == d - 1) == (omega == alpha + d - 1),
        (u == d + 1 - alpha) == (omega == d + 1),
        omega == alpha + u,
        active == (u == 0),
        !active || (omega == alpha && (d == 1 || d == omega - 1)),
        !(omega == alpha || d == 1) || active,
    ];
    Ok(Thm44Report {
        items,
        omega: omega as usize,
        alpha: alpha as usize,
        d: d as usize,
        u_size: u as usize,
        active,
    })
}

/// Clique `0..m` with one private leaf `m + j` on each clique vertex `j`.
pub fn leaf_graph(m: usize) -> SplitGraph {
    let nbhds: Vec<VertexSet> = (0..m).map(VertexSet::singleton).collect();
    SplitGraph::from_neighborhoods(m, &nbhds).expect("leaf graph fits")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleCompleteClass {
    /// Isomorphic to the leaf graph; `map` sends `S`'s vertices onto it.
    LeafType { map: Vec<usize> },
    /// Isomorphic to the co-inverse of the leaf graph.
    CoLeafType { map: Vec<usize> },
}

/// Active split graphs with a simple complete factor graph are the leaf
/// graph or its co-inverse; the tag is certified by an explicit isomorphism.
///
/// With `|K| = 2` the two targets coincide and `LeafType` is reported.
pub fn classify_simple_complete(s: &SplitGraph) -> Result<SimpleCompleteClass> {
    const CLAIM: &str = "T4.9";
    if !is_active(s.graph()) {
        return Err(precondition(CLAIM, "S is active"));
    }
    let f = phi(s);
    if !(f.is_simple() && f.is_complete()) {
        return Err(precondition(CLAIM, "factor graph is simple and complete"));
    }
    let ind = s.independent_side();
    let k = s.clique_side().len();
    let target = leaf_graph(ind.len());
    let degs: Vec<usize> = ind.iter().map(|v| s.graph().degree(v)).collect();
    if degs.iter().all(|&d| d == 1) {
        if let Some(map) = find_isomorphism(s.graph(), target.graph())? {
            return Ok(SimpleCompleteClass::LeafType { map });
        }
    }
    if k >= 1 && degs.iter().all(|&d| d == k - 1) {
        if let Some(map) = find_isomorphism(s.graph(), target.co_invert().graph())? {
            return Ok(SimpleCompleteClass::CoLeafType { map });
        }
    }
    Err(falsified(
        CLAIM,
        format!("independent degrees {degs:?} with |K| = {k} match neither target"),
    ))
}

/// The two subgraphs attached to a set `A` of independent vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedFactor {
    /// Induced on `A ∪ ⋃_A N(v)`, bipartition `(⋃_A N(v), A)`.
    pub full: SplitGraph,
    pub full_labels: Vec<usize>,
    /// `full` minus `⋂_A N(v)`.
    pub trimmed: SplitGraph,
    pub trimmed_labels: Vec<usize>,
}

impl InducedFactor {
    /// Whether both subgraphs have the factor graph that `s`'s has on `A`.
    pub fn factor_graphs_agree(&self, s: &SplitGraph, a: VertexSet) -> bool {
        let whole = phi(s);
        let restricted: std::collections::BTreeMap<_, _> = whole
            .labeled_pairs()
            .into_iter()
            .filter(|&((u, v), _)| a.contains(u) && a.contains(v))
            .collect();
        [(&self.full, &self.full_labels), (&self.trimmed, &self.trimmed_labels)]
            .into_iter()
            .all(|(sub, labels)| {
                let f = phi(sub);
                let verts: VertexSet = f.labels().iter().map(|&v| labels[v]).collect();
                let pairs: std::collections::BTreeMap<_, _> = f
                    .labeled_pairs()
                    .into_iter()
                    .map(|((u, v), m)| ((labels[u], labels[v]), m))
                    .collect();
                verts == a && pairs == restricted
            })
    }
}

pub fn induced_factor(s: &SplitGraph, a: VertexSet) -> Result<InducedFactor> {
    const CLAIM: &str = "P5.1";
    if a.is_empty() {
        return Err(precondition(CLAIM, "A is nonempty"));
    }
    if let Some(v) = (a - s.independent_side()).first() {
        return Err(Error::NotIndependent(v));
    }
    if union_of_neighborhoods(s) != s.clique_side() {
        return Err(precondition(CLAIM, "K is the union of the independent neighbourhoods"));
    }
    let reach = a.iter().fold(VertexSet::EMPTY, |acc, v| acc | s.neighbors(v));
    let core = intersection_of(s, a);
    let build = |k: VertexSet| -> Result<(SplitGraph, Vec<usize>)> {
        let (g, labels) = s.graph().induced(k | a)?;
        let local = |set: VertexSet| {
            labels
                .iter()
                .enumerate()
                .filter(|(_, &v)| set.contains(v))
                .map(|(i, _)| i)
                .collect::<VertexSet>()
        };
        let part = Bipartition::new(local(k), local(a));
        Ok((SplitGraph::new(g, part)?, labels))
    };
    let (full, full_labels) = build(reach)?;
    let (trimmed, trimmed_labels) = build(reach - core)?;
    Ok(InducedFactor {
        full,
        full_labels,
        trimmed,
        trimmed_labels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueShape {
    /// Complete factor graph and `|K| = |I|`.
    CompleteEqual,
    /// `|K| = ω(Φ) < |I|` and every vertex lies in a maximum clique of `Φ`.
    CliqueCover { omega_phi: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RKind {
    RType { map: Vec<usize> },
    CoRType { map: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleConnectedClass {
    pub shape: CliqueShape,
    pub kind: RKind,
}

/// Leaf-type split graph grouping `I` into the classes of `σ = 0`.
///
/// `R` has the same `K` and `I` as `S`; the `j`-th class (ordered by smallest
/// member) hangs off the `j`-th clique vertex. `None` when `σ = 0` is not an
/// equivalence relation on `I`, or when the class count differs from `|K|`
/// (then `R` would leave a clique vertex without an independent neighbour).
pub fn associated_r(s: &SplitGraph) -> Option<SplitGraph> {
    let f = phi(s);
    let ind = s.independent_side().to_vec();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &ind {
        match classes.iter_mut().find(|c| f.sigma(c[0], v) == 0) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    for c in &classes {
        for (i, &u) in c.iter().enumerate() {
            if c[i + 1..].iter().any(|&v| f.sigma(u, v) != 0) {
                return None;
            }
        }
    }
    let kside = s.clique_side().to_vec();
    if classes.len() != kside.len() {
        return None;
    }
    let mut g = Graph::new(s.graph().n()).ok()?;
    for (i, &x) in kside.iter().enumerate() {
        for &y in &kside[i + 1..] {
            g.add_edge(x, y).ok()?;
        }
    }
    for (c, &x) in classes.iter().zip(&kside) {
        for &v in c {
            g.add_edge(v, x).ok()?;
        }
    }
    SplitGraph::new(g, s.bipartition()).ok()
}

/// Clique-cover dichotomy plus the leaf-type characterisation for active
/// split graphs with a simple connected factor graph.
pub fn classify_simple_connected(s: &SplitGraph) -> Result<SimpleConnectedClass> {
    const CLAIM: &str = "T5.5";
    if !is_active(s.graph()) {
        return Err(precondition(CLAIM, "S is active"));
    }
    let f = phi(s);
    if !(f.is_simple() && f.is_connected()) {
        return Err(precondition(CLAIM, "factor graph is simple and connected"));
    }
    let k = s.clique_side().len();
    let alpha = s.independent_side().len();
    if !(2 <= k && k <= alpha) {
        return Err(precondition(CLAIM, "2 <= |K| <= |I|"));
    }
    if union_of_neighborhoods(s) != s.clique_side() {
        return Err(precondition(CLAIM, "K is the union of the independent neighbourhoods"));
    }
    let shape = clique_shape(&f, k, alpha)?;
    let r = associated_r(s).ok_or_else(|| falsified(CLAIM, "no associated leaf-type graph exists"))?;
    let kind = if let Some(map) = find_isomorphism(s.graph(), r.graph())? {
        RKind::RType { map }
    } else if let Some(map) = find_isomorphism(s.graph(), r.co_invert().graph())? {
        RKind::CoRType { map }
    } else {
        return Err(falsified(CLAIM, "S is isomorphic to neither R nor its co-inverse"));
    };
    Ok(SimpleConnectedClass { shape, kind })
}

/// Which alternative of the clique dichotomy an active split graph with a
/// simple connected factor graph falls under.
pub fn clique_dichotomy(s: &SplitGraph) -> Result<CliqueShape> {
    const CLAIM: &str = "T5.2";
    if !is_active(s.graph()) {
        return Err(precondition(CLAIM, "S is active"));
    }
    let f = phi(s);
    if !(f.is_simple() && f.is_connected()) {
        return Err(precondition(CLAIM, "factor graph is simple and connected"));
    }
    let k = s.clique_side().len();
    let shape = clique_shape(&f, k, s.independent_side().len())?;
    let sup = f.support();
    let min_deg = (0..sup.n()).map(|v| sup.degree(v)).min().unwrap_or(0);
    if k > 1 + min_deg {
        return Err(falsified(
            CLAIM,
            format!("|K| = {k} exceeds 1 + minimum factor degree {min_deg}"),
        ));
    }
    Ok(shape)
}

fn clique_shape(f: &FactorGraph, k: usize, alpha: usize) -> Result<CliqueShape> {
    let sup = f.support();
    let omega_phi = clique_number(&sup);
    let complete_equal = f.is_complete() && k == alpha;
    let covered = (0..sup.n()).all(|v| {
        let closed = sup.neighbors(v).with(v);
        let (local, _) = sup.induced(closed).expect("in range");
        clique_number(&local) == omega_phi
    });
    let clique_cover = omega_phi == k && k < alpha && covered;
    match (complete_equal, clique_cover) {
        (true, false) => Ok(CliqueShape::CompleteEqual),
        (false, true) => Ok(CliqueShape::CliqueCover { omega_phi }),
        _ => Err(falsified(
            "T5.2",
            format!(
                "complete&equal={complete_equal}, clique-cover={clique_cover}, ω(Φ)={omega_phi}, |K|={k}, |I|={alpha}"
            ),
        )),
    }
}

/// Degree bounds for active split graphs with a simple connected factor graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub omega: usize,
    pub alpha: usize,
    pub deg: u64,
    pub complete: bool,
    pub omega_le_alpha: bool,
    pub clique_numbers_match: bool,
    /// `deg = C(α,2)` when complete, otherwise `⌈α(ω−1)/2⌉ ≤ deg < C(α,2)`.
    pub degree_in_range: bool,
}

impl DegreeBounds {
    pub fn all_hold(&self) -> bool {
        self.omega_le_alpha && self.clique_numbers_match && self.degree_in_range
    }

    pub fn lower_bound(&self) -> u64 {
        ((self.alpha * self.omega.saturating_sub(1)) as u64).div_ceil(2)
    }
}

pub fn degree_bounds_check(s: &SplitGraph) -> Result<DegreeBounds> {
    const CLAIM: &str = "C5.3";
    if !is_active(s.graph()) {
        return Err(precondition(CLAIM, "S is active"));
    }
    let f = phi(s);
    if !(f.is_simple() && f.is_connected()) {
        return Err(precondition(CLAIM, "factor graph is simple and connected"));
    }
    let omega = s.clique_side().len();
    let alpha = s.independent_side().len();
    let deg = f.size();
    let complete = f.is_complete();
    let top = binom2(alpha);
    let lower = ((alpha * omega.saturating_sub(1)) as u64).div_ceil(2);
    let degree_in_range = if complete {
        deg == top
    } else {
        lower <= deg && deg < top
    };
    Ok(DegreeBounds {
        omega,
        alpha,
        deg,
        complete,
        omega_le_alpha: omega <= alpha,
        clique_numbers_match: clique_number(s.graph()) == clique_number(&f.support()),
        degree_in_range,
    })
}
