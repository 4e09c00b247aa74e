//! Exhaustive checking of the structural claims over small instances.
//!
//! Every property has an id, a one-line statement, and a domain: enumerated
//! split graphs, all graphs on at most [`GRAPH_ORDER`] vertices up to
//! isomorphism, compositions `S ∘ G` of those, or compositions of two prime
//! split graphs. Universal properties pass when no instance fails; witness
//! properties pass when at least one instance exhibits the phenomenon.

mod enumerate;
mod properties;

pub use enumerate::{enumerate_split_graphs, graphs_up_to_isomorphism, Dedupe, EnumerationRange};
pub use properties::{property_ids, PropertyInfo, PROPERTIES};

use std::fmt::Write;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::json::InstanceJson;
use crate::io::to_graph6;
use crate::split::SplitGraph;
use crate::switch::is_prime;
use properties::{Check, Kind};

/// Largest order of the general-graph and composition domains.
pub const GRAPH_ORDER: usize = 7;
/// Largest order of each prime in the prime-pair domain.
pub const PRIME_ORDER: usize = 6;
const MAX_FAILURES: usize = 100;
const MAX_WITNESSES: usize = 5;

/// Result of one check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses do not hold; not counted.
    Skip,
    Pass,
    Witness(String),
    Fail(String),
}

impl Outcome {
    pub(crate) fn check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property_id: String,
    pub anchor: String,
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<InstanceJson>,
    pub witness_count: u64,
    pub witnesses: Vec<InstanceJson>,
    pub ms: u64,
    pub passed: bool,
}

/// Instances shared between properties, built on first use.
pub struct Corpus {
    range: EnumerationRange,
    split: OnceLock<Vec<SplitGraph>>,
    graphs: OnceLock<Vec<Graph>>,
    pairs: OnceLock<Vec<(usize, usize)>>,
    primes: OnceLock<Vec<(usize, usize)>>,
}

impl Corpus {
    pub fn new(range: EnumerationRange) -> Self {
        Corpus {
            range,
            split: OnceLock::new(),
            graphs: OnceLock::new(),
            pairs: OnceLock::new(),
            primes: OnceLock::new(),
        }
    }

    /// A corpus whose split-graph domain is exactly `instances`.
    pub fn from_split_graphs(instances: Vec<SplitGraph>) -> Self {
        let c = Corpus::new(EnumerationRange::canonical(0, 0));
        let _ = c.split.set(instances);
        c
    }

    pub fn range(&self) -> EnumerationRange {
        self.range
    }

    pub fn split_graphs(&self) -> &[SplitGraph] {
        self.split.get_or_init(|| enumerate_split_graphs(self.range))
    }

    /// Every graph on `0..=GRAPH_ORDER` vertices up to isomorphism, by order.
    pub fn graphs(&self) -> &[Graph] {
        self.graphs
            .get_or_init(|| (0..=GRAPH_ORDER).flat_map(graphs_up_to_isomorphism).collect())
    }

    /// Index pairs `(split, graph)` with `|S| + |G| ≤ GRAPH_ORDER`.
    fn compose_pairs(&self) -> &[(usize, usize)] {
        self.pairs.get_or_init(|| {
            let graphs = self.graphs();
            let mut out = Vec::new();
            for (a, s) in self.split_graphs().iter().enumerate() {
                let n = s.graph().n();
                for (b, g) in graphs.iter().enumerate() {
                    if n + g.n() <= GRAPH_ORDER {
                        out.push((a, b));
                    }
                }
            }
            out
        })
    }

    /// Ordered pairs of prime split graphs, each on at most `PRIME_ORDER` vertices.
    fn prime_pairs(&self) -> &[(usize, usize)] {
        self.primes.get_or_init(|| {
            let primes: Vec<usize> = self
                .split_graphs()
                .iter()
                .enumerate()
                .filter(|(_, s)| s.graph().n() <= PRIME_ORDER && is_prime(s.graph()))
                .map(|(i, _)| i)
                .collect();
            primes
                .iter()
                .flat_map(|&a| primes.iter().map(move |&b| (a, b)))
                .collect()
        })
    }
}

fn evaluate(corpus: &Corpus, check: &Check) -> Vec<Outcome> {
    match check {
        Check::Split(f) => corpus.split_graphs().par_iter().map(f).collect(),
        Check::Graph(f) => corpus.graphs().par_iter().map(f).collect(),
        Check::Compose(f) => {
            let (ss, gs) = (corpus.split_graphs(), corpus.graphs());
            corpus
                .compose_pairs()
                .par_iter()
                .map(|&(a, b)| f(&ss[a], &gs[b]))
                .collect()
        }
        Check::Primes(f) => {
            let ss = corpus.split_graphs();
            corpus
                .prime_pairs()
                .par_iter()
                .map(|&(a, b)| f(&ss[a], &ss[b]))
                .collect()
        }
    }
}

/// Serializes instance `idx` of the domain of `check`.
fn describe(corpus: &Corpus, check: &Check, idx: usize, detail: &str) -> InstanceJson {
    match check {
        Check::Split(_) => InstanceJson::new(&corpus.split_graphs()[idx], detail),
        Check::Graph(_) => InstanceJson::for_graph(&corpus.graphs()[idx], detail),
        Check::Compose(_) => {
            let (a, b) = corpus.compose_pairs()[idx];
            let inner = to_graph6(&corpus.graphs()[b]);
            InstanceJson::new(&corpus.split_graphs()[a], format!("inner graph {inner}: {detail}"))
        }
        Check::Primes(_) => {
            let (a, b) = corpus.prime_pairs()[idx];
            let ss = corpus.split_graphs();
            let composite = ss[a].compose_split(&ss[b]).expect("small composition");
            let outer = ss[a].graph().n();
            InstanceJson::new(
                &composite,
                format!("outer factor on the first {outer} vertices: {detail}"),
            )
        }
    }
}

fn run_one(corpus: &Corpus, info: &PropertyInfo) -> PropertyReport {
    let start = Instant::now();
    let results = evaluate(corpus, &info.check);
    let mut report = PropertyReport {
        property_id: info.id.to_string(),
        anchor: info.anchor.to_string(),
        instances: 0,
        failure_count: 0,
        failures: Vec::new(),
        witness_count: 0,
        witnesses: Vec::new(),
        ms: 0,
        passed: false,
    };
    for (idx, outcome) in results.iter().enumerate() {
        match outcome {
            Outcome::Skip => continue,
            Outcome::Pass => {}
            Outcome::Witness(d) => {
                report.witness_count += 1;
                if report.witnesses.len() < MAX_WITNESSES {
                    report.witnesses.push(describe(corpus, &info.check, idx, d));
                }
            }
            Outcome::Fail(d) => {
                report.failure_count += 1;
                if report.failures.len() < MAX_FAILURES {
                    report.failures.push(describe(corpus, &info.check, idx, d));
                }
            }
        }
        report.instances += 1;
    }
    report.passed = report.failure_count == 0 && (info.kind == Kind::Universal || report.witness_count > 0);
    report.ms = start.elapsed().as_millis() as u64;
    report
}

fn select(ids: Option<&[String]>) -> Result<Vec<&'static PropertyInfo>> {
    match ids {
        None => Ok(PROPERTIES.iter().collect()),
        Some(ids) => ids
            .iter()
            .map(|id| {
                PROPERTIES
                    .iter()
                    .find(|p| p.id == id.as_str())
                    .ok_or_else(|| Error::UnknownProperty(id.clone()))
            })
            .collect(),
    }
}

/// Runs the selected properties (all when `ids` is `None`) in registry order.
pub fn run_suite(range: EnumerationRange, ids: Option<&[String]>) -> Result<Vec<PropertyReport>> {
    run_on(&Corpus::new(range), ids)
}

/// Same as [`run_suite`] on a prepared corpus.
pub fn run_on(corpus: &Corpus, ids: Option<&[String]>) -> Result<Vec<PropertyReport>> {
    let chosen = select(ids)?;
    Ok(chosen.into_iter().map(|p| run_one(corpus, p)).collect())
}

/// [`run_suite`] on a dedicated pool of `jobs` worker threads.
pub fn run_suite_with_jobs(
    range: EnumerationRange,
    ids: Option<&[String]>,
    jobs: usize,
) -> Result<Vec<PropertyReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| run_suite(range, ids))
}

pub fn all_passed(reports: &[PropertyReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Fixed-width summary, one row per property.
pub fn render_table(reports: &[PropertyReport]) -> String {
    let mut out = format!(
        "{:<18} {:>9} {:>8} {:>9} {:>7}  status\n",
        "property", "instances", "failures", "witnesses", "ms"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<18} {:>9} {:>8} {:>9} {:>7}  {}",
            r.property_id,
            r.instances,
            r.failure_count,
            r.witness_count,
            r.ms,
            if r.passed { "ok" } else { "FAIL" }
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::VertexSet;

    fn ids(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn registry_ids_are_unique() {
        let mut seen = std::collections::BTreeSet::new();
        assert!(PROPERTIES.iter().all(|p| seen.insert(p.id)));
        assert!(property_ids().contains(&"P3.1.7"));
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let r = run_suite(EnumerationRange::canonical(1, 1), Some(&ids(&["NOPE"])));
        assert_eq!(r, Err(Error::UnknownProperty("NOPE".into())));
    }

    #[test]
    fn small_range_passes() {
        let reports = run_suite(
            EnumerationRange::canonical(3, 3),
            Some(&ids(&["T2.4", "EQ1", "P3.1.7"])),
        )
        .unwrap();
        assert!(all_passed(&reports), "{}", render_table(&reports));
        assert!(reports.iter().all(|r| r.instances > 0));
    }

    #[test]
    fn converse_of_the_square_item_is_not_asserted() {
        let e4 = SplitGraph::from_neighborhoods(5, &[[0, 1, 2, 3].iter().collect(), VertexSet::singleton(4)]).unwrap();
        let corpus = Corpus::from_split_graphs(vec![e4]);
        let r = run_on(&corpus, Some(&ids(&["P3.1.7"]))).unwrap();
        assert!(r[0].passed);
        assert_eq!(r[0].instances, 0);
    }

    #[test]
    fn witness_property_without_witness_fails() {
        let p4 = SplitGraph::from_neighborhoods(2, &[VertexSet::singleton(0), VertexSet::singleton(1)]).unwrap();
        let corpus = Corpus::from_split_graphs(vec![p4]);
        let r = run_on(&corpus, Some(&ids(&["WITNESS_FIG1"]))).unwrap();
        assert!(!r[0].passed);
        assert_eq!(r[0].failure_count, 0);
    }

    #[test]
    fn deterministic_counts() {
        let sel = ids(&["D1.SPLIT_COMPOSE", "T2.7.2", "P5.1"]);
        let a = run_suite_with_jobs(EnumerationRange::canonical(3, 3), Some(&sel), 1).unwrap();
        let b = run_suite_with_jobs(EnumerationRange::canonical(3, 3), Some(&sel), 4).unwrap();
        let strip = |v: Vec<PropertyReport>| {
            v.into_iter()
                .map(|r| (r.property_id, r.instances, r.failures, r.witnesses))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(a), strip(b));
    }
}
