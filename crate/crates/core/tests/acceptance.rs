//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Built with `harness = false` so the lines are printed even when every
//! criterion passes.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

use splitfactor::factor::{phi, phi_oracle, thm44_report};
use splitfactor::graph::Graph;
use splitfactor::io::{parse_edge_list, parse_graph6, to_graph6};
use splitfactor::split::SplitGraph;
use splitfactor::switch::{a4, decompose, is_indecomposable, is_prime, switch_moves};
use splitfactor::verify::{
    enumerate_split_graphs, graphs_up_to_isomorphism, run_suite_with_jobs, EnumerationRange, PropertyReport,
};

const E1_BUDGET: Duration = Duration::from_millis(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(120);
const COMPOSITION_ORDER: usize = 7;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// The split graph in a data file, with a lookup from external label to vertex.
fn load_split(name: &str) -> (SplitGraph, impl Fn(&str) -> usize) {
    let text = std::fs::read_to_string(data(name)).unwrap();
    let doc = parse_edge_list(&text).unwrap();
    let s = doc.split().unwrap().unwrap();
    let labels = doc.labels;
    (s, move |l: &str| labels.iter().position(|x| x == l).unwrap())
}

fn ids(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Runs `wanted` on one worker; the summary names failing ids.
fn suite(range: EnumerationRange, wanted: &[&str]) -> (bool, String, Vec<PropertyReport>) {
    let reports = run_suite_with_jobs(range, Some(&ids(wanted)), 1).unwrap();
    let bad: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.property_id.as_str())
        .collect();
    let total: u64 = reports.iter().map(|r| r.instances).sum();
    let failures: u64 = reports.iter().map(|r| r.failure_count).sum();
    let summary = if bad.is_empty() {
        format!("{} properties, {total} checks, {failures} failures", reports.len())
    } else {
        format!("failing: {}", bad.join(", "))
    };
    (bad.is_empty(), summary, reports)
}

fn criterion_1() -> Verdict {
    let (s, at) = load_split("e1.txt");
    let (a, b, c) = (at("a"), at("b"), at("c"));
    let mut best = Duration::MAX;
    let mut f = phi(&s);
    let mut o = phi_oracle(&s);
    for _ in 0..20 {
        let t = Instant::now();
        f = phi(&s);
        o = phi_oracle(&s);
        best = best.min(t.elapsed());
    }
    let closed = [f.sigma(a, b), f.sigma(a, c), f.sigma(b, c), f.size()];
    let induced = [o.sigma(a, b), o.sigma(a, c), o.sigma(b, c), o.size()];
    let ok = closed == [4, 6, 0, 10] && induced == closed && best < E1_BUDGET;
    verdict(
        ok,
        format!("sigma ab/ac/bc, deg = {closed:?} (formula), {induced:?} (P4 count), {best:?} < {E1_BUDGET:?}"),
    )
}

fn criterion_2() -> Verdict {
    let t = Instant::now();
    let mut mismatches = 0usize;
    let instances = enumerate_split_graphs(EnumerationRange::canonical(4, 4));
    for s in &instances {
        let f = phi(s);
        if f != phi_oracle(s) || f.size() != switch_moves(s.graph()).len() as u64 {
            mismatches += 1;
        }
    }
    let elapsed = t.elapsed();
    verdict(
        mismatches == 0 && elapsed < ORACLE_BUDGET,
        format!(
            "{} split graphs, {mismatches} mismatches, {elapsed:?} < {ORACLE_BUDGET:?}",
            instances.len()
        ),
    )
}

fn criterion_3() -> Verdict {
    let items = [
        "P3.1.1", "P3.1.2", "P3.1.3", "P3.1.4", "P3.1.5", "P3.1.6", "P3.1.7", "P3.1.8",
    ];
    let (items_ok, summary, _) = suite(EnumerationRange::canonical(4, 4), &items);
    let (e4, at) = load_split("e4.txt");
    let (a, b) = (at("a"), at("b"));
    let converse = phi(&e4).sigma(a, b) == 4 && e4.graph().degree(a) != e4.graph().degree(b);
    let (_, _, w) = suite(EnumerationRange::canonical(5, 4), &["WITNESS_FIG3", "WITNESS_FIG4"]);
    let (w3, w4) = (w[0].witness_count, w[1].witness_count);
    verdict(
        items_ok && converse && w3 >= 1 && w4 >= 1 && w.iter().all(|r| r.passed),
        format!("{summary}; E4 sigma 4 with unequal degrees: {converse}; WITNESS_FIG3 {w3}, WITNESS_FIG4 {w4}"),
    )
}

fn criterion_4() -> Verdict {
    let wanted = ["T2.4", "C2.5", "T2.6", "T2.7.1", "T2.7.3", "WITNESS_FIG1"];
    let (ok, summary, reports) = suite(EnumerationRange::canonical(4, 4), &wanted);
    let fig1 = reports
        .iter()
        .find(|r| r.property_id == "WITNESS_FIG1")
        .unwrap()
        .witness_count;
    verdict(ok && fig1 >= 1, format!("{summary}; WITNESS_FIG1 witnesses {fig1}"))
}

/// Indecomposable split graphs on at most `order` vertices, one per class of
/// (graph, bipartition): the two single-vertex ones and the enumerated primes.
fn split_factors(order: usize) -> Vec<SplitGraph> {
    let mut out = Vec::new();
    for alpha in 0..=order {
        out.extend(
            enumerate_split_graphs(EnumerationRange::canonical(order - alpha, alpha))
                .into_iter()
                .filter(|s| s.independent_side().len() == alpha)
                .filter(|s| s.graph().n() == 1 || is_prime(s.graph())),
        );
    }
    out
}

/// Every chain `S_1 ∘ ... ∘ S_m ∘ H` on at most `order` vertices, `m ≥ 0`, with
/// indecomposable split `S_i` and indecomposable `H`, paired with its factor graphs.
fn composition_chains(order: usize) -> Vec<(Graph, Vec<Graph>)> {
    let outer = split_factors(order - 1);
    let inner: Vec<Graph> = (1..=order)
        .flat_map(graphs_up_to_isomorphism)
        .filter(is_indecomposable)
        .collect();
    let mut out: Vec<(Graph, Vec<Graph>)> = inner.iter().map(|h| (h.clone(), vec![h.clone()])).collect();
    let mut stack: Vec<(SplitGraph, Vec<Graph>)> = outer.iter().map(|s| (s.clone(), vec![s.graph().clone()])).collect();
    while let Some((s, parts)) = stack.pop() {
        let room = order - s.graph().n();
        for h in inner.iter().filter(|h| h.n() <= room) {
            let mut p = parts.clone();
            p.push(h.clone());
            out.push((s.compose(h).unwrap().graph, p));
        }
        for t in outer.iter().filter(|t| t.graph().n() < room) {
            let mut p = parts.clone();
            p.push(t.graph().clone());
            stack.push((s.compose_split(t).unwrap(), p));
        }
    }
    out
}

fn criterion_5() -> Verdict {
    let t = Instant::now();
    let chains = composition_chains(COMPOSITION_ORDER);
    let mut bad = 0usize;
    let mut with_primes = 0usize;
    for (g, parts) in &chains {
        if parts.len() >= 2 && parts.iter().any(is_prime) {
            with_primes += 1;
        }
        let d = decompose(g).unwrap();
        let same_factors = d.factors.len() == parts.len() && d.factors.iter().zip(parts).all(|(f, p)| f.graph == *p);
        let exact = d.recompose().as_ref() == Ok(g);
        let mut union = Graph::new(0).unwrap();
        for p in parts {
            union = union.disjoint_union(&a4(p)).unwrap();
        }
        if !(same_factors && exact && a4(g) == union) {
            bad += 1;
        }
    }
    verdict(
        bad == 0 && with_primes > 0,
        format!(
            "{} compositions on <= {COMPOSITION_ORDER} vertices ({with_primes} multi-factor with a prime), {bad} mismatches, {:.2?}",
            chains.len(),
            t.elapsed()
        ),
    )
}

fn criterion_6() -> Verdict {
    let wanted = ["P4.7", "P4.8.4", "L4.1", "T4.3", "T4.4", "T4.9"];
    let (ok, summary, _) = suite(EnumerationRange::canonical(5, 5), &wanted);
    let r = thm44_report(&load_split("e3.txt").0).unwrap();
    let e3 = r.u_size == 2 && r.omega == 4 && r.omega == r.alpha + r.u_size && r.all_hold();
    verdict(
        ok && e3,
        format!("{summary} on k, alpha <= 5; E3 |U| = {}, omega = {}", r.u_size, r.omega),
    )
}

fn criterion_7() -> Verdict {
    let wanted = ["P5.1", "T5.2", "C5.3", "C5.4", "T5.5"];
    let (ok, summary, reports) = suite(EnumerationRange::canonical(5, 5), &wanted);
    let qualifying = reports.iter().all(|r| r.instances > 0);
    verdict(ok && qualifying, format!("{summary} on k, alpha <= 5"))
}

fn graph6_corpus() -> std::result::Result<usize, String> {
    let text = std::fs::read_to_string(data("graph6_corpus.tsv")).unwrap();
    let mut count = 0;
    for line in text.lines().filter(|l| !l.starts_with('#')) {
        let mut cols = line.split('\t');
        let (code, n, edges) = (cols.next().unwrap(), cols.next().unwrap(), cols.next().unwrap_or(""));
        let n: usize = n.parse().unwrap();
        let edges: Vec<(usize, usize)> = edges
            .split_whitespace()
            .map(|e| {
                let (u, v) = e.split_once('-').unwrap();
                (u.parse().unwrap(), v.parse().unwrap())
            })
            .collect();
        let expected = Graph::from_edges(n, &edges).unwrap();
        let g = parse_graph6(code).map_err(|e| format!("{code}: {e}"))?;
        if g != expected || to_graph6(&g) != code || parse_graph6(&to_graph6(&expected)).as_ref() != Ok(&expected) {
            return Err(format!("round trip differs on {code}"));
        }
        count += 1;
    }
    Ok(count)
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

fn cli(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_splitfactor"))
        .args(args)
        .output()
        .unwrap();
    (out.status.success(), String::from_utf8(out.stdout).unwrap())
}

fn criterion_8() -> Verdict {
    let corpus = graph6_corpus();
    let file = |n: &str| data(n).to_string_lossy().into_owned();
    let runs: Vec<(Vec<String>, &str)> = vec![
        (
            vec![
                "phi".into(),
                "-i".into(),
                file("e1.txt"),
                "--bipartition".into(),
                "file".into(),
            ],
            "factor_graph",
        ),
        (vec!["phi".into(), "-i".into(), file("e5.txt")], "factor_graph"),
        (vec!["a4".into(), "-i".into(), file("p4.txt")], "graph"),
        (vec!["deg".into(), "-i".into(), file("e1.txt")], "deg"),
        (vec!["deg".into(), "-i".into(), file("c4.g6")], "deg"),
        (vec!["switches".into(), "-i".into(), file("c4.g6")], "switches"),
        (
            vec![
                "switches".into(),
                "-i".into(),
                file("p4.txt"),
                "--apply".into(),
                "0".into(),
            ],
            "graph",
        ),
        (vec!["decompose".into(), "-i".into(), file("e3.txt")], "decomposition"),
        (
            vec![
                "classify".into(),
                "-i".into(),
                file("e3.txt"),
                "--bipartition".into(),
                "file".into(),
            ],
            "classification",
        ),
        (vec!["classify".into(), "-i".into(), file("c4.g6")], "classification"),
        (vec!["invert".into(), "-i".into(), file("e5.txt")], "split_graph"),
        (vec!["coinvert".into(), "-i".into(), file("e5.txt")], "split_graph"),
        (
            vec![
                "compose".into(),
                "-i".into(),
                file("e5.txt"),
                "--inner".into(),
                file("c4.g6"),
            ],
            "graph",
        ),
    ];
    let mut invalid = Vec::new();
    for (args, name) in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (ok, stdout) = cli(&args);
        let valid = ok && serde_json::from_str::<Value>(&stdout).is_ok_and(|v| schema(name).is_valid(&v));
        if !valid {
            invalid.push(args[0].to_string());
        }
    }
    let (verify_ok, report) = cli(&["verify", "--jobs", "1"]);
    let report_valid = serde_json::from_str::<Value>(&report).is_ok_and(|v| schema("property_report").is_valid(&v));
    let corpus_note = match &corpus {
        Ok(n) => format!("graph6 corpus {n}/100"),
        Err(e) => format!("graph6: {e}"),
    };
    verdict(
        corpus == Ok(100) && invalid.is_empty() && verify_ok && report_valid,
        format!(
            "{corpus_note}; {} JSON outputs, invalid: {invalid:?}; verify exit 0: {verify_ok}, report valid: {report_valid}",
            runs.len() + 1
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("E1 multiplicities by formula and by P4 count", criterion_1),
        ("factor graph equals P4-count oracle on k, alpha <= 4", criterion_2),
        ("eight-item pair suite and its counterexamples", criterion_3),
        ("connectivity results and the WITNESS_FIG1 search", criterion_4),
        (
            "decomposition round trip over compositions of indecomposable factors",
            criterion_5,
        ),
        ("inversion and simple-complete suite", criterion_6),
        ("simple-connected suite", criterion_7),
        ("format fidelity", criterion_8),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = run();
        all &= v.ok;
        println!(
            "criterion {}: {} ({name}): {} [{:.2?}]",
            i + 1,
            if v.ok { "PASS" } else { "FAIL" },
            v.detail,
            t.elapsed()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
