use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use splitfactor::factor::phi;
use splitfactor::io::json::{
    classification, BipartitionJson, DecompositionJson, DegJson, FactorGraphJson, GraphJson, MoveJson, SigmaEdge,
    SplitGraphJson, SwitchesJson,
};
use splitfactor::io::{
    detect_format, factor_graph_to_dot, graph_to_dot, parse_document, to_edge_list, to_graph6, GraphDocument,
    InputFormat,
};
use splitfactor::split::bipartitions;
use splitfactor::switch::{a4, apply, decompose, graph_degree, switch_moves};
use splitfactor::verify::{all_passed, render_table, run_suite_with_jobs, Dedupe, EnumerationRange};
use splitfactor::{Error, SplitGraph};

#[derive(Parser)]
#[command(
    name = "splitfactor",
    version,
    about = "Factor multigraphs and 2-switch structure of split graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(short, long, value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputKind::Auto)]
    input_format: InputKind,
}

#[derive(clap::Args)]
struct SplitInput {
    #[command(flatten)]
    input: Input,
    /// `auto` takes the first bipartition in K-bitmask order, `file` the one
    /// declared in the input; anything else is a path to a `{"K":[..],"I":[..]}` file.
    #[arg(long, default_value = "auto", value_name = "auto|file|PATH")]
    bipartition: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputKind {
    Auto,
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    EdgeList,
    Graph6,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Factor multigraph of a split graph.
    Phi {
        #[command(flatten)]
        split: SplitInput,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
    /// The A4 graph: u ~ v when some 2-switch moves both.
    A4 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
    /// Number of 2-switches, with the σ table when the graph is split.
    Deg {
        #[command(flatten)]
        split: SplitInput,
    },
    /// List the 2-switches, or apply one.
    Switches {
        #[command(flatten)]
        input: Input,
        /// Index into the move list.
        #[arg(long, value_name = "INDEX")]
        apply: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Canonical decomposition into indecomposable factors, outermost first.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Structural classification record.
    Classify {
        #[command(flatten)]
        split: SplitInput,
    },
    /// Swap the roles of K and I.
    Invert {
        #[command(flatten)]
        split: SplitInput,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Complement every independent neighbourhood inside K.
    Coinvert {
        #[command(flatten)]
        split: SplitInput,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Compose the input split graph with an inner graph.
    Compose {
        #[command(flatten)]
        split: SplitInput,
        /// The inner graph.
        #[arg(long, value_name = "FILE")]
        inner: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
    /// Exhaustive property check over enumerated instances.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = 4)]
        max_alpha: usize,
        #[arg(long, value_enum, default_value_t = DedupeArg::Canonical)]
        dedupe: DedupeArg,
        /// Comma-separated property ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        #[arg(long, env = "SPLITFACTOR_JOBS")]
        jobs: Option<usize>,
        /// Write the report here; the table then goes to stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupeArg {
    Canonical,
    Labeled,
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_text(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path, kind: InputKind) -> CliResult<GraphDocument> {
    let text = read_text(path)?;
    let format = match kind {
        InputKind::Auto => detect_format(&text),
        InputKind::EdgeList => InputFormat::EdgeList,
        InputKind::Graph6 => InputFormat::Graph6,
    };
    Ok(parse_document(&text, format)?)
}

impl Input {
    fn load(&self) -> CliResult<GraphDocument> {
        load(&self.input, self.input_format)
    }
}

impl SplitInput {
    /// The document and, when the graph is split, the chosen split graph with its source.
    fn load(&self) -> CliResult<(GraphDocument, Option<(SplitGraph, String)>)> {
        let doc = self.input.load()?;
        let s = match self.bipartition.as_str() {
            "auto" => match bipartitions(&doc.graph) {
                Ok(parts) => Some((SplitGraph::new(doc.graph.clone(), parts[0])?, "auto".to_string())),
                Err(Error::NotSplit) => None,
                Err(e) => return Err(e.into()),
            },
            "file" => match doc.split() {
                Some(s) => Some((s?, "file".to_string())),
                None => return Err(CliError::Usage("input declares no bipartition (K=/I= lines)".into())),
            },
            path => {
                let text = read_text(Path::new(path))?;
                let b: BipartitionJson = serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("{path}: not a bipartition document: {e}")))?;
                Some((
                    SplitGraph::new(doc.graph.clone(), b.to_bipartition())?,
                    path.to_string(),
                ))
            }
        };
        Ok((doc, s))
    }

    fn load_split(&self) -> CliResult<(GraphDocument, SplitGraph, String)> {
        match self.load()? {
            (doc, Some((s, src))) => Ok((doc, s, src)),
            (_, None) => Err(Error::NotSplit.into()),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn emit_graph(doc: &GraphDocument, s: Option<&SplitGraph>, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => match s {
            Some(s) => json(&SplitGraphJson::new(s, &doc.labels)),
            None => json(&GraphJson::new(&doc.graph, &doc.labels)),
        },
        GraphFormat::EdgeList => {
            let mut d = doc.clone();
            d.bipartition = s.map(|s| s.bipartition());
            to_edge_list(&d)
        }
        GraphFormat::Graph6 => format!("{}\n", to_graph6(&doc.graph)),
        GraphFormat::Dot => graph_to_dot(&doc.graph, &doc.labels, doc.name.as_deref().unwrap_or("G")),
    }
}

fn with_graph(doc: &GraphDocument, s: &SplitGraph) -> GraphDocument {
    GraphDocument {
        graph: s.graph().clone(),
        bipartition: Some(s.bipartition()),
        ..doc.clone()
    }
}

fn transform(split: &SplitInput, format: GraphFormat, f: fn(&SplitGraph) -> SplitGraph) -> CliResult<String> {
    let (doc, s, _) = split.load_split()?;
    let t = f(&s);
    Ok(emit_graph(&with_graph(&doc, &t), Some(&t), format))
}

fn compose_labels(outer: &[String], inner: &[String]) -> Vec<String> {
    let clash = inner.iter().any(|l| outer.contains(l));
    let mut out = outer.to_vec();
    out.extend(
        inner
            .iter()
            .map(|l| if clash { format!("inner.{l}") } else { l.clone() }),
    );
    out
}

fn run_verify(
    max_k: usize,
    max_alpha: usize,
    dedupe: DedupeArg,
    ids: Option<Vec<String>>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
) -> CliResult<(String, bool)> {
    let dedupe = match dedupe {
        DedupeArg::Canonical => Dedupe::Canonical,
        DedupeArg::Labeled => Dedupe::Labeled,
    };
    let range = EnumerationRange::new(max_k, max_alpha, dedupe);
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let reports = run_suite_with_jobs(range, ids.as_deref(), jobs)?;
    let ok = all_passed(&reports);
    let table = render_table(&reports);
    Ok(match out {
        Some(path) => {
            fs::write(&path, json(&reports)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            (table, ok)
        }
        None => {
            eprint!("{table}");
            (json(&reports), ok)
        }
    })
}

fn run(cli: Cli) -> CliResult<(String, bool)> {
    let text = match cli.command {
        Command::Phi { split, format } => {
            let (doc, s, source) = split.load_split()?;
            let f = phi(&s);
            match format {
                ExportFormat::Json => json(&FactorGraphJson::new(&f, &s, &doc.labels, &source)),
                ExportFormat::Dot => factor_graph_to_dot(&f, &doc.labels),
            }
        }
        Command::A4 { input, format } => {
            let doc = input.load()?;
            let h = a4(&doc.graph);
            match format {
                ExportFormat::Json => json(&GraphJson::new(&h, &doc.labels)),
                ExportFormat::Dot => graph_to_dot(&h, &doc.labels, "A4"),
            }
        }
        Command::Deg { split } => {
            let (doc, s) = split.load()?;
            let name = |v: usize| doc.labels[v].clone();
            let sigma = s.as_ref().map(|(s, _)| {
                let f = phi(s);
                let ind = s.independent_side().to_vec();
                let mut rows = Vec::new();
                for (a, &u) in ind.iter().enumerate() {
                    for &v in &ind[a + 1..] {
                        rows.push(SigmaEdge {
                            u: name(u),
                            v: name(v),
                            sigma: f.sigma(u, v),
                        });
                    }
                }
                rows
            });
            json(&DegJson {
                deg: graph_degree(&doc.graph),
                split: s.is_some(),
                sigma,
                bipartition: s.map(|(s, _)| s.bipartition().into()),
                labels: doc.labels.clone(),
            })
        }
        Command::Switches {
            input,
            apply: index,
            format,
        } => {
            let doc = input.load()?;
            let moves = switch_moves(&doc.graph);
            match index {
                None => json(&SwitchesJson {
                    deg: moves.len(),
                    moves: moves
                        .iter()
                        .enumerate()
                        .map(|(i, m)| MoveJson::new(i, m, &doc.labels))
                        .collect(),
                    labels: doc.labels.clone(),
                }),
                Some(i) => {
                    let m = moves.get(i).ok_or_else(|| {
                        CliError::Usage(format!(
                            "move index {i} out of range; the graph has {} moves",
                            moves.len()
                        ))
                    })?;
                    let h = apply(&doc.graph, m)?;
                    let out = GraphDocument {
                        graph: h,
                        bipartition: None,
                        ..doc.clone()
                    };
                    emit_graph(&out, None, format)
                }
            }
        }
        Command::Decompose { input } => {
            let doc = input.load()?;
            json(&DecompositionJson::new(&decompose(&doc.graph)?, &doc.labels))
        }
        Command::Classify { split } => {
            let (doc, s) = split.load()?;
            json(&classification(&doc, s.as_ref().map(|(s, src)| (s, src.as_str()))))
        }
        Command::Invert { split, format } => transform(&split, format, SplitGraph::invert)?,
        Command::Coinvert { split, format } => transform(&split, format, SplitGraph::co_invert)?,
        Command::Compose { split, inner, format } => {
            let (doc, s, _) = split.load_split()?;
            let inner_doc = load(&inner, split.input.input_format)?;
            let c = s.compose(&inner_doc.graph)?;
            let out = GraphDocument {
                graph: c.graph,
                bipartition: None,
                name: doc.name.clone(),
                labels: compose_labels(&doc.labels, &inner_doc.labels),
            };
            emit_graph(&out, None, format)
        }
        Command::Verify {
            max_k,
            max_alpha,
            dedupe,
            ids,
            jobs,
            out,
        } => return run_verify(max_k, max_alpha, dedupe, ids, jobs, out),
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                _ => 1,
            })
        }
    }
}
