//! JSON documents written by the command-line tool and the verifier.
//!
//! Vertices appear under their external labels where a document has them;
//! graph payloads carry the label list so the dense numbering can be undone.

use serde::{Deserialize, Serialize};

use super::GraphDocument;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::factor::{
    classify_family, classify_simple_complete, classify_simple_connected, phi, FactorGraph, FamilyCase, RKind,
    SimpleCompleteClass,
};
use crate::graph::Graph;
use crate::split::{Bipartition, SplitGraph};
use crate::switch::{graph_degree, is_active, is_indecomposable, Decomposition, TwoSwitchMove};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<String>,
}

impl GraphJson {
    pub fn new(g: &Graph, labels: &[String]) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: labels.to_vec(),
        }
    }

    pub fn unlabeled(g: &Graph) -> Self {
        let labels: Vec<String> = (0..g.n()).map(|v| v.to_string()).collect();
        Self::new(g, &labels)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.n, &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartitionJson {
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
}

impl From<Bipartition> for BipartitionJson {
    fn from(b: Bipartition) -> Self {
        BipartitionJson {
            k: b.k.to_vec(),
            i: b.i.to_vec(),
        }
    }
}

impl BipartitionJson {
    pub fn to_bipartition(&self) -> Bipartition {
        Bipartition::new(self.k.iter().collect(), self.i.iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaEdge {
    pub u: String,
    pub v: String,
    pub sigma: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorGraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<SigmaEdge>,
    pub deg: u64,
    pub bipartition: BipartitionJson,
    /// `"file"` when the input supplied the bipartition, `"auto"` otherwise.
    pub bipartition_source: String,
    /// External name of each dense index used by `bipartition`.
    pub labels: Vec<String>,
}

impl FactorGraphJson {
    pub fn new(f: &FactorGraph, s: &SplitGraph, labels: &[String], source: &str) -> Self {
        FactorGraphJson {
            vertices: f.labels().iter().map(|&v| labels[v].clone()).collect(),
            edges: f
                .labeled_pairs()
                .into_iter()
                .map(|((u, v), sigma)| SigmaEdge {
                    u: labels[u].clone(),
                    v: labels[v].clone(),
                    sigma,
                })
                .collect(),
            deg: f.size(),
            bipartition: s.bipartition().into(),
            bipartition_source: source.to_string(),
            labels: labels.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub graph: GraphJson,
    #[serde(rename = "K")]
    pub k: Option<Vec<usize>>,
    #[serde(rename = "I")]
    pub i: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub factors: Vec<FactorJson>,
}

impl DecompositionJson {
    /// Factor graphs use local numbering; their labels are the input's labels.
    pub fn new(d: &Decomposition, labels: &[String]) -> Self {
        DecompositionJson {
            factors: d
                .factors
                .iter()
                .map(|f| {
                    let local: Vec<String> = f.labels.iter().map(|&v| labels[v].clone()).collect();
                    FactorJson {
                        graph: GraphJson::new(&f.graph, &local),
                        k: f.bipartition.map(|b| b.k.to_vec()),
                        i: f.bipartition.map(|b| b.i.to_vec()),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveJson {
    pub index: usize,
    pub removed: [[String; 2]; 2],
    pub added: [[String; 2]; 2],
}

impl MoveJson {
    pub fn new(index: usize, m: &TwoSwitchMove, labels: &[String]) -> Self {
        let name = |e: [(usize, usize); 2]| e.map(|(u, v)| [labels[u].clone(), labels[v].clone()]);
        MoveJson {
            index,
            removed: name(m.removed()),
            added: name(m.added()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchesJson {
    pub deg: usize,
    pub moves: Vec<MoveJson>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegJson {
    pub deg: usize,
    pub split: bool,
    /// Present when the graph is split: one entry per pair of independent vertices.
    pub sigma: Option<Vec<SigmaEdge>>,
    pub bipartition: Option<BipartitionJson>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSummary {
    pub order: usize,
    pub deg: u64,
    pub simple: bool,
    pub complete: bool,
    pub connected: bool,
}

/// Outcome of a classifier: a tag, or the precondition that failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagOutcome {
    pub claim: String,
    pub tag: Option<String>,
    pub failed_precondition: Option<String>,
    pub error: Option<String>,
}

impl TagOutcome {
    fn from_result(claim: &str, r: Result<String>) -> Self {
        let mut out = TagOutcome {
            claim: claim.to_string(),
            tag: None,
            failed_precondition: None,
            error: None,
        };
        match r {
            Ok(tag) => out.tag = Some(tag),
            Err(Error::Precondition { condition, .. }) => out.failed_precondition = Some(condition.to_string()),
            Err(e) => out.error = Some(e.to_string()),
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub alpha: usize,
    pub d: usize,
    pub omega: usize,
    pub u_size: usize,
    pub case: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub n: usize,
    pub deg: usize,
    pub active: bool,
    pub indecomposable: bool,
    pub prime: bool,
    pub split: bool,
    pub bipartition: Option<BipartitionJson>,
    pub bipartition_source: Option<String>,
    pub balanced: Option<bool>,
    pub homogeneous: Option<bool>,
    pub universal: Option<Vec<String>>,
    pub factor_graph: Option<FactorSummary>,
    pub family: Option<FamilyJson>,
    pub simple_complete: Option<TagOutcome>,
    pub simple_connected: Option<TagOutcome>,
    pub labels: Vec<String>,
}

/// Structural summary of `doc`, using `s` for the split-specific fields.
pub fn classification(doc: &GraphDocument, s: Option<(&SplitGraph, &str)>) -> ClassificationJson {
    let g = &doc.graph;
    let active = is_active(g);
    let indecomposable = is_indecomposable(g);
    let mut out = ClassificationJson {
        n: g.n(),
        deg: graph_degree(g),
        active,
        indecomposable,
        prime: active && indecomposable,
        split: s.is_some(),
        bipartition: None,
        bipartition_source: None,
        balanced: None,
        homogeneous: None,
        universal: None,
        factor_graph: None,
        family: None,
        simple_complete: None,
        simple_connected: None,
        labels: doc.labels.clone(),
    };
    let Some((s, source)) = s else {
        return out;
    };
    let f = phi(s);
    let names = |set: VertexSet| set.iter().map(|v| doc.labels[v].clone()).collect::<Vec<_>>();
    out.bipartition = Some(s.bipartition().into());
    out.bipartition_source = Some(source.to_string());
    out.balanced = Some(s.is_balanced());
    out.homogeneous = Some(s.is_homogeneous());
    out.universal = Some(names(s.universal_set()));
    out.factor_graph = Some(FactorSummary {
        order: f.order(),
        deg: f.size(),
        simple: f.is_simple(),
        complete: f.is_complete(),
        connected: f.is_connected(),
    });
    out.family = classify_family(s).ok().map(|p| FamilyJson {
        alpha: p.alpha,
        d: p.d,
        omega: p.omega,
        u_size: p.u_size,
        case: match p.case {
            FamilyCase::CommonCore => "COMMON_CORE",
            FamilyCase::SmallUnion => "SMALL_UNION",
            FamilyCase::Both => "BOTH",
            FamilyCase::Neither => "NEITHER",
        }
        .to_string(),
    });
    out.simple_complete = Some(TagOutcome::from_result(
        "T4.9",
        classify_simple_complete(s).map(|c| {
            match c {
                SimpleCompleteClass::LeafType { .. } => "LEAF_TYPE",
                SimpleCompleteClass::CoLeafType { .. } => "CO_LEAF_TYPE",
            }
            .to_string()
        }),
    ));
    out.simple_connected = Some(TagOutcome::from_result(
        "T5.5",
        classify_simple_connected(s).map(|c| {
            let shape = match c.shape {
                crate::factor::CliqueShape::CompleteEqual => "COMPLETE_EQUAL".to_string(),
                crate::factor::CliqueShape::CliqueCover { omega_phi } => format!("CLIQUE_COVER(omega={omega_phi})"),
            };
            let kind = match c.kind {
                RKind::RType { .. } => "R_TYPE",
                RKind::CoRType { .. } => "CO_R_TYPE",
            };
            format!("{shape},{kind}")
        }),
    ));
    out
}

/// A graph with a designated bipartition, under its external labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitGraphJson {
    pub graph: GraphJson,
    #[serde(rename = "K")]
    pub k: Vec<String>,
    #[serde(rename = "I")]
    pub i: Vec<String>,
}

impl SplitGraphJson {
    pub fn new(s: &SplitGraph, labels: &[String]) -> Self {
        let names = |set: VertexSet| set.iter().map(|v| labels[v].clone()).collect();
        SplitGraphJson {
            graph: GraphJson::new(s.graph(), labels),
            k: names(s.clique_side()),
            i: names(s.independent_side()),
        }
    }
}

/// A replayable counterexample: the split graph plus what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub graph: GraphJson,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    pub detail: String,
}

impl InstanceJson {
    pub fn new(s: &SplitGraph, detail: impl Into<String>) -> Self {
        InstanceJson {
            graph: GraphJson::unlabeled(s.graph()),
            k: s.clique_side().to_vec(),
            i: s.independent_side().to_vec(),
            detail: detail.into(),
        }
    }

    pub fn for_graph(g: &Graph, detail: impl Into<String>) -> Self {
        InstanceJson {
            graph: GraphJson::unlabeled(g),
            k: vec![],
            i: vec![],
            detail: detail.into(),
        }
    }

    pub fn to_split(&self) -> Result<SplitGraph> {
        SplitGraph::new(
            self.graph.to_graph()?,
            Bipartition::new(self.k.iter().collect(), self.i.iter().collect()),
        )
    }
}
