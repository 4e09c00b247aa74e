//! Factor multigraphs of split graphs and the 2-switch machinery around them.
//!
//! A split graph `(S, K, I)` has a clique side `K` and an independent side
//! `I`. Its factor graph is the multigraph on `I` with one edge `uv` for every
//! induced `P4` of `S` through both `u` and `v`. This crate computes factor
//! graphs (by a closed-form multiplicity and by direct `P4` counting), the
//! 2-switch moves and the `A4` graph of arbitrary graphs, Tyshkevich
//! composition and decomposition, inversion, and a set of structural
//! classifiers. The [`verify`] module enumerates small split graphs
//! exhaustively and checks every structural claim the classifiers rely on.

pub mod bitset;
pub mod error;
pub mod factor;
pub mod graph;
pub mod io;
pub mod split;
pub mod switch;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use factor::FactorGraph;
pub use graph::{DegreeSequence, Graph, Multigraph};
pub use split::{Bipartition, SplitGraph};
pub use switch::{Decomposition, QuadrupleKind, TwoSwitchMove};
