//! Total dominator colorings of graphs.
//!
//! A total dominator coloring (TD-coloring) is a proper coloring in which
//! every vertex is adjacent to all vertices of some color class. This crate
//! validates and analyzes such colorings, computes the total dominator
//! chromatic number exactly for small graphs, solves it directly on
//! cographs, chain graphs and split graphs, and classifies trees into the
//! three possible values `gamma_t`, `gamma_t + 1`, `gamma_t + 2`.

pub mod classes;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod solve;
pub mod tree;

pub use coloring::{Coloring, ColoringAnalysis, ColoringKind};
pub use error::{Error, Result};
pub use exact::{Budget, SolveResult};
pub use graph::{parse_edge_list, parse_graph6, Graph, VertexSet};
