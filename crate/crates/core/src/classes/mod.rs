//! Recognizers and direct solvers for the graph classes where the total
//! dominator chromatic number has a closed form or a tight sandwich.

mod bipartite;
mod chain;
mod cograph;
mod split;

pub use bipartite::{recognize_bipartite, Bipartition, OddCycle};
pub use chain::{chain_coloring, chi_td_chain, recognize_chain, ChainFailure, ChainPartition};
pub use cograph::{chi_td_cograph, recognize_cograph, Cotree, InducedP4};
pub use split::{
    chi_td_split, chi_td_split_with, clique_number, recognize_split, split_plus_one_coloring, SplitFailure,
    SplitPartition,
};

use serde::Serialize;

use crate::coloring::Coloring;

/// Value of a class-specific solver with its witness coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSolution {
    pub value: usize,
    pub coloring: Coloring,
}
