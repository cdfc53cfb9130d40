//! Fast solvers checked against the exact search on seeded random instances.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{chi_td_chain, chi_td_cograph, chi_td_split_with};
use crate::coloring::{is_td_coloring, Coloring};
use crate::error::{Error, Result};
use crate::exact::{chi_td_exact_with, Budget};
use crate::generate::{generate, GenSpec, GraphClass};
use crate::graph::Graph;
use crate::tree::classify_tree_unchecked;

/// Outcome for one instance. `agreement` holds iff both values were computed
/// and are equal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub id: usize,
    pub class: GraphClass,
    pub graph6: String,
    pub n: usize,
    pub method: &'static str,
    pub value: Option<usize>,
    pub oracle: Option<usize>,
    pub agreement: bool,
    pub wall_ms: f64,
    pub witness_path: Option<String>,
    pub error: Option<String>,
    #[serde(skip)]
    pub witness: Option<Coloring>,
}

fn method_name(class: GraphClass) -> Result<&'static str> {
    match class {
        GraphClass::Cograph => Ok("cograph"),
        GraphClass::Chain => Ok("chain"),
        GraphClass::Split => Ok("split"),
        GraphClass::Tree => Ok("tree"),
        GraphClass::Bipartite | GraphClass::Any => Err(Error::Precondition(format!(
            "class {class} has no dedicated solver to compare"
        ))),
    }
}

/// The instance specs `oracle_compare` runs: orders uniform in
/// `2..=max_n`, seeds drawn from one generator seeded with `seed`.
pub fn instance_specs(class: GraphClass, count: usize, max_n: usize, seed: u64) -> Vec<GenSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n.max(2));
            let mut spec = GenSpec::new(class, n, rng.gen());
            if class == GraphClass::Split {
                spec.blocks = Some(rng.gen_range(2..=n));
            }
            spec
        })
        .collect()
}

pub fn oracle_compare(class: GraphClass, count: usize, max_n: usize, seed: u64) -> Result<Vec<Report>> {
    oracle_compare_with(class, count, max_n, seed, Budget::UNLIMITED)
}

/// Runs the class solver and the exact search on `count` generated
/// instances, in parallel; reports come back in instance order. A solver
/// error is recorded on its report rather than aborting the run.
pub fn oracle_compare_with(
    class: GraphClass,
    count: usize,
    max_n: usize,
    seed: u64,
    budget: Budget,
) -> Result<Vec<Report>> {
    let method = method_name(class)?;
    let specs = instance_specs(class, count, max_n, seed);
    specs
        .into_par_iter()
        .enumerate()
        .map(|(id, spec)| {
            let g = generate(&spec)?;
            Ok(run_instance(id, class, method, &g, budget))
        })
        .collect()
}

fn fast_solve(class: GraphClass, g: &Graph, budget: Budget) -> Result<(usize, Coloring)> {
    match class {
        GraphClass::Cograph => chi_td_cograph(g).map(|s| (s.value, s.coloring)),
        GraphClass::Chain => chi_td_chain(g).map(|s| (s.value, s.coloring)),
        GraphClass::Split => chi_td_split_with(g, budget).map(|s| (s.value, s.coloring)),
        GraphClass::Tree => classify_tree_unchecked(g).map(|c| (c.chi_td, c.coloring)),
        GraphClass::Bipartite | GraphClass::Any => unreachable!("rejected before generation"),
    }
}

fn run_instance(id: usize, class: GraphClass, method: &'static str, g: &Graph, budget: Budget) -> Report {
    let start = Instant::now();
    let fast = fast_solve(class, g, budget);
    let exact = chi_td_exact_with(g, budget).map(|r| r.value);
    let wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    let mut errors = Vec::new();
    let (value, witness) = match fast {
        Ok((v, c)) => {
            if !is_td_coloring(g, &c) || c.num_colors() != v {
                errors.push(format!("witness with {} colors does not certify {v}", c.num_colors()));
            }
            (Some(v), Some(c))
        }
        Err(e) => {
            errors.push(format!("{method}: {e}"));
            (None, None)
        }
    };
    let oracle = match exact {
        Ok(v) => Some(v),
        Err(e) => {
            errors.push(format!("exact: {e}"));
            None
        }
    };
    Report {
        id,
        class,
        graph6: g.to_graph6(),
        n: g.n(),
        method,
        value,
        oracle,
        agreement: value.is_some() && value == oracle && errors.is_empty(),
        wall_ms,
        witness_path: None,
        error: (!errors.is_empty()).then(|| errors.join("; ")),
        witness,
    }
}
