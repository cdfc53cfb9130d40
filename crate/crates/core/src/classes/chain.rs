use serde::Serialize;

use super::bipartite::{recognize_bipartite, OddCycle};
use super::ClassSolution;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Blocks `X_1..X_k` and `Y_1..Y_k` of a chain graph: for `x` in `X_i`,
/// `N(x) = Y_1 ∪ … ∪ Y_i`; for `y` in `Y_i`, `N(y) = X_i ∪ … ∪ X_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainPartition {
    pub x_blocks: Vec<VertexSet>,
    pub y_blocks: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum ChainFailure {
    IsolatedVertex { vertex: usize },
    NotBipartite { odd_cycle: Vec<usize> },
    Disconnected,
    NotNested { x: usize, x_next: usize },
}

impl std::fmt::Display for ChainFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChainFailure::IsolatedVertex { vertex } => write!(f, "vertex {vertex} is isolated"),
            ChainFailure::NotBipartite { odd_cycle } => write!(f, "odd cycle {odd_cycle:?}"),
            ChainFailure::Disconnected => write!(f, "graph is disconnected"),
            ChainFailure::NotNested { x, x_next } => {
                write!(f, "N({x}) is not contained in N({x_next})")
            }
        }
    }
}

impl ChainPartition {
    pub fn k(&self) -> usize {
        self.x_blocks.len()
    }

    pub fn x(&self) -> VertexSet {
        union_all(&self.x_blocks)
    }

    pub fn y(&self) -> VertexSet {
        union_all(&self.y_blocks)
    }

    /// Checks the block and neighborhood invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.k();
        if k == 0 || self.y_blocks.len() != k {
            return false;
        }
        if self.x_blocks.iter().chain(&self.y_blocks).any(VertexSet::is_empty) {
            return false;
        }
        let all: Vec<&VertexSet> = self.x_blocks.iter().chain(&self.y_blocks).collect();
        let total: usize = all.iter().map(|b| b.len()).sum();
        if total != g.n() || union_all(&self.x_blocks).union(&union_all(&self.y_blocks)).len() != g.n() {
            return false;
        }
        (0..k).all(|i| {
            let nx = union_all(&self.y_blocks[..=i]);
            let ny = union_all(&self.x_blocks[i..]);
            self.x_blocks[i].iter().all(|x| *g.neighborhood(x) == nx)
                && self.y_blocks[i].iter().all(|y| *g.neighborhood(y) == ny)
        })
    }
}

fn union_all(blocks: &[VertexSet]) -> VertexSet {
    let mut it = blocks.iter();
    let first = it.next().expect("at least one block").clone();
    it.fold(first, |acc, b| acc.union(b))
}

/// Chain partition of an isolate-free chain graph. `X` is the side holding
/// vertex 0; its vertices are sorted by degree, nesting is checked along that
/// order, and equal neighborhoods are grouped into blocks.
pub fn recognize_chain(g: &Graph) -> std::result::Result<ChainPartition, ChainFailure> {
    if let Some(v) = g.isolated_vertex() {
        return Err(ChainFailure::IsolatedVertex { vertex: v });
    }
    let sides = recognize_bipartite(g).map_err(|OddCycle(c)| ChainFailure::NotBipartite { odd_cycle: c })?;
    if !g.is_connected() {
        return Err(ChainFailure::Disconnected);
    }
    let mut xs = sides.x.to_vec();
    xs.sort_by_key(|&x| (g.degree(x), x));
    for pair in xs.windows(2) {
        if !g.neighborhood(pair[0]).is_subset(g.neighborhood(pair[1])) {
            return Err(ChainFailure::NotNested {
                x: pair[0],
                x_next: pair[1],
            });
        }
    }

    let n = g.n();
    let mut x_blocks: Vec<VertexSet> = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        if i > 0 && g.neighborhood(x) == g.neighborhood(xs[i - 1]) {
            x_blocks.last_mut().expect("open block").insert(x);
        } else {
            x_blocks.push(VertexSet::from_iter(n, [x]));
        }
    }
    let mut seen = VertexSet::new(n);
    let y_blocks = x_blocks
        .iter()
        .map(|b| {
            let nb = g.neighborhood(b.first().expect("nonempty block"));
            let fresh = nb.difference(&seen);
            seen = seen.union(nb);
            fresh
        })
        .collect();
    let part = ChainPartition { x_blocks, y_blocks };
    debug_assert!(part.is_valid_for(g));
    Ok(part)
}

/// TD-coloring with 2, 3 or 4 colors for `k = 1`, `k = 2`, `k >= 3`.
pub fn chain_coloring(g: &Graph, part: &ChainPartition) -> Coloring {
    let k = part.k();
    let mut colors = vec![0; g.n()];
    let mut paint = |set: &VertexSet, c: usize| set.iter().for_each(|v| colors[v] = c);
    match k {
        1 => {
            paint(&part.x_blocks[0], 1);
            paint(&part.y_blocks[0], 2);
        }
        2 => {
            paint(&part.y_blocks[0], 1);
            paint(&part.x_blocks[1], 2);
            paint(&part.x_blocks[0], 3);
            paint(&part.y_blocks[1], 3);
        }
        _ => {
            paint(&part.y_blocks[0], 1);
            paint(&part.x_blocks[k - 1], 2);
            part.x_blocks[..k - 1].iter().for_each(|b| paint(b, 3));
            part.y_blocks[1..].iter().for_each(|b| paint(b, 4));
        }
    }
    Coloring::from_labels(&colors)
}

/// Total dominator chromatic number of an isolate-free chain graph: 2, 3 or
/// 4 as the chain partition has length 1, 2 or at least 3.
pub fn chi_td_chain(g: &Graph) -> Result<ClassSolution> {
    let part = recognize_chain(g).map_err(|f| Error::wrong_class("chain graph", f.to_string()))?;
    let value = part.k().min(3) + 1;
    let coloring = chain_coloring(g, &part);
    debug_assert_eq!(coloring.num_colors(), value);
    debug_assert!(crate::coloring::is_td_coloring(g, &coloring));
    Ok(ClassSolution { value, coloring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_td_coloring;

    /// Half graph on 3 + 3 vertices: x_i ~ y_j iff j <= i.
    fn half_graph(k: usize) -> Graph {
        let edges = (0..k).flat_map(|i| (0..=i).map(move |j| (i, k + j)));
        Graph::new(2 * k, edges).unwrap()
    }

    #[test]
    fn complete_bipartite_has_one_block() {
        let p = recognize_chain(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(p.k(), 1);
        assert_eq!(p.x_blocks[0].to_vec(), vec![0, 1]);
        assert_eq!(p.y_blocks[0].to_vec(), vec![2, 3, 4]);
    }

    #[test]
    fn p4_has_two_blocks() {
        let p = recognize_chain(&Graph::path(4)).unwrap();
        assert_eq!(p.k(), 2);
        assert_eq!(p.x_blocks[0].to_vec(), vec![0]);
        assert_eq!(p.x_blocks[1].to_vec(), vec![2]);
        assert_eq!(p.y_blocks[0].to_vec(), vec![1]);
        assert_eq!(p.y_blocks[1].to_vec(), vec![3]);
        assert!(p.is_valid_for(&Graph::path(4)));
    }

    #[test]
    fn failures() {
        assert!(matches!(
            recognize_chain(&Graph::cycle(6)),
            Err(ChainFailure::NotNested { .. })
        ));
        assert!(matches!(
            recognize_chain(&Graph::cycle(5)),
            Err(ChainFailure::NotBipartite { .. })
        ));
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(recognize_chain(&two_k2), Err(ChainFailure::Disconnected));
        assert_eq!(
            recognize_chain(&Graph::new(3, [(0, 1)]).unwrap()),
            Err(ChainFailure::IsolatedVertex { vertex: 2 })
        );
    }

    #[test]
    fn solver_values() {
        for (g, expected) in [
            (Graph::complete_bipartite(2, 3), 2),
            (Graph::path(4), 3),
            (half_graph(3), 4),
            (half_graph(5), 4),
            (Graph::complete(2), 2),
        ] {
            let s = chi_td_chain(&g).unwrap();
            assert_eq!(s.value, expected, "{g:?}");
            assert_eq!(s.coloring.num_colors(), expected);
            assert!(is_td_coloring(&g, &s.coloring));
        }
        assert_eq!(recognize_chain(&half_graph(3)).unwrap().k(), 3);
    }

    #[test]
    fn solver_rejects_non_chain() {
        assert!(matches!(
            chi_td_chain(&Graph::cycle(6)),
            Err(Error::WrongClass {
                class: "chain graph",
                ..
            })
        ));
    }
}
