use serde::Serialize;

use super::ClassSolution;
use crate::coloring::Coloring;
use crate::domination::masks;
use crate::error::{Error, Result};
use crate::exact::{chi_d_exact_with, feasible_td_coloring_with, Budget};
use crate::graph::{Graph, VertexSet};

/// Clique `K` and independent set `I` partitioning the vertices, with
/// `|K|` equal to the clique number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn omega(&self) -> usize {
        self.clique.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SplitFailure {
    /// The degree sequence fails the split criterion.
    DegreeSequence,
}

/// Split recognition from the degree sequence: with degrees sorted
/// descending and `m = max{i : d_i >= i - 1}`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`. The `m` highest-degree
/// vertices (ties by id) form the clique; a vertex of `I` adjacent to all of
/// it is then moved over so that `|K| = omega`.
pub fn recognize_split(g: &Graph) -> std::result::Result<SplitPartition, SplitFailure> {
    let n = g.n();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| deg[i - 1] + 1 >= i).max().unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(SplitFailure::DegreeSequence);
    }
    let mut clique = VertexSet::from_iter(n, order[..m].iter().copied());
    let mut independent = VertexSet::from_iter(n, order[m..].iter().copied());
    let full = independent.iter().find(|&v| clique.is_subset(g.neighborhood(v)));
    if let Some(v) = full {
        independent.remove(v);
        clique.insert(v);
    }
    let part = SplitPartition { clique, independent };
    debug_assert!(is_clique(g, &part.clique));
    debug_assert!(part
        .independent
        .iter()
        .all(|v| !g.neighborhood(v).intersects(&part.independent)));
    if let Ok(omega) = clique_number(g) {
        assert_eq!(part.omega(), omega, "split clique is not maximum");
    }
    Ok(part)
}

fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|u| set.iter().all(|v| u == v || g.has_edge(u, v)))
}

/// Clique number by exhaustive branching (graphs with at most 64 vertices).
pub fn clique_number(g: &Graph) -> Result<usize> {
    fn grow(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        grow(adj, cand & adj[v], size + 1, best);
        grow(adj, cand & !(1 << v), size, best);
    }
    let adj = masks(g)?;
    let mut best = 0;
    grow(&adj, crate::domination::all_mask(g.n()), 0, &mut best);
    Ok(best)
}

/// Every clique vertex gets its own color and all of `I` one extra color.
pub fn split_plus_one_coloring(g: &Graph, part: &SplitPartition) -> Coloring {
    let mut colors = vec![0; g.n()];
    for (i, v) in part.clique.iter().enumerate() {
        colors[v] = i + 1;
    }
    for v in part.independent.iter() {
        colors[v] = part.omega() + 1;
    }
    Coloring::from_labels(&colors)
}

/// Total dominator chromatic number of a connected split graph, which is
/// `omega` or `omega + 1`. For `omega >= 2` it coincides with the dominator
/// chromatic number, which decides between the two; the `omega` case is
/// witnessed by a search for an `omega`-color TD-coloring.
pub fn chi_td_split(g: &Graph) -> Result<ClassSolution> {
    chi_td_split_with(g, Budget::UNLIMITED)
}

pub fn chi_td_split_with(g: &Graph, budget: Budget) -> Result<ClassSolution> {
    g.require_isolate_free()?;
    if !g.is_connected() {
        return Err(Error::wrong_class("connected split graph", "graph is disconnected"));
    }
    let part =
        recognize_split(g).map_err(|_| Error::wrong_class("connected split graph", "degree sequence is not split"))?;
    let omega = part.omega();
    debug_assert!(omega >= 2, "isolate-free graphs have an edge");
    let plus_one = split_plus_one_coloring(g, &part);
    let chi_d = chi_d_exact_with(g, budget)?.value;
    let at_omega = feasible_td_coloring_with(g, omega, budget)?;
    match (chi_d == omega, at_omega) {
        (true, Some(coloring)) => Ok(ClassSolution { value: omega, coloring }),
        (false, None) => Ok(ClassSolution {
            value: plus_one.num_colors(),
            coloring: plus_one,
        }),
        (dominator_at_omega, td) => panic!(
            "dominator and TD chromatic numbers disagree on a split graph \
             (chi_d = omega: {dominator_at_omega}, TD-coloring with omega colors: {})",
            td.is_some()
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_td_coloring;

    fn triangle_with_pendants(pendants: &[usize]) -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend(pendants.iter().enumerate().map(|(i, &v)| (v, 3 + i)));
        Graph::new(3 + pendants.len(), edges).unwrap()
    }

    #[test]
    fn star_partition() {
        let p = recognize_split(&Graph::star(3)).unwrap();
        assert_eq!(p.clique.to_vec(), vec![0, 1]);
        assert_eq!(p.independent.to_vec(), vec![2, 3]);
        assert_eq!(p.omega(), 2);
    }

    #[test]
    fn c4_is_not_split() {
        assert_eq!(recognize_split(&Graph::cycle(4)), Err(SplitFailure::DegreeSequence));
        assert!(recognize_split(&Graph::cycle(5)).is_err());
        assert!(recognize_split(&Graph::new(4, [(0, 1), (2, 3)]).unwrap()).is_err());
    }

    #[test]
    fn triangle_with_three_pendants() {
        let g = triangle_with_pendants(&[0, 1, 2]);
        let p = recognize_split(&g).unwrap();
        assert_eq!(p.clique.to_vec(), vec![0, 1, 2]);
        assert_eq!(p.independent.to_vec(), vec![3, 4, 5]);
        assert_eq!(clique_number(&g).unwrap(), 3);
    }

    #[test]
    fn clique_moves_to_omega() {
        // K_3 plus a vertex adjacent to all of it is K_4.
        let p = recognize_split(&Graph::complete(4)).unwrap();
        assert_eq!(p.omega(), 4);
        assert!(p.independent.is_empty());
    }

    #[test]
    fn solver_examples() {
        let s = chi_td_split(&Graph::star(3)).unwrap();
        assert_eq!(s.value, 2);
        assert!(is_td_coloring(&Graph::star(3), &s.coloring));

        let one = triangle_with_pendants(&[0]);
        let s = chi_td_split(&one).unwrap();
        assert_eq!(s.value, 3);
        assert!(is_td_coloring(&one, &s.coloring));

        let three = triangle_with_pendants(&[0, 1, 2]);
        let s = chi_td_split(&three).unwrap();
        assert_eq!(s.value, 4);
        assert!(is_td_coloring(&three, &s.coloring));
    }

    #[test]
    fn plus_one_construction_is_td() {
        for g in [Graph::star(4), triangle_with_pendants(&[0, 0, 1]), Graph::complete(3)] {
            let p = recognize_split(&g).unwrap();
            let c = split_plus_one_coloring(&g, &p);
            assert!(is_td_coloring(&g, &c), "{g:?}");
        }
    }

    #[test]
    fn solver_rejects_disconnected() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert!(matches!(chi_td_split(&g), Err(Error::WrongClass { .. })));
    }
}
