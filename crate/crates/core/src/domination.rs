//! Total domination: TD-set checks, the exact total domination number,
//! private neighborhoods and lexicographic enumeration of minimum TD-sets.
//!
//! The exact routines work on 64-bit adjacency masks and therefore accept
//! graphs with at most 64 vertices.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MASK_LIMIT: usize = 64;

/// Minimum TD-set size together with one witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TdSetResult {
    pub gamma_t: usize,
    pub witness: VertexSet,
}

/// `pn(u, D)` for every `u` in a TD-set `D`, plus the split of `D` into
/// vertices with exactly one private neighbor (`d_i`) and the rest (`d_r`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrivateStructure {
    pub private: BTreeMap<usize, VertexSet>,
    pub d_i: VertexSet,
    pub d_r: VertexSet,
}

impl PrivateStructure {
    pub fn private_of(&self, u: usize) -> Option<&VertexSet> {
        self.private.get(&u)
    }
}

pub(crate) fn masks(g: &Graph) -> Result<Vec<u64>> {
    g.adjacency_masks().ok_or(Error::TooLarge {
        n: g.n(),
        limit: MASK_LIMIT,
    })
}

pub(crate) fn all_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// True iff every vertex has a neighbor in `d`.
pub fn is_td_set(g: &Graph, d: &VertexSet) -> bool {
    g.vertices().all(|v| g.neighborhood(v).intersects(d))
}

/// Vertices with no neighbor in `d`, in increasing order.
pub fn undominated(g: &Graph, d: &VertexSet) -> Vec<usize> {
    g.vertices().filter(|&v| !g.neighborhood(v).intersects(d)).collect()
}

/// Exact total domination number with a witness.
pub fn gamma_t_exact(g: &Graph) -> Result<TdSetResult> {
    g.require_isolate_free()?;
    let adj = masks(g)?;
    let (size, mask) = min_cover(&adj, g.n());
    debug_assert_eq!(mask.count_ones() as usize, size);
    Ok(TdSetResult {
        gamma_t: size,
        witness: VertexSet::from_mask(g.n(), mask),
    })
}

/// Exact (closed-neighborhood) domination number with a witness.
pub fn gamma_exact(g: &Graph) -> Result<(usize, VertexSet)> {
    let closed: Vec<u64> = masks(g)?.into_iter().enumerate().map(|(v, m)| m | 1 << v).collect();
    let (size, mask) = min_cover(&closed, g.n());
    Ok((size, VertexSet::from_mask(g.n(), mask)))
}

/// Smallest `D` with `nbhd[w] & D != 0` for all `w`. `nbhd` must be
/// symmetric and every vertex must be coverable.
fn min_cover(nbhd: &[u64], n: usize) -> (usize, u64) {
    if n == 0 {
        return (0, 0);
    }
    let greedy = greedy_cover(nbhd, n);
    let upper = greedy.count_ones() as usize;
    let max_reach = nbhd.iter().map(|m| m.count_ones()).max().unwrap_or(1).max(1);
    for size in 1..upper {
        let mut search = CoverSearch {
            nbhd,
            all: all_mask(n),
            max_reach,
            limit: size,
            found: None,
        };
        if search.run(0, 0, 0) {
            return (size, search.found.expect("witness recorded"));
        }
    }
    (upper, greedy)
}

fn greedy_cover(nbhd: &[u64], n: usize) -> u64 {
    let all = all_mask(n);
    let mut chosen = 0u64;
    let mut covered = 0u64;
    while covered != all {
        let best = (0..n)
            .filter(|&u| chosen >> u & 1 == 0)
            .max_by_key(|&u| ((nbhd[u] & !covered).count_ones(), std::cmp::Reverse(u)))
            .expect("uncovered vertex has a coverer");
        chosen |= 1 << best;
        covered |= nbhd[best];
    }
    chosen
}

struct CoverSearch<'a> {
    nbhd: &'a [u64],
    all: u64,
    max_reach: u32,
    limit: usize,
    found: Option<u64>,
}

impl CoverSearch<'_> {
    /// Branch on which vertex covers the uncovered vertex with the fewest
    /// remaining candidates; `excluded` holds vertices already ruled out.
    fn run(&mut self, chosen: u64, covered: u64, excluded: u64) -> bool {
        let uncovered = self.all & !covered;
        if uncovered == 0 {
            self.found = Some(chosen);
            return true;
        }
        let used = chosen.count_ones() as usize;
        if used >= self.limit {
            return false;
        }
        let need = uncovered.count_ones().div_ceil(self.max_reach) as usize;
        if used + need > self.limit {
            return false;
        }
        let mut best: Option<(u32, u64)> = None;
        let mut rest = uncovered;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cands = self.nbhd[w] & !excluded & !chosen;
            let c = cands.count_ones();
            if c == 0 {
                return false;
            }
            if best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, cands));
            }
        }
        let (_, mut cands) = best.expect("some uncovered vertex");
        let mut excluded = excluded;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.run(chosen | 1 << u, covered | self.nbhd[u], excluded) {
                return true;
            }
            excluded |= 1 << u;
        }
        false
    }
}

/// `pn(u, d)` for each `u` in `d`: the vertices whose only neighbor in `d`
/// is `u`.
pub fn private_structure(g: &Graph, d: &VertexSet) -> Result<PrivateStructure> {
    if d.universe() != g.n() || !is_td_set(g, d) {
        return Err(Error::NotTdSet);
    }
    let mut private: BTreeMap<usize, VertexSet> = d.iter().map(|u| (u, g.empty_set())).collect();
    for w in g.vertices() {
        let hits = g.neighborhood(w).intersection(d);
        if hits.len() == 1 {
            let u = hits.first().expect("one member");
            private.get_mut(&u).expect("member of d").insert(w);
        }
    }
    let mut d_i = g.empty_set();
    for (&u, pn) in &private {
        if pn.len() == 1 {
            d_i.insert(u);
        }
    }
    let d_r = d.difference(&d_i);
    Ok(PrivateStructure { private, d_i, d_r })
}

/// Every TD-set of size `k`, in lexicographic order of sorted member lists.
#[derive(Debug, Clone)]
pub struct TdSetsOfSize {
    n: usize,
    k: usize,
    adj: Vec<u64>,
    all: u64,
    /// `settled[c]`: vertices whose neighbors all lie in `0..=c`.
    settled: Vec<u64>,
    stack: Vec<Frame>,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    chosen: u64,
    len: usize,
    cover: u64,
    next: usize,
}

impl TdSetsOfSize {
    fn new(g: &Graph, k: usize) -> Result<Self> {
        let adj = masks(g)?;
        let n = g.n();
        let settled = (0..n)
            .map(|c| {
                (0..n)
                    .filter(|&w| g.neighbors(w).iter().all(|&x| x <= c))
                    .fold(0u64, |m, w| m | 1 << w)
            })
            .collect();
        let stack = if k <= n {
            vec![Frame {
                chosen: 0,
                len: 0,
                cover: 0,
                next: 0,
            }]
        } else {
            Vec::new()
        };
        Ok(TdSetsOfSize {
            n,
            k,
            adj,
            all: all_mask(n),
            settled,
            stack,
        })
    }
}

impl Iterator for TdSetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.k == 0 {
            // Only the empty graph is totally dominated by the empty set.
            self.stack.clear();
            self.k = usize::MAX;
            return (self.n == 0).then(|| VertexSet::new(0));
        }
        while let Some(top) = self.stack.last_mut() {
            let remaining = self.k - top.len;
            if top.next + remaining > self.n {
                self.stack.pop();
                continue;
            }
            let c = top.next;
            top.next += 1;
            let frame = *top;
            let chosen = frame.chosen | 1 << c;
            let cover = frame.cover | self.adj[c];
            if self.settled[c] & !cover != 0 {
                continue;
            }
            if frame.len + 1 == self.k {
                if cover == self.all {
                    return Some(VertexSet::from_mask(self.n, chosen));
                }
                continue;
            }
            self.stack.push(Frame {
                chosen,
                len: frame.len + 1,
                cover,
                next: c + 1,
            });
        }
        None
    }
}

/// Every TD-set of the given size, lexicographically.
pub fn td_sets_of_size(g: &Graph, k: usize) -> Result<TdSetsOfSize> {
    TdSetsOfSize::new(g, k)
}

/// Every minimum TD-set, each once, lexicographically.
pub fn all_min_td_sets(g: &Graph) -> Result<TdSetsOfSize> {
    let gamma = gamma_t_exact(g)?.gamma_t;
    TdSetsOfSize::new(g, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, members: &[usize]) -> VertexSet {
        g.vertex_set(members.iter().copied()).unwrap()
    }

    /// Minimum TD-set size by scanning every subset.
    fn naive_gamma_t(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&m| is_td_set(g, &VertexSet::from_mask(n, m)))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn td_set_examples() {
        let p11 = Graph::path(11);
        // v2, v3, v5, v6, v9, v10 in 1-based path labels.
        assert!(is_td_set(&p11, &set(&p11, &[1, 2, 4, 5, 8, 9])));
        let k2 = Graph::complete(2);
        assert!(!is_td_set(&k2, &set(&k2, &[0])));
        assert!(is_td_set(&k2, &set(&k2, &[0, 1])));
    }

    #[test]
    fn gamma_t_examples() {
        assert_eq!(gamma_t_exact(&Graph::complete(2)).unwrap().gamma_t, 2);
        assert_eq!(gamma_t_exact(&Graph::complete_bipartite(2, 3)).unwrap().gamma_t, 2);
        let p11 = gamma_t_exact(&Graph::path(11)).unwrap();
        assert_eq!(p11.gamma_t, naive_gamma_t(&Graph::path(11)));
        assert_eq!(p11.gamma_t, 6);
        assert!(is_td_set(&Graph::path(11), &p11.witness));
        assert_eq!(gamma_t_exact(&Graph::path(6)).unwrap().gamma_t, 4);
    }

    #[test]
    fn gamma_t_rejects_isolated() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(gamma_t_exact(&g), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn private_structure_p11_reference() {
        let p11 = Graph::path(11);
        let d0 = set(&p11, &[1, 2, 4, 5, 8, 9]);
        let ps = private_structure(&p11, &d0).unwrap();
        assert_eq!(ps.d_i.to_vec(), vec![2, 4]);
        assert_eq!(ps.d_r.to_vec(), vec![1, 5, 8, 9]);
        assert_eq!(ps.private_of(2).unwrap().to_vec(), vec![1]);
        assert_eq!(ps.private_of(4).unwrap().to_vec(), vec![5]);
    }

    #[test]
    fn private_structure_k2_and_star() {
        let k2 = Graph::complete(2);
        let ps = private_structure(&k2, &set(&k2, &[0, 1])).unwrap();
        assert_eq!(ps.private_of(0).unwrap().to_vec(), vec![1]);
        assert_eq!(ps.private_of(1).unwrap().to_vec(), vec![0]);
        assert_eq!(ps.d_i.to_vec(), vec![0, 1]);
        assert!(ps.d_r.is_empty());

        // K_{1,3}, center 0, D = {0, 1}. Leaves 2, 3 see only the center;
        // leaf 1 sees only the center; the center sees only leaf 1.
        let star = Graph::star(3);
        let ps = private_structure(&star, &set(&star, &[0, 1])).unwrap();
        assert_eq!(ps.private_of(0).unwrap().to_vec(), vec![1, 2, 3]);
        assert_eq!(ps.private_of(1).unwrap().to_vec(), vec![0]);
        assert_eq!(ps.d_i.to_vec(), vec![1]);
        assert_eq!(ps.d_r.to_vec(), vec![0]);
    }

    #[test]
    fn private_structure_rejects_non_td_set() {
        let k2 = Graph::complete(2);
        assert_eq!(private_structure(&k2, &set(&k2, &[0])), Err(Error::NotTdSet));
    }

    #[test]
    fn min_td_set_enumeration() {
        let all: Vec<_> = all_min_td_sets(&Graph::complete(2)).unwrap().collect();
        assert_eq!(all.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1]]);

        let all: Vec<_> = all_min_td_sets(&Graph::path(4)).unwrap().map(|s| s.to_vec()).collect();
        assert_eq!(all, vec![vec![1, 2]]);

        let all: Vec<_> = all_min_td_sets(&Graph::cycle(4)).unwrap().map(|s| s.to_vec()).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        for g in [Graph::path(7), Graph::cycle(6), Graph::star(4), Graph::complete(4)] {
            let gamma = naive_gamma_t(&g);
            let expected: Vec<Vec<usize>> = (0u64..1 << g.n())
                .filter(|m| m.count_ones() as usize == gamma)
                .map(|m| VertexSet::from_mask(g.n(), m))
                .filter(|s| is_td_set(&g, s))
                .map(|s| s.to_vec())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let got: Vec<Vec<usize>> = all_min_td_sets(&g).unwrap().map(|s| s.to_vec()).collect();
            assert_eq!(got, expected, "{g:?}");
        }
    }

    #[test]
    fn domination_number() {
        assert_eq!(gamma_exact(&Graph::star(3)).unwrap().0, 1);
        assert_eq!(gamma_exact(&Graph::path(7)).unwrap().0, 3);
        assert_eq!(gamma_exact(&Graph::cycle(6)).unwrap().0, 2);
    }
}
