use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// The two color classes of a 2-coloring. In every component the smallest
/// vertex lies in `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub x: VertexSet,
    pub y: VertexSet,
}

/// An odd cycle, listed from its smallest vertex towards the smaller of that
/// vertex's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCycle(pub Vec<usize>);

/// Breadth-first 2-coloring of every component.
pub fn recognize_bipartite(g: &Graph) -> Result<Bipartition, OddCycle> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Err(odd_cycle(u, w, &parent, &depth));
                }
            }
        }
    }
    Ok(Bipartition {
        x: VertexSet::from_iter(n, g.vertices().filter(|&v| side[v] == 0)),
        y: VertexSet::from_iter(n, g.vertices().filter(|&v| side[v] == 1)),
    })
}

/// Closes the BFS-tree paths of a same-side edge `u`-`w` into an odd cycle.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut a, mut b) = (u, w);
    let (mut left, mut right) = (vec![a], vec![b]);
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    let mut cycle = left;
    cycle.extend(right);

    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).expect("nonempty");
    cycle.rotate_left(start);
    let len = cycle.len();
    if cycle[len - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    OddCycle(cycle)
}
