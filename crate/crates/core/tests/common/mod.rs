#![allow(dead_code)]

use std::path::PathBuf;

use tdcolor::{parse_graph6, Graph};

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// One graph per non-empty line of a graph6 file in the data directory.
pub fn load_graph6(name: &str) -> Vec<Graph> {
    let text = std::fs::read_to_string(data_dir().join(name)).expect("fixture present");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).expect("valid graph6"))
        .collect()
}

/// Nonisomorphic trees with 2 to 12 vertices, by order then graph6 string.
pub fn trees() -> Vec<Graph> {
    load_graph6("trees_2_12.g6")
}

/// Every graph with 1 to 7 vertices up to isomorphism.
pub fn small_graphs() -> Vec<Graph> {
    load_graph6("graphs_upto7.g6")
}

/// Graph on `n` vertices whose edges are the set bits of `bits`, read over
/// pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(
        n,
        pairs
            .enumerate()
            .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
            .map(|(_, e)| e),
    )
    .unwrap()
}

/// Smallest TD-set size by trying every subset.
pub fn naive_gamma_t(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&d| g.vertices().all(|v| g.neighbors(v).iter().any(|&w| d >> w & 1 == 1)))
        .map(|d| d.count_ones() as usize)
        .min()
        .expect("isolate-free graphs have a TD-set")
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn for_each_partition(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(labels: &mut Vec<usize>, n: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        if labels.len() == n {
            f(labels);
            return;
        }
        for c in 1..=max + 1 {
            labels.push(c);
            rec(labels, n, max.max(c), f);
            labels.pop();
        }
    }
    rec(&mut Vec::with_capacity(n), n, 0, f);
}

/// Proper coloring in which each vertex sees all of some class.
pub fn naive_is_td(g: &Graph, labels: &[usize]) -> bool {
    let k = labels.iter().copied().max().unwrap_or(0);
    g.edges().all(|(u, v)| labels[u] != labels[v])
        && g.vertices()
            .all(|v| (1..=k).any(|c| g.vertices().filter(|&w| labels[w] == c).all(|w| g.has_edge(v, w))))
}

/// Minimum number of classes over all TD partitions.
pub fn naive_chi_td(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_partition(g.n(), &mut |labels| {
        if naive_is_td(g, labels) {
            best = best.min(labels.iter().copied().max().unwrap_or(0));
        }
    });
    best
}

/// Minimum number of classes over all proper partitions.
pub fn naive_chi(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_partition(g.n(), &mut |labels| {
        if g.edges().all(|(u, v)| labels[u] != labels[v]) {
            best = best.min(labels.iter().copied().max().unwrap_or(0));
        }
    });
    best
}

/// No four vertices induce a path.
pub fn naive_p4_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && !g.has_edge(a, c)
                        && !g.has_edge(b, d)
                        && !g.has_edge(a, d)
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Some vertex subset is a clique whose complement is independent.
pub fn naive_split(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|k| {
        g.edges().all(|(u, v)| k >> u & 1 == 1 || k >> v & 1 == 1)
            && (0..n).all(|u| (0..n).all(|v| u == v || k >> u & 1 == 0 || k >> v & 1 == 0 || g.has_edge(u, v)))
    })
}

/// Largest clique size over all subsets.
pub fn naive_omega(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&k| (0..n).all(|u| (0..n).all(|v| u == v || k >> u & 1 == 0 || k >> v & 1 == 0 || g.has_edge(u, v))))
        .map(|k| k.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Bipartite by two-coloring every subset assignment, and free of induced
/// `2K_2`.
pub fn naive_bipartite_2k2_free(g: &Graph) -> bool {
    let n = g.n();
    let bipartite = (0u64..1 << n).any(|side| g.edges().all(|(u, v)| (side >> u & 1) != (side >> v & 1)));
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let two_k2 = edges.iter().enumerate().any(|(i, &(a, b))| {
        edges[i + 1..].iter().any(|&(c, d)| {
            a != c
                && a != d
                && b != c
                && b != d
                && !g.has_edge(a, c)
                && !g.has_edge(a, d)
                && !g.has_edge(b, c)
                && !g.has_edge(b, d)
        })
    });
    bipartite && !two_k2
}
