//! Seeded random instances of each supported graph class.
//!
//! The same [`GenSpec`] always yields the same graph. Vertex labels are
//! shuffled so that class structure is not visible in the ids.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Tree,
    Cograph,
    Chain,
    Split,
    Bipartite,
    Any,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        GraphClass::Tree,
        GraphClass::Cograph,
        GraphClass::Chain,
        GraphClass::Split,
        GraphClass::Bipartite,
        GraphClass::Any,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Cograph => "cograph",
            GraphClass::Chain => "chain",
            GraphClass::Split => "split",
            GraphClass::Bipartite => "bipartite",
            GraphClass::Any => "any",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown graph class {s:?}")))
    }
}

/// What to generate.
///
/// * `blocks`: number of neighborhood blocks per side (chain) or clique size
///   (split); random when absent.
/// * `connected`: cographs and bipartite graphs only; random (cograph) or
///   connected (bipartite) when absent.
/// * `p`: edge probability for the extra edges of bipartite and unrestricted
///   graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
    pub blocks: Option<usize>,
    pub connected: Option<bool>,
    pub p: Option<f64>,
}

impl GenSpec {
    pub fn new(class: GraphClass, n: usize, seed: u64) -> Self {
        GenSpec {
            class,
            n,
            seed,
            blocks: None,
            connected: None,
            p: None,
        }
    }
}

/// An isolate-free graph of the requested class on `spec.n` vertices.
pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    if n < 2 {
        return Err(Error::Precondition(
            "generated graphs need at least two vertices".into(),
        ));
    }
    if let Some(p) = spec.p {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Precondition(format!("edge probability {p} is outside [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges = match spec.class {
        GraphClass::Tree => tree_edges(n, &mut rng),
        GraphClass::Cograph => cograph_edges(n, spec.connected, &mut rng)?,
        GraphClass::Chain => chain_edges(n, spec.blocks, &mut rng)?,
        GraphClass::Split => split_edges(n, spec.blocks, &mut rng)?,
        GraphClass::Bipartite => bipartite_edges(n, spec.connected.unwrap_or(true), spec.p.unwrap_or(0.3), &mut rng),
        GraphClass::Any => any_edges(n, spec.p.unwrap_or(0.5), &mut rng),
    };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))
}

/// Uniform labeled tree from a random Prüfer sequence.
fn tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    code.iter().for_each(|&v| degree[v] += 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = leaves.pop_first().expect("a leaf remains");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Random positive composition of `total` into `parts` parts.
fn composition(total: usize, parts: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    debug_assert!(parts >= 1 && total >= parts);
    let mut cuts: Vec<usize> = rand::seq::index::sample(rng, total - 1, parts - 1)
        .into_iter()
        .map(|c| c + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut prev = 0;
    cuts.into_iter()
        .map(|c| {
            let size = c - prev;
            prev = c;
            size
        })
        .collect()
}

/// Components of at least two vertices, each a join of random cographs.
fn cograph_edges(n: usize, connected: Option<bool>, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let max_components = n / 2;
    let components = match connected {
        Some(true) => 1,
        Some(false) if max_components < 2 => {
            return Err(Error::Precondition(format!(
                "an isolate-free disconnected cograph needs at least 4 vertices, got {n}"
            )))
        }
        Some(false) => rng.gen_range(2..=max_components),
        None => rng.gen_range(1..=max_components),
    };
    let mut sizes = composition(n - components, components, rng);
    sizes.iter_mut().for_each(|s| *s += 1);
    let mut edges = Vec::new();
    let mut start = 0;
    for size in sizes {
        let verts: Vec<usize> = (start..start + size).collect();
        random_cograph(&verts, true, rng, &mut edges);
        start += size;
    }
    Ok(edges)
}

/// Random cograph on `verts`; a join at the top when `join`, otherwise
/// either operation.
fn random_cograph(verts: &[usize], join: bool, rng: &mut ChaCha8Rng, edges: &mut Vec<(usize, usize)>) {
    if verts.len() == 1 {
        return;
    }
    let is_join = join || rng.gen_bool(0.5);
    let parts = rng.gen_range(2..=verts.len().min(3));
    let sizes = composition(verts.len(), parts, rng);
    let mut groups = Vec::new();
    let mut start = 0;
    for size in sizes {
        groups.push(&verts[start..start + size]);
        start += size;
    }
    for g in &groups {
        random_cograph(g, false, rng, edges);
    }
    if is_join {
        for (i, a) in groups.iter().enumerate() {
            for b in &groups[i + 1..] {
                edges.extend(a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))));
            }
        }
    }
}

/// Block sizes on both sides drawn as compositions; `x` in block `i` is
/// adjacent to `y` in block `j` iff `j <= i`.
fn chain_edges(n: usize, blocks: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let k = match blocks {
        Some(k) if k == 0 || 2 * k > n => {
            return Err(Error::Precondition(format!(
                "a chain graph with {k} blocks per side needs at least {} vertices, got {n}",
                2 * k.max(1)
            )))
        }
        Some(k) => k,
        None => rng.gen_range(1..=n / 2),
    };
    let x_total = rng.gen_range(k..=n - k);
    let x_sizes = composition(x_total, k, rng);
    let y_sizes = composition(n - x_total, k, rng);
    let mut x_block = Vec::new();
    let mut y_block = Vec::new();
    for (i, &s) in x_sizes.iter().enumerate() {
        x_block.extend(std::iter::repeat_n(i, s));
    }
    for (j, &s) in y_sizes.iter().enumerate() {
        y_block.extend(std::iter::repeat_n(j, s));
    }
    let mut edges = Vec::new();
    for (x, &i) in x_block.iter().enumerate() {
        for (y, &j) in y_block.iter().enumerate() {
            if j <= i {
                edges.push((x, x_total + y));
            }
        }
    }
    Ok(edges)
}

/// Clique `0..omega` plus independent vertices, each adjacent to a random
/// nonempty proper subset of the clique so that the clique stays maximum.
fn split_edges(n: usize, blocks: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let omega = match blocks {
        Some(w) if w < 2 || w > n => {
            return Err(Error::Precondition(format!(
                "clique size {w} is not possible for a connected split graph on {n} vertices"
            )))
        }
        Some(w) => w,
        None => rng.gen_range(2..=n),
    };
    let mut edges = Vec::new();
    for u in 0..omega {
        for v in u + 1..omega {
            edges.push((u, v));
        }
    }
    for v in omega..n {
        let size = rng.gen_range(1..omega);
        let picks = rand::seq::index::sample(rng, omega, size);
        edges.extend(picks.into_iter().map(|u| (u, v)));
    }
    Ok(edges)
}

/// Random bipartite graph. Connected: a random spanning tree between the
/// sides plus extra edges. Otherwise random edges with every isolated vertex
/// attached to a random vertex of the other side.
fn bipartite_edges(n: usize, connected: bool, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let a = rng.gen_range(1..n);
    let side = |v: usize| v < a;
    let mut adj = vec![vec![false; n]; n];
    let add = |u: usize, v: usize, adj: &mut Vec<Vec<bool>>| {
        adj[u][v] = true;
        adj[v][u] = true;
    };
    if connected {
        let mut order: Vec<usize> = (1..a).chain(a + 1..n).collect();
        order.shuffle(rng);
        let mut placed = vec![0, a];
        add(0, a, &mut adj);
        for v in order {
            let opposite: Vec<usize> = placed.iter().copied().filter(|&u| side(u) != side(v)).collect();
            let u = *opposite.choose(rng).expect("both sides are placed");
            add(u, v, &mut adj);
            placed.push(v);
        }
    }
    for u in 0..a {
        for v in a..n {
            if rng.gen_bool(p) {
                add(u, v, &mut adj);
            }
        }
    }
    for v in 0..n {
        if !adj[v].iter().any(|&e| e) {
            let u = if side(v) {
                rng.gen_range(a..n)
            } else {
                rng.gen_range(0..a)
            };
            add(u, v, &mut adj);
        }
    }
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v])
        .collect()
}

/// `G(n, p)` with every isolated vertex attached to a random other vertex.
fn any_edges(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    let mut degree = vec![0; n];
    edges.iter().for_each(|&(u, v)| {
        degree[u] += 1;
        degree[v] += 1;
    });
    for v in 0..n {
        if degree[v] == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            edges.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{recognize_chain, recognize_cograph, recognize_split};

    #[test]
    fn tree_contract() {
        let g = generate(&GenSpec::new(GraphClass::Tree, 11, 1)).unwrap();
        assert_eq!(g.n(), 11);
        assert!(g.is_tree());
    }

    #[test]
    fn chain_with_three_blocks() {
        let spec = GenSpec {
            blocks: Some(3),
            ..GenSpec::new(GraphClass::Chain, 6, 7)
        };
        let g = generate(&spec).unwrap();
        assert_eq!(recognize_chain(&g).unwrap().k(), 3);
    }

    #[test]
    fn split_on_two_vertices_is_k2() {
        let g = generate(&GenSpec::new(GraphClass::Split, 2, 0)).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(recognize_split(&g).unwrap().omega(), 2);
    }

    #[test]
    fn unsatisfiable_specs() {
        let chain = GenSpec {
            blocks: Some(4),
            ..GenSpec::new(GraphClass::Chain, 7, 0)
        };
        assert!(matches!(generate(&chain), Err(Error::Precondition(_))));
        let cograph = GenSpec {
            connected: Some(false),
            ..GenSpec::new(GraphClass::Cograph, 3, 0)
        };
        assert!(generate(&cograph).is_err());
        assert!(generate(&GenSpec::new(GraphClass::Tree, 1, 0)).is_err());
        let split = GenSpec {
            blocks: Some(1),
            ..GenSpec::new(GraphClass::Split, 5, 0)
        };
        assert!(generate(&split).is_err());
    }

    #[test]
    fn seeded_determinism() {
        for class in GraphClass::ALL {
            let spec = GenSpec::new(class, 9, 42);
            assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        }
    }

    #[test]
    fn cographs_are_isolate_free() {
        for seed in 0..50 {
            let g = generate(&GenSpec::new(GraphClass::Cograph, 8, seed)).unwrap();
            assert!(g.is_isolate_free());
            assert!(recognize_cograph(&g).is_ok());
        }
    }

    #[test]
    fn class_names_round_trip() {
        for class in GraphClass::ALL {
            assert_eq!(class.name().parse::<GraphClass>().unwrap(), class);
        }
        assert!("planar".parse::<GraphClass>().is_err());
    }
}
