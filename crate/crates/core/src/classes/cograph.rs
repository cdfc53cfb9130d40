use serde::Serialize;

use super::ClassSolution;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cotree with leaves labeled by vertex ids. Children of a `Union` are never
/// `Union`s and children of a `Join` are never `Join`s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

/// Induced path `a - b - c - d` witnessing that a graph is not a cograph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InducedP4(pub [usize; 4]);

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// The graph on `0..n` the cotree describes.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.collect_edges(&mut edges);
        Graph::new(n, edges).expect("cotree leaves are in range")
    }

    fn collect_edges(&self, edges: &mut Vec<(usize, usize)>) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.collect_edges(edges)),
            Cotree::Join(ch) => {
                ch.iter().for_each(|c| c.collect_edges(edges));
                let parts: Vec<Vec<usize>> = ch.iter().map(Cotree::leaves).collect();
                for (i, p) in parts.iter().enumerate() {
                    for q in &parts[i + 1..] {
                        edges.extend(p.iter().flat_map(|&u| q.iter().map(move |&v| (u, v))));
                    }
                }
            }
        }
    }

    /// Chromatic number: max over union children, sum over join children.
    pub fn chromatic_number(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(ch) => ch.iter().map(Cotree::chromatic_number).max().unwrap_or(0),
            Cotree::Join(ch) => ch.iter().map(Cotree::chromatic_number).sum(),
        }
    }

    /// Writes an optimal proper coloring using colors `offset+1..` into
    /// `colors`; returns the number of colors used.
    pub fn color_into(&self, colors: &mut [usize], offset: usize) -> usize {
        match self {
            Cotree::Leaf(v) => {
                colors[*v] = offset + 1;
                1
            }
            Cotree::Union(ch) => ch.iter().map(|c| c.color_into(colors, offset)).max().unwrap_or(0),
            Cotree::Join(ch) => ch.iter().fold(0, |used, c| used + c.color_into(colors, offset + used)),
        }
    }

    fn is_canonical(&self) -> bool {
        match self {
            Cotree::Leaf(_) => true,
            Cotree::Union(ch) => ch.len() >= 2 && ch.iter().all(|c| !matches!(c, Cotree::Union(_)) && c.is_canonical()),
            Cotree::Join(ch) => ch.len() >= 2 && ch.iter().all(|c| !matches!(c, Cotree::Join(_)) && c.is_canonical()),
        }
    }
}

/// Canonical cotree, or an induced `P_4`.
///
/// Recursive split: a single vertex is a leaf, a disconnected vertex set
/// becomes a union over its components, a set with disconnected complement a
/// join over its co-components; otherwise an induced `P_4` must exist.
pub fn recognize_cograph(g: &Graph) -> std::result::Result<Cotree, InducedP4> {
    if g.n() == 0 {
        return Ok(Cotree::Union(Vec::new()));
    }
    let all: Vec<usize> = g.vertices().collect();
    let tree = build(g, &all)?;
    debug_assert!(tree.is_canonical());
    Ok(tree)
}

fn build(g: &Graph, verts: &[usize]) -> std::result::Result<Cotree, InducedP4> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let parts = groups(g, verts, false);
    if parts.len() > 1 {
        return parts
            .iter()
            .map(|p| build(g, p))
            .collect::<Result<_, _>>()
            .map(Cotree::Union);
    }
    let parts = groups(g, verts, true);
    if parts.len() > 1 {
        return parts
            .iter()
            .map(|p| build(g, p))
            .collect::<Result<_, _>>()
            .map(Cotree::Join);
    }
    Err(find_p4(g, verts).expect("graph and complement both connected implies an induced P4"))
}

/// Components of `G[verts]` (or of its complement), each sorted, ordered by
/// smallest member.
fn groups(g: &Graph, verts: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; verts.len()];
    let mut out = Vec::new();
    for s in 0..verts.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut group = Vec::new();
        while let Some(i) = stack.pop() {
            group.push(verts[i]);
            for j in 0..verts.len() {
                if !seen[j] && g.has_edge(verts[i], verts[j]) != complement {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        group.sort_unstable();
        out.push(group);
    }
    out
}

/// Lexicographically first induced path `(a, b, c, d)` with `a < d`.
fn find_p4(g: &Graph, verts: &[usize]) -> Option<InducedP4> {
    let inside: Vec<bool> = {
        let mut m = vec![false; g.n()];
        verts.iter().for_each(|&v| m[v] = true);
        m
    };
    for &a in verts {
        for &b in g.neighbors(a).iter().filter(|&&b| inside[b]) {
            for &c in g
                .neighbors(b)
                .iter()
                .filter(|&&c| inside[c] && c != a && !g.has_edge(a, c))
            {
                if let Some(&d) = g
                    .neighbors(c)
                    .iter()
                    .find(|&&d| inside[d] && d > a && d != b && !g.has_edge(b, d) && !g.has_edge(a, d))
                {
                    return Some(InducedP4([a, b, c, d]));
                }
            }
        }
    }
    None
}

/// Total dominator chromatic number of an isolate-free cograph: `chi(G)`
/// when connected, `chi(G) + 2(k - 1)` with `k` components otherwise.
///
/// Witness: each component gets an optimal proper coloring from its cotree;
/// one color on each side of the component's root join is made private to
/// the component, and the other `chi(G) - 2` colors are shared by all
/// components.
pub fn chi_td_cograph(g: &Graph) -> Result<ClassSolution> {
    g.require_isolate_free()?;
    let tree =
        recognize_cograph(g).map_err(|InducedP4(p)| Error::wrong_class("cograph", format!("induced P4 {p:?}")))?;
    let components: Vec<&Cotree> = match &tree {
        Cotree::Union(ch) => ch.iter().collect(),
        other => vec![other],
    };
    let chi = tree.chromatic_number();
    let shared = chi - 2;
    let mut colors = vec![0; g.n()];
    let mut local = vec![0; g.n()];
    for (i, comp) in components.iter().enumerate() {
        let Cotree::Join(parts) = comp else {
            unreachable!("isolate-free cograph components are joins");
        };
        let first_side = parts[0].color_into(&mut local, 0);
        let rest = parts[1..]
            .iter()
            .fold(0, |used, c| used + c.color_into(&mut local, first_side + used));
        let (excl_a, excl_b) = (1, first_side + 1);
        debug_assert!(first_side + rest <= chi);
        for v in comp.leaves() {
            let l = local[v];
            colors[v] = if l == excl_a {
                shared + 2 * i + 1
            } else if l == excl_b {
                shared + 2 * i + 2
            } else {
                // the remaining local colors fill the shared palette in order
                l - 1 - usize::from(l > excl_b)
            };
        }
    }
    let coloring = Coloring::from_labels(&colors);
    let value = chi + 2 * (components.len() - 1);
    debug_assert_eq!(coloring.num_colors(), value);
    debug_assert!(crate::coloring::is_td_coloring(g, &coloring));
    Ok(ClassSolution { value, coloring })
}
