//! Total dominator colorings of trees.
//!
//! For a tree `T`, `chi_td(T)` is one of `gamma_t(T)`, `gamma_t(T) + 1` or
//! `gamma_t(T) + 2`. The first case holds exactly for the trees of the
//! family built from stars (recognized by [`is_in_family_t`]). Outside the
//! family, `chi_td = gamma_t + 1` holds iff some minimum TD-set `D` admits a
//! partition `(D1, D2)` such that
//!
//! 1. every vertex of `D2` has exactly one private neighbor,
//! 2. no vertex has two or more neighbors in `D`, all of them in `D2`, and
//! 3. `V \ (D1 ∪ N[S])` is independent, where `S` collects the private
//!    neighbors of `D2`.
//!
//! [`find_gamma_plus_1_certificate`] searches for such a partition and
//! [`coloring_from_certificate`] turns one into a TD-coloring with
//! `gamma_t + 1` colors.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::coloring::{analyze, is_td_coloring, next_combination, require_td_coloring, Coloring, ColoringKind};
use crate::domination::{all_min_td_sets, gamma_t_exact, is_td_set, private_structure, PrivateStructure};
use crate::error::{Error, Result};
use crate::exact::{chi_td_exact, for_each_coloring, Budget};
use crate::graph::{Graph, VertexSet};

/// Largest order at which [`classify_tree`] confirms its answer with the
/// exact solver.
pub const CROSS_CHECK_LIMIT: usize = 14;

/// Stars whose centers are the support vertices, joined by leaf-to-leaf
/// connector edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarDecomposition {
    pub centers: VertexSet,
    /// `stars[i]` is the star of the `i`-th center, center included.
    pub stars: Vec<VertexSet>,
    pub connectors: Vec<(usize, usize)>,
}

impl StarDecomposition {
    /// Checks the decomposition against `t` without consulting the
    /// recognizer: the stars partition `V`, each is a star of order at least
    /// three (or the whole of `P_2`), the connectors join non-centers of
    /// different stars, the stars and connectors account for every edge,
    /// and every center keeps a leaf.
    pub fn is_valid_for(&self, t: &Graph) -> bool {
        let n = t.n();
        let centers = self.centers.to_vec();
        if centers.len() != self.stars.len() || centers.is_empty() {
            return false;
        }
        if n == 2 {
            return t.m() == 1 && self.stars.len() == 1 && self.stars[0].len() == 2 && self.connectors.is_empty();
        }
        let mut star_of = vec![usize::MAX; n];
        for (i, star) in self.stars.iter().enumerate() {
            if star.universe() != n || !star.contains(centers[i]) || star.len() < 3 {
                return false;
            }
            for v in star.iter() {
                if star_of[v] != usize::MAX {
                    return false;
                }
                star_of[v] = i;
                if v != centers[i] && !t.has_edge(v, centers[i]) {
                    return false;
                }
            }
        }
        if star_of.contains(&usize::MAX) || self.connectors.len() + 1 != self.stars.len() {
            return false;
        }
        for &(u, v) in &self.connectors {
            if !t.has_edge(u, v) || self.centers.contains(u) || self.centers.contains(v) || star_of[u] == star_of[v] {
                return false;
            }
        }
        let star_edges: usize = self.stars.iter().map(|s| s.len() - 1).sum();
        if star_edges + self.connectors.len() != t.m() {
            return false;
        }
        centers
            .iter()
            .all(|&c| t.neighbors(c).iter().any(|&w| t.degree(w) == 1))
    }

    /// `gamma_t` colors: one per center, one per star for the rest of it.
    pub fn coloring(&self, n: usize) -> Coloring {
        let k = self.stars.len();
        let mut colors = vec![0; n];
        for (i, (center, star)) in self.centers.iter().zip(&self.stars).enumerate() {
            for v in star.iter() {
                colors[v] = if v == center { i + 1 } else { k + i + 1 };
            }
        }
        Coloring::from_labels(&colors)
    }
}

/// A minimum TD-set `D` split into `D1` and `D2`, with `S` the union of the
/// private neighborhoods of `D2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCertificate {
    #[serde(rename = "D")]
    pub d: VertexSet,
    #[serde(rename = "D1")]
    pub d1: VertexSet,
    #[serde(rename = "D2")]
    pub d2: VertexSet,
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(skip)]
    pub bad_vertices_checked: bool,
}

impl TreeCertificate {
    /// Rechecks every certificate condition on `t`, including minimality of
    /// `D`.
    pub fn validate(&self, t: &Graph) -> Result<()> {
        let fail = |msg: &str| Err(Error::InvalidCertificate(msg.to_string()));
        let n = t.n();
        if [&self.d, &self.d1, &self.d2, &self.s].iter().any(|s| s.universe() != n) {
            return fail("vertex sets do not match the graph order");
        }
        if self.d1.intersects(&self.d2) || self.d1.union(&self.d2) != self.d {
            return fail("D1 and D2 do not partition D");
        }
        if !is_td_set(t, &self.d) {
            return fail("D is not a total dominating set");
        }
        if self.d.len() != gamma_t_exact(t)?.gamma_t {
            return fail("D is not a minimum total dominating set");
        }
        let ps = private_structure(t, &self.d)?;
        if !self.d2.is_subset(&ps.d_i) {
            return fail("a vertex of D2 does not have exactly one private neighbor");
        }
        if private_union(&ps, &self.d2, n) != self.s {
            return fail("S is not the union of the private neighborhoods of D2");
        }
        if !bad_vertices(t, &self.d, &self.d2)?.is_empty() {
            return fail("a vertex has all of its (at least two) D-neighbors in D2");
        }
        if !is_independent(t, &outside(t, &self.d1, &self.s)) {
            return fail("V \\ (D1 ∪ N[S]) is not independent");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tier {
    #[serde(rename = "GAMMA_T")]
    GammaT,
    #[serde(rename = "GAMMA_T_PLUS_1")]
    GammaTPlus1,
    #[serde(rename = "GAMMA_T_PLUS_2")]
    GammaTPlus2,
}

impl Tier {
    pub fn offset(self) -> usize {
        match self {
            Tier::GammaT => 0,
            Tier::GammaTPlus1 => 1,
            Tier::GammaTPlus2 => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TreeEvidence {
    Family {
        decomposition: StarDecomposition,
    },
    Certificate {
        certificate: TreeCertificate,
    },
    /// Every partition of every minimum TD-set failed.
    Exhausted {
        min_td_sets: u64,
        partitions_checked: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeClassification {
    pub gamma_t: usize,
    pub chi_td: usize,
    pub tier: Tier,
    pub evidence: TreeEvidence,
    /// A TD-coloring with `chi_td` colors.
    pub coloring: Coloring,
    /// Whether `chi_td` was confirmed by the exact solver.
    pub cross_checked: bool,
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.n() < 2 || !t.is_tree() {
        return Err(Error::wrong_class("tree", "expected a tree with at least two vertices"));
    }
    Ok(())
}

/// Vertices of degree one.
pub fn leaves(t: &Graph) -> VertexSet {
    VertexSet::from_iter(t.n(), t.vertices().filter(|&v| t.degree(v) == 1))
}

/// Neighbors of leaves.
pub fn support_vertices(t: &Graph) -> VertexSet {
    VertexSet::from_iter(
        t.n(),
        t.vertices()
            .filter(|&v| t.degree(v) == 1)
            .flat_map(|v| t.neighbors(v).to_vec()),
    )
}

fn is_independent(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|v| !g.neighborhood(v).intersects(set))
}

fn private_union(ps: &PrivateStructure, d2: &VertexSet, n: usize) -> VertexSet {
    d2.iter().fold(VertexSet::new(n), |acc, x| {
        acc.union(ps.private_of(x).expect("member of D"))
    })
}

/// `V \ (D1 ∪ N[S])`.
fn outside(t: &Graph, d1: &VertexSet, s: &VertexSet) -> VertexSet {
    let mut covered = d1.union(s);
    for y in s.iter() {
        covered = covered.union(t.neighborhood(y));
    }
    covered.complement()
}

/// Star decomposition if `t` belongs to the family of trees with
/// `chi_td = gamma_t`, `None` otherwise.
///
/// Besides `P_2`, a tree belongs iff its support vertices are independent,
/// every other vertex has exactly one support neighbor, and every support
/// vertex has at least two neighbors.
pub fn is_in_family_t(t: &Graph) -> Result<Option<StarDecomposition>> {
    require_tree(t)?;
    let n = t.n();
    if n == 2 {
        return Ok(Some(StarDecomposition {
            centers: VertexSet::from_iter(2, [0]),
            stars: vec![VertexSet::full(2)],
            connectors: Vec::new(),
        }));
    }
    let s = support_vertices(t);
    if s.is_empty() || !is_independent(t, &s) {
        return Ok(None);
    }
    if s.iter().any(|c| t.degree(c) < 2) {
        return Ok(None);
    }
    if t.vertices()
        .any(|v| !s.contains(v) && t.neighborhood(v).intersection(&s).len() != 1)
    {
        return Ok(None);
    }
    let stars = s
        .iter()
        .map(|c| {
            let mut star = t.neighborhood(c).clone();
            star.insert(c);
            star
        })
        .collect();
    let connectors = t.edges().filter(|&(u, v)| !s.contains(u) && !s.contains(v)).collect();
    Ok(Some(StarDecomposition {
        centers: s,
        stars,
        connectors,
    }))
}

/// Vertices with at least two neighbors in `d`, all of them in `d2`.
pub fn bad_vertices(t: &Graph, d: &VertexSet, d2: &VertexSet) -> Result<VertexSet> {
    if d.universe() != t.n() || !d2.is_subset(d) {
        return Err(Error::Precondition("D2 must be a subset of D".into()));
    }
    Ok(VertexSet::from_iter(
        t.n(),
        t.vertices().filter(|&v| {
            let hits = t.neighborhood(v).intersection(d);
            hits.len() >= 2 && hits.is_subset(d2)
        }),
    ))
}

enum Search {
    Found(TreeCertificate),
    Exhausted { min_td_sets: u64, partitions_checked: u64 },
}

fn search_certificate(t: &Graph, budget: Budget) -> Result<Search> {
    let n = t.n();
    let (mut sets, mut checked) = (0u64, 0u64);
    for d in all_min_td_sets(t)? {
        sets += 1;
        let ps = private_structure(t, &d)?;
        let d_i = ps.d_i.to_vec();
        for size in 0..=d_i.len() {
            let mut pick: Vec<usize> = (0..size).collect();
            loop {
                checked += 1;
                if budget.max_nodes.is_some_and(|limit| checked > limit) {
                    return Err(Error::BudgetExceeded {
                        limit: budget.max_nodes.unwrap_or_default(),
                    });
                }
                let d2 = VertexSet::from_iter(n, pick.iter().map(|&i| d_i[i]));
                let d1 = d.difference(&d2);
                let s = private_union(&ps, &d2, n);
                if bad_vertices(t, &d, &d2)?.is_empty() && is_independent(t, &outside(t, &d1, &s)) {
                    return Ok(Search::Found(TreeCertificate {
                        d,
                        d1,
                        d2,
                        s,
                        bad_vertices_checked: true,
                    }));
                }
                if !next_combination(&mut pick, d_i.len()) {
                    break;
                }
            }
        }
    }
    Ok(Search::Exhausted {
        min_td_sets: sets,
        partitions_checked: checked,
    })
}

/// First certificate for `chi_td = gamma_t + 1`: minimum TD-sets in
/// lexicographic order, then `D2` by increasing size and lexicographically.
///
/// The condition on `D2` is that each of its vertices has exactly one
/// private neighbor, and a bad vertex is one whose two or more `D`-neighbors
/// all lie in `D2`; both are the readings under which the construction in
/// [`coloring_from_certificate`] is a TD-coloring.
pub fn find_gamma_plus_1_certificate(t: &Graph) -> Result<Option<TreeCertificate>> {
    find_gamma_plus_1_certificate_with(t, Budget::UNLIMITED)
}

/// As [`find_gamma_plus_1_certificate`], with the budget counting candidate
/// partitions.
pub fn find_gamma_plus_1_certificate_with(t: &Graph, budget: Budget) -> Result<Option<TreeCertificate>> {
    if is_in_family_t(t)?.is_some() {
        return Err(Error::Precondition(
            "tree belongs to the star family, where chi_td = gamma_t".into(),
        ));
    }
    Ok(match search_certificate(t, budget)? {
        Search::Found(cert) => Some(cert),
        Search::Exhausted { .. } => None,
    })
}

/// TD-coloring with `|D| + 1` colors: each vertex of `D` gets its own color,
/// the uncolored neighbors of the private neighbor `y` of each `x` in `D2`
/// take the color of `x` (lowest `x` first), and everything left shares one
/// extra color.
pub fn coloring_from_certificate(t: &Graph, cert: &TreeCertificate) -> Result<Coloring> {
    require_tree(t)?;
    cert.validate(t)?;
    let ps = private_structure(t, &cert.d)?;
    let mut colors = vec![0; t.n()];
    for (i, v) in cert.d.iter().enumerate() {
        colors[v] = i + 1;
    }
    for x in cert.d2.iter() {
        let y = ps
            .private_of(x)
            .and_then(VertexSet::first)
            .expect("one private neighbor");
        for &w in t.neighbors(y) {
            if colors[w] == 0 {
                colors[w] = colors[x];
            }
        }
    }
    let fresh = cert.d.len() + 1;
    colors.iter_mut().filter(|c| **c == 0).for_each(|c| *c = fresh);
    let coloring = Coloring::from_labels(&colors);
    if !is_td_coloring(t, &coloring) || coloring.num_colors() > fresh {
        return Err(Error::Inconsistent(
            "certificate construction did not produce a TD-coloring".into(),
        ));
    }
    Ok(coloring)
}

/// `gamma_t` colors for the minimum TD-set, two more for a proper coloring
/// of the forest that remains.
fn plus_two_coloring(t: &Graph, d: &VertexSet) -> Coloring {
    let mut colors = vec![0; t.n()];
    for (i, v) in d.iter().enumerate() {
        colors[v] = i + 1;
    }
    let base = d.len();
    for root in t.vertices() {
        if colors[root] != 0 {
            continue;
        }
        colors[root] = base + 1;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in t.neighbors(v) {
                if colors[w] == 0 {
                    colors[w] = if colors[v] == base + 1 { base + 2 } else { base + 1 };
                    stack.push(w);
                }
            }
        }
    }
    Coloring::from_labels(&colors)
}

/// Tier of `t` with evidence and a witness coloring; confirmed with the
/// exact solver when `t` has at most [`CROSS_CHECK_LIMIT`] vertices.
pub fn classify_tree(t: &Graph) -> Result<TreeClassification> {
    classify(t, t.n() <= CROSS_CHECK_LIMIT)
}

/// [`classify_tree`] without the exact cross-check.
pub fn classify_tree_unchecked(t: &Graph) -> Result<TreeClassification> {
    classify(t, false)
}

fn classify(t: &Graph, cross_check: bool) -> Result<TreeClassification> {
    require_tree(t)?;
    let gamma = gamma_t_exact(t)?;
    let gamma_t = gamma.gamma_t;
    let (tier, evidence, coloring) = if let Some(decomposition) = is_in_family_t(t)? {
        let coloring = decomposition.coloring(t.n());
        (Tier::GammaT, TreeEvidence::Family { decomposition }, coloring)
    } else {
        match search_certificate(t, Budget::UNLIMITED)? {
            Search::Found(certificate) => {
                let coloring = coloring_from_certificate(t, &certificate)?;
                (Tier::GammaTPlus1, TreeEvidence::Certificate { certificate }, coloring)
            }
            Search::Exhausted {
                min_td_sets,
                partitions_checked,
            } => (
                Tier::GammaTPlus2,
                TreeEvidence::Exhausted {
                    min_td_sets,
                    partitions_checked,
                },
                plus_two_coloring(t, &gamma.witness),
            ),
        }
    };
    let chi_td = gamma_t + tier.offset();
    if coloring.num_colors() != chi_td || !is_td_coloring(t, &coloring) {
        return Err(Error::Inconsistent(format!(
            "witness for tier {tier:?} has {} colors, expected {chi_td}",
            coloring.num_colors()
        )));
    }
    if cross_check {
        let exact = chi_td_exact(t)?.value;
        if exact != chi_td {
            return Err(Error::Inconsistent(format!(
                "classification gives {chi_td}, exact search gives {exact}"
            )));
        }
    }
    Ok(TreeClassification {
        gamma_t,
        chi_td,
        tier,
        evidence,
        coloring,
        cross_checked: cross_check,
    })
}

/// Recolors an optimal TD-coloring of `t` so that the leaves of each support
/// vertex share a color, and, when `t` is outside the star family, so that
/// all leaves share a color.
///
/// The second step moves leaves into a free class. If the coloring has none
/// after the first step, the first optimal TD-coloring with a free class is
/// taken from exhaustive enumeration instead.
pub fn normalize_leaf_colors(t: &Graph, c: &Coloring) -> Result<Coloring> {
    require_tree(t)?;
    require_td_coloring(t, c)?;
    let k = chi_td_exact(t)?.value;
    if c.num_colors() != k {
        return Err(Error::Precondition(format!(
            "coloring uses {} colors but chi_td is {k}",
            c.num_colors()
        )));
    }
    let leaf = leaves(t);
    let supports = support_vertices(t);
    let leaves_of = |u: usize| t.neighborhood(u).intersection(&leaf).to_vec();

    let mut colors = c.colors().to_vec();
    unify_support_leaves(t, &mut colors, &supports, &leaves_of);
    if is_in_family_t(t)?.is_some() {
        return finish(t, &colors, k);
    }

    let free = |colors: &[usize]| {
        let coloring = Coloring::from_labels(colors);
        analyze(t, &coloring)
            .ok()
            .and_then(|a| a.free_classes().first().copied())
            .map(|id| {
                let member = lowest_member(&coloring, id);
                colors[member]
            })
    };
    let r = match free(&colors) {
        Some(r) => r,
        None => {
            let mut found = None;
            for_each_coloring(t, ColoringKind::Td, k, |cand| {
                if analyze(t, cand).is_ok_and(|a| !a.free_classes().is_empty()) {
                    found = Some(cand.colors().to_vec());
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            colors = found.ok_or_else(|| Error::Inconsistent("no optimal TD-coloring with a free class".into()))?;
            unify_support_leaves(t, &mut colors, &supports, &leaves_of);
            free(&colors).ok_or_else(|| Error::Inconsistent("free class lost while unifying leaves".into()))?
        }
    };

    for u in supports.iter() {
        let ls = leaves_of(u);
        if ls.iter().all(|&l| colors[l] == r) {
            continue;
        }
        let s = dominated_labels(t, &colors, u)
            .into_iter()
            .find(|&s| s != r)
            .ok_or_else(|| Error::Inconsistent(format!("support {u} dominates only the free class")))?;
        let inner: Vec<usize> = t.neighbors(u).iter().copied().filter(|&w| !leaf.contains(w)).collect();
        if !inner.iter().any(|&w| colors[w] == s) {
            let w = *inner
                .first()
                .ok_or_else(|| Error::Inconsistent(format!("support {u} has no inner neighbor")))?;
            colors[w] = s;
        }
        ls.iter().for_each(|&l| colors[l] = r);
    }
    finish(t, &colors, k)
}

fn lowest_member(c: &Coloring, id: usize) -> usize {
    c.classes()[id - 1].first().expect("nonempty class")
}

/// Labels of the classes `v` totally dominates, ascending.
fn dominated_labels(t: &Graph, colors: &[usize], v: usize) -> Vec<usize> {
    let mut labels: Vec<usize> = colors.to_vec();
    labels.sort_unstable();
    labels.dedup();
    labels
        .into_iter()
        .filter(|&l| t.vertices().all(|w| colors[w] != l || t.has_edge(v, w)))
        .collect()
}

/// For each support `u`: if a leaf of `u` lies in the lowest class `u`
/// dominates, all leaves of `u` join it; otherwise they join the class of
/// the lowest-colored leaf.
fn unify_support_leaves(
    t: &Graph,
    colors: &mut [usize],
    supports: &VertexSet,
    leaves_of: &dyn Fn(usize) -> Vec<usize>,
) {
    for u in supports.iter() {
        let ls = leaves_of(u);
        if ls.iter().all(|&l| colors[l] == colors[ls[0]]) {
            continue;
        }
        let dominated = dominated_labels(t, colors, u)[0];
        let target = if ls.iter().any(|&l| colors[l] == dominated) {
            dominated
        } else {
            ls.iter().map(|&l| colors[l]).min().expect("support has a leaf")
        };
        ls.iter().for_each(|&l| colors[l] = target);
    }
}

fn finish(t: &Graph, colors: &[usize], k: usize) -> Result<Coloring> {
    let out = Coloring::from_labels(colors);
    if out.num_colors() != k || !is_td_coloring(t, &out) {
        return Err(Error::Inconsistent("leaf normalization broke the coloring".into()));
    }
    Ok(out)
}
