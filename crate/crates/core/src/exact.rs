//! Exact chromatic, dominator chromatic and total dominator chromatic
//! numbers by backtracking.
//!
//! All three share one search: vertices are colored in a fixed order, a new
//! color may only be opened as `max_used + 1`, and after every assignment each
//! vertex must still have a class that can end up inside its (open or
//! closed) neighborhood. A class is lost for `w` once it holds a vertex
//! outside the neighborhood; a not-yet-opened class is still possible while
//! `w` has an uncolored vertex in its neighborhood and a color is left.
//!
//! Budgets count search nodes, summed over every `k` tried.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::coloring::{satisfies, Coloring, ColoringKind};
use crate::domination::{all_mask, gamma_exact, gamma_t_exact, masks};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: Coloring,
    pub lower_bound_used: usize,
    pub upper_bound_used: usize,
    pub nodes: u64,
}

struct Search {
    kind: ColoringKind,
    n: usize,
    k: usize,
    /// Neighborhood each vertex must swallow a class of: open for TD,
    /// closed for dominator colorings.
    target: Vec<u64>,
    adj: Vec<u64>,
    order: Vec<usize>,
    color: Vec<usize>,
    class: Vec<u64>,
    used: usize,
    uncolored: u64,
    nodes: u64,
    limit: Option<u64>,
    exact_k: bool,
}

impl Search {
    fn new(g: &Graph, kind: ColoringKind, k: usize) -> Result<Self> {
        let adj = masks(g)?;
        let target = match kind {
            ColoringKind::Dominator => adj.iter().enumerate().map(|(v, m)| m | 1 << v).collect(),
            _ => adj.clone(),
        };
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Ok(Search {
            kind,
            n,
            k,
            target,
            adj,
            order,
            color: vec![0; n],
            class: vec![0; k + 1],
            used: 0,
            uncolored: all_mask(n),
            nodes: 0,
            limit: None,
            exact_k: false,
        })
    }

    fn alive(&self, w: usize) -> bool {
        let t = self.target[w];
        if self.used < self.k && t & self.uncolored != 0 {
            return true;
        }
        self.class[1..=self.used].iter().any(|&cls| cls & !t == 0)
    }

    fn consistent(&self) -> bool {
        if self.exact_k && self.used + (self.uncolored.count_ones() as usize) < self.k {
            return false;
        }
        match self.kind {
            ColoringKind::Proper => true,
            _ => (0..self.n).all(|w| self.alive(w)),
        }
    }

    fn run(&mut self, pos: usize, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> Result<ControlFlow<()>> {
        self.nodes += 1;
        if let Some(limit) = self.limit {
            if self.nodes > limit {
                return Err(Error::BudgetExceeded { limit });
            }
        }
        if pos == self.n {
            if self.exact_k && self.used != self.k {
                return Ok(ControlFlow::Continue(()));
            }
            return Ok(visit(&self.color));
        }
        let v = self.order[pos];
        let top = (self.used + 1).min(self.k);
        for c in 1..=top {
            if self.class[c] & self.adj[v] != 0 {
                continue;
            }
            let opened = c > self.used;
            self.color[v] = c;
            self.class[c] |= 1 << v;
            self.uncolored &= !(1 << v);
            if opened {
                self.used = c;
            }
            let flow = if self.consistent() {
                self.run(pos + 1, visit)?
            } else {
                ControlFlow::Continue(())
            };
            if opened {
                self.used = c - 1;
            }
            self.uncolored |= 1 << v;
            self.class[c] &= !(1 << v);
            self.color[v] = 0;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn to_coloring(colors: &[usize]) -> Coloring {
    Coloring::from_labels(colors).canonical()
}

/// Some coloring of the given kind with at most `k` colors. `nodes` is
/// incremented by the search effort.
fn feasible(g: &Graph, kind: ColoringKind, k: usize, budget: Budget, nodes: &mut u64) -> Result<Option<Coloring>> {
    if g.n() == 0 {
        return Ok(Some(Coloring::from_labels(&[])));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Search::new(g, kind, k)?;
    search.limit = budget.max_nodes.map(|m| m.saturating_sub(*nodes));
    let mut found = None;
    let outcome = search.run(0, &mut |colors| {
        found = Some(to_coloring(colors));
        ControlFlow::Break(())
    });
    *nodes += search.nodes;
    match outcome {
        Ok(_) => Ok(found),
        Err(Error::BudgetExceeded { .. }) => Err(Error::BudgetExceeded {
            limit: budget.max_nodes.unwrap_or(u64::MAX),
        }),
        Err(e) => Err(e),
    }
}

/// Calls `visit` on every coloring of the given kind that uses exactly `k`
/// colors. Each partition of the vertices is visited once, with colors
/// numbered by first appearance in the search order.
pub fn for_each_coloring(
    g: &Graph,
    kind: ColoringKind,
    k: usize,
    mut visit: impl FnMut(&Coloring) -> ControlFlow<()>,
) -> Result<()> {
    if k == 0 {
        if g.n() == 0 {
            let _ = visit(&Coloring::from_labels(&[]));
        }
        return Ok(());
    }
    if kind == ColoringKind::Td {
        g.require_isolate_free()?;
    }
    let mut search = Search::new(g, kind, k)?;
    search.exact_k = true;
    let _ = search.run(0, &mut |colors| visit(&Coloring::from_labels(colors)))?;
    Ok(())
}

fn greedy_colors(g: &Graph) -> usize {
    let mut color = vec![0usize; g.n()];
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut max = 0;
    for v in order {
        let c = (1..)
            .find(|c| g.neighbors(v).iter().all(|&w| color[w] != *c))
            .expect("some free color");
        color[v] = c;
        max = max.max(c);
    }
    max
}

fn solve_from(g: &Graph, kind: ColoringKind, lower: usize, upper: usize, budget: Budget) -> Result<SolveResult> {
    let mut nodes = 0;
    for k in lower..=g.n().max(lower) {
        if let Some(witness) = feasible(g, kind, k, budget, &mut nodes)? {
            debug_assert!(satisfies(g, &witness, kind));
            debug_assert_eq!(witness.num_colors(), k);
            return Ok(SolveResult {
                value: k,
                witness,
                lower_bound_used: lower,
                upper_bound_used: upper,
                nodes,
            });
        }
    }
    unreachable!("all-singleton coloring is always valid")
}

pub fn chi_exact(g: &Graph) -> Result<SolveResult> {
    chi_exact_with(g, Budget::UNLIMITED)
}

pub fn chi_exact_with(g: &Graph, budget: Budget) -> Result<SolveResult> {
    let lower = match (g.n(), g.m()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    solve_from(g, ColoringKind::Proper, lower, greedy_colors(g), budget)
}

/// Exact total dominator chromatic number, searched upward from
/// `max(gamma_t, chi)`.
pub fn chi_td_exact(g: &Graph) -> Result<SolveResult> {
    chi_td_exact_with(g, Budget::UNLIMITED)
}

pub fn chi_td_exact_with(g: &Graph, budget: Budget) -> Result<SolveResult> {
    g.require_isolate_free()?;
    let gamma_t = gamma_t_exact(g)?.gamma_t;
    let chi = chi_exact_with(g, budget)?;
    let lower = gamma_t.max(chi.value);
    let mut result = solve_from(g, ColoringKind::Td, lower, gamma_t + chi.value, budget)?;
    result.nodes += chi.nodes;
    Ok(result)
}

/// Exact dominator chromatic number, searched upward from `max(gamma, chi)`.
pub fn chi_d_exact(g: &Graph) -> Result<SolveResult> {
    chi_d_exact_with(g, Budget::UNLIMITED)
}

pub fn chi_d_exact_with(g: &Graph, budget: Budget) -> Result<SolveResult> {
    let gamma = gamma_exact(g)?.0;
    let chi = chi_exact_with(g, budget)?;
    let lower = gamma.max(chi.value);
    let mut result = solve_from(g, ColoringKind::Dominator, lower, gamma + chi.value, budget)?;
    result.nodes += chi.nodes;
    Ok(result)
}

/// A TD-coloring with at most `k` colors, if one exists.
pub fn feasible_td_coloring(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    feasible_td_coloring_with(g, k, Budget::UNLIMITED)
}

pub fn feasible_td_coloring_with(g: &Graph, k: usize, budget: Budget) -> Result<Option<Coloring>> {
    g.require_isolate_free()?;
    feasible(g, ColoringKind::Td, k, budget, &mut 0)
}
