//! Exact minimum computations: brute force (the ground-truth oracle),
//! branch-and-bound, and the classical graph invariants the bound claims
//! compare against.

use std::collections::HashMap;

use itertools::Itertools;
use thiserror::Error;

use crate::certify::{
    deficient_closure, feasible_with_caps, max_b_matching, Certificate, Feasibility,
};
use crate::graph::{Graph, GraphError, Vertex};
use crate::restriction::{ceil_div, CapacityRule, Instance, RestrictionError};

/// Default cap on exhaustive-search order; keeps worst-case subset
/// enumeration at desk scale.
pub const DEFAULT_BRUTE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph of order {n} exceeds the exhaustive-search limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph has isolated vertices")]
    HasIsolates,
    #[error(transparent)]
    Restriction(#[from] RestrictionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    BruteForce,
    BranchAndBound,
}

impl SolveMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMethod::BruteForce => "brute",
            SolveMethod::BranchAndBound => "bnb",
        }
    }
}

/// Minimum cardinality together with a witness certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub rule: CapacityRule,
    pub gamma: usize,
    pub witness: Certificate,
    /// Search nodes examined (subsets for brute force, tree nodes for
    /// branch-and-bound). Diagnostics only.
    pub explored: u64,
    pub method: SolveMethod,
}

/// Exhaustive search: subsets are enumerated by increasing cardinality and
/// lexicographic order, so the witness is the lexicographically least
/// minimum set.
pub fn solve_brute(inst: &Instance, rule: CapacityRule) -> Result<SolveResult, SolveError> {
    solve_brute_with_limit(inst, rule, DEFAULT_BRUTE_LIMIT)
}

pub fn solve_brute_with_limit(
    inst: &Instance,
    rule: CapacityRule,
    limit: usize,
) -> Result<SolveResult, SolveError> {
    let g = inst.graph();
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(SolveError::TooLarge { n, limit });
    }
    let caps = inst.capacity_vector(rule)?;
    // bit v-1 set <=> vertex v in the mask
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let cover_mask: Vec<u64> = std::iter::once(0)
        .chain(g.vertices().map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << (v - 1), |acc, &w| acc | 1u64 << (w - 1))
        }))
        .collect();
    let mut in_set = vec![false; n + 1];
    let mut explored: u64 = 0;
    for size in 0..=n {
        for subset in g.vertices().combinations(size) {
            explored += 1;
            let covered = subset.iter().fold(0u64, |acc, &v| acc | cover_mask[v]);
            if covered != full {
                continue;
            }
            in_set.iter_mut().for_each(|b| *b = false);
            for &v in &subset {
                in_set[v] = true;
            }
            if let Feasibility::Feasible(assignment) = feasible_with_caps(g, &caps, &in_set) {
                return Ok(SolveResult {
                    rule,
                    gamma: size,
                    witness: Certificate {
                        set: subset,
                        assignment,
                        rule,
                    },
                    explored,
                    method: SolveMethod::BruteForce,
                });
            }
        }
    }
    unreachable!("the full vertex set is always feasible");
}

/// Branch-and-bound. Branches on the Hall witness of the lowest unmatched
/// demand vertex: any valid superset must pick a vertex of the deficient
/// set or a fresh neighbor of it (for an undominated vertex this is
/// exactly its closed neighborhood), candidates tried in ascending index.
/// Prunes with the residual capacity bound and an incumbent from
/// [`greedy_upper_bound`]. Only the cardinality is contractual; the
/// witness is some valid minimum set.
pub fn solve_bnb(inst: &Instance, rule: CapacityRule) -> Result<SolveResult, SolveError> {
    let g = inst.graph();
    let n = g.n();
    let caps = inst.capacity_vector(rule)?;
    let mut best = greedy_upper_bound(inst, rule)?;
    let mut explored: u64 = 0;

    let mut in_set = vec![false; n + 1];
    let mut excluded = vec![false; n + 1];
    let mut chosen: Vec<Vertex> = Vec::new();
    descend(
        g,
        &caps,
        &mut in_set,
        &mut excluded,
        &mut chosen,
        &mut best,
        &mut explored,
    );

    let assignment = match coverage_assignment(g, &caps, &best) {
        Some(a) => a,
        None => unreachable!("incumbent is always kept valid"),
    };
    Ok(SolveResult {
        rule,
        gamma: best.len(),
        witness: Certificate {
            set: best,
            assignment,
            rule,
        },
        explored,
        method: SolveMethod::BranchAndBound,
    })
}

fn descend(
    g: &Graph,
    caps: &[usize],
    in_set: &mut Vec<bool>,
    excluded: &mut Vec<bool>,
    chosen: &mut Vec<Vertex>,
    best: &mut Vec<Vertex>,
    explored: &mut u64,
) {
    *explored += 1;
    if chosen.len() >= best.len() {
        return;
    }
    let outcome = max_b_matching(g, caps, in_set);
    if outcome.unmatched.is_empty() {
        let mut set: Vec<Vertex> = chosen.clone();
        set.sort_unstable();
        *best = set;
        return;
    }
    // Residual bound: one future pick removes at most one demand and frees
    // at most its own capacity of slots.
    let max_cap = g
        .vertices()
        .filter(|&v| !in_set[v] && !excluded[v])
        .map(|v| caps[v])
        .max();
    let max_cap = match max_cap {
        Some(c) => c,
        None => return, // nothing left to add
    };
    let need = ceil_div(outcome.unmatched.len(), 1 + max_cap);
    if chosen.len() + need >= best.len() {
        return;
    }
    let u = outcome.unmatched[0];
    let (_, candidates) = deficient_closure(g, in_set, &outcome, u);
    let open: Vec<Vertex> = candidates.into_iter().filter(|&c| !excluded[c]).collect();
    for (i, &c) in open.iter().enumerate() {
        in_set[c] = true;
        chosen.push(c);
        for &prev in &open[..i] {
            excluded[prev] = true;
        }
        descend(g, caps, in_set, excluded, chosen, best, explored);
        for &prev in &open[..i] {
            excluded[prev] = false;
        }
        chosen.pop();
        in_set[c] = false;
    }
}

fn coverage_assignment(g: &Graph, caps: &[usize], set: &[Vertex]) -> Option<Vec<(Vertex, Vertex)>> {
    let mut in_set = vec![false; g.n() + 1];
    for &v in set {
        in_set[v] = true;
    }
    match feasible_with_caps(g, caps, &in_set) {
        Feasibility::Feasible(a) => Some(a),
        Feasibility::Infeasible(_) => None,
    }
}

/// Greedy incumbent: repeatedly adds the vertex covering the most not yet
/// assigned demand under residual capacities (counting itself when still
/// uncovered), ties broken by lowest index; assignments are committed
/// immediately, so the result is always valid.
pub fn greedy_upper_bound(
    inst: &Instance,
    rule: CapacityRule,
) -> Result<Vec<Vertex>, RestrictionError> {
    let g = inst.graph();
    let n = g.n();
    let caps = inst.capacity_vector(rule)?;
    let mut in_set = vec![false; n + 1];
    let mut assigned = vec![false; n + 1];
    let mut set: Vec<Vertex> = Vec::new();
    loop {
        let mut best: Option<(usize, Vertex)> = None;
        for v in g.vertices().filter(|&v| !in_set[v]) {
            let coverable = g
                .neighbors(v)
                .iter()
                .filter(|&&w| !in_set[w] && !assigned[w])
                .count()
                .min(caps[v]);
            let gain = coverable + usize::from(!assigned[v]);
            if gain > 0 && best.map_or(true, |(bg, _)| gain > bg) {
                best = Some((gain, v));
            }
        }
        let Some((_, v)) = best else { break };
        in_set[v] = true;
        assigned[v] = true;
        set.push(v);
        let mut quota = caps[v];
        for &w in g.neighbors(v) {
            if quota == 0 {
                break;
            }
            if !in_set[w] && !assigned[w] {
                assigned[w] = true;
                quota -= 1;
            }
        }
        if g.vertices().all(|v| in_set[v] || assigned[v]) {
            break;
        }
    }
    set.sort_unstable();
    Ok(set)
}

/// Counting lower bound on the minimum cardinality: a chosen vertex covers
/// itself plus at most its capacity. Under the ceil rule the capacity is
/// bounded via `ceil(max_degree / min_k)`; other rules use their actual
/// maximum capacity.
pub fn lower_bound(inst: &Instance, rule: CapacityRule) -> usize {
    let g = inst.graph();
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let per_pick = match rule {
        CapacityRule::Ceil => {
            let k_min = inst.f_values().iter().copied().min().unwrap_or(1);
            ceil_div(g.max_degree(), k_min)
        }
        _ => g
            .vertices()
            .map(|v| inst.capacity(rule, v))
            .max()
            .unwrap_or(0),
    };
    ceil_div(n, 1 + per_pick)
}

/// Maximum-cardinality matching, exact. Memoized take/skip recursion over
/// the lowest remaining vertex; intended for desk-scale graphs (n <= 64
/// hard cap, exponential beyond ~24 in the worst case).
pub fn max_matching(g: &Graph) -> (Vec<(Vertex, Vertex)>, usize) {
    let n = g.n();
    assert!(n <= 64, "max_matching supports at most 64 vertices");
    let adj_masks: Vec<u64> = std::iter::once(0)
        .chain(g.vertices().map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc | 1u64 << (w - 1))
        }))
        .collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, usize> = HashMap::new();
    let size = mm_size(full, &adj_masks, &mut memo);

    // Deterministic reconstruction: match the lowest vertex with its
    // smallest partner that preserves optimality, else leave it single.
    let mut edges = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize + 1;
        let rest = mask & !(1u64 << (v - 1));
        let target = mm_size(mask, &adj_masks, &mut memo);
        let mut matched = false;
        let mut nbrs = adj_masks[v] & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize + 1;
            nbrs &= nbrs - 1;
            let without = rest & !(1u64 << (u - 1));
            if 1 + mm_size(without, &adj_masks, &mut memo) == target {
                edges.push((v, u));
                mask = without;
                matched = true;
                break;
            }
        }
        if !matched {
            mask = rest;
        }
    }
    (edges, size)
}

fn mm_size(mask: u64, adj_masks: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&s) = memo.get(&mask) {
        return s;
    }
    let v = mask.trailing_zeros() as usize + 1;
    let rest = mask & !(1u64 << (v - 1));
    let mut best = mm_size(rest, adj_masks, memo);
    let mut nbrs = adj_masks[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize + 1;
        nbrs &= nbrs - 1;
        best = best.max(1 + mm_size(rest & !(1u64 << (u - 1)), adj_masks, memo));
    }
    memo.insert(mask, best);
    best
}

/// Edge cover number via the Gallai identity `beta' = n - mu`.
pub fn edge_cover_number(g: &Graph) -> Result<usize, SolveError> {
    if !g.is_isolate_free() {
        return Err(SolveError::HasIsolates);
    }
    let (_, mu) = max_matching(g);
    Ok(g.n() - mu)
}

/// Maximum independent set size, exact by memoized enumeration.
pub fn independence_number(g: &Graph) -> Result<usize, SolveError> {
    independence_number_with_limit(g, DEFAULT_BRUTE_LIMIT)
}

pub fn independence_number_with_limit(g: &Graph, limit: usize) -> Result<usize, SolveError> {
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(SolveError::TooLarge { n, limit });
    }
    let closed_masks: Vec<u64> = std::iter::once(0)
        .chain(g.vertices().map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << (v - 1), |acc, &w| acc | 1u64 << (w - 1))
        }))
        .collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, usize> = HashMap::new();
    fn mis(mask: u64, closed: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&s) = memo.get(&mask) {
            return s;
        }
        let v = mask.trailing_zeros() as usize + 1;
        let skip = mis(mask & !(1u64 << (v - 1)), closed, memo);
        let take = 1 + mis(mask & !closed[v], closed, memo);
        let best = skip.max(take);
        memo.insert(mask, best);
        best
    }
    Ok(mis(full, &closed_masks, &mut memo))
}
