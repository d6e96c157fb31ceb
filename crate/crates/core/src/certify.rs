//! Validity checking for candidate dominating sets.
//!
//! A set `D` is valid under a capacity rule when an *assignment* exists:
//! every vertex of `V - D` is mapped to an adjacent member of `D`, and no
//! member of `D` receives more vertices than its capacity. Vertices inside
//! `D` are self-dominated and impose no demand. This is a bipartite
//! b-matching feasibility problem between `D` (supply = capacity) and
//! `V - D` (demand = 1); the set is valid iff a maximum matching saturates
//! every demand.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::restriction::{CapacityRule, Instance, RestrictionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Restriction(#[from] RestrictionError),
    #[error("set is not a valid dominating set under the rule (uncovered: {uncovered:?})")]
    NotADrdSet { uncovered: Vec<Vertex> },
}

/// A vertex set with a witness assignment proving it valid under `rule`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Sorted ascending.
    pub set: Vec<Vertex>,
    /// `(outside vertex, its dominator)`, sorted by outside vertex.
    pub assignment: Vec<(Vertex, Vertex)>,
    pub rule: CapacityRule,
}

impl Certificate {
    /// Re-checks both certificate invariants: adjacency of every assigned
    /// pair, coverage of all of `V - D`, and per-dominator loads within
    /// capacity.
    pub fn verify(&self, inst: &Instance) -> bool {
        let g = inst.graph();
        let mut in_set = vec![false; g.n() + 1];
        for &v in &self.set {
            if g.check_vertex(v).is_err() {
                return false;
            }
            in_set[v] = true;
        }
        let caps = match inst.capacity_vector(self.rule) {
            Ok(c) => c,
            Err(_) => return false,
        };
        let mut loads = vec![0usize; g.n() + 1];
        let mut covered = vec![false; g.n() + 1];
        for &(u, w) in &self.assignment {
            if u == 0 || u > g.n() || in_set[u] || !in_set[w] || !g.has_edge(u, w) || covered[u] {
                return false;
            }
            covered[u] = true;
            loads[w] += 1;
            if loads[w] > caps[w] {
                return false;
            }
        }
        g.vertices().all(|v| in_set[v] || covered[v])
    }
}

/// Outcome of a feasibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A capacity-respecting assignment covering all of `V - D`.
    Feasible(Vec<(Vertex, Vertex)>),
    /// A nonempty set of demand vertices that cannot all be covered: the
    /// vertices with no neighbor in `D` when such exist (coverage fails
    /// before capacity matters), otherwise the demands left unmatched by
    /// the maximum matching.
    Infeasible(Vec<Vertex>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether `set` is a valid degree-restricted dominating set for
/// `inst` under `rule`, returning a witness assignment or an uncoverable
/// demand set.
pub fn coverage_feasible(
    inst: &Instance,
    rule: CapacityRule,
    set: &[Vertex],
) -> Result<Feasibility, CertifyError> {
    let g = inst.graph();
    for &v in set {
        g.check_vertex(v)?;
    }
    let caps = inst.capacity_vector(rule)?;
    let mut in_set = vec![false; g.n() + 1];
    for &v in set {
        in_set[v] = true;
    }
    let result = feasible_with_caps(g, &caps, &in_set);
    debug_assert!(match &result {
        Feasibility::Feasible(assignment) => Certificate {
            set: g.vertices().filter(|&v| in_set[v]).collect(),
            assignment: assignment.clone(),
            rule,
        }
        .verify(inst),
        Feasibility::Infeasible(witness) => !witness.is_empty(),
    });
    Ok(result)
}

/// True iff `set` is valid and no single-vertex deletion stays valid
/// (sufficient for minimality because validity is superhereditary).
pub fn is_minimal(
    inst: &Instance,
    rule: CapacityRule,
    set: &[Vertex],
) -> Result<bool, CertifyError> {
    match coverage_feasible(inst, rule, set)? {
        Feasibility::Infeasible(uncovered) => {
            return Err(CertifyError::NotADrdSet { uncovered });
        }
        Feasibility::Feasible(_) => {}
    }
    let mut sorted: Vec<Vertex> = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &v in &sorted {
        let reduced: Vec<Vertex> = sorted.iter().copied().filter(|&w| w != v).collect();
        if coverage_feasible(inst, rule, &reduced)?.is_feasible() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fast path shared with the solvers: capacities and membership are
/// precomputed, no validation.
pub(crate) fn feasible_with_caps(g: &Graph, caps: &[usize], in_set: &[bool]) -> Feasibility {
    let orphans: Vec<Vertex> = g
        .vertices()
        .filter(|&u| !in_set[u] && !g.neighbors(u).iter().any(|&w| in_set[w]))
        .collect();
    if !orphans.is_empty() {
        return Feasibility::Infeasible(orphans);
    }
    let outcome = max_b_matching(g, caps, in_set);
    if outcome.unmatched.is_empty() {
        let mut assignment: Vec<(Vertex, Vertex)> = g
            .vertices()
            .filter(|&u| !in_set[u])
            .map(|u| (u, outcome.assigned_to[u].expect("saturated")))
            .collect();
        assignment.sort_unstable();
        Feasibility::Feasible(assignment)
    } else {
        Feasibility::Infeasible(outcome.unmatched.clone())
    }
}

/// State of a maximum b-matching between `D` (capacities) and `V - D`
/// (unit demands).
#[derive(Debug, Clone)]
pub(crate) struct MatchOutcome {
    /// Per demand vertex: its dominator, if matched.
    pub assigned_to: Vec<Option<Vertex>>,
    /// Per supplier: currently matched demands, ascending insertion order.
    pub assigned_demands: Vec<Vec<Vertex>>,
    /// Demands left unmatched, ascending.
    pub unmatched: Vec<Vertex>,
}

/// Deterministic Kuhn-style augmentation: demands are processed ascending
/// and candidate suppliers scanned ascending, so the returned matching is
/// a pure function of the inputs.
pub(crate) fn max_b_matching(g: &Graph, caps: &[usize], in_set: &[bool]) -> MatchOutcome {
    let n = g.n();
    let mut outcome = MatchOutcome {
        assigned_to: vec![None; n + 1],
        assigned_demands: vec![Vec::new(); n + 1],
        unmatched: Vec::new(),
    };
    let mut visited = vec![false; n + 1];
    for u in g.vertices().filter(|&u| !in_set[u]) {
        visited.iter_mut().for_each(|b| *b = false);
        if !augment(g, caps, in_set, u, &mut visited, &mut outcome) {
            outcome.unmatched.push(u);
        }
    }
    outcome
}

fn augment(
    g: &Graph,
    caps: &[usize],
    in_set: &[bool],
    u: Vertex,
    visited: &mut [bool],
    outcome: &mut MatchOutcome,
) -> bool {
    for &w in g.neighbors(u) {
        if !in_set[w] || visited[w] {
            continue;
        }
        visited[w] = true;
        if outcome.assigned_demands[w].len() < caps[w] {
            place(u, w, outcome);
            return true;
        }
        // Supplier full: try to relocate one of its demands.
        let current = outcome.assigned_demands[w].clone();
        for x in current {
            if augment(g, caps, in_set, x, visited, outcome) {
                place(u, w, outcome);
                return true;
            }
        }
    }
    false
}

fn place(u: Vertex, w: Vertex, outcome: &mut MatchOutcome) {
    if let Some(old) = outcome.assigned_to[u] {
        outcome.assigned_demands[old].retain(|&x| x != u);
    }
    outcome.assigned_to[u] = Some(w);
    outcome.assigned_demands[w].push(u);
    outcome.assigned_demands[w].sort_unstable();
}

/// Hall-style witness for an unmatched demand `u`: the set `S` of demands
/// reachable from `u` by alternating paths (every supplier they can use is
/// saturated, and all its matched demands lie in `S` again), together with
/// the branch candidates `S ∪ (N(S) - D)`. Any valid superset of `D` must
/// contain one of the candidates.
pub(crate) fn deficient_closure(
    g: &Graph,
    in_set: &[bool],
    outcome: &MatchOutcome,
    u: Vertex,
) -> (Vec<Vertex>, Vec<Vertex>) {
    let n = g.n();
    let mut in_s = vec![false; n + 1];
    let mut supplier_seen = vec![false; n + 1];
    in_s[u] = true;
    let mut queue = vec![u];
    while let Some(d) = queue.pop() {
        for &w in g.neighbors(d) {
            if in_set[w] && !supplier_seen[w] {
                supplier_seen[w] = true;
                for &x in &outcome.assigned_demands[w] {
                    if !in_s[x] {
                        in_s[x] = true;
                        queue.push(x);
                    }
                }
            }
        }
    }
    let deficient: Vec<Vertex> = (1..=n).filter(|&v| in_s[v]).collect();
    let mut candidate = vec![false; n + 1];
    for &s in &deficient {
        candidate[s] = true;
        for &w in g.neighbors(s) {
            if !in_set[w] {
                candidate[w] = true;
            }
        }
    }
    let candidates: Vec<Vertex> = (1..=n).filter(|&v| candidate[v]).collect();
    (deficient, candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::{fig1_instance, star};
    use crate::Graph;

    #[test]
    fn fig1_ceil_paper_set_is_feasible_and_minimal() {
        let inst = fig1_instance();
        let result = coverage_feasible(&inst, CapacityRule::Ceil, &[2, 3, 4]).unwrap();
        match &result {
            Feasibility::Feasible(assignment) => {
                let cert = Certificate {
                    set: vec![2, 3, 4],
                    assignment: assignment.clone(),
                    rule: CapacityRule::Ceil,
                };
                assert!(cert.verify(&inst));
            }
            Feasibility::Infeasible(w) => panic!("expected feasible, got {w:?}"),
        }
        assert!(is_minimal(&inst, CapacityRule::Ceil, &[2, 3, 4]).unwrap());
    }

    #[test]
    fn fig1_translate_pair() {
        let inst = fig1_instance();
        assert!(coverage_feasible(&inst, CapacityRule::Translate, &[3, 4])
            .unwrap()
            .is_feasible());
        // The paper's minimal-but-not-minimum set.
        assert!(is_minimal(&inst, CapacityRule::Translate, &[2, 3, 7]).unwrap());
    }

    #[test]
    fn fig1_singleton_fails_on_coverage() {
        let inst = fig1_instance();
        for rule in CapacityRule::STANDARD {
            match coverage_feasible(&inst, rule, &[4]).unwrap() {
                Feasibility::Infeasible(w) => assert_eq!(w, vec![3]),
                Feasibility::Feasible(_) => panic!("{rule}: expected infeasible"),
            }
        }
    }

    #[test]
    fn capacity_only_failure_reports_unmatched() {
        // D = {3,4} under floor: capacities 2,1 but five demands.
        let inst = fig1_instance();
        match coverage_feasible(&inst, CapacityRule::Floor, &[3, 4]).unwrap() {
            Feasibility::Infeasible(w) => {
                assert!(!w.is_empty());
                assert!(w.iter().all(|&u| ![3usize, 4].contains(&u)));
            }
            Feasibility::Feasible(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn whole_vertex_set_is_feasible_with_empty_assignment() {
        let inst = fig1_instance();
        for rule in CapacityRule::STANDARD {
            match coverage_feasible(&inst, rule, &[1, 2, 3, 4, 5, 6, 7]).unwrap() {
                Feasibility::Feasible(assignment) => assert!(assignment.is_empty()),
                Feasibility::Infeasible(_) => panic!("V must be feasible"),
            }
        }
        assert!(!is_minimal(&inst, CapacityRule::Ceil, &[1, 2, 3, 4, 5, 6, 7]).unwrap());
    }

    #[test]
    fn minimality_rejects_invalid_input() {
        let inst = fig1_instance();
        assert!(matches!(
            is_minimal(&inst, CapacityRule::Ceil, &[4]),
            Err(CertifyError::NotADrdSet { .. })
        ));
    }

    #[test]
    fn out_of_range_set() {
        let inst = fig1_instance();
        assert!(matches!(
            coverage_feasible(&inst, CapacityRule::Ceil, &[8]),
            Err(CertifyError::Graph(GraphError::OutOfRange { .. }))
        ));
    }

    #[test]
    fn augmentation_relocates_demands() {
        // Star K_{1,4}, all k = 1: center capacity 4. D = {center, leaf 2}:
        // demands 3,4,5 must all route to the center even after 2 joins D.
        let g = star(4);
        let inst = Instance::new(g, vec![1, 1, 1, 1, 1]).unwrap();
        assert!(coverage_feasible(&inst, CapacityRule::Ceil, &[1, 2])
            .unwrap()
            .is_feasible());
    }

    #[test]
    fn deficient_closure_on_orphan_is_closed_neighborhood() {
        // P3 with D = {}: vertex 1 unmatched, S = {1}, candidates = {1,2}.
        let g = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let caps = vec![0, 1, 2, 1];
        let in_set = vec![false; 4];
        let outcome = max_b_matching(&g, &caps, &in_set);
        assert_eq!(outcome.unmatched, vec![1, 2, 3]);
        let (s, c) = deficient_closure(&g, &in_set, &outcome, 1);
        assert_eq!(s, vec![1]);
        assert_eq!(c, vec![1, 2]);
    }
}
