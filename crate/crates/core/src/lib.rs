//! Degree-restricted domination: exact solvers, validity certificates and
//! a claim-checking harness.
//!
//! A dominating set is *degree restricted* when each chosen vertex `v`
//! (degree `d`, restriction value `k` with `1 <= k <= d`) may be assigned
//! at most a capacity of outside vertices, where the capacity is
//! `ceil(d/k)`, `floor(d/k)` or `d - k + 1` depending on the rule.
//! Validity of a set means a capacity-respecting assignment exists; it is
//! decided by bipartite b-matching ([`certify`]). Minimum cardinalities
//! are computed exactly ([`solve`]), and the structural claims relating
//! them to classical invariants are tested against brute force over
//! generated families ([`theorems`]).

pub mod certify;
pub mod format;
pub mod generators;
pub mod graph;
pub mod restriction;
pub mod solve;
pub mod theorems;

#[cfg(test)]
pub(crate) mod test_graphs;

pub use certify::{coverage_feasible, is_minimal, Certificate, CertifyError, Feasibility};
pub use format::{instance_digest, parse_instance, serialize_instance, ParseError};
pub use generators::{generate_f, generate_gnp, FMode, FamilyGraph, FamilySpec, GenError, Role};
pub use graph::{Graph, GraphError, Vertex};
pub use restriction::{CapacityRule, Instance, RestrictionError};
pub use solve::{
    edge_cover_number, greedy_upper_bound, independence_number, lower_bound, max_matching,
    solve_brute, solve_brute_with_limit, solve_bnb, SolveError, SolveMethod, SolveResult,
    DEFAULT_BRUTE_LIMIT,
};
pub use theorems::{
    check_theorem, run_corpus, CorpusConfig, CorpusError, CorpusSummary, Counterexample,
    CounterexampleRecord, TheoremId, TheoremReport, TheoremTally, Verdict,
};
