//! Restriction functions and capacity rules.
//!
//! An [`Instance`] pairs a graph with a per-vertex restriction value
//! `k_v` (admissible window `1 <= k_v <= d_v`, with `k_v = 1` on isolated
//! vertices). A [`CapacityRule`] turns `(d_v, k_v)` into the number of
//! outside vertices `v` may dominate when it is chosen.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RestrictionError {
    #[error("inadmissible f: vertex {vertex} has k={value} outside [1,{degree}]")]
    InadmissibleF {
        vertex: Vertex,
        value: usize,
        degree: usize,
    },
    #[error("inadmissible f: isolated vertex {vertex} must have k=1, got {value}")]
    IsolateNotOne { vertex: Vertex, value: usize },
    #[error("f has {got} values for a graph of order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("kpart:{k} exceeds the minimum degree {min_degree}")]
    KPartTooLarge { k: usize, min_degree: usize },
}

/// How many vertices of `V - D` a chosen vertex may dominate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CapacityRule {
    /// `ceil(d/k)`.
    Ceil,
    /// `floor(d/k)`.
    Floor,
    /// `d - k + 1`.
    Translate,
    /// `d`: plain domination (a vertex has only `d` neighbors, so this
    /// capacity never binds).
    Classic,
    /// `ceil(d/k)` with one uniform `k`; requires `k <= min_degree`.
    KPart(usize),
}

impl CapacityRule {
    /// The three rules from the degree-restricted family plus the classic
    /// baseline, in chain order.
    pub const STANDARD: [CapacityRule; 4] = [
        CapacityRule::Classic,
        CapacityRule::Ceil,
        CapacityRule::Floor,
        CapacityRule::Translate,
    ];

    /// Validates rule applicability on an instance (only `KPart` can fail).
    pub fn check(&self, inst: &Instance) -> Result<(), RestrictionError> {
        if let CapacityRule::KPart(k) = *self {
            let min_degree = inst.graph().min_degree();
            if k > min_degree {
                return Err(RestrictionError::KPartTooLarge { k, min_degree });
            }
        }
        Ok(())
    }
}

impl fmt::Display for CapacityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapacityRule::Ceil => write!(f, "ceil"),
            CapacityRule::Floor => write!(f, "floor"),
            CapacityRule::Translate => write!(f, "translate"),
            CapacityRule::Classic => write!(f, "classic"),
            CapacityRule::KPart(k) => write!(f, "kpart:{k}"),
        }
    }
}

impl FromStr for CapacityRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ceil" => Ok(CapacityRule::Ceil),
            "floor" => Ok(CapacityRule::Floor),
            "translate" => Ok(CapacityRule::Translate),
            "classic" => Ok(CapacityRule::Classic),
            _ => {
                if let Some(rest) = s.strip_prefix("kpart:") {
                    let k: usize = rest
                        .parse()
                        .map_err(|_| format!("bad kpart value {rest:?}"))?;
                    if k == 0 {
                        return Err("kpart value must be positive".into());
                    }
                    Ok(CapacityRule::KPart(k))
                } else {
                    Err(format!(
                        "unknown rule {s:?} (expected ceil|floor|translate|classic|kpart:<k>)"
                    ))
                }
            }
        }
    }
}

/// Checks the admissibility window for a candidate restriction vector
/// (`f[i]` belongs to vertex `i+1`).
pub fn validate_f(graph: &Graph, f: &[usize]) -> Result<(), RestrictionError> {
    if f.len() != graph.n() {
        return Err(RestrictionError::WrongLength {
            expected: graph.n(),
            got: f.len(),
        });
    }
    for v in graph.vertices() {
        let k = f[v - 1];
        let d = graph.degree(v);
        if d == 0 {
            if k != 1 {
                return Err(RestrictionError::IsolateNotOne { vertex: v, value: k });
            }
        } else if k < 1 || k > d {
            return Err(RestrictionError::InadmissibleF {
                vertex: v,
                value: k,
                degree: d,
            });
        }
    }
    Ok(())
}

/// A graph together with an admissible restriction function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    f: Vec<usize>,
}

impl Instance {
    pub fn new(graph: Graph, f: Vec<usize>) -> Result<Self, RestrictionError> {
        validate_f(&graph, &f)?;
        Ok(Instance { graph, f })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Restriction value of vertex `v`.
    pub fn f(&self, v: Vertex) -> usize {
        self.f[v - 1]
    }

    /// Restriction values in vertex order `k_1..k_n`.
    pub fn f_values(&self) -> &[usize] {
        &self.f
    }

    /// Domination capacity of `v` under `rule`. Isolated vertices have
    /// capacity 0 under every rule. For `KPart` the premise `k <= delta`
    /// is enforced by [`Instance::capacity_vector`] and the solvers, not
    /// here.
    pub fn capacity(&self, rule: CapacityRule, v: Vertex) -> usize {
        let d = self.graph.degree(v);
        match rule {
            CapacityRule::Ceil => ceil_div(d, self.f(v)),
            CapacityRule::Floor => d / self.f(v),
            CapacityRule::Translate => (d + 1).saturating_sub(self.f(v)),
            CapacityRule::Classic => d,
            CapacityRule::KPart(k) => ceil_div(d, k),
        }
    }

    /// Capacities indexed by vertex (entry 0 is unused and zero).
    pub fn capacity_vector(&self, rule: CapacityRule) -> Result<Vec<usize>, RestrictionError> {
        rule.check(self)?;
        let mut caps = vec![0; self.n() + 1];
        for v in self.graph.vertices() {
            caps[v] = self.capacity(rule, v);
        }
        Ok(caps)
    }
}

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::{fig1_instance, star};
    use crate::Graph;

    fn caps(inst: &Instance, rule: CapacityRule) -> Vec<usize> {
        inst.capacity_vector(rule).unwrap()[1..].to_vec()
    }

    #[test]
    fn fig1_capacity_vectors() {
        let inst = fig1_instance();
        assert_eq!(caps(&inst, CapacityRule::Ceil), vec![1, 1, 2, 2, 1, 2, 1]);
        assert_eq!(caps(&inst, CapacityRule::Floor), vec![1, 1, 2, 1, 1, 2, 1]);
        assert_eq!(
            caps(&inst, CapacityRule::Translate),
            vec![1, 1, 2, 3, 1, 2, 1]
        );
        assert_eq!(inst.capacity(CapacityRule::Ceil, 4), 2);
        assert_eq!(inst.capacity(CapacityRule::Floor, 4), 1);
        assert_eq!(inst.capacity(CapacityRule::Translate, 4), 3);
    }

    #[test]
    fn all_ones_reduces_to_classic() {
        let inst = fig1_instance();
        let ones = Instance::new(inst.graph().clone(), vec![1; 7]).unwrap();
        for v in ones.graph().vertices() {
            assert_eq!(
                ones.capacity(CapacityRule::Ceil, v),
                ones.graph().degree(v)
            );
        }
    }

    #[test]
    fn isolate_capacity_is_zero() {
        let k1 = Instance::new(Graph::from_edges(1, &[]).unwrap(), vec![1]).unwrap();
        for rule in CapacityRule::STANDARD {
            assert_eq!(caps(&k1, rule), vec![0]);
        }
        assert_eq!(caps(&k1, CapacityRule::KPart(0)).len(), 1); // never constructed via parser
    }

    #[test]
    fn admissibility_window() {
        let g = fig1_instance().graph().clone();
        let err = Instance::new(g.clone(), vec![2, 2, 1, 6, 2, 1, 1]).unwrap_err();
        assert_eq!(
            err,
            RestrictionError::InadmissibleF {
                vertex: 4,
                value: 6,
                degree: 5
            }
        );
        assert!(Instance::new(g, vec![2, 2, 1, 3, 2, 1, 1]).is_ok());
    }

    #[test]
    fn isolate_requires_one() {
        let g = Graph::from_edges(2, &[]).unwrap();
        assert!(matches!(
            Instance::new(g, vec![1, 2]),
            Err(RestrictionError::IsolateNotOne { vertex: 2, value: 2 })
        ));
    }

    #[test]
    fn kpart_premise() {
        let inst = fig1_instance(); // min degree 1
        assert!(inst.capacity_vector(CapacityRule::KPart(1)).is_ok());
        assert_eq!(
            inst.capacity_vector(CapacityRule::KPart(2)).unwrap_err(),
            RestrictionError::KPartTooLarge { k: 2, min_degree: 1 }
        );
    }

    #[test]
    fn star_all_degrees() {
        let g = star(4);
        let inst = Instance::new(g, vec![4, 1, 1, 1, 1]).unwrap();
        assert_eq!(caps(&inst, CapacityRule::Ceil), vec![1, 1, 1, 1, 1]);
    }

    /// Pointwise capacity ordering over the whole admissible window,
    /// exhaustively for d <= 50.
    #[test]
    fn capacity_order_exhaustive() {
        for d in 1..=50usize {
            for k in 1..=d {
                let ceil = ceil_div(d, k);
                let floor = d / k;
                let translate = d - k + 1;
                assert!(floor <= ceil, "floor<=ceil failed at d={d} k={k}");
                assert!(ceil <= d, "ceil<=classic failed at d={d} k={k}");
                assert!(ceil <= translate, "ceil<=translate failed at d={d} k={k}");
                if k == d {
                    assert_eq!(ceil, 1);
                    assert_eq!(floor, 1);
                    assert_eq!(translate, 1);
                }
                if d % k == 0 {
                    assert_eq!(ceil, floor);
                }
            }
        }
    }

    #[test]
    fn rule_strings_round_trip() {
        for rule in [
            CapacityRule::Ceil,
            CapacityRule::Floor,
            CapacityRule::Translate,
            CapacityRule::Classic,
            CapacityRule::KPart(3),
        ] {
            assert_eq!(rule.to_string().parse::<CapacityRule>().unwrap(), rule);
        }
        assert!("kpart:0".parse::<CapacityRule>().is_err());
        assert!("cail".parse::<CapacityRule>().is_err());
    }
}
