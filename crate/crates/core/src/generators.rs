//! Deterministic constructors for the graph families the claim checks run
//! on, plus seeded random graphs and restriction functions.
//!
//! Randomness comes from a ChaCha8 stream keyed with `seed_from_u64`, with
//! hand-rolled uniform/Bernoulli mappings (see [`Stream`]), so identical
//! parameters reproduce identical output on any platform.

use std::fmt;
use std::str::FromStr;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::restriction::{validate_f, RestrictionError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("edge probability {0} outside [0,1]")]
    InvalidProbability(f64),
}

/// Graph family, parsed from / printed as the CLI grammar
/// `path:<n> | cycle:<n> | complete:<n> | star:<leaves> |
/// caterpillar:<l1>,<l2>,... | c2:<spine>,<leaves> | gnp:<n>,<p>,<seed>`.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Star with this many leaves; the center is vertex 1.
    Star(usize),
    /// One leaf count per spine vertex (counts may be 0).
    Caterpillar(Vec<usize>),
    /// Caterpillar with `leaves` leaves on every spine position
    /// `i ≡ 2 (mod 3)` and none elsewhere.
    C2Caterpillar { spine: usize, leaves: usize },
    Gnp { n: usize, p: f64, seed: u64 },
}

/// Structural role of each generated vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Spine,
    Leaf,
    Center,
    Plain,
}

/// A generated graph with per-vertex role labels (entry 0 unused).
#[derive(Debug, Clone)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl FamilySpec {
    /// Builds the family member with canonical numbering: spine vertices
    /// first in path order, then leaves grouped by spine vertex ascending;
    /// a star's center is vertex 1.
    pub fn generate(&self) -> Result<FamilyGraph, GenError> {
        match self {
            FamilySpec::Path(n) => {
                require(*n >= 1, "path needs n >= 1")?;
                let edges: Vec<_> = (1..*n).map(|i| (i, i + 1)).collect();
                Ok(FamilyGraph {
                    graph: graph(*n, &edges),
                    roles: roles_all(*n, Role::Spine),
                })
            }
            FamilySpec::Cycle(n) => {
                require(*n >= 3, "cycle needs n >= 3")?;
                let mut edges: Vec<_> = (1..*n).map(|i| (i, i + 1)).collect();
                edges.push((1, *n));
                Ok(FamilyGraph {
                    graph: graph(*n, &edges),
                    roles: roles_all(*n, Role::Spine),
                })
            }
            FamilySpec::Complete(n) => {
                require(*n >= 1, "complete graph needs n >= 1")?;
                let mut edges = Vec::new();
                for u in 1..=*n {
                    for v in u + 1..=*n {
                        edges.push((u, v));
                    }
                }
                Ok(FamilyGraph {
                    graph: graph(*n, &edges),
                    roles: roles_all(*n, Role::Plain),
                })
            }
            FamilySpec::Star(leaves) => {
                require(*leaves >= 1, "star needs at least one leaf")?;
                let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
                let mut roles = roles_all(leaves + 1, Role::Leaf);
                roles[1] = Role::Center;
                Ok(FamilyGraph {
                    graph: graph(leaves + 1, &edges),
                    roles,
                })
            }
            FamilySpec::Caterpillar(leaf_counts) => {
                require(!leaf_counts.is_empty(), "caterpillar needs a spine")?;
                let spine = leaf_counts.len();
                let n = spine + leaf_counts.iter().sum::<usize>();
                let mut edges: Vec<_> = (1..spine).map(|i| (i, i + 1)).collect();
                let mut roles = roles_all(n, Role::Leaf);
                let mut next = spine;
                for (i, &l) in leaf_counts.iter().enumerate() {
                    roles[i + 1] = Role::Spine;
                    for _ in 0..l {
                        next += 1;
                        edges.push((i + 1, next));
                    }
                }
                Ok(FamilyGraph {
                    graph: graph(n, &edges),
                    roles,
                })
            }
            FamilySpec::C2Caterpillar { spine, leaves } => {
                require(*spine >= 1, "c2 caterpillar needs a spine")?;
                require(*leaves >= 1, "c2 caterpillar needs leaves >= 1")?;
                let counts: Vec<usize> = (1..=*spine)
                    .map(|i| if i % 3 == 2 { *leaves } else { 0 })
                    .collect();
                let mut family = FamilySpec::Caterpillar(counts).generate()?;
                for i in 1..=*spine {
                    if i % 3 == 2 {
                        family.roles[i] = Role::Center;
                    }
                }
                Ok(family)
            }
            FamilySpec::Gnp { n, p, seed } => {
                let g = generate_gnp(*n, *p, *seed)?;
                let n = g.n();
                Ok(FamilyGraph {
                    graph: g,
                    roles: roles_all(n, Role::Plain),
                })
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(l) => write!(f, "star:{l}"),
            FamilySpec::Caterpillar(ls) => {
                let list: Vec<String> = ls.iter().map(usize::to_string).collect();
                write!(f, "caterpillar:{}", list.join(","))
            }
            FamilySpec::C2Caterpillar { spine, leaves } => write!(f, "c2:{spine},{leaves}"),
            FamilySpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p},{seed}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| GenError::InvalidSpec(format!("missing ':' in {s:?}")))?;
        let bad = |what: &str| GenError::InvalidSpec(format!("bad {what} in {s:?}"));
        match name {
            "path" => Ok(FamilySpec::Path(args.parse().map_err(|_| bad("order"))?)),
            "cycle" => Ok(FamilySpec::Cycle(args.parse().map_err(|_| bad("order"))?)),
            "complete" => Ok(FamilySpec::Complete(args.parse().map_err(|_| bad("order"))?)),
            "star" => Ok(FamilySpec::Star(args.parse().map_err(|_| bad("leaf count"))?)),
            "caterpillar" => {
                let counts: Result<Vec<usize>, _> =
                    args.split(',').map(|t| t.parse::<usize>()).collect();
                Ok(FamilySpec::Caterpillar(
                    counts.map_err(|_| bad("leaf counts"))?,
                ))
            }
            "c2" => {
                let (a, b) = args.split_once(',').ok_or_else(|| bad("arguments"))?;
                Ok(FamilySpec::C2Caterpillar {
                    spine: a.parse().map_err(|_| bad("spine length"))?,
                    leaves: b.parse().map_err(|_| bad("leaf count"))?,
                })
            }
            "gnp" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(bad("arguments (want n,p,seed)"));
                }
                Ok(FamilySpec::Gnp {
                    n: parts[0].parse().map_err(|_| bad("order"))?,
                    p: parts[1].parse().map_err(|_| bad("probability"))?,
                    seed: parts[2].parse().map_err(|_| bad("seed"))?,
                })
            }
            _ => Err(GenError::InvalidSpec(format!("unknown family {name:?}"))),
        }
    }
}

/// Erdős–Rényi G(n,p): every unordered pair `{u,v}` with `u < v`, visited
/// in lexicographic order, is included independently with probability `p`
/// (one Bernoulli draw per pair). Same `(n, p, seed)` always yields the
/// identical edge set.
pub fn generate_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::InvalidProbability(p));
    }
    let mut stream = Stream::new(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if stream.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(graph(n, &edges))
}

/// How to draw a restriction function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FMode {
    AllOnes,
    /// `k_v = d_v` (1 on isolated vertices).
    AllDegrees,
    /// Independent uniform draw from `[1, d_v]` per vertex in ascending
    /// vertex order (isolated vertices get 1 without consuming a draw).
    UniformRandom(u64),
    Explicit(Vec<usize>),
}

impl fmt::Display for FMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FMode::AllOnes => write!(f, "allones"),
            FMode::AllDegrees => write!(f, "alldegrees"),
            FMode::UniformRandom(seed) => write!(f, "uniform:{seed}"),
            FMode::Explicit(ks) => {
                let list: Vec<String> = ks.iter().map(usize::to_string).collect();
                write!(f, "explicit:{}", list.join(","))
            }
        }
    }
}

impl FromStr for FMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "allones" => return Ok(FMode::AllOnes),
            "alldegrees" => return Ok(FMode::AllDegrees),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("uniform:") {
            return rest
                .parse()
                .map(FMode::UniformRandom)
                .map_err(|_| format!("bad uniform seed {rest:?}"));
        }
        if let Some(rest) = s.strip_prefix("explicit:") {
            let ks: Result<Vec<usize>, _> = rest.split(',').map(|t| t.parse()).collect();
            return ks
                .map(FMode::Explicit)
                .map_err(|_| format!("bad explicit values {rest:?}"));
        }
        Err(format!(
            "unknown f mode {s:?} (expected allones|alldegrees|uniform:<seed>|explicit:<k1>,...)"
        ))
    }
}

/// Draws an admissible restriction vector `k_1..k_n` for `g`.
pub fn generate_f(g: &Graph, mode: &FMode) -> Result<Vec<usize>, RestrictionError> {
    let f: Vec<usize> = match mode {
        FMode::AllOnes => vec![1; g.n()],
        FMode::AllDegrees => g.vertices().map(|v| g.degree(v).max(1)).collect(),
        FMode::UniformRandom(seed) => {
            let mut stream = Stream::new(*seed);
            g.vertices()
                .map(|v| {
                    let d = g.degree(v);
                    if d == 0 {
                        1
                    } else {
                        stream.uniform(d)
                    }
                })
                .collect()
        }
        FMode::Explicit(ks) => ks.clone(),
    };
    validate_f(g, &f)?;
    Ok(f)
}

/// ChaCha8 stream with portable derived draws.
///
/// - `uniform(d)`: unbiased value in `[1, d]` by rejection: draw `x` as
///   u64, accept when `x < floor(2^64-1 / d) * d`, return `1 + x mod d`.
/// - `bernoulli(p)`: true iff `(next_u64 >> 11) / 2^53 < p`.
pub(crate) struct Stream(ChaCha8Rng);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn uniform(&mut self, d: usize) -> usize {
        debug_assert!(d >= 1);
        if d == 1 {
            return 1;
        }
        let d64 = d as u64;
        let threshold = (u64::MAX / d64) * d64;
        loop {
            let x = self.0.next_u64();
            if x < threshold {
                return 1 + (x % d64) as usize;
            }
        }
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        let bits = self.0.next_u64() >> 11;
        (bits as f64) / ((1u64 << 53) as f64) < p
    }
}

fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits canonical edge lists")
}

fn roles_all(n: usize, role: Role) -> Vec<Role> {
    let mut roles = vec![role; n + 1];
    roles[0] = Role::Plain;
    roles
}

fn require(cond: bool, msg: &str) -> Result<(), GenError> {
    if cond {
        Ok(())
    } else {
        Err(GenError::InvalidSpec(msg.into()))
    }
}
