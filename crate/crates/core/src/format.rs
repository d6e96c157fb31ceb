//! The instance file format.
//!
//! ```text
//! # optional comment lines anywhere
//! p drd <n> <m>
//! f <k1> <k2> ... <kn>
//! e <u> <v>        (exactly m lines, 1-based endpoints)
//! ```
//!
//! Tokens are separated by single spaces and the trailing newline is
//! required. [`serialize_instance`] emits the canonical form: no comments,
//! edges sorted ascending with `u < v`; parsing a canonical file and
//! serializing again is the identity.

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::restriction::{Instance, RestrictionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("line {line}: {source}")]
    InadmissibleF {
        line: usize,
        #[source]
        source: RestrictionError,
    },
    #[error("declared {declared} edges but found {found}")]
    CountMismatch { declared: usize, found: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Splits a significant line into single-space-separated tokens; empty
/// tokens (doubled or leading/trailing spaces) are rejected.
fn tokens(line: usize, text: &str) -> Result<Vec<&str>, ParseError> {
    let parts: Vec<&str> = text.split(' ').collect();
    if parts.iter().any(|t| t.is_empty()) {
        return Err(syntax(line, "malformed whitespace (single spaces required)"));
    }
    Ok(parts)
}

fn parse_num(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("bad {what} {token:?}")))
}

/// Parses an instance file.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    if !text.is_empty() && !text.ends_with('\n') {
        let last = text.lines().count();
        return Err(syntax(last, "missing trailing newline"));
    }
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    let (pline, ptext) = significant
        .next()
        .ok_or_else(|| syntax(1, "missing problem line"))?;
    let ptoks = tokens(pline, ptext)?;
    if ptoks.len() != 4 || ptoks[0] != "p" || ptoks[1] != "drd" {
        return Err(syntax(pline, "expected `p drd <n> <m>`"));
    }
    let n = parse_num(pline, ptoks[2], "vertex count")?;
    if n == 0 {
        return Err(syntax(pline, "vertex count must be at least 1"));
    }
    let m = parse_num(pline, ptoks[3], "edge count")?;

    let (fline, ftext) = significant
        .next()
        .ok_or_else(|| syntax(pline, "missing f line"))?;
    let ftoks = tokens(fline, ftext)?;
    if ftoks.first() != Some(&"f") {
        return Err(syntax(fline, "expected `f <k1> ... <kn>`"));
    }
    if ftoks.len() != n + 1 {
        return Err(syntax(
            fline,
            format!("expected {n} f values, found {}", ftoks.len() - 1),
        ));
    }
    let mut f = Vec::with_capacity(n);
    for tok in &ftoks[1..] {
        f.push(parse_num(fline, tok, "f value")?);
    }

    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (eline, etext) in significant {
        let etoks = tokens(eline, etext)?;
        if etoks.first() != Some(&"e") || etoks.len() != 3 {
            return Err(syntax(eline, "expected `e <u> <v>`"));
        }
        let u = parse_num(eline, etoks[1], "endpoint")?;
        let v = parse_num(eline, etoks[2], "endpoint")?;
        for w in [u, v] {
            if w < 1 || w > n {
                return Err(ParseError::Graph {
                    line: eline,
                    source: GraphError::OutOfRange { vertex: w, n },
                });
            }
        }
        if u == v {
            return Err(ParseError::Graph {
                line: eline,
                source: GraphError::SelfLoop(u),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::Graph {
                line: eline,
                source: GraphError::DuplicateEdge(u, v),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }

    let graph = Graph::from_edges(n, &edges).expect("edge list pre-validated");
    Instance::new(graph, f).map_err(|source| ParseError::InadmissibleF {
        line: fline,
        source,
    })
}

/// Canonical serialization; `parse_instance(serialize_instance(i)) == i`.
pub fn serialize_instance(inst: &Instance) -> String {
    let g = inst.graph();
    let mut out = format!("p drd {} {}\n", g.n(), g.m());
    out.push('f');
    for k in inst.f_values() {
        out.push(' ');
        out.push_str(&k.to_string());
    }
    out.push('\n');
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Short hex digest of the canonical serialization; used to key verdicts
/// and counterexample files.
pub fn instance_digest(inst: &Instance) -> String {
    let mut hasher = Sha256::new();
    hasher.update(serialize_instance(inst).as_bytes());
    let digest = hasher.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}
