//! Immutable simple undirected graph with 1-based vertex indices.
//!
//! All derived quantities (degrees, min/max degree) are computed once at
//! construction; neighbor lists are kept sorted ascending so every
//! downstream iteration order is deterministic.

use std::collections::VecDeque;

use thiserror::Error;

/// 1-based vertex index.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(Vertex, Vertex),
}

/// Simple undirected graph on vertices `1..=n`, no self-loops, no parallel
/// edges. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    max_degree: usize,
    min_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may come in either order;
    /// `{u,v}` and `{v,u}` count as the same edge and are rejected as
    /// duplicates.
    pub fn from_edges(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n + 1];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        edges.sort_unstable();
        let max_degree = adj.iter().skip(1).map(Vec::len).max().unwrap_or(0);
        let min_degree = adj.iter().skip(1).map(Vec::len).min().unwrap_or(0);
        Ok(Graph {
            n,
            adj,
            edges,
            max_degree,
            min_degree,
        })
    }

    /// Number of vertices (the order of the graph).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges (the size of the graph).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Iterator over `1..=n`.
    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Canonical edge list: `u < v`, sorted ascending.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree Δ (0 for the empty graph).
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Minimum degree δ (0 for the empty graph).
    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < 1 || v > self.n {
            return Err(GraphError::OutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Hop distances from `source` to every vertex; `None` marks a vertex in
    /// another component. Index 0 of the returned vector is unused.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<Option<usize>>, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n + 1];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Shortest-path hop count between `u` and `v`; `None` when they lie in
    /// different components; `Some(0)` when `u == v`.
    pub fn bfs_distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)?[v])
    }

    /// Radius of the graph restricted to `s`: the minimum hop distance over
    /// unordered pairs of *distinct* vertices of `s`. `None` means infinite
    /// (|s| <= 1, or every pair is unreachable). Duplicates in `s` are
    /// ignored.
    pub fn restricted_radius(&self, s: &[Vertex]) -> Result<Option<usize>, GraphError> {
        let mut set: Vec<Vertex> = s.to_vec();
        for &v in &set {
            self.check_vertex(v)?;
        }
        set.sort_unstable();
        set.dedup();
        let mut best: Option<usize> = None;
        for (i, &u) in set.iter().enumerate() {
            let dist = self.bfs_distances(u)?;
            for &v in &set[i + 1..] {
                if let Some(d) = dist[v] {
                    best = Some(best.map_or(d, |b| b.min(d)));
                }
            }
        }
        Ok(best)
    }

    /// Two-coloring witness if the graph is bipartite (no odd cycle).
    /// Index 0 of the returned vector is unused.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n + 1];
        for start in self.vertices() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// All degree-0 vertices, ascending.
    pub fn isolates(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn is_isolate_free(&self) -> bool {
        self.n == 0 || self.min_degree > 0
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let dist = self.bfs_distances(1).expect("vertex 1 exists");
        self.vertices().all(|v| dist[v].is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_graphs::{cycle, fig1_graph, path};

    #[test]
    fn fig1_degrees() {
        let g = fig1_graph();
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![2, 2, 2, 5, 2, 2, 1]);
        assert_eq!(g.m(), 8);
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.min_degree(), 1);
        assert!(g.isolates().is_empty());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.degree(1), 0);
        assert_eq!(g.isolates(), vec![1]);
    }

    #[test]
    fn rejects_unordered_duplicate() {
        let err = Graph::from_edges(3, &[(1, 2), (2, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(2, 1));
    }

    #[test]
    fn rejects_out_of_range_and_self_loop() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 4)]).unwrap_err(),
            GraphError::OutOfRange { vertex: 4, n: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, &[(2, 2)]).unwrap_err(),
            GraphError::SelfLoop(2)
        );
    }

    #[test]
    fn bfs_on_cycle() {
        let g = cycle(6);
        assert_eq!(g.bfs_distance(1, 4).unwrap(), Some(3));
        assert_eq!(g.bfs_distance(3, 3).unwrap(), Some(0));
    }

    #[test]
    fn bfs_unreachable() {
        let g = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(g.bfs_distance(1, 2).unwrap(), None);
    }

    #[test]
    fn restricted_radius_cycle_pairs() {
        let g6 = cycle(6);
        assert_eq!(g6.restricted_radius(&[1, 4]).unwrap(), Some(3));

        // Brute-force all-pairs check for C9 {1,4,7}.
        let g9 = cycle(9);
        let s = [1, 4, 7];
        let mut expected = usize::MAX;
        for (i, &u) in s.iter().enumerate() {
            for &v in &s[i + 1..] {
                expected = expected.min(g9.bfs_distance(u, v).unwrap().unwrap());
            }
        }
        assert_eq!(expected, 3);
        assert_eq!(g9.restricted_radius(&s).unwrap(), Some(3));
    }

    #[test]
    fn restricted_radius_degenerate() {
        let g = cycle(6);
        assert_eq!(g.restricted_radius(&[1]).unwrap(), None);
        assert_eq!(g.restricted_radius(&[]).unwrap(), None);
        // All pairs unreachable.
        let g2 = Graph::from_edges(2, &[]).unwrap();
        assert_eq!(g2.restricted_radius(&[1, 2]).unwrap(), None);
    }

    #[test]
    fn bipartite_probes() {
        assert!(cycle(6).is_bipartite());
        let k3 = Graph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!k3.is_bipartite());
        let star = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let coloring = star.bipartition().unwrap();
        assert!(star
            .edges()
            .iter()
            .all(|&(u, v)| coloring[u] != coloring[v]));
    }

    #[test]
    fn isolates_in_mixed_graph() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(g.isolates(), vec![4]);
    }

    #[test]
    fn connectivity() {
        assert!(path(5).is_connected());
        assert!(!Graph::from_edges(3, &[(1, 2)]).unwrap().is_connected());
    }
}
