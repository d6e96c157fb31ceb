//! Shared fixtures for unit tests.

use crate::graph::Graph;
use crate::restriction::Instance;

/// 7-vertex example graph: edges {1,3} {1,4} {2,4} {2,5} {3,6} {4,5} {4,6}
/// {4,7}, degree sequence (2,2,2,5,2,2,1).
pub fn fig1_graph() -> Graph {
    Graph::from_edges(
        7,
        &[(3, 1), (1, 4), (4, 2), (4, 5), (4, 7), (4, 6), (3, 6), (2, 5)],
    )
    .unwrap()
}

/// The example graph with its standard restriction f = (2,2,1,3,2,1,1).
pub fn fig1_instance() -> Instance {
    Instance::new(fig1_graph(), vec![2, 2, 1, 3, 2, 1, 1]).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((n, 1));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with `leaves` leaves; center is vertex 1.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}
