//! Small named graphs with hand-checkable metrics.

use crate::graph::{build_directed, build_undirected, DirectedGraph, NodeId, UndirectedGraph};

/// Eight-node example graph, labels `A`–`H`.
///
/// Degrees A..H are 4, 3, 6, 3, 3, 2, 1, 2. Nodes A–E (degree > 2) share
/// eight links, B lies on one triangle and C on five.
pub fn figure_1a() -> UndirectedGraph {
    build_undirected([
        ("A", "B"),
        ("A", "C"),
        ("A", "D"),
        ("A", "E"),
        ("B", "C"),
        ("B", "G"),
        ("C", "D"),
        ("C", "E"),
        ("C", "F"),
        ("C", "H"),
        ("D", "E"),
        ("F", "H"),
    ])
}

/// Directed example: A has in-neighbours B, C, E and out-neighbours C, D.
pub fn figure_1b() -> DirectedGraph {
    build_directed([
        ("B", "A"),
        ("C", "A"),
        ("E", "A"),
        ("A", "C"),
        ("A", "D"),
        ("B", "C"),
        ("E", "C"),
        ("C", "D"),
    ])
}

/// Complete graph K_n.
pub fn complete(n: usize) -> UndirectedGraph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as NodeId {
        for v in u + 1..n as NodeId {
            edges.push((u, v));
        }
    }
    UndirectedGraph::from_index_edges(n, edges)
}

/// Star with `n` nodes: hub `0` linked to leaves `1..n`.
pub fn star(n: usize) -> UndirectedGraph {
    UndirectedGraph::from_index_edges(n, (1..n as NodeId).map(|v| (0, v)).collect())
}

/// Path `0 - 1 - … - (n-1)`.
pub fn path(n: usize) -> UndirectedGraph {
    UndirectedGraph::from_index_edges(n, (1..n as NodeId).map(|v| (v - 1, v)).collect())
}
