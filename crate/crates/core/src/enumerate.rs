//! Exhaustive sweeps over small labeled graphs.

use crate::graph::Graph;

/// Every labeled simple graph on `vertex_count` vertices, in order of the
/// edge-subset bitmask over the pairs `(i, j)`, `i < j`, listed lexicographically.
pub fn all_graphs(vertex_count: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..vertex_count)
        .flat_map(|i| (i + 1..vertex_count).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() < 63, "too many vertices for an exhaustive sweep");
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(vertex_count, &edges).expect("pairs are simple edges")
    })
}

/// Labeled graphs on `vertex_count` vertices in which every vertex reaches the
/// sink.
pub fn connected_graphs(vertex_count: usize) -> impl Iterator<Item = Graph> {
    all_graphs(vertex_count).filter(Graph::is_connected)
}

/// Connected labeled graphs on `2..=max_vertices` vertices.
pub fn connected_graphs_up_to(max_vertices: usize) -> Vec<Graph> {
    (2..=max_vertices).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // OEIS A001187: connected labeled graphs.
        let counts: Vec<usize> = (1..=5).map(|v| connected_graphs(v).count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert_eq!(all_graphs(4).count(), 64);
    }
}
