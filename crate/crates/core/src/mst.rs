use crate::graph::{EdgeWeightedGraph, WeightedEdge};
use crate::union_find::UnionFindForest;

/// Minimum spanning forest, edges in canonical order: non-decreasing weight,
/// ties broken by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mst {
    vertex_count: usize,
    edges: Vec<WeightedEdge>,
}

impl Mst {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight as u64).sum()
    }

    /// Number of trees in the forest.
    pub fn component_count(&self) -> usize {
        self.vertex_count - self.edges.len()
    }
}

/// Kruskal's algorithm over the canonical edge order.
pub fn kruskal_mst(graph: &EdgeWeightedGraph) -> Mst {
    let mut order: Vec<&WeightedEdge> = graph.edges().iter().collect();
    order.sort_unstable_by_key(|e| (e.weight, e.id));
    let mut uf = UnionFindForest::new(graph.vertex_count());
    let mut edges = Vec::with_capacity(graph.vertex_count().saturating_sub(1));
    for e in order {
        if uf.union(e.u.index(), e.v.index(), e.weight).is_some() {
            edges.push(*e);
        }
    }
    Mst {
        vertex_count: graph.vertex_count(),
        edges,
    }
}
