//! Hierarchical observation scales over the MST and the partitions they
//! induce.

mod builder;
mod merge_tree;

pub use builder::{HierarchyBuilder, SubRegionView};
pub use merge_tree::{MergeTree, TreeNode};

use crate::graph::{EdgeWeightedGraph, VertexId, WeightedEdge};
use crate::mst::Mst;
use crate::partition::{partition_at_threshold, Partition, ThresholdMode};

/// Hierarchical scale of every MST edge, in canonical MST order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleMap {
    vertex_count: usize,
    entries: Vec<(WeightedEdge, u64)>,
}

impl ScaleMap {
    /// Wraps externally supplied `(edge, scale)` pairs, e.g. for replaying a
    /// stored instance. Edges must form a forest.
    pub fn from_entries(vertex_count: usize, mut entries: Vec<(WeightedEdge, u64)>) -> Self {
        entries.sort_by_key(|(e, _)| (e.weight, e.id));
        Self { vertex_count, entries }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn entries(&self) -> &[(WeightedEdge, u64)] {
        &self.entries
    }

    pub fn scale_of(&self, edge_id: usize) -> Option<u64> {
        self.entries.iter().find(|(e, _)| e.id == edge_id).map(|&(_, s)| s)
    }

    pub fn max_scale(&self) -> u64 {
        self.entries.iter().map(|&(_, s)| s).max().unwrap_or(0)
    }

    /// Sorted distinct scale values.
    pub fn distinct_scales(&self) -> Vec<u64> {
        let mut s: Vec<u64> = self.entries.iter().map(|&(_, s)| s).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// `P_λ`: components of the edges with scale `≤ λ`.
    pub fn cut(&self, lambda: u64) -> Partition {
        partition_at_threshold(
            self.vertex_count,
            self.threshold_edges(),
            lambda,
            ThresholdMode::Inclusive,
        )
    }

    pub fn threshold_edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Option<u64>)> + '_ {
        self.entries.iter().map(|(e, s)| (e.u, e.v, Some(*s)))
    }

    /// Region count of `cut(λ)` without building it.
    pub fn region_count_at(&self, lambda: u64) -> usize {
        self.vertex_count - self.entries.iter().filter(|&&(_, s)| s <= lambda).count()
    }

    /// Smallest `λ` whose cut has at most `n` regions.
    ///
    /// When several edges share a scale the exact count may be skipped; the
    /// returned partition carries the achieved count. If `n` is below the
    /// number of connected components the coarsest cut is returned.
    pub fn cut_to_region_count(&self, n: usize) -> RegionCountCut {
        let mut scales: Vec<u64> = self.entries.iter().map(|&(_, s)| s).collect();
        scales.sort_unstable();
        let mut lambda = 0;
        let mut count = self.vertex_count;
        let mut i = 0;
        while count > n && i < scales.len() {
            lambda = scales[i];
            while i < scales.len() && scales[i] == lambda {
                count -= 1;
                i += 1;
            }
        }
        RegionCountCut {
            lambda,
            partition: self.cut(lambda),
        }
    }

    /// The scales document: a header, then `u,v,weight,scale` per MST edge
    /// sorted by `(scale, u, v)`.
    pub fn to_csv(&self) -> String {
        let mut rows: Vec<(u64, u32, u32, u32)> =
            self.entries.iter().map(|(e, s)| (*s, e.u.0, e.v.0, e.weight)).collect();
        rows.sort_unstable();
        let mut out = String::from("edge_u,edge_v,weight,scale\n");
        for (s, u, v, w) in rows {
            out.push_str(&format!("{u},{v},{w},{s}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionCountCut {
    pub lambda: u64,
    pub partition: Partition,
}

/// Assigns a hierarchical scale to every MST edge.
///
/// Edges are visited in canonical order; the regions on either side are the
/// components of the edges visited before. Each edge gets the larger of its
/// two one-sided scales (see [`HierarchyBuilder`]).
pub fn compute_hierarchy(graph: &EdgeWeightedGraph, mst: &Mst) -> ScaleMap {
    assert_eq!(graph.vertex_count(), mst.vertex_count(), "MST does not span this graph");
    let mut builder = HierarchyBuilder::new(mst.vertex_count());
    for e in mst.edges() {
        builder.process(e);
    }
    ScaleMap {
        vertex_count: mst.vertex_count(),
        entries: builder.into_assigned(),
    }
}
