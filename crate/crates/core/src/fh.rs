//! Single-scale region merging on the MST (the non-hierarchical baseline).
//!
//! Two regions `X`, `Y` linked by an MST edge of weight `w` merge at scale
//! `k` iff `w ≤ min(Int(X) + k/|X|, Int(Y) + k/|Y|)`. Multiplying through by
//! the sizes turns this into `k ≥ D(X, Y)` with
//! `D(X, Y) = max((w − Int(X))·|X|, (w − Int(Y))·|Y|)`, which is exact in
//! integers.

use crate::graph::Weight;
use crate::mst::Mst;
use crate::partition::Partition;
use crate::union_find::UnionFindForest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FhParams {
    pub k: u64,
    pub min_area: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionStats {
    pub size: u64,
    pub internal_difference: Weight,
}

impl RegionStats {
    pub const SINGLETON: RegionStats = RegionStats {
        size: 1,
        internal_difference: 0,
    };

    /// `(diff − Int(X))·|X|`: the scale at which this region accepts a
    /// neighbor at distance `diff`.
    pub fn relative_scale(&self, diff: Weight) -> i64 {
        (diff as i64 - self.internal_difference as i64) * self.size as i64
    }
}

/// `D(X, Y)`. Negative when `diff` is below both internal differences.
pub fn observation_scale(x: RegionStats, y: RegionStats, diff: Weight) -> i64 {
    x.relative_scale(diff).max(y.relative_scale(diff))
}

/// Runs the merge loop at a fixed `k` over the MST edges in canonical order.
///
/// `params.min_area` is ignored here; area filtering needs the full graph and
/// lives in [`crate::image::area_filter`].
pub fn segment_fh(mst: &Mst, params: FhParams) -> Partition {
    let mut uf = UnionFindForest::new(mst.vertex_count());
    for e in mst.edges() {
        let (x, y) = (e.u.index(), e.v.index());
        let (rx, ry) = (uf.find(x), uf.find(y));
        if rx == ry {
            continue;
        }
        let stats = |uf: &mut UnionFindForest, r| RegionStats {
            size: uf.size(r) as u64,
            internal_difference: uf.internal_difference(r),
        };
        let d = observation_scale(stats(&mut uf, rx), stats(&mut uf, ry), e.weight);
        if d <= params.k as i64 {
            uf.union(rx, ry, e.weight);
        }
    }
    Partition::from_keys((0..mst.vertex_count()).map(|v| uf.find(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::six_vertex_graph;
    use crate::graph::EdgeWeightedGraph;
    use crate::mst::kruskal_mst;

    fn fh(k: u64) -> Vec<Vec<usize>> {
        let mst = kruskal_mst(&six_vertex_graph());
        segment_fh(&mst, FhParams { k, min_area: None }).regions()
    }

    #[test]
    fn six_vertex_k5() {
        assert_eq!(fh(5), vec![vec![0, 3, 4, 5], vec![1, 2]]);
    }

    #[test]
    fn six_vertex_k8() {
        assert_eq!(fh(8), vec![vec![0, 2, 3, 4, 5], vec![1]]);
    }

    #[test]
    fn k5_and_k8_are_not_nested() {
        let mst = kruskal_mst(&six_vertex_graph());
        let p5 = segment_fh(&mst, FhParams { k: 5, min_area: None });
        let p8 = segment_fh(&mst, FhParams { k: 8, min_area: None });
        assert!(!p5.is_nested_with(&p8));
    }

    #[test]
    fn huge_k_gives_one_region() {
        let g = six_vertex_graph();
        let k = g.max_weight() as u64 * g.vertex_count() as u64;
        assert_eq!(fh(k).len(), 1);
    }

    #[test]
    fn k0_keeps_only_zero_weight_merges() {
        let g = EdgeWeightedGraph::from_edges(5, [(0, 1, 0), (1, 2, 0), (2, 3, 1), (3, 4, 0)]).unwrap();
        let p = segment_fh(&kruskal_mst(&g), FhParams::default());
        assert_eq!(p.regions(), vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn observation_scale_examples() {
        let c = RegionStats::SINGLETON;
        let adef = RegionStats {
            size: 4,
            internal_difference: 1,
        };
        assert_eq!(observation_scale(c, adef, 3), 8);
        assert_eq!(observation_scale(c, c, 7), 7);
        let bc = RegionStats {
            size: 2,
            internal_difference: 1,
        };
        assert_eq!(bc.relative_scale(10), 18);
        assert_eq!(observation_scale(bc, bc, 0), -2);
    }
}
