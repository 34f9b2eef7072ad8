use std::collections::HashMap;

use crate::graph::VertexId;
use crate::union_find::UnionFindForest;

/// Which edges a threshold admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMode {
    /// value < λ
    Strict,
    /// value ≤ λ
    Inclusive,
}

impl ThresholdMode {
    /// `None` stands for an infinite value and is never admitted.
    #[inline]
    pub fn admits(self, value: Option<u64>, lambda: u64) -> bool {
        match (self, value) {
            (_, None) => false,
            (ThresholdMode::Strict, Some(v)) => v < lambda,
            (ThresholdMode::Inclusive, Some(v)) => v <= lambda,
        }
    }
}

/// A labeling of vertices into regions. Labels are dense and ordered by the
/// smallest vertex each region contains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    labels: Vec<u32>,
    region_count: usize,
}

impl Partition {
    /// Relabels arbitrary region keys into canonical form.
    pub fn from_keys<K: Eq + std::hash::Hash + Copy>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut map = HashMap::new();
        let labels: Vec<u32> = keys
            .into_iter()
            .map(|k| {
                let next = map.len() as u32;
                *map.entry(k).or_insert(next)
            })
            .collect();
        Self {
            region_count: map.len(),
            labels,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            labels: (0..n as u32).collect(),
            region_count: n,
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> u32 {
        self.labels[v.index()]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn region_count(&self) -> usize {
        self.region_count
    }

    /// Vertex members of every region, indexed by label.
    pub fn regions(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.region_count];
        for (v, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(v);
        }
        out
    }

    pub fn region_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.region_count];
        for &l in &self.labels {
            out[l as usize] += 1;
        }
        out
    }

    /// True when every region of `self` lies inside a single region of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.first_straddling_region(coarser).is_none()
    }

    /// The first region of `self` (by label) that is split by `coarser`.
    pub fn first_straddling_region(&self, coarser: &Partition) -> Option<u32> {
        assert_eq!(self.vertex_count(), coarser.vertex_count());
        let mut image = vec![u32::MAX; self.region_count];
        let mut bad: Option<u32> = None;
        for (&fine, &coarse) in self.labels.iter().zip(&coarser.labels) {
            let slot = &mut image[fine as usize];
            if *slot == u32::MAX {
                *slot = coarse;
            } else if *slot != coarse {
                bad = Some(bad.map_or(fine, |b| b.min(fine)));
            }
        }
        bad
    }

    /// Nested in either direction.
    pub fn is_nested_with(&self, other: &Partition) -> bool {
        self.refines(other) || other.refines(self)
    }
}

/// Connected components of the subgraph whose edge values pass `lambda`.
pub fn partition_at_threshold<I>(vertex_count: usize, edges: I, lambda: u64, mode: ThresholdMode) -> Partition
where
    I: IntoIterator<Item = (VertexId, VertexId, Option<u64>)>,
{
    let mut uf = UnionFindForest::new(vertex_count);
    for (u, v, value) in edges {
        if mode.admits(value, lambda) {
            uf.union(u.index(), v.index(), 0);
        }
    }
    Partition::from_keys((0..vertex_count).map(|x| uf.find(x)))
}
