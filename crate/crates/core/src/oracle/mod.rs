//! Brute-force references and property checkers.
//!
//! Nothing here shares code paths with the main algorithms beyond the basic
//! types: partitions are found by breadth-first search, spanning trees by
//! enumeration and hierarchical scales by scanning every level.

pub mod random;
mod report;

pub use report::{Counterexample, PropertyReport};

use std::collections::VecDeque;

use crate::error::Error;
use crate::graph::{EdgeWeightedGraph, VertexId, WeightedEdge};
use crate::hierarchy::ScaleMap;
use crate::partition::{Partition, ThresholdMode};

/// Components over the admitted edges, found by breadth-first search.
pub fn bfs_partition(
    vertex_count: usize,
    edges: &[(VertexId, VertexId, Option<u64>)],
    lambda: u64,
    mode: ThresholdMode,
) -> Partition {
    let mut adj = vec![Vec::new(); vertex_count];
    for &(u, v, value) in edges {
        let admitted = match (mode, value) {
            (_, None) => false,
            (ThresholdMode::Strict, Some(x)) => x < lambda,
            (ThresholdMode::Inclusive, Some(x)) => x <= lambda,
        };
        if admitted {
            adj[u.index()].push(v.index());
            adj[v.index()].push(u.index());
        }
    }
    let mut seed = vec![usize::MAX; vertex_count];
    let mut queue = VecDeque::new();
    for s in 0..vertex_count {
        if seed[s] != usize::MAX {
            continue;
        }
        seed[s] = s;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if seed[y] == usize::MAX {
                    seed[y] = s;
                    queue.push_back(y);
                }
            }
        }
    }
    Partition::from_keys(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanVariant {
    /// Stop at the first `v ≥ 1` with `S(X*(v)) ≤ v`.
    Literal,
    /// `1 +` the largest violating `v`, so the condition holds from there on.
    Stabilized,
}

/// Safe scan bound: every `S` value is at most `max weight · vertex count`.
pub fn default_v_bound(vertex_count: usize, partial: &[(WeightedEdge, Option<u64>)], edge: &WeightedEdge) -> u64 {
    let max_scale = partial.iter().filter_map(|(_, s)| *s).max().unwrap_or(0);
    let max_weight = partial
        .iter()
        .map(|(e, _)| e.weight)
        .chain([edge.weight])
        .max()
        .unwrap_or(0) as u64;
    max_scale + max_weight * vertex_count as u64 + 1
}

/// One-sided hierarchical scale of `query` by scanning `v = 0, 1, …, v_bound`.
///
/// `partial` holds MST edges with their scale, `None` for edges not yet
/// processed. `X*(v)` is recomputed by [`bfs_partition`] each time the set
/// of admitted edges changes.
pub fn naive_hierarchical_scale(
    vertex_count: usize,
    partial: &[(WeightedEdge, Option<u64>)],
    query: VertexId,
    edge: &WeightedEdge,
    variant: ScanVariant,
    v_bound: u64,
) -> u64 {
    let triples: Vec<_> = partial.iter().map(|(e, s)| (e.u, e.v, *s)).collect();
    let mut levels: Vec<u64> = partial.iter().filter_map(|(_, s)| *s).collect();
    levels.sort_unstable();
    levels.dedup();

    let relative = |v: u64| -> i64 {
        let p = bfs_partition(vertex_count, &triples, v, ThresholdMode::Inclusive);
        let label = p.label(query);
        let size = p.labels().iter().filter(|&&l| l == label).count() as i64;
        let internal = partial
            .iter()
            .filter(|(e, s)| s.is_some() && p.label(e.u) == label && p.label(e.v) == label)
            .map(|(e, _)| e.weight)
            .max()
            .unwrap_or(0) as i64;
        (edge.weight as i64 - internal) * size
    };

    let mut current = relative(0);
    let mut last_violation: Option<u64> = None;
    for v in 0..=v_bound {
        if v > 0 && levels.binary_search(&v).is_ok() {
            current = relative(v);
        }
        let violates = current > v as i64;
        if variant == ScanVariant::Literal && v >= 1 && !violates {
            return v;
        }
        if violates {
            last_violation = Some(v);
        }
    }
    match variant {
        ScanVariant::Literal => v_bound + 1,
        ScanVariant::Stabilized => last_violation.map_or(1, |v| (v + 1).max(1)),
    }
}

/// Minimum total weight over all maximal spanning forests, by enumerating
/// every acyclic edge subset of the right size.
pub fn exhaustive_mst_weight(graph: &EdgeWeightedGraph) -> Result<u64, Error> {
    let n = graph.vertex_count();
    if n > 12 {
        return Err(Error::TooLarge(n));
    }
    let target = n - bfs_partition(
        n,
        &graph.edges().iter().map(|e| (e.u, e.v, Some(0))).collect::<Vec<_>>(),
        0,
        ThresholdMode::Inclusive,
    )
    .region_count();
    let edges: Vec<(usize, usize, u64)> = graph
        .edges()
        .iter()
        .map(|e| (e.u.index(), e.v.index(), e.weight as u64))
        .collect();

    fn root(comp: &[usize], mut x: usize) -> usize {
        while comp[x] != x {
            x = comp[x];
        }
        x
    }

    fn search(
        edges: &[(usize, usize, u64)],
        i: usize,
        chosen: usize,
        target: usize,
        weight: u64,
        comp: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if chosen == target {
            *best = (*best).min(weight);
            return;
        }
        if i == edges.len() || edges.len() - i < target - chosen {
            return;
        }
        let (u, v, w) = edges[i];
        let (ru, rv) = (root(comp, u), root(comp, v));
        if ru != rv {
            comp[ru] = rv;
            search(edges, i + 1, chosen + 1, target, weight + w, comp, best);
            comp[ru] = ru;
        }
        search(edges, i + 1, chosen, target, weight, comp, best);
    }

    let mut best = u64::MAX;
    let mut comp: Vec<usize> = (0..n).collect();
    search(&edges, 0, 0, target, 0, &mut comp, &mut best);
    Ok(best)
}

fn cut_levels(scales: &ScaleMap) -> Vec<u64> {
    let mut levels = vec![0];
    levels.extend(scales.distinct_scales());
    levels.dedup();
    levels
}

fn scale_map_instance(scales: &ScaleMap) -> Vec<(usize, usize, u32, Option<u64>)> {
    scales
        .entries()
        .iter()
        .map(|(e, s)| (e.u.index(), e.v.index(), e.weight, Some(*s)))
        .collect()
}

fn bfs_cut(scales: &ScaleMap, lambda: u64) -> Partition {
    let triples: Vec<_> = scales.entries().iter().map(|(e, s)| (e.u, e.v, Some(*s))).collect();
    bfs_partition(scales.vertex_count(), &triples, lambda, ThresholdMode::Inclusive)
}

/// Region counts of the cuts at `0` and every scale value never increase.
pub fn check_causality(scales: &ScaleMap) -> PropertyReport {
    let levels = cut_levels(scales);
    let counts: Vec<usize> = levels.iter().map(|&l| bfs_cut(scales, l).region_count()).collect();
    for i in 1..levels.len() {
        if counts[i] > counts[i - 1] {
            return PropertyReport::fail(Counterexample {
                property: "causality".into(),
                vertex_count: scales.vertex_count(),
                edges: scale_map_instance(scales),
                partitions: Vec::new(),
                offending: Vec::new(),
                detail: format!(
                    "region count rises from {} at {} to {} at {}",
                    counts[i - 1],
                    levels[i - 1],
                    counts[i],
                    levels[i]
                ),
            });
        }
    }
    PropertyReport::pass("causality")
}

/// Every cut refines the next one.
pub fn check_nestedness(scales: &ScaleMap) -> PropertyReport {
    let levels = cut_levels(scales);
    let cuts: Vec<Partition> = levels.iter().map(|&l| bfs_cut(scales, l)).collect();
    let mut report = check_nestedness_sequence(&cuts);
    if let Some(cx) = &mut report.counterexample {
        cx.edges = scale_map_instance(scales);
        cx.partitions.clear();
    }
    report
}

/// Each partition of the sequence refines the next one. On failure the
/// counterexample lists the vertices of the first straddling region.
pub fn check_nestedness_sequence(partitions: &[Partition]) -> PropertyReport {
    for (i, pair) in partitions.windows(2).enumerate() {
        if let Some(label) = pair[0].first_straddling_region(&pair[1]) {
            let offending: Vec<usize> = (0..pair[0].vertex_count())
                .filter(|&v| pair[0].labels()[v] == label)
                .collect();
            return PropertyReport::fail(Counterexample {
                property: "nestedness".into(),
                vertex_count: pair[0].vertex_count(),
                edges: Vec::new(),
                partitions: partitions.iter().map(|p| p.labels().to_vec()).collect(),
                offending,
                detail: format!("region of partition {i} split by partition {}", i + 1),
            });
        }
    }
    PropertyReport::pass("nestedness")
}
