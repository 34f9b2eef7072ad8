//! Incremental computation of hierarchical scales.
//!
//! While MST edges are processed in canonical order, every already processed
//! edge carries a finite scale. The sub-region `X*(v)` of a vertex `x` is its
//! component among processed edges of scale `≤ v`. As `v` grows, `X*(v)`
//! walks up a chain of nested regions. That chain is exactly the ancestor
//! path of `x` in the merge forest of the processed edges (ordered by scale),
//! so the forest is maintained explicitly:
//!
//! * a node is a region, with the level at which it appears, its size and
//!   its internal difference (heaviest original weight inside);
//! * inserting an edge of scale `λ` between two trees zips their ancestor
//!   paths together above `λ`. Nodes above `λ` keep their identity and only
//!   have the other side's size and internal difference folded in;
//! * nodes that end up on the same level are fused through an alias table,
//!   so every ancestor path has strictly increasing levels.
//!
//! The one-sided scale of `x` relative to the opposite region is
//! `1 + max{v ≥ 1 : S(X*(v)) > v}` (1 when no level violates), where
//! `S(X*) = (w(e) − Int(X*))·|X*|`. Scanning the chain from the root down
//! finds that maximum in one pass.

use crate::graph::{VertexId, Weight, WeightedEdge};
use crate::union_find::UnionFindForest;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Node {
    parent: u32,
    level: u64,
    size: u32,
    internal: Weight,
}

/// The region `X*(v)` containing a query vertex at level `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubRegionView {
    /// Opaque handle of the region in the scale forest.
    pub root: u32,
    /// Level at which this region appears.
    pub level: u64,
    pub size: usize,
    pub internal_difference: Weight,
}

impl SubRegionView {
    /// `(diff − Int(X*))·|X*|`
    pub fn relative_scale(&self, diff: Weight) -> i64 {
        (diff as i64 - self.internal_difference as i64) * self.size as i64
    }
}

#[derive(Debug, Clone)]
pub struct HierarchyBuilder {
    components: UnionFindForest,
    nodes: Vec<Node>,
    alias: Vec<u32>,
    assigned: Vec<(WeightedEdge, u64)>,
}

impl HierarchyBuilder {
    pub fn new(vertex_count: usize) -> Self {
        let leaf = Node {
            parent: NONE,
            level: 0,
            size: 1,
            internal: 0,
        };
        Self {
            components: UnionFindForest::new(vertex_count),
            nodes: vec![leaf; vertex_count],
            alias: (0..vertex_count as u32).collect(),
            assigned: Vec::with_capacity(vertex_count.saturating_sub(1)),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.components.len()
    }

    /// Edges committed so far with their scales, in commit order.
    pub fn assigned(&self) -> &[(WeightedEdge, u64)] {
        &self.assigned
    }

    pub fn into_assigned(self) -> Vec<(WeightedEdge, u64)> {
        self.assigned
    }

    /// Whether `x` and `y` are already joined by committed edges.
    pub fn connected(&mut self, x: VertexId, y: VertexId) -> bool {
        self.components.same(x.index(), y.index())
    }

    fn resolve(&mut self, n: u32) -> u32 {
        let mut root = n;
        while self.alias[root as usize] != root {
            root = self.alias[root as usize];
        }
        let mut cur = n;
        while self.alias[cur as usize] != root {
            let next = self.alias[cur as usize];
            self.alias[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Ancestor path of a leaf, leaf first, with strictly increasing levels.
    fn chain(&mut self, x: VertexId) -> Vec<u32> {
        let mut out = vec![x.0];
        let mut cur = x.0;
        loop {
            let p = self.nodes[cur as usize].parent;
            if p == NONE {
                break;
            }
            let r = self.resolve(p);
            if r != p {
                self.nodes[cur as usize].parent = r;
            }
            out.push(r);
            cur = r;
        }
        out
    }

    fn view(&self, n: u32) -> SubRegionView {
        let node = &self.nodes[n as usize];
        SubRegionView {
            root: n,
            level: node.level,
            size: node.size as usize,
            internal_difference: node.internal,
        }
    }

    /// `X*(v)` for the query vertex.
    pub fn sub_region(&mut self, query: VertexId, v: u64) -> SubRegionView {
        let chain = self.chain(query);
        let n = chain
            .iter()
            .rev()
            .copied()
            .find(|&n| self.nodes[n as usize].level <= v)
            .expect("leaf level is zero");
        self.view(n)
    }

    /// The whole sequence of distinct sub-regions of `query`, by level.
    pub fn sub_region_chain(&mut self, query: VertexId) -> Vec<SubRegionView> {
        self.chain(query).into_iter().map(|n| self.view(n)).collect()
    }

    fn scale_on_chain(&self, chain: &[u32], diff: Weight) -> u64 {
        let mut upper: Option<u64> = None;
        for &n in chain.iter().rev() {
            let node = &self.nodes[n as usize];
            let s = (diff as i64 - node.internal as i64) * node.size as i64;
            if s > 0 {
                let mut candidate = (s - 1) as u64;
                if let Some(hi) = upper {
                    candidate = candidate.min(hi - 1);
                }
                if candidate >= node.level.max(1) {
                    return candidate + 1;
                }
            }
            upper = Some(node.level);
        }
        1
    }

    /// One-sided hierarchical scale of `query` against the region on the
    /// other end of `edge`, the edge currently being processed.
    pub fn hierarchical_scale(&mut self, query: VertexId, edge: &WeightedEdge) -> u64 {
        let chain = self.chain(query);
        self.scale_on_chain(&chain, edge.weight)
    }

    /// Both one-sided scales for `edge`, `(from u, from v)`.
    pub fn one_sided_scales(&mut self, edge: &WeightedEdge) -> (u64, u64) {
        (
            self.hierarchical_scale(edge.u, edge),
            self.hierarchical_scale(edge.v, edge),
        )
    }

    /// Computes the scale of `edge`, commits it and returns it.
    ///
    /// Panics if the endpoints are already connected.
    pub fn process(&mut self, edge: &WeightedEdge) -> u64 {
        let a = self.chain(edge.u);
        let b = self.chain(edge.v);
        let scale = self
            .scale_on_chain(&a, edge.weight)
            .max(self.scale_on_chain(&b, edge.weight));
        self.insert(edge, scale, &a, &b);
        scale
    }

    /// Commits `edge` with a caller-chosen scale (at least 1).
    ///
    /// Panics if the endpoints are already connected or `scale` is zero.
    pub fn commit(&mut self, edge: &WeightedEdge, scale: u64) {
        assert!(scale >= 1, "scales are positive");
        let a = self.chain(edge.u);
        let b = self.chain(edge.v);
        self.insert(edge, scale, &a, &b);
    }

    fn insert(&mut self, edge: &WeightedEdge, lambda: u64, a: &[u32], b: &[u32]) {
        let joined = self.components.union(edge.u.index(), edge.v.index(), edge.weight);
        assert!(joined.is_some(), "edge {} closes a cycle", edge.id);
        self.assigned.push((*edge, lambda));
        let w = edge.weight;

        let split = |chain: &[u32], nodes: &[Node]| chain.partition_point(|&n| nodes[n as usize].level <= lambda);
        let (ia, ib) = (split(a, &self.nodes), split(b, &self.nodes));
        let (a_top, b_top) = (a[ia - 1], b[ib - 1]);
        let mut cur_a = self.nodes[a_top as usize];
        let mut cur_b = self.nodes[b_top as usize];

        let a_at = cur_a.level == lambda;
        let b_at = cur_b.level == lambda;
        let joint = match (a_at, b_at) {
            (true, true) => {
                self.alias[b_top as usize] = a_top;
                a_top
            }
            (true, false) => {
                self.nodes[b_top as usize].parent = a_top;
                a_top
            }
            (false, true) => {
                self.nodes[a_top as usize].parent = b_top;
                b_top
            }
            (false, false) => {
                let id = self.nodes.len() as u32;
                self.nodes.push(Node {
                    parent: NONE,
                    level: lambda,
                    size: 0,
                    internal: 0,
                });
                self.alias.push(id);
                self.nodes[a_top as usize].parent = id;
                self.nodes[b_top as usize].parent = id;
                id
            }
        };
        {
            let j = &mut self.nodes[joint as usize];
            j.size = cur_a.size + cur_b.size;
            j.internal = cur_a.internal.max(cur_b.internal).max(w);
        }

        let (mut i, mut k) = (ia, ib);
        let mut prev = joint;
        while i < a.len() || k < b.len() {
            let la = a.get(i).map_or(u64::MAX, |&n| self.nodes[n as usize].level);
            let lb = b.get(k).map_or(u64::MAX, |&n| self.nodes[n as usize].level);
            let node = if la < lb {
                let n = a[i];
                cur_a = self.nodes[n as usize];
                i += 1;
                n
            } else if lb < la {
                let n = b[k];
                cur_b = self.nodes[n as usize];
                k += 1;
                n
            } else {
                let (na, nb) = (a[i], b[k]);
                cur_a = self.nodes[na as usize];
                cur_b = self.nodes[nb as usize];
                self.alias[nb as usize] = na;
                i += 1;
                k += 1;
                na
            };
            let n = &mut self.nodes[node as usize];
            n.size = cur_a.size + cur_b.size;
            n.internal = cur_a.internal.max(cur_b.internal).max(w);
            self.nodes[prev as usize].parent = node;
            prev = node;
        }
        self.nodes[prev as usize].parent = NONE;
    }
}
