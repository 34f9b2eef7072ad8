//! Contour saliency: for every adjacency edge, the lowest scale at which its
//! endpoints share a region. The values form an ultrametric whose
//! thresholds give back every cut of the hierarchy.

use crate::error::Error;
use crate::graph::{EdgeWeightedGraph, GridShape, VertexId};
use crate::hierarchy::{MergeTree, ScaleMap};
use crate::image::{BitDepth, GrayImage};
use crate::mst::Mst;
use crate::union_find::UnionFindForest;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaliencyMap {
    endpoints: Vec<(VertexId, VertexId)>,
    values: Vec<u64>,
}

impl SaliencyMap {
    /// Values indexed by graph edge id.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn endpoints(&self) -> &[(VertexId, VertexId)] {
        &self.endpoints
    }

    pub fn max_value(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// Edges still separating regions at `λ`, i.e. with saliency `> λ`.
    pub fn boundary_edges(&self, lambda: u64) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i] > lambda).collect()
    }

    /// Per-edge `u,v,saliency` listing.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("edge_u,edge_v,saliency\n");
        for ((u, v), s) in self.endpoints.iter().zip(&self.values) {
            out.push_str(&format!("{u},{v},{s}\n"));
        }
        out
    }
}

/// Maximum scale along the MST path between the endpoints of `edge`.
pub fn ultrametric(scales: &ScaleMap, mst: &Mst, edge: (VertexId, VertexId)) -> Result<u64, Error> {
    let n = mst.vertex_count();
    let (src, dst) = (edge.0.index(), edge.1.index());
    let mut adj = vec![Vec::new(); n];
    for (e, s) in scales.entries() {
        adj[e.u.index()].push((e.v.index(), *s));
        adj[e.v.index()].push((e.u.index(), *s));
    }
    let mut best: Vec<Option<u64>> = vec![None; n];
    best[src] = Some(0);
    let mut stack = vec![src];
    while let Some(x) = stack.pop() {
        let here = best[x].unwrap_or(0);
        for &(y, s) in &adj[x] {
            if best[y].is_none() {
                best[y] = Some(here.max(s));
                stack.push(y);
            }
        }
    }
    best[dst].ok_or(Error::NoPath(src, dst))
}

/// Saliency of every graph edge, as the scale of the lowest common ancestor
/// of its endpoints in the merge tree (Tarjan's offline LCA, one traversal).
pub fn saliency_map(scales: &ScaleMap, graph: &EdgeWeightedGraph, mst: &Mst) -> SaliencyMap {
    assert_eq!(scales.vertex_count(), mst.vertex_count());
    let tree = MergeTree::from_scale_map(scales);
    let n = graph.vertex_count();
    let nodes = tree.nodes();

    // queries in CSR form: for every vertex, (other endpoint, edge index)
    let mut start = vec![0usize; n + 1];
    for e in graph.edges() {
        start[e.u.index() + 1] += 1;
        start[e.v.index() + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut queries = vec![(0u32, 0u32); 2 * graph.edges().len()];
    for (i, e) in graph.edges().iter().enumerate() {
        queries[fill[e.u.index()]] = (e.v.0, i as u32);
        fill[e.u.index()] += 1;
        queries[fill[e.v.index()]] = (e.u.0, i as u32);
        fill[e.v.index()] += 1;
    }

    let mut values = vec![u64::MAX; graph.edges().len()];
    let mut uf = UnionFindForest::new(nodes.len());
    let mut ancestor: Vec<u32> = (0..nodes.len() as u32).collect();
    let mut visited = vec![false; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in tree.roots() {
        stack.push((root, 0));
        while let Some(&mut (x, ref mut next)) = stack.last_mut() {
            if let Some(&c) = nodes[x].children.get(*next) {
                *next += 1;
                stack.push((c, 0));
                continue;
            }
            stack.pop();
            if x < n {
                visited[x] = true;
                for &(y, ei) in &queries[start[x]..start[x + 1]] {
                    if visited[y as usize] {
                        let a = ancestor[uf.find(y as usize)] as usize;
                        values[ei as usize] = nodes[a].scale;
                    }
                }
            }
            if let Some(&(p, _)) = stack.last() {
                uf.union(p, x, 0);
                let r = uf.find(p);
                ancestor[r] = p as u32;
            }
        }
    }
    debug_assert!(values.iter().all(|&v| v != u64::MAX));
    SaliencyMap {
        endpoints: graph.edges().iter().map(|e| (e.u, e.v)).collect(),
        values,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    #[default]
    Linear,
    Log,
}

/// Saliency on the doubled grid: `(2h−1) × (2w−1)` cells where pixel cells
/// are 0, inter-pixel cells hold the normalized saliency of their edge and
/// corner cells hold the max of their incident inter-pixel cells.
pub type ContourImage = GrayImage;

pub fn render_contours(
    sal: &SaliencyMap,
    grid: GridShape,
    norm: Normalization,
    invert: bool,
) -> Result<ContourImage, Error> {
    let GridShape { width, height } = grid;
    if width == 0 || height == 0 {
        return Err(Error::UnsupportedTopology);
    }
    let expected = (width - 1) * height + width * (height - 1);
    if sal.endpoints.len() != expected {
        return Err(Error::UnsupportedTopology);
    }
    let max = sal.max_value();
    let depth = if max > 255 { BitDepth::Sixteen } else { BitDepth::Eight };
    let full = depth.max_sample() as u64;
    let scale = |v: u64| -> u16 {
        if max == 0 {
            return 0;
        }
        match norm {
            Normalization::Linear => ((2 * v * full + max) / (2 * max)) as u16,
            Normalization::Log => {
                let r = (1.0 + v as f64).ln() / (1.0 + max as f64).ln();
                (r * full as f64 + 0.5).floor().min(full as f64) as u16
            }
        }
    };

    let (cw, ch) = (2 * width - 1, 2 * height - 1);
    let mut cells = vec![0u16; cw * ch];
    for (&(u, v), &s) in sal.endpoints.iter().zip(&sal.values) {
        let (p, q) = (u.index().min(v.index()), u.index().max(v.index()));
        if q >= width * height {
            return Err(Error::UnsupportedTopology);
        }
        let (r, c) = (p / width, p % width);
        let cell = if q == p + 1 && c + 1 < width {
            (2 * r) * cw + 2 * c + 1
        } else if q == p + width {
            (2 * r + 1) * cw + 2 * c
        } else {
            return Err(Error::UnsupportedTopology);
        };
        cells[cell] = scale(s);
    }
    for r in (1..ch).step_by(2) {
        for c in (1..cw).step_by(2) {
            let around = [
                cells[(r - 1) * cw + c],
                cells[(r + 1) * cw + c],
                cells[r * cw + c - 1],
                cells[r * cw + c + 1],
            ];
            cells[r * cw + c] = around.into_iter().max().unwrap_or(0);
        }
    }
    if invert {
        for x in &mut cells {
            *x = full as u16 - *x;
        }
    }
    Ok(GrayImage::from_samples(cw, ch, depth, cells).expect("dimensions agree"))
}
