//! Seeded random instances for property sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{EdgeWeightedGraph, Weight};
use crate::image::RgbImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Grid,
    General,
}

/// Graph with `min_vertices..=max_vertices` vertices and weights in
/// `0..=max_weight`.
///
/// Grids are 4-adjacency lattices of random shape. General graphs are a
/// random spanning tree (with one edge occasionally dropped, leaving a
/// forest) plus up to `vertex count` extra edges.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    topology: Topology,
    min_vertices: usize,
    max_vertices: usize,
    max_weight: Weight,
) -> EdgeWeightedGraph {
    let target = rng.gen_range(min_vertices..=max_vertices);
    let mut pairs = Vec::new();
    let n = match topology {
        Topology::Grid => {
            let width = rng.gen_range(1..=target);
            let height = (target / width).max(1);
            for r in 0..height {
                for c in 0..width {
                    let p = r * width + c;
                    if c + 1 < width {
                        pairs.push((p, p + 1));
                    }
                    if r + 1 < height {
                        pairs.push((p, p + width));
                    }
                }
            }
            width * height
        }
        Topology::General => {
            let n = target;
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let drop = if n > 2 && rng.gen_bool(0.15) {
                rng.gen_range(1..n)
            } else {
                0
            };
            for i in 1..n {
                if i != drop {
                    let j = rng.gen_range(0..i);
                    pairs.push((order[i], order[j]));
                }
            }
            let extra = rng.gen_range(0..=n);
            for _ in 0..extra {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let key = (a.min(b), a.max(b));
                if a != b && !pairs.iter().any(|&(x, y)| (x.min(y), x.max(y)) == key) {
                    pairs.push((a, b));
                }
            }
            n
        }
    };
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, rng.gen_range(0..=max_weight)))
        .collect();
    EdgeWeightedGraph::from_edges(n, edges).expect("generated graph is simple")
}

/// Piecewise-constant image of a few random rectangles, with per-pixel
/// jitter of up to `jitter` on each channel.
pub fn random_image<R: Rng>(rng: &mut R, width: usize, height: usize, jitter: u8) -> RgbImage {
    let mut img = RgbImage::filled(width, height, [rng.gen(), rng.gen(), rng.gen()]);
    for _ in 0..rng.gen_range(2..8) {
        let (x0, y0) = (rng.gen_range(0..width), rng.gen_range(0..height));
        let (x1, y1) = (rng.gen_range(x0..width) + 1, rng.gen_range(y0..height) + 1);
        let color: [u8; 3] = [rng.gen(), rng.gen(), rng.gen()];
        for y in y0..y1 {
            for x in x0..x1 {
                img.pixels_mut()[y * width + x] = color;
            }
        }
    }
    if jitter > 0 {
        for px in img.pixels_mut() {
            for c in px.iter_mut() {
                let d = rng.gen_range(-(jitter as i16)..=jitter as i16);
                *c = (*c as i16 + d).clamp(0, 255) as u8;
            }
        }
    }
    img
}
