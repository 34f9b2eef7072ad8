//! Edge-weighted graphs, including the 4-adjacency pixel grid.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, FormatError, FormatErrorKind};
use crate::image::RgbImage;

/// Quantized edge dissimilarity.
pub type Weight = u32;

/// Dense vertex index in `[0, vertex_count)`. For grids, `row * width + column`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
    /// Insertion index in the owning graph.
    pub id: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridShape {
    pub width: usize,
    pub height: usize,
}

/// How a real-valued RGB distance becomes an integer weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Quantizer {
    #[default]
    RoundHalfUp,
    Floor,
    Ceil,
}

impl Quantizer {
    /// Quantizes `sqrt(squared)` exactly, without going through floats.
    pub fn quantize_sqrt(self, squared: u64) -> Weight {
        let w = match self {
            Quantizer::RoundHalfUp => squared.saturating_mul(4).isqrt().div_ceil(2),
            Quantizer::Floor => squared.isqrt(),
            Quantizer::Ceil => {
                let r = squared.isqrt();
                if r * r < squared {
                    r + 1
                } else {
                    r
                }
            }
        };
        w as Weight
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeightedGraph {
    vertex_count: usize,
    edges: Vec<WeightedEdge>,
    grid: Option<GridShape>,
}

impl EdgeWeightedGraph {
    /// Builds a graph from `(u, v, weight)` triples; edge ids follow input order.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize, Weight)>,
    {
        if vertex_count > u32::MAX as usize {
            return Err(Error::InvalidInput("too many vertices".into()));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (id, (u, v, weight)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        edge: id,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { edge: id, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { edge: id, u, v });
            }
            out.push(WeightedEdge {
                u: u.into(),
                v: v.into(),
                weight,
                id,
            });
        }
        Ok(Self {
            vertex_count,
            edges: out,
            grid: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn grid(&self) -> Option<GridShape> {
        self.grid
    }

    pub fn max_weight(&self) -> Weight {
        self.edges.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    /// Parses the plain-text graph format: a vertex count, then one `u v w`
    /// line per edge. Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self, FormatError> {
        let mut vertex_count = None;
        let mut triples = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let line_offset = offset;
            offset += line.len();
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |msg: &str| FormatError::new(FormatErrorKind::Syntax(msg.into()), line_offset);
            let fields: Vec<&str> = content.split_whitespace().collect();
            match vertex_count {
                None => {
                    if fields.len() != 1 {
                        return Err(syntax("expected vertex count"));
                    }
                    let n: usize = fields[0].parse().map_err(|_| syntax("bad vertex count"))?;
                    vertex_count = Some(n);
                }
                Some(_) => {
                    if fields.len() != 3 {
                        return Err(syntax("expected `u v w`"));
                    }
                    let u: usize = fields[0].parse().map_err(|_| syntax("bad vertex"))?;
                    let v: usize = fields[1].parse().map_err(|_| syntax("bad vertex"))?;
                    let w: Weight = fields[2].parse().map_err(|_| syntax("bad weight"))?;
                    triples.push((u, v, w, line_offset));
                }
            }
        }
        let vertex_count =
            vertex_count.ok_or_else(|| FormatError::new(FormatErrorKind::Syntax("empty graph document".into()), 0))?;
        let offsets: Vec<usize> = triples.iter().map(|t| t.3).collect();
        Self::from_edges(vertex_count, triples.iter().map(|&(u, v, w, _)| (u, v, w))).map_err(|e| {
            let at = match &e {
                Error::SelfLoop { edge, .. }
                | Error::VertexOutOfRange { edge, .. }
                | Error::DuplicateEdge { edge, .. } => offsets[*edge],
                _ => 0,
            };
            FormatError::new(FormatErrorKind::Syntax(e.to_string()), at)
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.vertex_count);
        for e in &self.edges {
            s.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
        }
        s
    }
}

/// Builds the 4-adjacency graph of `image`, weighting each edge by the
/// quantized Euclidean RGB distance of its endpoints.
///
/// Edges are created in row-major order; for each pixel the edge to its
/// right neighbor precedes the edge to the neighbor below.
pub fn build_grid_graph(image: &RgbImage, quantizer: Quantizer) -> Result<EdgeWeightedGraph, Error> {
    let (width, height) = (image.width(), image.height());
    if width == 0 || height == 0 {
        return Err(Error::InvalidInput("image is empty".into()));
    }
    let n = width * height;
    if n > u32::MAX as usize {
        return Err(Error::InvalidInput("image too large".into()));
    }
    let pixels = image.pixels();
    let weight = |p: usize, q: usize| {
        let d2: u64 = (0..3)
            .map(|c| {
                let d = pixels[p][c] as i64 - pixels[q][c] as i64;
                (d * d) as u64
            })
            .sum();
        quantizer.quantize_sqrt(d2)
    };
    let mut edges = Vec::with_capacity(2 * n);
    for r in 0..height {
        for c in 0..width {
            let p = r * width + c;
            if c + 1 < width {
                edges.push((p, p + 1));
            }
            if r + 1 < height {
                edges.push((p, p + width));
            }
        }
    }
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(id, (p, q))| WeightedEdge {
            u: p.into(),
            v: q.into(),
            weight: weight(p, q),
            id,
        })
        .collect();
    Ok(EdgeWeightedGraph {
        vertex_count: n,
        edges,
        grid: Some(GridShape { width, height }),
    })
}
