//! Small hand-specified graphs with known segmentations, shared by tests,
//! the acceptance suite and the CLI.

use crate::graph::EdgeWeightedGraph;

/// Six vertices `a..f` (indices 0..5) laid out on a 2×3 grid.
/// Its MST is `a-d, f-e, e-d, c-f, c-b` with weights `1, 1, 1, 3, 5`.
pub const SIX_VERTEX_EDGES: [(usize, usize, u32); 7] = [
    (0, 3, 1),
    (1, 0, 11),
    (2, 1, 5),
    (1, 4, 9),
    (2, 5, 3),
    (5, 4, 1),
    (4, 3, 1),
];

pub const SIX_VERTEX_NAMES: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

pub fn six_vertex_graph() -> EdgeWeightedGraph {
    EdgeWeightedGraph::from_edges(6, SIX_VERTEX_EDGES).expect("valid fixture")
}

/// Nine vertices `A..I` (indices 0..8) in two clusters `{A,B,C,D,E}` and
/// `{F,G,H,I}` joined by the MST edge `B-G` of weight 10.
pub const NINE_VERTEX_MST_EDGES: [(usize, usize, u32); 8] = [
    (1, 2, 1),  // B-C
    (1, 0, 9),  // B-A
    (0, 4, 2),  // A-E
    (0, 3, 1),  // A-D
    (6, 7, 4),  // G-H
    (7, 5, 8),  // H-F
    (7, 8, 1),  // H-I
    (6, 1, 10), // G-B
];

pub const NINE_VERTEX_EXTRA_EDGES: [(usize, usize, u32); 6] = [
    (4, 7, 15), // E-H
    (3, 8, 14), // D-I
    (2, 0, 10), // C-A
    (4, 1, 15), // E-B
    (5, 6, 9),  // F-G
    (8, 5, 10), // I-F
];

/// Scales of the seven intra-cluster MST edges (same order as
/// [`NINE_VERTEX_MST_EDGES`]) at the moment `B-G` is processed.
pub const NINE_VERTEX_PRIOR_SCALES: [u64; 7] = [1, 21, 2, 1, 6, 12, 1];

pub fn nine_vertex_graph() -> EdgeWeightedGraph {
    let edges = NINE_VERTEX_MST_EDGES.iter().chain(&NINE_VERTEX_EXTRA_EDGES).copied();
    EdgeWeightedGraph::from_edges(9, edges).expect("valid fixture")
}
