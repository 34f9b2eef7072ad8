//! Hierarchical graph-based image segmentation.
//!
//! The classic region-merging criterion compares the smallest edge between
//! two regions with their internal differences, relaxed by `k/|X|`. Read as
//! a scale `k` at which two regions merge, it does not define a hierarchy:
//! raising `k` can split regions or move contours. This crate instead
//! assigns each MST edge the lowest scale at which some sub-region on one
//! side would merge with the other side, giving a single scale map whose
//! thresholds are nested partitions.
//!
//! ```
//! use hierseg::{compute_hierarchy, fixtures, kruskal_mst};
//!
//! let graph = fixtures::six_vertex_graph();
//! let mst = kruskal_mst(&graph);
//! let scales = compute_hierarchy(&graph, &mst);
//! assert_eq!(scales.cut(9).region_count(), 2);
//! ```

pub mod error;
pub mod fh;
pub mod fixtures;
pub mod graph;
pub mod hierarchy;
pub mod image;
pub mod mst;
pub mod oracle;
pub mod partition;
pub mod saliency;
pub mod union_find;

pub use error::{Error, FormatError, FormatErrorKind};
pub use fh::{observation_scale, segment_fh, FhParams, RegionStats};
pub use graph::{build_grid_graph, EdgeWeightedGraph, GridShape, Quantizer, VertexId, Weight, WeightedEdge};
pub use hierarchy::{compute_hierarchy, HierarchyBuilder, MergeTree, ScaleMap, SubRegionView};
pub use image::{
    add_salt_noise, area_filter, read_ppm, render_segmentation, write_pgm, write_ppm, BitDepth, GrayImage, RenderStyle,
    RgbImage,
};
pub use mst::{kruskal_mst, Mst};
pub use partition::{partition_at_threshold, Partition, ThresholdMode};
pub use saliency::{render_contours, saliency_map, ultrametric, Normalization, SaliencyMap};
pub use union_find::UnionFindForest;
