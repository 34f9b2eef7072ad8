//! Region counts of a segmentation method over a list of parameters.

use std::fmt::Write as _;

use hierseg::{compute_hierarchy, segment_fh, EdgeWeightedGraph, FhParams, Mst, Partition};

use crate::Method;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub k: u64,
    pub region_count: usize,
    /// Whether this partition and the previous row's are nested in either
    /// direction. Always true on the first row.
    pub nested_with_previous: bool,
}

pub fn sweep(graph: &EdgeWeightedGraph, mst: &Mst, method: Method, ks: &[u64]) -> Vec<SweepRow> {
    let scales = (method == Method::Hier).then(|| compute_hierarchy(graph, mst));
    let mut prev: Option<Partition> = None;
    ks.iter()
        .map(|&k| {
            let p = match &scales {
                Some(s) => s.cut(k),
                None => segment_fh(mst, FhParams { k, min_area: None }),
            };
            let nested = prev.as_ref().is_none_or(|q| q.is_nested_with(&p));
            let row = SweepRow {
                k,
                region_count: p.region_count(),
                nested_with_previous: nested,
            };
            prev = Some(p);
            row
        })
        .collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("k,region_count,nested_with_previous\n");
    for r in rows {
        let nested = if r.nested_with_previous { "yes" } else { "no" };
        let _ = writeln!(out, "{},{},{}", r.k, r.region_count, nested);
    }
    out
}
