use std::fmt::Write as _;

use crate::error::{FormatError, FormatErrorKind};
use crate::graph::{EdgeWeightedGraph, Weight};
use crate::hierarchy::ScaleMap;
use crate::partition::Partition;

/// Replay documents larger than this are rejected.
pub const MAX_REPLAY_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub passed: bool,
    /// Always present when `passed` is false.
    pub counterexample: Option<Counterexample>,
}

impl PropertyReport {
    pub fn pass(property: &str) -> Self {
        Self {
            property: property.into(),
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(counterexample: Counterexample) -> Self {
        Self {
            property: counterexample.property.clone(),
            passed: false,
            counterexample: Some(counterexample),
        }
    }
}

/// A failing instance, either a scale map (`edges`) or an explicit sequence
/// of partitions, plus the offending vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub property: String,
    pub vertex_count: usize,
    /// `(u, v, weight, scale)`
    pub edges: Vec<(usize, usize, Weight, Option<u64>)>,
    pub partitions: Vec<Vec<u32>>,
    pub offending: Vec<usize>,
    pub detail: String,
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

impl Counterexample {
    pub fn to_text(&self) -> String {
        let mut out = String::from("counterexample v1\n");
        let _ = writeln!(out, "property {}", self.property);
        let _ = writeln!(out, "vertices {}", self.vertex_count);
        for &(u, v, w, s) in &self.edges {
            let s = s.map_or("-".to_string(), |s| s.to_string());
            let _ = writeln!(out, "edge {u} {v} {w} {s}");
        }
        for p in &self.partitions {
            let _ = writeln!(out, "partition {}", join(p));
        }
        let _ = writeln!(out, "offending {}", join(&self.offending));
        if !self.detail.is_empty() {
            let _ = writeln!(out, "detail {}", self.detail.replace('\n', " "));
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, FormatError> {
        let mut lines = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            lines.push((offset, line.trim_end_matches(['\n', '\r'])));
            offset += line.len();
        }
        let mut iter = lines.into_iter().filter(|(_, l)| !l.trim().is_empty());
        let syntax = |msg: &str, at: usize| FormatError::new(FormatErrorKind::Syntax(msg.into()), at);
        match iter.next() {
            Some((_, l)) if l.trim() == "counterexample v1" => {}
            Some((at, _)) => return Err(FormatError::new(FormatErrorKind::BadMagic, at)),
            None => return Err(FormatError::new(FormatErrorKind::BadMagic, 0)),
        }
        let mut cx = Counterexample {
            property: String::new(),
            vertex_count: 0,
            edges: Vec::new(),
            partitions: Vec::new(),
            offending: Vec::new(),
            detail: String::new(),
        };
        let mut have_vertices = false;
        for (at, line) in iter {
            let (key, rest) = line.trim().split_once(' ').unwrap_or((line.trim(), ""));
            let nums = |rest: &str| -> Result<Vec<u64>, FormatError> {
                rest.split_whitespace()
                    .map(|t| t.parse::<u64>().map_err(|_| syntax("expected integer", at)))
                    .collect()
            };
            match key {
                "property" => cx.property = rest.trim().to_string(),
                "vertices" => {
                    let n = rest
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| syntax("bad vertex count", at))?;
                    if n > MAX_REPLAY_VERTICES {
                        return Err(FormatError::new(FormatErrorKind::BadDimensions, at));
                    }
                    cx.vertex_count = n;
                    have_vertices = true;
                }
                "edge" => {
                    let f: Vec<&str> = rest.split_whitespace().collect();
                    if f.len() != 4 {
                        return Err(syntax("expected `edge u v weight scale`", at));
                    }
                    let int = |t: &str| t.parse::<u64>().map_err(|_| syntax("expected integer", at));
                    let (u, v, w) = (int(f[0])?, int(f[1])?, int(f[2])?);
                    let w = Weight::try_from(w).map_err(|_| syntax("weight out of range", at))?;
                    let s = if f[3] == "-" { None } else { Some(int(f[3])?) };
                    cx.edges.push((u as usize, v as usize, w, s));
                }
                "partition" => {
                    let labels = nums(rest)?;
                    if labels.iter().any(|&l| l > u32::MAX as u64) {
                        return Err(syntax("label out of range", at));
                    }
                    cx.partitions.push(labels.into_iter().map(|l| l as u32).collect());
                }
                "offending" => cx.offending = nums(rest)?.into_iter().map(|v| v as usize).collect(),
                "detail" => cx.detail = rest.to_string(),
                _ => return Err(syntax("unknown record", at)),
            }
        }
        if !have_vertices || cx.property.is_empty() {
            return Err(syntax("missing property or vertices", text.len()));
        }
        for p in &cx.partitions {
            if p.len() != cx.vertex_count {
                return Err(syntax("partition length differs from vertex count", text.len()));
            }
        }
        if cx.offending.iter().any(|&v| v >= cx.vertex_count) {
            return Err(syntax("offending vertex out of range", text.len()));
        }
        Ok(cx)
    }

    /// The stored scale map, if every edge has a scale and the edges form a
    /// valid simple graph.
    pub fn scale_map(&self) -> Option<ScaleMap> {
        if self.edges.is_empty() && !self.partitions.is_empty() {
            return None;
        }
        let graph =
            EdgeWeightedGraph::from_edges(self.vertex_count, self.edges.iter().map(|&(u, v, w, _)| (u, v, w))).ok()?;
        let entries = graph
            .edges()
            .iter()
            .zip(&self.edges)
            .map(|(e, &(_, _, _, s))| s.map(|s| (*e, s)))
            .collect::<Option<Vec<_>>>()?;
        Some(ScaleMap::from_entries(self.vertex_count, entries))
    }

    /// Re-runs the named check on the stored instance.
    pub fn replay(&self) -> Option<PropertyReport> {
        if !self.partitions.is_empty() {
            let parts: Vec<Partition> = self
                .partitions
                .iter()
                .map(|l| Partition::from_keys(l.iter().copied()))
                .collect();
            return match self.property.as_str() {
                "nestedness" => Some(super::check_nestedness_sequence(&parts)),
                "causality" => {
                    let counts: Vec<usize> = parts.iter().map(|p| p.region_count()).collect();
                    Some(if counts.windows(2).all(|w| w[1] <= w[0]) {
                        PropertyReport::pass("causality")
                    } else {
                        PropertyReport::fail(self.clone())
                    })
                }
                _ => None,
            };
        }
        let scales = self.scale_map()?;
        match self.property.as_str() {
            "nestedness" => Some(super::check_nestedness(&scales)),
            "causality" => Some(super::check_causality(&scales)),
            _ => None,
        }
    }
}
