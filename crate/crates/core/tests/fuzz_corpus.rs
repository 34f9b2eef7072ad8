//! Runs the checked-in fuzz corpus through the parsers with the same
//! round-trip assertions the fuzz targets make.

use std::path::{Path, PathBuf};

use hierseg::oracle::Counterexample;
use hierseg::{read_ppm, write_ppm, EdgeWeightedGraph};

fn corpus(target: &str) -> Vec<(PathBuf, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty(), "empty corpus {}", dir.display());
    files
        .into_iter()
        .map(|p| (p.clone(), std::fs::read(p).unwrap()))
        .collect()
}

#[test]
fn ppm_seeds() {
    let mut decoded = 0;
    for (path, bytes) in corpus("read_ppm") {
        if let Ok(img) = read_ppm(&bytes) {
            assert_eq!(read_ppm(&write_ppm(&img)).unwrap(), img, "{}", path.display());
            decoded += 1;
        }
    }
    assert!(decoded >= 2);
}

#[test]
fn graph_seeds() {
    let mut parsed = 0;
    for (path, bytes) in corpus("parse_graph") {
        let text = String::from_utf8(bytes).unwrap();
        if let Ok(g) = EdgeWeightedGraph::parse_text(&text) {
            let again = EdgeWeightedGraph::parse_text(&g.to_text()).unwrap();
            assert_eq!(again.edges(), g.edges(), "{}", path.display());
            hierseg::compute_hierarchy(&g, &hierseg::kruskal_mst(&g));
            parsed += 1;
        }
    }
    assert!(parsed >= 2);
}

#[test]
fn counterexample_seeds() {
    let mut parsed = 0;
    for (path, bytes) in corpus("parse_counterexample") {
        let text = String::from_utf8(bytes).unwrap();
        if let Ok(cx) = Counterexample::parse_text(&text) {
            let again = Counterexample::parse_text(&cx.to_text()).unwrap();
            assert_eq!(
                (&again.edges, &again.partitions),
                (&cx.edges, &cx.partitions),
                "{}",
                path.display()
            );
            cx.replay();
            parsed += 1;
        }
    }
    assert!(parsed >= 2);
}
