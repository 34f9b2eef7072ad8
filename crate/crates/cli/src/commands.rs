use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use hierseg::oracle::Counterexample;
use hierseg::oracle::{check_causality, check_nestedness, PropertyReport};
use hierseg::{
    add_salt_noise, area_filter, build_grid_graph, compute_hierarchy, kruskal_mst, read_ppm, render_contours,
    render_segmentation, saliency_map, segment_fh, write_pgm, write_ppm, EdgeWeightedGraph, FhParams, MergeTree,
    Normalization, Partition, Quantizer, RenderStyle, RgbImage,
};

use crate::sweep;
use crate::{Cli, CliError, Command, InputArgs, NormArg, DEFAULT_MIN_AREA};

enum Loaded {
    Image(RgbImage, EdgeWeightedGraph),
    Graph(EdgeWeightedGraph),
}

impl Loaded {
    fn graph(&self) -> &EdgeWeightedGraph {
        match self {
            Loaded::Image(_, g) | Loaded::Graph(g) => g,
        }
    }

    fn default_min_area(&self) -> usize {
        match self {
            Loaded::Image(..) => DEFAULT_MIN_AREA,
            Loaded::Graph(_) => 0,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::io("read", path, e))
}

fn read_image(path: &Path) -> Result<RgbImage, CliError> {
    read_ppm(&read(path)?).map_err(|e| CliError::format(path, e))
}

fn load(path: &Path, as_graph: bool) -> Result<Loaded, CliError> {
    if as_graph {
        let bytes = read(path)?;
        let text = String::from_utf8_lossy(&bytes);
        let g = EdgeWeightedGraph::parse_text(&text).map_err(|e| CliError::format(path, e))?;
        Ok(Loaded::Graph(g))
    } else {
        let img = read_image(path)?;
        let g = build_grid_graph(&img, Quantizer::default()).map_err(CliError::input)?;
        Ok(Loaded::Image(img, g))
    }
}

fn load_input(args: &InputArgs) -> Result<Loaded, CliError> {
    load(&args.input, args.graph)
}

/// Writes to a sibling temporary file and renames it into place, so a failed
/// run never leaves a partial output behind.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes).map_err(|e| CliError::io("write", path, e))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::io("write", path, e)
    })
}

fn labels_csv(p: &Partition) -> String {
    let mut out = String::from("vertex,region\n");
    for (v, l) in p.labels().iter().enumerate() {
        let _ = writeln!(out, "{v},{l}");
    }
    out
}

/// Area-filters `p` and writes it: mean-color PPM for images, label CSV for
/// graphs. Returns the region count after filtering.
fn write_partition(loaded: &Loaded, p: &Partition, min_area: Option<usize>, output: &Path) -> Result<usize, CliError> {
    let min_area = min_area.unwrap_or(loaded.default_min_area());
    let filtered = area_filter(p, loaded.graph(), min_area).map_err(CliError::input)?;
    let bytes = match loaded {
        Loaded::Image(img, _) => {
            write_ppm(&render_segmentation(&filtered, img, RenderStyle::MeanColor).map_err(CliError::input)?)
        }
        Loaded::Graph(_) => labels_csv(&filtered).into_bytes(),
    };
    write_atomic(output, &bytes)?;
    Ok(filtered.region_count())
}

fn report_line(r: &PropertyReport) -> String {
    match &r.counterexample {
        None => format!("{}=pass", r.property),
        Some(cx) => format!("{}=fail offending={:?}", r.property, cx.offending),
    }
}

/// Runs one parsed command line. On success returns the summary to print.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Hierarchy { input, tree, scales } => {
            let start = Instant::now();
            let loaded = load_input(input)?;
            let g = loaded.graph();
            let mst = kruskal_mst(g);
            let map = compute_hierarchy(g, &mst);
            let elapsed = start.elapsed();
            let merge_tree = MergeTree::from_scale_map(&map);
            write_atomic(tree, merge_tree.to_text().as_bytes())?;
            write_atomic(scales, map.to_csv().as_bytes())?;
            Ok(format!(
                "vertices={} edges={} tree_edges={} distinct_scales={} seconds={:.3}",
                g.vertex_count(),
                g.edges().len(),
                mst.edges().len(),
                map.distinct_scales().len(),
                elapsed.as_secs_f64()
            ))
        }
        Command::Cut {
            input,
            output,
            scale,
            regions,
            min_area,
        } => {
            let loaded = load_input(input)?;
            let g = loaded.graph();
            let map = compute_hierarchy(g, &kruskal_mst(g));
            let (lambda, p) = match (scale, regions) {
                (Some(k), None) => (*k, map.cut(*k)),
                (None, Some(0)) => return Err(CliError::usage("--regions must be at least 1")),
                (None, Some(n)) => {
                    let c = map.cut_to_region_count(*n);
                    (c.lambda, c.partition)
                }
                _ => return Err(CliError::usage("exactly one of --scale and --regions is required")),
            };
            let after = write_partition(&loaded, &p, *min_area, output)?;
            Ok(format!(
                "scale={lambda} regions_before={} regions_after={after}",
                p.region_count()
            ))
        }
        Command::Fh {
            input,
            output,
            k,
            min_area,
        } => {
            let loaded = load_input(input)?;
            let mst = kruskal_mst(loaded.graph());
            let p = segment_fh(&mst, FhParams { k: *k, min_area: None });
            let after = write_partition(&loaded, &p, *min_area, output)?;
            Ok(format!(
                "k={k} regions_before={} regions_after={after}",
                p.region_count()
            ))
        }
        Command::Saliency {
            input,
            output,
            norm,
            invert,
        } => {
            let loaded = load_input(input)?;
            let g = loaded.graph();
            let mst = kruskal_mst(g);
            let map = compute_hierarchy(g, &mst);
            let sal = saliency_map(&map, g, &mst);
            let bytes = match &loaded {
                Loaded::Image(img, _) => {
                    let norm = match norm {
                        NormArg::Linear => Normalization::Linear,
                        NormArg::Log => Normalization::Log,
                    };
                    let shape = hierseg::GridShape {
                        width: img.width(),
                        height: img.height(),
                    };
                    write_pgm(&render_contours(&sal, shape, norm, *invert).map_err(CliError::input)?)
                }
                Loaded::Graph(_) => sal.to_csv().into_bytes(),
            };
            write_atomic(output, &bytes)?;
            Ok(format!("edges={} max_saliency={}", sal.values().len(), sal.max_value()))
        }
        Command::Sweep {
            input,
            output,
            method,
            k_list,
        } => {
            if k_list.is_empty() {
                return Err(CliError::usage("--k-list must not be empty"));
            }
            let loaded = load_input(input)?;
            let g = loaded.graph();
            let rows = sweep::sweep(g, &kruskal_mst(g), *method, k_list);
            write_atomic(output, sweep::to_csv(&rows).as_bytes())?;
            let increases = rows
                .windows(2)
                .filter(|w| w[1].region_count > w[0].region_count)
                .count();
            let non_nested = rows.iter().filter(|r| !r.nested_with_previous).count();
            Ok(format!(
                "rows={} count_increases={increases} non_nested={non_nested}",
                rows.len()
            ))
        }
        Command::Noise {
            input,
            output,
            salt,
            seed,
        } => {
            let img = read_image(input)?;
            let noisy = add_salt_noise(&img, *salt, *seed).map_err(CliError::input)?;
            write_atomic(output, &write_ppm(&noisy))?;
            let changed = img.pixels().iter().zip(noisy.pixels()).filter(|(a, b)| a != b).count();
            Ok(format!("pixels={} changed={changed}", img.pixels().len()))
        }
        Command::Check {
            input,
            graph,
            replay,
            counterexample,
        } => {
            let reports = if let Some(path) = replay {
                let bytes = read(path)?;
                let cx = Counterexample::parse_text(&String::from_utf8_lossy(&bytes))
                    .map_err(|e| CliError::format(path, e))?;
                let report = cx.replay().ok_or_else(|| {
                    CliError::input(hierseg::Error::InvalidInput(format!(
                        "cannot replay property `{}` on this instance",
                        cx.property
                    )))
                })?;
                vec![report]
            } else {
                let path = input
                    .as_deref()
                    .ok_or_else(|| CliError::usage("an input or --replay is required"))?;
                let loaded = load(path, *graph)?;
                let g = loaded.graph();
                let map = compute_hierarchy(g, &kruskal_mst(g));
                vec![check_causality(&map), check_nestedness(&map)]
            };
            let summary = reports.iter().map(report_line).collect::<Vec<_>>().join(" ");
            if let Some(failed) = reports.iter().find(|r| !r.passed) {
                if let (Some(out), Some(cx)) = (counterexample, &failed.counterexample) {
                    write_atomic(out, cx.to_text().as_bytes())?;
                }
                return Err(CliError::violation(&failed.property, summary));
            }
            Ok(summary)
        }
    }
}
