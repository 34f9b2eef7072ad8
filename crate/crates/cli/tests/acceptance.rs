//! End-to-end acceptance checks. Runs without the libtest harness so each
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use hierseg::fixtures::{
    nine_vertex_graph, six_vertex_graph, NINE_VERTEX_MST_EDGES, NINE_VERTEX_PRIOR_SCALES, SIX_VERTEX_NAMES,
};
use hierseg::oracle::random::{random_graph, random_image, Topology};
use hierseg::oracle::{
    bfs_partition, check_causality, check_nestedness, check_nestedness_sequence, default_v_bound,
    exhaustive_mst_weight, naive_hierarchical_scale, ScanVariant,
};
use hierseg::{
    add_salt_noise, build_grid_graph, compute_hierarchy, kruskal_mst, partition_at_threshold, read_ppm,
    render_segmentation, saliency_map, segment_fh, ultrametric, write_ppm, FhParams, HierarchyBuilder, Partition,
    Quantizer, RenderStyle, ScaleMap, ThresholdMode, VertexId, WeightedEdge,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn named(p: &Partition) -> Vec<String> {
    p.regions()
        .iter()
        .map(|r| r.iter().map(|&v| SIX_VERTEX_NAMES[v]).collect())
        .collect()
}

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_hierseg")
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(binary()).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "hierseg {args:?}: {}",
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).trim().to_string())
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn baseline_exactness() -> Outcome {
    let g = six_vertex_graph();
    let start = Instant::now();
    let mst = kruskal_mst(&g);
    let p5 = segment_fh(&mst, FhParams { k: 5, min_area: None });
    let p8 = segment_fh(&mst, FhParams { k: 8, min_area: None });
    let elapsed = start.elapsed();
    ensure!(named(&p5) == ["adef", "bc"], "k=5 gave {:?}", named(&p5));
    ensure!(named(&p8) == ["acdef", "b"], "k=8 gave {:?}", named(&p8));
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    Ok(format!("k=5 {:?}, k=8 {:?}, {elapsed:?}", named(&p5), named(&p8)))
}

fn hierarchy_exactness() -> Outcome {
    let g = six_vertex_graph();
    let scales = compute_hierarchy(&g, &kruskal_mst(&g));
    let mut got: Vec<String> = scales
        .entries()
        .iter()
        .map(|(e, s)| {
            let (a, b) = (SIX_VERTEX_NAMES[e.u.index()], SIX_VERTEX_NAMES[e.v.index()]);
            format!("{a}-{b}:{s}")
        })
        .collect();
    got.sort();
    let expected = ["a-d:1", "c-b:10", "c-f:8", "e-d:1", "f-e:1"];
    ensure!(got == expected, "scales {got:?}");
    let (c2, c9) = (named(&scales.cut(2)), named(&scales.cut(9)));
    ensure!(c2 == ["adef", "b", "c"], "cut at 2 gave {c2:?}");
    ensure!(c9 == ["acdef", "b"], "cut at 9 gave {c9:?}");
    Ok(format!("scales {got:?}, cut(2) {c2:?}, cut(9) {c9:?}"))
}

fn walkthrough_exactness() -> Outcome {
    let g = nine_vertex_graph();
    let mut b = HierarchyBuilder::new(9);
    for (e, &s) in g.edges().iter().zip(&NINE_VERTEX_PRIOR_SCALES) {
        b.commit(e, s);
    }
    let bg = g.edges()[NINE_VERTEX_MST_EDGES.len() - 1];
    let x_side = b.hierarchical_scale(VertexId(1), &bg);
    let y_side = b.hierarchical_scale(VertexId(6), &bg);
    let lambda = b.process(&bg);
    ensure!(
        (x_side, y_side, lambda) == (18, 12, 18),
        "got B side {x_side}, G side {y_side}, scale {lambda}"
    );
    Ok(format!("B side {x_side}, G side {y_side}, B-G scale {lambda}"))
}

fn random_scale_maps(count: u64, width: usize, height: usize) -> Vec<ScaleMap> {
    (0..count)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let img = random_image(&mut rng, width, height, 24);
            let g = build_grid_graph(&img, Quantizer::default()).unwrap();
            compute_hierarchy(&g, &kruskal_mst(&g))
        })
        .collect()
}

/// Region counts at 0 and at every distinct scale, recomputed by BFS.
fn counts_by_bfs(s: &ScaleMap) -> Vec<usize> {
    let triples: Vec<_> = s.threshold_edges().collect();
    std::iter::once(0)
        .chain(s.distinct_scales())
        .map(|l| bfs_partition(s.vertex_count(), &triples, l, ThresholdMode::Inclusive).region_count())
        .collect()
}

fn causality(maps: &[ScaleMap]) -> Outcome {
    let mut cuts = 0;
    for (i, s) in maps.iter().enumerate() {
        let report = check_causality(s);
        ensure!(report.passed, "image {i}: {:?}", report.counterexample);
        let counts = counts_by_bfs(s);
        ensure!(counts.windows(2).all(|w| w[1] <= w[0]), "image {i}: counts {counts:?}");
        cuts += counts.len();
    }
    Ok(format!("{} images, {cuts} cuts, 0 violations", maps.len()))
}

fn nestedness(maps: &[ScaleMap]) -> Outcome {
    let mut pairs = 0;
    for (i, s) in maps.iter().enumerate() {
        let report = check_nestedness(s);
        ensure!(report.passed, "image {i}: {:?}", report.counterexample);
        let levels: Vec<u64> = std::iter::once(0).chain(s.distinct_scales()).collect();
        for w in levels.windows(2) {
            ensure!(
                s.cut(w[0]).refines(&s.cut(w[1])),
                "image {i}: cut({}) does not refine cut({})",
                w[0],
                w[1]
            );
            pairs += 1;
        }
    }
    Ok(format!("{} images, {pairs} adjacent pairs nested", maps.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut scale_checks, mut partition_checks, mut mst_checks) = (0, 0, 0);
    for i in 0..200 {
        let topo = if i % 2 == 0 { Topology::Grid } else { Topology::General };
        let g = random_graph(&mut rng, topo, 2, 64, 31);
        ensure!(g.vertex_count() <= 64 && g.max_weight() <= 31, "generator out of range");
        let n = g.vertex_count();
        let mst = kruskal_mst(&g);
        let mut builder = HierarchyBuilder::new(n);
        for (j, e) in mst.edges().iter().enumerate() {
            let partial: Vec<(WeightedEdge, Option<u64>)> = mst
                .edges()
                .iter()
                .enumerate()
                .map(|(t, f)| (*f, (t < j).then(|| builder.assigned()[t].1)))
                .collect();
            let bound = default_v_bound(n, &partial, e);
            for side in [e.u, e.v] {
                let fast = builder.hierarchical_scale(side, e);
                let slow = naive_hierarchical_scale(n, &partial, side, e, ScanVariant::Stabilized, bound);
                ensure!(
                    fast == slow,
                    "graph {i} edge {j} side {side}: {fast} vs {slow}\n{}",
                    g.to_text()
                );
                scale_checks += 1;
            }
            builder.process(e);
        }
        let triples: Vec<_> = g.edges().iter().map(|e| (e.u, e.v, Some(e.weight as u64))).collect();
        for mode in [ThresholdMode::Strict, ThresholdMode::Inclusive] {
            let lambda = rng.gen_range(0..=32);
            let fast = partition_at_threshold(n, triples.iter().copied(), lambda, mode);
            ensure!(
                fast == bfs_partition(n, &triples, lambda, mode),
                "graph {i} threshold {lambda} {mode:?}"
            );
            partition_checks += 1;
        }
        let small = random_graph(&mut rng, Topology::General, 1, 12, 31);
        let exhaustive = exhaustive_mst_weight(&small).map_err(|e| e.to_string())?;
        let kruskal = kruskal_mst(&small).total_weight();
        ensure!(
            kruskal == exhaustive,
            "small graph {i}: {kruskal} vs {exhaustive}\n{}",
            small.to_text()
        );
        mst_checks += 1;
    }
    Ok(format!(
        "{scale_checks} one-sided scales, {partition_checks} partitions, {mst_checks} spanning trees, 0 mismatches"
    ))
}

fn saliency_consistency() -> Outcome {
    let mut triples_checked = 0;
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let img = random_image(&mut rng, 16, 16, 24);
        let g = build_grid_graph(&img, Quantizer::default()).unwrap();
        let mst = kruskal_mst(&g);
        let scales = compute_hierarchy(&g, &mst);
        let sal = saliency_map(&scales, &g, &mst);
        let top = scales.max_scale() + 1;
        for _ in 0..5 {
            let lambda = rng.gen_range(0..=top);
            let cut = scales.cut(lambda);
            let expected: Vec<usize> = (0..g.edges().len())
                .filter(|&i| {
                    let e = &g.edges()[i];
                    cut.label(e.u) != cut.label(e.v)
                })
                .collect();
            ensure!(
                sal.boundary_edges(lambda) == expected,
                "image {seed} threshold {lambda}"
            );
        }
        let n = g.vertex_count();
        let d = |a: usize, b: usize| -> Result<u64, String> {
            if a == b {
                return Ok(0);
            }
            ultrametric(&scales, &mst, (a.into(), b.into())).map_err(|e| e.to_string())
        };
        for _ in 0..1000 {
            let (p, q, r) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            let (pq, qr, pr) = (d(p, q)?, d(q, r)?, d(p, r)?);
            ensure!(pr <= pq.max(qr), "image {seed}: d({p},{r})={pr} > max({pq},{qr})");
            triples_checked += 1;
        }
    }
    Ok(format!(
        "20 images x 5 thresholds exact, {triples_checked} triples ultrametric"
    ))
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let img = random_image(&mut rng, 481, 321, 60);
    let start = Instant::now();
    let g = build_grid_graph(&img, Quantizer::default()).unwrap();
    let scales = compute_hierarchy(&g, &kruskal_mst(&g));
    let elapsed = start.elapsed();
    ensure!(elapsed <= Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!(
        "321x481 in {:.3} s ({} distinct scales)",
        elapsed.as_secs_f64(),
        scales.distinct_scales().len()
    ))
}

fn robustness(dir: &Path) -> Outcome {
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(900 + seed);
        let clean = random_image(&mut rng, 64, 48, 16);
        let clean_path = dir.join(format!("clean{seed}.ppm"));
        let noisy_path = dir.join(format!("noisy{seed}.ppm"));
        let cut_path = dir.join(format!("cut{seed}.ppm"));
        std::fs::write(&clean_path, write_ppm(&clean)).map_err(|e| e.to_string())?;
        let s = |p: &Path| p.to_str().unwrap().to_string();
        let seed_arg = seed.to_string();
        run_cli(&[
            "noise",
            &s(&clean_path),
            &s(&noisy_path),
            "--salt",
            "0.7",
            "--seed",
            &seed_arg,
        ])?;
        let summary = run_cli(&["cut", &s(&noisy_path), &s(&cut_path), "--regions", "15"])?;
        ensure!(
            read_ppm(&std::fs::read(&cut_path).unwrap()).is_ok(),
            "image {seed}: unreadable render"
        );

        let noisy = add_salt_noise(&clean, 0.7, seed).map_err(|e| e.to_string())?;
        ensure!(
            std::fs::read(&noisy_path).unwrap() == write_ppm(&noisy),
            "image {seed}: CLI noise differs from library"
        );
        let g = build_grid_graph(&noisy, Quantizer::default()).unwrap();
        let scales = compute_hierarchy(&g, &kruskal_mst(&g));
        let cut = scales.cut_to_region_count(15);
        ensure!(cut.partition.region_count() <= 15, "image {seed}: {summary}");
        render_segmentation(&cut.partition, &noisy, RenderStyle::MeanColor).map_err(|e| e.to_string())?;
        causality(std::slice::from_ref(&scales)).map_err(|e| format!("noisy image {seed}: {e}"))?;
        nestedness(std::slice::from_ref(&scales)).map_err(|e| format!("noisy image {seed}: {e}"))?;
    }
    Ok("10 noisy images: pipeline ran, causality and nestedness hold".into())
}

fn baseline_violation(dir: &Path) -> Outcome {
    let csv_path = dir.join("sweep.csv");
    let input = fixture("fh_increase.ppm");
    run_cli(&[
        "sweep",
        input.to_str().unwrap(),
        csv_path.to_str().unwrap(),
        "--method",
        "fh",
        "--k-list",
        "60,79,80,100",
    ])?;
    let csv = std::fs::read_to_string(&csv_path).map_err(|e| e.to_string())?;
    let rows: Vec<(u64, usize)> = csv
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    let increase = rows.windows(2).find(|w| w[1].1 > w[0].1);
    ensure!(increase.is_some(), "no count increase in sweep:\n{csv}");
    let w = increase.unwrap();

    let g = six_vertex_graph();
    let mst = kruskal_mst(&g);
    let seq = [5, 8].map(|k| segment_fh(&mst, FhParams { k, min_area: None }));
    let report = check_nestedness_sequence(&seq);
    let offending = report.counterexample.as_ref().map(|c| c.offending.clone());
    ensure!(
        !report.passed && offending == Some(vec![1, 2]),
        "nestedness report {report:?}"
    );
    Ok(format!(
        "k={} -> {} regions, k={} -> {} regions; six-vertex k=5/8 counterexample {{b,c}}",
        w[0].0, w[0].1, w[1].0, w[1].1
    ))
}

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let maps = random_scale_maps(50, 32, 32);
    let criteria: Vec<Criterion> = vec![
        (
            "baseline exactness on the six-vertex graph",
            Box::new(baseline_exactness),
        ),
        (
            "hierarchy exactness on the six-vertex graph",
            Box::new(hierarchy_exactness),
        ),
        (
            "one-sided scales on the nine-vertex configuration",
            Box::new(walkthrough_exactness),
        ),
        ("causality on 50 random 32x32 images", Box::new(|| causality(&maps))),
        ("nestedness on 50 random 32x32 images", Box::new(|| nestedness(&maps))),
        ("oracle equivalence on 200 random graphs", Box::new(oracle_equivalence)),
        ("saliency threshold consistency", Box::new(saliency_consistency)),
        ("hierarchy performance on 321x481", Box::new(performance)),
        ("robustness under 70% salt noise", Box::new(|| robustness(dir.path()))),
        (
            "baseline region-count increase and nesting failure",
            Box::new(|| baseline_violation(dir.path())),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
