//! Searches seeded random images for a pair `k1 < k2` where the baseline
//! segmentation has more regions at `k2` than at `k1`.
//!
//! Usage: `find_fh_increase [OUT.ppm] [FIRST_SEED]`. Prints the seed, the
//! image size and the offending pair, and writes the image as a binary PPM.

use hierseg::oracle::random::random_image;
use hierseg::{build_grid_graph, kruskal_mst, segment_fh, write_ppm, FhParams, Quantizer};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let out = args.next().unwrap_or_else(|| "fh_increase.ppm".into());
    let first: u64 = args.next().map_or(0, |s| s.parse().expect("seed must be an integer"));
    for seed in first.. {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let img = random_image(&mut rng, 8, 8, 30);
        let g = build_grid_graph(&img, Quantizer::default()).unwrap();
        let mst = kruskal_mst(&g);
        let counts: Vec<usize> = (0..=400)
            .map(|k| segment_fh(&mst, FhParams { k, min_area: None }).region_count())
            .collect();
        if let Some(k) = (0..counts.len() - 1).find(|&k| counts[k + 1] > counts[k]) {
            std::fs::write(&out, write_ppm(&img)).unwrap();
            println!(
                "seed={seed} size=8x8 k1={k} regions1={} k2={} regions2={}",
                counts[k],
                k + 1,
                counts[k + 1]
            );
            return;
        }
    }
}
