//! Times graph construction, MST and scale computation on synthetic
//! 481×321 images of different character.

use std::time::Instant;

use hierseg::oracle::random::random_image;
use hierseg::{build_grid_graph, compute_hierarchy, kruskal_mst, Quantizer, RgbImage};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let (w, h) = (481, 321);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let noise = RgbImage::from_pixels(w, h, (0..w * h).map(|_| [rng.gen(), rng.gen(), rng.gen()]).collect()).unwrap();
    let gradient = RgbImage::from_pixels(
        w,
        h,
        (0..w * h)
            .map(|i| {
                let (x, y) = (i % w, i / w);
                [(x * 255 / w) as u8, (y * 255 / h) as u8, ((x + y) % 256) as u8]
            })
            .collect(),
    )
    .unwrap();
    let blocks = random_image(&mut rng, w, h, 12);
    let smooth_noise = random_image(&mut rng, w, h, 3);
    for (name, img) in [
        ("noise", noise),
        ("gradient", gradient),
        ("blocks", blocks),
        ("smooth", smooth_noise),
    ] {
        let t = Instant::now();
        let g = build_grid_graph(&img, Quantizer::default()).unwrap();
        let mst = kruskal_mst(&g);
        let s = compute_hierarchy(&g, &mst);
        println!(
            "{name:>9}: {:.3}s, {} distinct scales, max {}",
            t.elapsed().as_secs_f64(),
            s.distinct_scales().len(),
            s.max_scale()
        );
    }
}
