use super::{Rgb, RgbImage};
use crate::error::Error;
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderStyle {
    /// Channel-wise integer mean of the region, rounded half up.
    #[default]
    MeanColor,
    /// Color derived from a seeded hash of the region label.
    RandomColor { seed: u64 },
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn render_segmentation(partition: &Partition, image: &RgbImage, style: RenderStyle) -> Result<RgbImage, Error> {
    let n = image.pixels().len();
    if partition.vertex_count() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: partition.vertex_count(),
        });
    }
    let palette: Vec<Rgb> = match style {
        RenderStyle::MeanColor => {
            let mut sums = vec![[0u64; 3]; partition.region_count()];
            let mut counts = vec![0u64; partition.region_count()];
            for (px, &l) in image.pixels().iter().zip(partition.labels()) {
                let s = &mut sums[l as usize];
                for c in 0..3 {
                    s[c] += px[c] as u64;
                }
                counts[l as usize] += 1;
            }
            sums.iter()
                .zip(&counts)
                .map(|(s, &k)| s.map(|v| ((2 * v + k) / (2 * k)) as u8))
                .collect()
        }
        RenderStyle::RandomColor { seed } => (0..partition.region_count() as u64)
            .map(|l| {
                let h = splitmix64(seed ^ splitmix64(l)).to_le_bytes();
                [h[0], h[1], h[2]]
            })
            .collect(),
    };
    let pixels = partition.labels().iter().map(|&l| palette[l as usize]).collect();
    RgbImage::from_pixels(image.width(), image.height(), pixels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_single_region_unchanged() {
        let img = RgbImage::filled(3, 2, [7, 8, 9]);
        let p = Partition::from_keys([0; 6]);
        assert_eq!(render_segmentation(&p, &img, RenderStyle::MeanColor).unwrap(), img);
    }

    #[test]
    fn singletons_identity() {
        let img = RgbImage::from_pixels(2, 1, vec![[1, 2, 3], [200, 100, 0]]).unwrap();
        let p = Partition::singletons(2);
        assert_eq!(render_segmentation(&p, &img, RenderStyle::MeanColor).unwrap(), img);
    }

    #[test]
    fn two_region_means() {
        let img = RgbImage::from_pixels(4, 1, vec![[0, 0, 0], [1, 10, 255], [50, 50, 50], [51, 52, 53]]).unwrap();
        let p = Partition::from_keys([0, 0, 1, 1]);
        let out = render_segmentation(&p, &img, RenderStyle::MeanColor).unwrap();
        // (0+1)/2 = 0.5 -> 1, (0+10)/2 = 5, (0+255)/2 = 127.5 -> 128
        assert_eq!(out.pixels()[0], [1, 5, 128]);
        // 50.5 -> 51, 51, 51.5 -> 52
        assert_eq!(out.pixels()[3], [51, 51, 52]);
    }

    #[test]
    fn random_colors_deterministic() {
        let img = RgbImage::filled(3, 1, [0, 0, 0]);
        let p = Partition::from_keys([0, 1, 0]);
        let style = RenderStyle::RandomColor { seed: 4 };
        let a = render_segmentation(&p, &img, style).unwrap();
        assert_eq!(a, render_segmentation(&p, &img, style).unwrap());
        assert_eq!(a.pixels()[0], a.pixels()[2]);
    }

    #[test]
    fn size_mismatch() {
        let img = RgbImage::filled(3, 1, [0, 0, 0]);
        assert!(render_segmentation(&Partition::singletons(2), &img, RenderStyle::MeanColor).is_err());
    }
}
