use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RgbImage;
use crate::error::Error;

/// Replaces each pixel by white with probability `p`, independently.
///
/// Draws one ChaCha8 sample per pixel in row-major order, so a given
/// `(image size, p, seed)` always corrupts the same pixels.
pub fn add_salt_noise(image: &RgbImage, p: f64, seed: u64) -> Result<RgbImage, Error> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!("noise probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = image.clone();
    for px in out.pixels_mut() {
        if rng.gen::<f64>() < p {
            *px = [255, 255, 255];
        }
    }
    Ok(out)
}
