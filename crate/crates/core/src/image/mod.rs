//! Raster types, Netpbm codecs and the image-level operations used around
//! segmentation: rendering, small-region filtering and salt noise.

mod filter;
mod noise;
mod pnm;
mod render;

pub use filter::area_filter;
pub use noise::add_salt_noise;
pub use pnm::{read_ppm, write_pgm, write_ppm};
pub use render::{render_segmentation, RenderStyle};

use crate::error::Error;

pub type Rgb = [u8; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    width: usize,
    height: usize,
    pixels: Vec<Rgb>,
}

impl RgbImage {
    pub fn from_pixels(width: usize, height: usize, pixels: Vec<Rgb>) -> Result<Self, Error> {
        if pixels.len() != width * height {
            return Err(Error::SizeMismatch {
                expected: width * height,
                found: pixels.len(),
            });
        }
        Ok(Self { width, height, pixels })
    }

    pub fn filled(width: usize, height: usize, color: Rgb) -> Self {
        Self {
            width,
            height,
            pixels: vec![color; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Row-major pixels.
    pub fn pixels(&self) -> &[Rgb] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [Rgb] {
        &mut self.pixels
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BitDepth {
    Eight,
    Sixteen,
}

impl BitDepth {
    pub fn max_sample(self) -> u16 {
        match self {
            BitDepth::Eight => 255,
            BitDepth::Sixteen => 65535,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    depth: BitDepth,
    samples: Vec<u16>,
}

impl GrayImage {
    pub fn from_samples(width: usize, height: usize, depth: BitDepth, samples: Vec<u16>) -> Result<Self, Error> {
        if samples.len() != width * height {
            return Err(Error::SizeMismatch {
                expected: width * height,
                found: samples.len(),
            });
        }
        if samples.iter().any(|&s| s > depth.max_sample()) {
            return Err(Error::InvalidInput("sample exceeds bit depth".into()));
        }
        Ok(Self {
            width,
            height,
            depth,
            samples,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn depth(&self) -> BitDepth {
        self.depth
    }

    pub fn samples(&self) -> &[u16] {
        &self.samples
    }
}
