//! Netpbm: PPM (P6 binary and P3 ASCII) in, P6 and PGM (P5) out. Only
//! maxval 255 is accepted on input.

use super::{BitDepth, GrayImage, Rgb, RgbImage};
use crate::error::{FormatError, FormatErrorKind};

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, kind: FormatErrorKind) -> FormatError {
        FormatError::new(kind, self.pos)
    }

    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Reads an unsigned decimal token, `missing` being the error reported
    /// when no digit is found.
    fn number(&mut self, missing: FormatErrorKind) -> Result<u32, FormatError> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(&b) = self.data.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u32))
                .ok_or_else(|| FormatError::new(FormatErrorKind::MalformedHeader, start))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(FormatError::new(missing, start));
        }
        if let Some(&b) = self.data.get(self.pos) {
            if !b.is_ascii_whitespace() && b != b'#' {
                return Err(self.err(missing));
            }
        }
        Ok(value)
    }
}

pub fn read_ppm(bytes: &[u8]) -> Result<RgbImage, FormatError> {
    let mut cur = Cursor { data: bytes, pos: 0 };
    let binary = match bytes.get(..2) {
        Some(b"P6") => true,
        Some(b"P3") => false,
        _ => return Err(cur.err(FormatErrorKind::BadMagic)),
    };
    cur.pos = 2;
    if !bytes.get(2).is_some_and(|b| b.is_ascii_whitespace() || *b == b'#') {
        return Err(cur.err(FormatErrorKind::MalformedHeader));
    }
    cur.skip_whitespace_and_comments();
    let dims_at = cur.pos;
    let width = cur.number(FormatErrorKind::MalformedHeader)? as usize;
    let height = cur.number(FormatErrorKind::MalformedHeader)? as usize;
    cur.skip_whitespace_and_comments();
    let maxval_at = cur.pos;
    let maxval = cur.number(FormatErrorKind::MalformedHeader)?;
    if width == 0 || height == 0 {
        return Err(FormatError::new(FormatErrorKind::BadDimensions, dims_at));
    }
    if maxval != 255 {
        return Err(FormatError::new(FormatErrorKind::UnsupportedMaxval(maxval), maxval_at));
    }
    let count = width
        .checked_mul(height)
        .filter(|&n| n.checked_mul(3).is_some() && n <= u32::MAX as usize)
        .ok_or_else(|| FormatError::new(FormatErrorKind::BadDimensions, dims_at))?;

    let pixels = if binary {
        // exactly one whitespace byte separates the header from the raster
        match bytes.get(cur.pos) {
            Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
            Some(_) => return Err(cur.err(FormatErrorKind::MalformedHeader)),
            None => return Err(cur.err(FormatErrorKind::Truncated)),
        }
        let start = cur.pos.min(bytes.len());
        let raster = bytes
            .get(start..)
            .filter(|r| r.len() >= count * 3)
            .ok_or_else(|| FormatError::new(FormatErrorKind::Truncated, bytes.len()))?;
        raster[..count * 3]
            .chunks_exact(3)
            .map(|c| [c[0], c[1], c[2]])
            .collect()
    } else {
        // every ASCII sample takes at least one byte
        if bytes.len().saturating_sub(cur.pos) < count * 3 {
            return Err(FormatError::new(FormatErrorKind::Truncated, bytes.len()));
        }
        let mut pixels: Vec<Rgb> = Vec::with_capacity(count);
        for _ in 0..count {
            let mut px = [0u8; 3];
            for slot in &mut px {
                cur.skip_whitespace_and_comments();
                if cur.pos >= bytes.len() {
                    return Err(cur.err(FormatErrorKind::Truncated));
                }
                let at = cur.pos;
                let v = cur.number(FormatErrorKind::Syntax("expected sample".into()))?;
                *slot = u8::try_from(v).map_err(|_| FormatError::new(FormatErrorKind::SampleOutOfRange, at))?;
            }
            pixels.push(px);
        }
        pixels
    };
    Ok(RgbImage::from_pixels(width, height, pixels).expect("pixel count checked"))
}

pub fn write_ppm(image: &RgbImage) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.reserve(image.pixels().len() * 3);
    for px in image.pixels() {
        out.extend_from_slice(px);
    }
    out
}

/// Binary PGM; 16-bit samples are big-endian.
pub fn write_pgm(image: &GrayImage) -> Vec<u8> {
    let maxval = image.depth().max_sample();
    let mut out = format!("P5\n{} {}\n{}\n", image.width(), image.height(), maxval).into_bytes();
    match image.depth() {
        BitDepth::Eight => out.extend(image.samples().iter().map(|&s| s as u8)),
        BitDepth::Sixteen => {
            for &s in image.samples() {
                out.extend_from_slice(&s.to_be_bytes());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_p6() {
        let img = read_ppm(b"P6 1 1 255\n\x01\x02\x03").unwrap();
        assert_eq!((img.width(), img.height()), (1, 1));
        assert_eq!(img.pixels(), &[[1, 2, 3]]);
    }

    #[test]
    fn comments_in_header() {
        let img = read_ppm(b"P6\n# made by hand\n2 1 # dims\n255\n\x00\x00\x00\xff\xff\xff").unwrap();
        assert_eq!(img.pixels()[1], [255, 255, 255]);
    }

    #[test]
    fn p3_equals_p6_twin() {
        let p3 = b"P3\n2 1\n255\n10 20 30\n# mid\n 40 50 60\n";
        let a = read_ppm(p3).unwrap();
        let b = read_ppm(&write_ppm(&a)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pixels(), &[[10, 20, 30], [40, 50, 60]]);
    }

    #[test]
    fn canonical_reencoding() {
        let raw = b"P6   2 1\n255\n\x01\x02\x03\x04\x05\x06";
        assert_eq!(
            write_ppm(&read_ppm(raw).unwrap()),
            b"P6\n2 1\n255\n\x01\x02\x03\x04\x05\x06"
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let e = read_ppm(b"P5 1 1 255\n\x00").unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::BadMagic);
        let e = read_ppm(b"P6 1 1 65535\n\x00\x00\x00\x00\x00\x00").unwrap_err();
        assert_eq!(e, FormatError::new(FormatErrorKind::UnsupportedMaxval(65535), 7));
        let e = read_ppm(b"P6 2 2 255\n\x00\x00").unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::Truncated);
        let e = read_ppm(b"P6 x 2 255\n").unwrap_err();
        assert_eq!(e, FormatError::new(FormatErrorKind::MalformedHeader, 3));
        let e = read_ppm(b"P3 1 1 255 1 2 300   ").unwrap_err();
        assert_eq!(e, FormatError::new(FormatErrorKind::SampleOutOfRange, 15));
        let e = read_ppm(b"P6 0 3 255\n").unwrap_err();
        assert_eq!(e.kind, FormatErrorKind::BadDimensions);
        assert!(read_ppm(b"P6 99999999 99999999 255\n").is_err());
        assert!(read_ppm(b"").is_err());
        assert!(read_ppm(b"P6").is_err());
    }

    #[test]
    fn pgm_layouts() {
        let img = GrayImage::from_samples(1, 1, BitDepth::Eight, vec![0]).unwrap();
        assert_eq!(write_pgm(&img), b"P5\n1 1\n255\n\x00");
        let img = GrayImage::from_samples(1, 1, BitDepth::Sixteen, vec![258]).unwrap();
        assert_eq!(write_pgm(&img), b"P5\n1 1\n65535\n\x01\x02");
    }
}
