//! Canonical 8-bit raster storage, file codecs, and binarization.
//!
//! Images are stored as 8-bit grayscale. Numeric stages operate on a
//! real-valued unit-scale view ([`RealImage`]) and re-quantize with
//! round-half-away-from-zero when they come back to bytes.

use thiserror::Error;

use crate::geom::PixelRect;
use crate::scalar::Real;

/// File formats the codecs understand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileFormat {
    Png,
    Pgm,
}

#[derive(Debug, Error)]
pub enum RasterError {
    #[error("malformed image file: {0}")]
    MalformedFile(String),
    #[error("unsupported image format: {0}")]
    UnsupportedFormat(String),
}

/// Row-major 8-bit grayscale image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    width: u32,
    height: u32,
    data: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: u32, height: u32, fill: u8) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        GrayImage { width, height, data: vec![fill; width as usize * height as usize] }
    }

    pub fn from_raw(width: u32, height: u32, data: Vec<u8>) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        assert_eq!(data.len(), width as usize * height as usize, "payload size");
        GrayImage { width, height, data }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u8 {
        debug_assert!(x < self.width && y < self.height);
        self.data[y as usize * self.width as usize + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, v: u8) {
        debug_assert!(x < self.width && y < self.height);
        self.data[y as usize * self.width as usize + x as usize] = v;
    }

    /// Replicated-border lookup for signed coordinates.
    #[inline]
    pub fn get_clamped(&self, x: i64, y: i64) -> u8 {
        let cx = x.clamp(0, self.width as i64 - 1) as u32;
        let cy = y.clamp(0, self.height as i64 - 1) as u32;
        self.get(cx, cy)
    }

    pub fn map(&self, f: impl Fn(u8) -> u8) -> GrayImage {
        GrayImage {
            width: self.width,
            height: self.height,
            data: self.data.iter().copied().map(f).collect(),
        }
    }
}

/// Real-valued unit-scale view used by the numeric stages.
#[derive(Clone, Debug, PartialEq)]
pub struct RealImage<T> {
    width: u32,
    height: u32,
    data: Vec<T>,
}

impl<T: Real> RealImage<T> {
    pub fn new(width: u32, height: u32, fill: T) -> Self {
        assert!(width > 0 && height > 0, "image dimensions must be positive");
        RealImage { width, height, data: vec![fill; width as usize * height as usize] }
    }

    /// Maps byte intensities onto [0, 1].
    pub fn from_gray(img: &GrayImage) -> Self {
        let scale = T::from_f64_lit(1.0 / 255.0);
        RealImage {
            width: img.width,
            height: img.height,
            data: img.data.iter().map(|&v| T::from_u8(v).expect("u8 fits") * scale).collect(),
        }
    }

    /// Re-quantizes to bytes with round-half-away-from-zero, clamped to [0, 255].
    pub fn to_gray(&self) -> GrayImage {
        let full = T::from_f64_lit(255.0);
        GrayImage {
            width: self.width,
            height: self.height,
            data: self
                .data
                .iter()
                .map(|&v| {
                    let q = (v * full).round().to_f64_lossy();
                    q.clamp(0.0, 255.0) as u8
                })
                .collect(),
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> T {
        debug_assert!(x < self.width && y < self.height);
        self.data[y as usize * self.width as usize + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, v: T) {
        debug_assert!(x < self.width && y < self.height);
        self.data[y as usize * self.width as usize + x as usize] = v;
    }

    /// Replicated-border lookup for signed coordinates.
    #[inline]
    pub fn get_clamped(&self, x: i64, y: i64) -> T {
        let cx = x.clamp(0, self.width as i64 - 1) as u32;
        let cy = y.clamp(0, self.height as i64 - 1) as u32;
        self.get(cx, cy)
    }

    pub fn sum(&self) -> T {
        self.data.iter().copied().sum()
    }
}

/// Per-pixel boolean mask, true = foreground.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryMask {
    width: u32,
    height: u32,
    data: Vec<bool>,
}

impl BinaryMask {
    pub fn new(width: u32, height: u32, fill: bool) -> Self {
        assert!(width > 0 && height > 0, "mask dimensions must be positive");
        BinaryMask { width, height, data: vec![fill; width as usize * height as usize] }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> bool {
        debug_assert!(x < self.width && y < self.height);
        self.data[y as usize * self.width as usize + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, v: bool) {
        debug_assert!(x < self.width && y < self.height);
        self.data[y as usize * self.width as usize + x as usize] = v;
    }

    /// Out-of-range coordinates read as background.
    #[inline]
    pub fn get_or_bg(&self, x: i64, y: i64) -> bool {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            false
        } else {
            self.get(x as u32, y as u32)
        }
    }

    pub fn count(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }

    pub fn any(&self) -> bool {
        self.data.iter().any(|&b| b)
    }

    /// Tight bounds of the set pixels; `None` when the mask is empty.
    pub fn bounds(&self) -> Option<PixelRect> {
        let mut r: Option<PixelRect> = None;
        for y in 0..self.height {
            for x in 0..self.width {
                if self.get(x, y) {
                    let p = PixelRect { x0: x as i64, y0: y as i64, x1: x as i64, y1: y as i64 };
                    r = Some(match r {
                        Some(acc) => acc.union(&p),
                        None => p,
                    });
                }
            }
        }
        r
    }

    /// Erosion by a (2n+1)-square structuring element (n 8-neighborhood passes).
    pub fn erode8(&self, iterations: u32) -> BinaryMask {
        let mut cur = self.clone();
        for _ in 0..iterations {
            let mut next = cur.clone();
            for y in 0..self.height {
                for x in 0..self.width {
                    if !cur.get(x, y) {
                        continue;
                    }
                    let mut keep = true;
                    'n: for dy in -1..=1i64 {
                        for dx in -1..=1i64 {
                            if !cur.get_or_bg(x as i64 + dx, y as i64 + dy) {
                                keep = false;
                                break 'n;
                            }
                        }
                    }
                    if !keep {
                        next.set(x, y, false);
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// Dilation by a (2n+1)-square structuring element.
    pub fn dilate8(&self, iterations: u32) -> BinaryMask {
        let mut cur = self.clone();
        for _ in 0..iterations {
            let mut next = cur.clone();
            for y in 0..self.height {
                for x in 0..self.width {
                    if cur.get(x, y) {
                        continue;
                    }
                    'n: for dy in -1..=1i64 {
                        for dx in -1..=1i64 {
                            if cur.get_or_bg(x as i64 + dx, y as i64 + dy) {
                                next.set(x, y, true);
                                break 'n;
                            }
                        }
                    }
                }
            }
            cur = next;
        }
        cur
    }
}

/// Decodes PNG (8-bit gray or RGB) or binary PGM bytes.
pub fn decode_image(bytes: &[u8], format: FileFormat) -> Result<GrayImage, RasterError> {
    match format {
        FileFormat::Png => decode_png(bytes),
        FileFormat::Pgm => decode_pgm(bytes),
    }
}

/// Encodes to the requested container.
pub fn encode_image(img: &GrayImage, format: FileFormat) -> Result<Vec<u8>, RasterError> {
    match format {
        FileFormat::Png => encode_png(img),
        FileFormat::Pgm => Ok(encode_pgm(img)),
    }
}

/// Sniffs the container from magic bytes.
pub fn detect_format(bytes: &[u8]) -> Result<FileFormat, RasterError> {
    if bytes.starts_with(b"\x89PNG\r\n\x1a\n") {
        Ok(FileFormat::Png)
    } else if bytes.starts_with(b"P5") {
        Ok(FileFormat::Pgm)
    } else {
        Err(RasterError::UnsupportedFormat("unknown magic bytes".into()))
    }
}

fn decode_png(bytes: &[u8]) -> Result<GrayImage, RasterError> {
    use image::DynamicImage;

    let dynamic = image::load_from_memory_with_format(bytes, image::ImageFormat::Png)
        .map_err(|e| RasterError::MalformedFile(e.to_string()))?;
    let (w, h) = (dynamic.width(), dynamic.height());
    if w == 0 || h == 0 {
        return Err(RasterError::MalformedFile("zero-dimension image".into()));
    }
    match dynamic {
        DynamicImage::ImageLuma8(img) => Ok(GrayImage::from_raw(w, h, img.into_raw())),
        DynamicImage::ImageRgb8(img) => {
            let data = img.pixels().map(|p| luma601(p.0[0], p.0[1], p.0[2])).collect();
            Ok(GrayImage::from_raw(w, h, data))
        }
        other => Err(RasterError::UnsupportedFormat(format!(
            "PNG color type {:?}; expected 8-bit gray or RGB",
            other.color()
        ))),
    }
}

/// ITU-R 601 luminance, rounded to nearest.
fn luma601(r: u8, g: u8, b: u8) -> u8 {
    let y = 0.299 * r as f64 + 0.587 * g as f64 + 0.114 * b as f64;
    y.round().clamp(0.0, 255.0) as u8
}

fn encode_png(img: &GrayImage) -> Result<Vec<u8>, RasterError> {
    let mut out = Vec::new();
    let enc = image::codecs::png::PngEncoder::new(&mut out);
    image::ImageEncoder::write_image(
        enc,
        img.data(),
        img.width(),
        img.height(),
        image::ExtendedColorType::L8,
    )
    .map_err(|e| RasterError::MalformedFile(e.to_string()))?;
    Ok(out)
}

fn encode_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.data());
    out
}

fn decode_pgm(bytes: &[u8]) -> Result<GrayImage, RasterError> {
    let mut pos = 0usize;
    let magic = read_pgm_token(bytes, &mut pos)
        .ok_or_else(|| RasterError::MalformedFile("missing PGM magic".into()))?;
    if magic != b"P5" {
        return Err(RasterError::UnsupportedFormat(format!(
            "PGM magic {:?}; only binary P5 is supported",
            String::from_utf8_lossy(magic)
        )));
    }
    let mut field = |name: &str| -> Result<u64, RasterError> {
        let tok = read_pgm_token(bytes, &mut pos)
            .ok_or_else(|| RasterError::MalformedFile(format!("missing PGM {name}")))?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| RasterError::MalformedFile(format!("bad PGM {name}")))
    };
    let w = field("width")?;
    let h = field("height")?;
    let maxval = field("maxval")?;
    if w == 0 || h == 0 {
        return Err(RasterError::MalformedFile("zero-dimension image".into()));
    }
    if w > u32::MAX as u64 || h > u32::MAX as u64 {
        return Err(RasterError::MalformedFile("dimensions overflow".into()));
    }
    if maxval != 255 {
        return Err(RasterError::UnsupportedFormat(format!(
            "PGM maxval {maxval}; only 8-bit (255) is supported"
        )));
    }
    // Exactly one whitespace byte separates the header from the payload.
    if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
        return Err(RasterError::MalformedFile("missing payload separator".into()));
    }
    pos += 1;
    let expected = w as usize * h as usize;
    let payload = &bytes[pos..];
    if payload.len() < expected {
        return Err(RasterError::MalformedFile(format!(
            "payload is {} bytes, header claims {}",
            payload.len(),
            expected
        )));
    }
    if payload.len() > expected {
        return Err(RasterError::MalformedFile("trailing bytes after payload".into()));
    }
    Ok(GrayImage::from_raw(w as u32, h as u32, payload.to_vec()))
}

/// Returns the next header token, skipping whitespace and `#` comments.
/// Leaves `pos` at the first byte after the token.
fn read_pgm_token<'a>(bytes: &'a [u8], pos: &mut usize) -> Option<&'a [u8]> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
            continue;
        }
        break;
    }
    let start = *pos;
    while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
    (*pos > start).then(|| &bytes[start..*pos])
}

/// Thresholding strategy for [`binarize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinarizeMethod {
    /// Maximize between-class variance over all 256 thresholds.
    Otsu,
    /// Foreground = pixels at or above the given value.
    Fixed(u8),
}

/// Result of binarization; `degenerate` flags a single-bin histogram.
#[derive(Clone, Debug)]
pub struct Binarization {
    pub mask: BinaryMask,
    pub threshold: u8,
    pub degenerate: bool,
}

/// Splits an image into foreground (bright) and background pixels.
pub fn binarize(img: &GrayImage, method: BinarizeMethod) -> Binarization {
    let hist = histogram(img);
    let degenerate = hist.iter().filter(|&&c| c > 0).count() <= 1;
    let threshold = match method {
        BinarizeMethod::Fixed(t) => t,
        BinarizeMethod::Otsu => otsu_threshold(&hist),
    };
    let mut mask = BinaryMask::new(img.width(), img.height(), false);
    for y in 0..img.height() {
        for x in 0..img.width() {
            mask.set(x, y, img.get(x, y) >= threshold);
        }
    }
    Binarization { mask, threshold, degenerate }
}

pub fn histogram(img: &GrayImage) -> [u64; 256] {
    let mut hist = [0u64; 256];
    for &v in img.data() {
        hist[v as usize] += 1;
    }
    hist
}

/// Threshold maximizing between-class variance; ties go to the smaller value.
/// Classes are `< t` (background) and `>= t` (foreground).
pub fn otsu_threshold(hist: &[u64; 256]) -> u8 {
    let total: u64 = hist.iter().sum();
    let total_f = total as f64;
    let weighted_sum: f64 = hist.iter().enumerate().map(|(v, &c)| v as f64 * c as f64).sum();

    let mut best_t = 0u8;
    let mut best_score = f64::NEG_INFINITY;
    let mut count_bg = 0u64;
    let mut sum_bg = 0.0f64;
    for t in 0..=255u16 {
        let w0 = count_bg as f64 / total_f;
        let w1 = 1.0 - w0;
        let score = if count_bg == 0 || count_bg == total {
            0.0
        } else {
            let mu0 = sum_bg / count_bg as f64;
            let mu1 = (weighted_sum - sum_bg) / (total - count_bg) as f64;
            w0 * w1 * (mu0 - mu1) * (mu0 - mu1)
        };
        if score > best_score {
            best_score = score;
            best_t = t as u8;
        }
        if t < 256 {
            count_bg += hist[t as usize];
            sum_bg += t as f64 * hist[t as usize] as f64;
        }
    }
    best_t
}
