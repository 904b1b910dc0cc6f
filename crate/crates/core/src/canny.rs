//! Canny edge detection: Gaussian smoothing, Sobel gradients, non-maximum
//! suppression, double thresholding, and hysteresis tracking.
//!
//! Edge maps gate the tear-side matcher: matched side samples must lie on
//! detected edges, otherwise a candidate placement is demoted.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::raster::{BinaryMask, GrayImage, RealImage};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum CannyError {
    #[error("invalid thresholds: require 0 < low < high, got low={low}, high={high}")]
    InvalidThresholds { low: f64, high: f64 },
    #[error("invalid threshold spec: {0}")]
    InvalidSpec(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradientNorm {
    /// Euclidean magnitude sqrt(Gx^2 + Gy^2).
    L2,
    /// Manhattan magnitude |Gx| + |Gy|.
    L1,
}

/// Square odd-sided filter kernel, applied as correlation.
#[derive(Clone, Debug)]
pub struct Kernel<T> {
    side: usize,
    data: Vec<T>,
}

impl<T: Real> Kernel<T> {
    pub fn new(side: usize, data: Vec<T>) -> Self {
        assert!(side % 2 == 1, "kernel side must be odd");
        assert_eq!(data.len(), side * side, "kernel payload size");
        Kernel { side, data }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[j * self.side + i]
    }
}

/// Gaussian kernel of side `2*ceil(3*sigma) + 1`, normalized to sum 1.
pub fn gaussian_kernel<T: Real>(sigma: T) -> Kernel<T> {
    assert!(sigma > T::zero(), "sigma must be positive");
    let radius = (sigma * T::from_f64_lit(3.0)).ceil().to_f64_lossy() as i64;
    let side = (2 * radius + 1) as usize;
    let two_sigma2 = T::from_f64_lit(2.0) * sigma * sigma;
    let mut data = Vec::with_capacity(side * side);
    let mut sum = T::zero();
    for j in -radius..=radius {
        for i in -radius..=radius {
            let r2 = T::from_i64(i * i + j * j).expect("radius");
            let v = (-r2 / two_sigma2).exp();
            sum += v;
            data.push(v);
        }
    }
    for v in &mut data {
        *v /= sum;
    }
    Kernel::new(side, data)
}

/// Correlation with replicated borders; output dimensions equal the input's.
pub fn convolve<T: Real>(img: &RealImage<T>, kernel: &Kernel<T>) -> RealImage<T> {
    let (w, h) = (img.width(), img.height());
    let r = (kernel.side / 2) as i64;
    let mut out = RealImage::new(w, h, T::zero());
    for y in 0..h {
        for x in 0..w {
            let mut acc = T::zero();
            for j in -r..=r {
                for i in -r..=r {
                    let kv = kernel.get((i + r) as usize, (j + r) as usize);
                    acc += kv * img.get_clamped(x as i64 + i, y as i64 + j);
                }
            }
            out.set(x, y, acc);
        }
    }
    out
}

/// Gradient direction quantized to one of four axes.
/// Sector k covers angles around k*45 degrees (mod 180).
#[derive(Clone, Debug)]
pub struct GradientField<T> {
    pub magnitude: RealImage<T>,
    /// Per-pixel sector 0..4 for 0, 45, 90, 135 degrees.
    sectors: Vec<u8>,
}

impl<T: Real> GradientField<T> {
    pub fn sector(&self, x: u32, y: u32) -> u8 {
        self.sectors[y as usize * self.magnitude.width() as usize + x as usize]
    }
}

/// Step offsets along each quantized direction (y points down).
const SECTOR_OFFSETS: [(i64, i64); 4] = [(1, 0), (1, 1), (0, 1), (-1, 1)];

fn quantize_direction(gx: f64, gy: f64) -> u8 {
    let deg = gy.atan2(gx).to_degrees().rem_euclid(180.0);
    (((deg + 22.5) / 45.0).floor() as i64 % 4) as u8
}

/// Sobel gradients with the requested magnitude norm.
pub fn gradient<T: Real>(img: &RealImage<T>, norm: GradientNorm) -> GradientField<T> {
    let (w, h) = (img.width(), img.height());
    let mut magnitude = RealImage::new(w, h, T::zero());
    let mut sectors = vec![0u8; w as usize * h as usize];
    for y in 0..h {
        for x in 0..w {
            let p = |i: i64, j: i64| img.get_clamped(x as i64 + i, y as i64 + j);
            let two = T::from_f64_lit(2.0);
            let gx = p(1, -1) - p(-1, -1) + two * (p(1, 0) - p(-1, 0)) + p(1, 1) - p(-1, 1);
            let gy = p(-1, 1) - p(-1, -1) + two * (p(0, 1) - p(0, -1)) + p(1, 1) - p(1, -1);
            let mag = match norm {
                GradientNorm::L2 => (gx * gx + gy * gy).sqrt(),
                GradientNorm::L1 => gx.abs() + gy.abs(),
            };
            magnitude.set(x, y, mag);
            sectors[y as usize * w as usize + x as usize] =
                quantize_direction(gx.to_f64_lossy(), gy.to_f64_lossy());
        }
    }
    GradientField { magnitude, sectors }
}

/// Keeps local maxima along the gradient direction: a pixel survives iff its
/// magnitude is strictly greater than the forward neighbor and at least the
/// backward neighbor (plateau tie-break); everything else becomes 0.
/// Out-of-bounds neighbors read as magnitude 0.
pub fn non_max_suppression<T: Real>(field: &GradientField<T>) -> RealImage<T> {
    let mag = &field.magnitude;
    let (w, h) = (mag.width(), mag.height());
    let at = |x: i64, y: i64| -> T {
        if x < 0 || y < 0 || x >= w as i64 || y >= h as i64 {
            T::zero()
        } else {
            mag.get(x as u32, y as u32)
        }
    };
    let mut out = RealImage::new(w, h, T::zero());
    for y in 0..h {
        for x in 0..w {
            let m = mag.get(x, y);
            let (dx, dy) = SECTOR_OFFSETS[field.sector(x, y) as usize];
            let fwd = at(x as i64 + dx, y as i64 + dy);
            let bwd = at(x as i64 - dx, y as i64 - dy);
            if m > fwd && m >= bwd {
                out.set(x, y, m);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    None,
    Weak,
    Strong,
}

/// Intermediate three-way classification of thinned magnitudes.
#[derive(Clone, Debug)]
pub struct LabeledMap {
    width: u32,
    height: u32,
    labels: Vec<Label>,
}

impl LabeledMap {
    pub fn new(width: u32, height: u32) -> Self {
        LabeledMap { width, height, labels: vec![Label::None; width as usize * height as usize] }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> Label {
        self.labels[y as usize * self.width as usize + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, l: Label) {
        self.labels[y as usize * self.width as usize + x as usize] = l;
    }
}

/// Classifies thinned magnitudes: above `high` strong, below `low` none,
/// the inclusive band `[low, high]` weak.
pub fn double_threshold<T: Real>(
    thin: &RealImage<T>,
    low: T,
    high: T,
) -> Result<LabeledMap, CannyError> {
    if !(T::zero() < low && low < high) {
        return Err(CannyError::InvalidThresholds {
            low: low.to_f64_lossy(),
            high: high.to_f64_lossy(),
        });
    }
    let mut out = LabeledMap::new(thin.width(), thin.height());
    for y in 0..thin.height() {
        for x in 0..thin.width() {
            let m = thin.get(x, y);
            let label = if m > high {
                Label::Strong
            } else if m < low {
                Label::None
            } else {
                Label::Weak
            };
            out.set(x, y, label);
        }
    }
    Ok(out)
}

/// Keeps strong pixels and weak pixels 8-connected to a strong pixel through
/// weak/strong chains (breadth-first from the strong set).
pub fn hysteresis(labeled: &LabeledMap) -> BinaryMask {
    let (w, h) = (labeled.width(), labeled.height());
    let mut edges = BinaryMask::new(w, h, false);
    let mut queue = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if labeled.get(x, y) == Label::Strong {
                edges.set(x, y, true);
                queue.push((x, y));
            }
        }
    }
    while let Some((x, y)) = queue.pop() {
        for dy in -1..=1i64 {
            for dx in -1..=1i64 {
                let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                    continue;
                }
                let (nx, ny) = (nx as u32, ny as u32);
                if !edges.get(nx, ny) && labeled.get(nx, ny) != Label::None {
                    edges.set(nx, ny, true);
                    queue.push((nx, ny));
                }
            }
        }
    }
    edges
}

/// Threshold selection: adaptive quantiles of the surviving magnitudes, or
/// absolute values.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdSpec<T> {
    Adaptive { high_quantile: T, low_ratio: T },
    Absolute { low: T, high: T },
}

impl<T: Real> Default for ThresholdSpec<T> {
    fn default() -> Self {
        ThresholdSpec::Adaptive {
            high_quantile: T::from_f64_lit(0.85),
            low_ratio: T::from_f64_lit(0.4),
        }
    }
}

impl<T: Real> ThresholdSpec<T> {
    /// Concrete `(low, high)` for the given thinned magnitudes. `Ok(None)`
    /// means there is nothing to threshold (blank gradient image).
    pub fn resolve(&self, thin: &RealImage<T>) -> Result<Option<(T, T)>, CannyError> {
        match *self {
            ThresholdSpec::Absolute { low, high } => {
                if !(T::zero() < low && low < high) {
                    return Err(CannyError::InvalidThresholds {
                        low: low.to_f64_lossy(),
                        high: high.to_f64_lossy(),
                    });
                }
                Ok(Some((low, high)))
            }
            ThresholdSpec::Adaptive { high_quantile, low_ratio } => {
                let q = high_quantile.to_f64_lossy();
                let r = low_ratio.to_f64_lossy();
                if !(q > 0.0 && q <= 1.0) {
                    return Err(CannyError::InvalidSpec(format!("high_quantile {q} outside (0, 1]")));
                }
                if !(r > 0.0 && r < 1.0) {
                    return Err(CannyError::InvalidSpec(format!("low_ratio {r} outside (0, 1)")));
                }
                let mut mags: Vec<T> =
                    thin.data().iter().copied().filter(|&m| m > T::zero()).collect();
                if mags.is_empty() {
                    return Ok(None);
                }
                mags.sort_by(|a, b| a.partial_cmp(b).expect("finite magnitudes"));
                // Nearest-rank quantile over the n surviving magnitudes.
                let rank = (q * (mags.len() - 1) as f64).round() as usize;
                // Nudge high just below the quantile value so magnitudes AT
                // the quantile classify as strong; otherwise a clean edge
                // whose survivors all share one magnitude yields no strong
                // pixels at all (strong requires strictly above high).
                let high = mags[rank] * (T::one() - T::from_f64_lit(1e-9));
                Ok(Some((high * low_ratio, high)))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CannyParams<T> {
    pub sigma: T,
    pub norm: GradientNorm,
    pub thresholds: ThresholdSpec<T>,
}

impl<T: Real> Default for CannyParams<T> {
    fn default() -> Self {
        CannyParams {
            sigma: T::from_f64_lit(1.4),
            norm: GradientNorm::L2,
            thresholds: ThresholdSpec::default(),
        }
    }
}

/// Full detector: smooth, differentiate, thin, threshold, track.
pub fn canny<T: Real>(img: &GrayImage, params: &CannyParams<T>) -> Result<BinaryMask, CannyError> {
    let smoothed = convolve(&RealImage::<T>::from_gray(img), &gaussian_kernel(params.sigma));
    let field = gradient(&smoothed, params.norm);
    let thin = non_max_suppression(&field);
    let Some((low, high)) = params.thresholds.resolve(&thin)? else {
        return Ok(BinaryMask::new(img.width(), img.height(), false));
    };
    Ok(hysteresis(&double_threshold(&thin, low, high)?))
}
