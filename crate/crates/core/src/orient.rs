//! Text-orientation estimation and deskewing.
//!
//! Skew is judged from the ink alone: the angle whose horizontal projection
//! profile has maximal variance is the text baseline direction. The 180
//! degree ambiguity is never guessed here; both half-turn candidates are
//! handed to the matcher, which tries each.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::Rotation;
use crate::raster::{BinaryMask, GrayImage};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum OrientError {
    #[error("not enough ink to judge orientation ({ink} of {paper} paper pixels)")]
    NoText { ink: usize, paper: usize },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct OrientParams<T> {
    /// Pixels darker than this count as ink.
    pub ink_threshold: u8,
    /// Minimum ink fraction of the paper region for a usable estimate.
    pub min_ink_fraction: T,
    /// Estimated skews smaller than this are treated as zero, leaving the
    /// fragment untouched (avoids resampling noise on already-straight scans).
    pub snap_degrees: T,
}

impl<T: Real> Default for OrientParams<T> {
    fn default() -> Self {
        OrientParams {
            ink_threshold: 128,
            min_ink_fraction: T::from_f64_lit(0.01),
            snap_degrees: T::from_f64_lit(0.25),
        }
    }
}

/// Estimated text skew; rotating the image by `-skew_degrees` levels the
/// baselines. `flip_candidates` is never empty.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrientationEstimate<T> {
    pub skew_degrees: T,
    pub confidence: T,
    pub flip_candidates: Vec<Rotation>,
}

/// A fragment scan: intensities plus the paper-silhouette mask.
#[derive(Clone, Debug)]
pub struct Fragment {
    pub image: GrayImage,
    pub mask: BinaryMask,
}

fn ink_pixels(img: &GrayImage, mask: &BinaryMask, threshold: u8) -> Vec<(f64, f64)> {
    let mut pts = Vec::new();
    for y in 0..img.height() {
        for x in 0..img.width() {
            if mask.get(x, y) && img.get(x, y) < threshold {
                pts.push((x as f64, y as f64));
            }
        }
    }
    pts
}

/// Variance of the 1-px-bin projection profile after rotating the ink by
/// `-skew` degrees; empty bins count.
fn profile_variance(ink: &[(f64, f64)], skew_deg: f64) -> f64 {
    let (sin, cos) = (-skew_deg).to_radians().sin_cos();
    let ys: Vec<f64> = ink.iter().map(|&(x, y)| sin * x + cos * y).collect();
    let lo = ys.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let nbins = ((hi - lo).floor() as usize).max(0) + 1;
    let mut bins = vec![0f64; nbins];
    for y in ys {
        let b = ((y - lo).floor() as usize).min(nbins - 1);
        bins[b] += 1.0;
    }
    let n = nbins as f64;
    let mean = bins.iter().sum::<f64>() / n;
    bins.iter().map(|c| (c - mean) * (c - mean)).sum::<f64>() / n
}

/// Sweeps candidate skews in [-45, 45] at 0.5 degree steps, then refines at
/// 0.1 degrees around the coarse peak. Ties keep the smaller angle.
pub fn estimate_skew<T: Real>(
    img: &GrayImage,
    mask: &BinaryMask,
    params: &OrientParams<T>,
) -> Result<OrientationEstimate<T>, OrientError> {
    let paper = mask.count();
    let ink = ink_pixels(img, mask, params.ink_threshold);
    let min_frac = params.min_ink_fraction.to_f64_lossy();
    if paper == 0 || (ink.len() as f64) < min_frac * paper as f64 {
        return Err(OrientError::NoText { ink: ink.len(), paper });
    }

    let mut best_deg = -45.0f64;
    let mut best_var = f64::NEG_INFINITY;
    let mut var_sum = 0.0;
    let mut var_count = 0usize;
    let mut k = 0;
    loop {
        let deg = -45.0 + 0.5 * k as f64;
        if deg > 45.0 + 1e-9 {
            break;
        }
        let v = profile_variance(&ink, deg);
        var_sum += v;
        var_count += 1;
        if v > best_var {
            best_var = v;
            best_deg = deg;
        }
        k += 1;
    }
    let coarse = best_deg;
    for k in 0..=10 {
        let deg = coarse - 0.5 + 0.1 * k as f64;
        if !(-45.0..=45.0).contains(&deg) {
            continue;
        }
        let v = profile_variance(&ink, deg);
        if v > best_var {
            best_var = v;
            best_deg = deg;
        }
    }
    let mean_var = var_sum / var_count as f64;
    let confidence = if best_var > 0.0 { ((best_var - mean_var) / best_var).clamp(0.0, 1.0) } else { 0.0 };
    Ok(OrientationEstimate {
        skew_degrees: T::from_f64_lit(best_deg),
        confidence: T::from_f64_lit(confidence),
        flip_candidates: vec![Rotation::Deg0, Rotation::Deg180],
    })
}

/// Rotates image and mask by `angle_deg` about the center (positive angles
/// turn +x toward +y, i.e. clockwise on screen). The canvas grows to fit;
/// intensities resample bilinearly (background 0), the mask nearest-neighbor.
pub fn rotate_image(img: &GrayImage, mask: &BinaryMask, angle_deg: f64) -> (GrayImage, BinaryMask) {
    if angle_deg == 0.0 {
        return (img.clone(), mask.clone());
    }
    let (w, h) = (img.width() as f64, img.height() as f64);
    let (sin, cos) = angle_deg.to_radians().sin_cos();
    let cx = (w - 1.0) / 2.0;
    let cy = (h - 1.0) / 2.0;
    // Extent of the rotated bounding corners fixes the destination canvas.
    let mut xs = [0.0f64; 4];
    let mut ys = [0.0f64; 4];
    for (k, &(px, py)) in [(0.0, 0.0), (w - 1.0, 0.0), (0.0, h - 1.0), (w - 1.0, h - 1.0)]
        .iter()
        .enumerate()
    {
        let (dx, dy) = (px - cx, py - cy);
        xs[k] = cos * dx - sin * dy;
        ys[k] = sin * dx + cos * dy;
    }
    let half_w = xs.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
    let half_h = ys.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
    let dw = (2.0 * half_w).round() as u32 + 1;
    let dh = (2.0 * half_h).round() as u32 + 1;
    let dcx = (dw as f64 - 1.0) / 2.0;
    let dcy = (dh as f64 - 1.0) / 2.0;

    let mut out_img = GrayImage::new(dw, dh, 0);
    let mut out_mask = BinaryMask::new(dw, dh, false);
    for y in 0..dh {
        for x in 0..dw {
            // Inverse map destination pixel to source coordinates.
            let (dx, dy) = (x as f64 - dcx, y as f64 - dcy);
            let sx = cos * dx + sin * dy + cx;
            let sy = -sin * dx + cos * dy + cy;
            if sx < -0.5 || sy < -0.5 || sx > w - 0.5 || sy > h - 0.5 {
                continue;
            }
            let (nx, ny) = (sx.round() as i64, sy.round() as i64);
            if nx >= 0 && ny >= 0 && nx < w as i64 && ny < h as i64 {
                out_mask.set(x, y, mask.get(nx as u32, ny as u32));
            }
            let x0 = sx.floor();
            let y0 = sy.floor();
            let (fx, fy) = (sx - x0, sy - y0);
            let sample = |ix: f64, iy: f64| -> f64 {
                let (ix, iy) = (ix as i64, iy as i64);
                if ix < 0 || iy < 0 || ix >= w as i64 || iy >= h as i64 {
                    0.0
                } else {
                    img.get(ix as u32, iy as u32) as f64
                }
            };
            let v = sample(x0, y0) * (1.0 - fx) * (1.0 - fy)
                + sample(x0 + 1.0, y0) * fx * (1.0 - fy)
                + sample(x0, y0 + 1.0) * (1.0 - fx) * fy
                + sample(x0 + 1.0, y0 + 1.0) * fx * fy;
            out_img.set(x, y, v.round().clamp(0.0, 255.0) as u8);
        }
    }
    (out_img, out_mask)
}

/// A deskewed pair plus the half-turn candidates the matcher must try.
#[derive(Clone, Debug)]
pub struct NormalizedPair<T> {
    pub a: Fragment,
    pub b: Fragment,
    pub skew_a: Option<T>,
    pub skew_b: Option<T>,
    pub flip_candidates: Vec<Rotation>,
}

/// Deskews both fragments. A fragment without readable text keeps its
/// geometry; the half-turn ambiguity always goes to the matcher.
pub fn normalize_pair<T: Real>(
    a: Fragment,
    b: Fragment,
    params: &OrientParams<T>,
) -> NormalizedPair<T> {
    let deskew = |frag: Fragment| -> (Fragment, Option<T>) {
        match estimate_skew(&frag.image, &frag.mask, params) {
            Ok(est) => {
                let skew = est.skew_degrees;
                if skew.abs() < params.snap_degrees {
                    (frag, Some(skew))
                } else {
                    let (image, mask) = rotate_image(&frag.image, &frag.mask, -skew.to_f64_lossy());
                    (Fragment { image, mask }, Some(skew))
                }
            }
            Err(OrientError::NoText { .. }) => (frag, None),
        }
    };
    let (a, skew_a) = deskew(a);
    let (b, skew_b) = deskew(b);
    NormalizedPair { a, b, skew_a, skew_b, flip_candidates: vec![Rotation::Deg0, Rotation::Deg180] }
}
