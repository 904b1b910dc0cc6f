//! Fragment placement on a shared canvas and seam blending.
//!
//! After matching, fragment B's pixels are mapped into fragment A's frame
//! (exact half-turn plus a rounded integer offset, so no resampling blur),
//! both layers are composed on a canvas sized to their union, and a linear
//! feather across the seam hides the cut. Pixels covered by neither fragment
//! are the lost sliver: filled white and reported through the gap mask.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Point, Polyline, Rotation};
use crate::matching::Placement;
use crate::raster::{BinaryMask, GrayImage};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum AssembleError {
    #[error("mask has no foreground pixels")]
    EmptyMask,
    #[error("placement offset ({x:.1}, {y:.1}) exceeds four times the fragment extents")]
    PlacementOutOfRange { x: f64, y: f64 },
    #[error("matched side chain is empty or has zero length")]
    EmptySideChain,
}

/// Foreground bounding box in pixel indices, named by the scan that finds
/// each edge: rows are scanned for the first and last occupied row, then
/// columns for the first and last occupied column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub first_row: u32,
    pub last_row: u32,
    pub first_col: u32,
    pub last_col: u32,
}

impl Rect {
    pub fn width(&self) -> u32 {
        self.last_col - self.first_col + 1
    }

    pub fn height(&self) -> u32 {
        self.last_row - self.first_row + 1
    }
}

/// Scans rows top-down and bottom-up, then columns left-right and
/// right-left, for the tight foreground bounding box.
pub fn bounding_box(mask: &BinaryMask) -> Result<Rect, AssembleError> {
    let (w, h) = (mask.width(), mask.height());
    let row_occupied = |y: u32| (0..w).any(|x| mask.get(x, y));
    let col_occupied = |x: u32| (0..h).any(|y| mask.get(x, y));
    let first_row = (0..h).find(|&y| row_occupied(y)).ok_or(AssembleError::EmptyMask)?;
    let last_row = (0..h).rev().find(|&y| row_occupied(y)).expect("non-empty");
    let first_col = (0..w).find(|&x| col_occupied(x)).expect("non-empty");
    let last_col = (0..w).rev().find(|&x| col_occupied(x)).expect("non-empty");
    Ok(Rect { first_row, last_row, first_col, last_col })
}

/// One fragment ready for composition: its scan, its silhouette, and the
/// matched tear-side chain in the fragment's own pixel frame.
#[derive(Clone, Debug)]
pub struct FragmentLayer<T> {
    pub image: GrayImage,
    pub mask: BinaryMask,
    pub side: Polyline<T>,
}

/// Both fragments composed on one canvas.
///
/// The canvas frame is fragment A's frame shifted by `origin`; per-fragment
/// layers and coverage are kept so blending can mix the sources, and `image`
/// holds the hard composite (fragment B over A over white).
#[derive(Clone, Debug)]
pub struct Canvas<T> {
    pub image: GrayImage,
    pub layer_a: GrayImage,
    pub layer_b: GrayImage,
    pub alpha_a: BinaryMask,
    pub alpha_b: BinaryMask,
    /// Midpoint chain of the matched side correspondences, canvas frame.
    pub seam: Polyline<T>,
    /// Unit normals at the seam vertices, pointing toward fragment A.
    pub seam_normals: Vec<Point<T>>,
    /// Fragment-A-frame coordinate of the canvas pixel (0, 0).
    pub origin: (i64, i64),
}

impl<T: Real> Canvas<T> {
    /// Pixels covered by neither fragment: the lost sliver between the
    /// matched sides plus the canvas margin ring.
    pub fn gap_mask(&self) -> BinaryMask {
        let (w, h) = (self.image.width(), self.image.height());
        let mut gap = BinaryMask::new(w, h, false);
        for y in 0..h {
            for x in 0..w {
                if !self.alpha_a.get(x, y) && !self.alpha_b.get(x, y) {
                    gap.set(x, y, true);
                }
            }
        }
        gap
    }
}

/// Margin around the union bounding box, pixels.
const CANVAS_MARGIN: i64 = 2;

/// Composes the fragments at the matched placement. The canvas covers the
/// union bounding box of both placed silhouettes plus a 2-px margin; the
/// seam is the midpoint chain of `resample_n` correspondences between the
/// matched sides.
pub fn place<T: Real>(
    frag_a: &FragmentLayer<T>,
    frag_b: &FragmentLayer<T>,
    placement: &Placement<T>,
    resample_n: usize,
) -> Result<Canvas<T>, AssembleError> {
    let offset = placement.canonical_offset();
    let (ox_f, oy_f) = (offset.x.to_f64_lossy(), offset.y.to_f64_lossy());
    let max_w = frag_a.image.width().max(frag_b.image.width()) as f64;
    let max_h = frag_a.image.height().max(frag_b.image.height()) as f64;
    if ox_f.abs() > 4.0 * max_w || oy_f.abs() > 4.0 * max_h {
        return Err(AssembleError::PlacementOutOfRange { x: ox_f, y: oy_f });
    }
    let (ox, oy) = (ox_f.round() as i64, oy_f.round() as i64);

    // Union of the fragment silhouettes in A's frame. B's pixels map through
    // p' = R p + o with the offset rounded once, so a half-turn stays an
    // exact bitmap reversal.
    let bb_a = bounding_box(&frag_a.mask)?;
    let bb_b = bounding_box(&frag_b.mask)?;
    let (bx0, bx1, by0, by1) = match placement.rotation {
        Rotation::Deg0 => (
            bb_b.first_col as i64 + ox,
            bb_b.last_col as i64 + ox,
            bb_b.first_row as i64 + oy,
            bb_b.last_row as i64 + oy,
        ),
        Rotation::Deg180 => (
            ox - bb_b.last_col as i64,
            ox - bb_b.first_col as i64,
            oy - bb_b.last_row as i64,
            oy - bb_b.first_row as i64,
        ),
    };
    let x0 = (bb_a.first_col as i64).min(bx0) - CANVAS_MARGIN;
    let y0 = (bb_a.first_row as i64).min(by0) - CANVAS_MARGIN;
    let x1 = (bb_a.last_col as i64).max(bx1) + CANVAS_MARGIN;
    let y1 = (bb_a.last_row as i64).max(by1) + CANVAS_MARGIN;
    let (w, h) = ((x1 - x0 + 1) as u32, (y1 - y0 + 1) as u32);

    let mut canvas = Canvas {
        image: GrayImage::new(w, h, 255),
        layer_a: GrayImage::new(w, h, 255),
        layer_b: GrayImage::new(w, h, 255),
        alpha_a: BinaryMask::new(w, h, false),
        alpha_b: BinaryMask::new(w, h, false),
        seam: Polyline::new(Vec::new(), false),
        seam_normals: Vec::new(),
        origin: (x0, y0),
    };

    for y in bb_a.first_row..=bb_a.last_row {
        for x in bb_a.first_col..=bb_a.last_col {
            if frag_a.mask.get(x, y) {
                let (cx, cy) = ((x as i64 - x0) as u32, (y as i64 - y0) as u32);
                let v = frag_a.image.get(x, y);
                canvas.layer_a.set(cx, cy, v);
                canvas.alpha_a.set(cx, cy, true);
                canvas.image.set(cx, cy, v);
            }
        }
    }
    for y in bb_b.first_row..=bb_b.last_row {
        for x in bb_b.first_col..=bb_b.last_col {
            if frag_b.mask.get(x, y) {
                let (wx, wy) = match placement.rotation {
                    Rotation::Deg0 => (x as i64 + ox, y as i64 + oy),
                    Rotation::Deg180 => (ox - x as i64, oy - y as i64),
                };
                let (cx, cy) = ((wx - x0) as u32, (wy - y0) as u32);
                let v = frag_b.image.get(x, y);
                canvas.layer_b.set(cx, cy, v);
                canvas.alpha_b.set(cx, cy, true);
                // B over A: the fixed overlap precedence.
                canvas.image.set(cx, cy, v);
            }
        }
    }

    let (seam, normals) = seam_chain(frag_a, frag_b, placement, resample_n, &canvas)?;
    canvas.seam = seam;
    canvas.seam_normals = normals;
    Ok(canvas)
}

/// Midpoint chain of the matched side correspondences plus its toward-A
/// normals, in canvas coordinates.
fn seam_chain<T: Real>(
    frag_a: &FragmentLayer<T>,
    frag_b: &FragmentLayer<T>,
    placement: &Placement<T>,
    resample_n: usize,
    canvas: &Canvas<T>,
) -> Result<(Polyline<T>, Vec<Point<T>>), AssembleError> {
    for side in [&frag_a.side, &frag_b.side] {
        if side.is_empty() || side.arc_length() == T::zero() {
            return Err(AssembleError::EmptySideChain);
        }
    }
    let n = resample_n.max(2);
    let shift = Point::new(
        T::from_i64(canvas.origin.0).expect("origin"),
        T::from_i64(canvas.origin.1).expect("origin"),
    );
    let a = frag_a.side.resample(n);
    let b: Vec<Point<T>> = frag_b
        .side
        .reversed()
        .resample(n)
        .into_iter()
        .map(|p| placement.apply(p))
        .collect();
    let half = T::from_f64_lit(0.5);
    let seam: Vec<Point<T>> = a
        .iter()
        .zip(&b)
        .map(|(&pa, &pb)| Point::new((pa.x + pb.x) * half, (pa.y + pb.y) * half) - shift)
        .collect();
    let raw_normal = |i: usize| -> Point<T> {
        let tangent = seam[(i + 1).min(n - 1)] - seam[i.saturating_sub(1)];
        let len = tangent.norm();
        if len == T::zero() {
            Point::new(T::one(), T::zero())
        } else {
            Point::new(tangent.y / len, -tangent.x / len)
        }
    };

    // The tear sides never interleave, so one global orientation decides
    // which side of the seam is fragment A. The chains themselves carry no
    // orientation for an exact-contact tear (they coincide), so probe the
    // composed coverage at growing offsets until one side shows exclusive
    // fragment-A pixels.
    let mut score = 0i64;
    for radius in [2.0, 4.0, 8.0, 16.0] {
        let r = T::from_f64_lit(radius);
        for (i, &p) in seam.iter().enumerate() {
            let nm = raw_normal(i);
            for dir in [T::one(), -T::one()] {
                let q = p + Point::new(nm.x * r * dir, nm.y * r * dir);
                let (x, y) = (
                    q.x.to_f64_lossy().round() as i64,
                    q.y.to_f64_lossy().round() as i64,
                );
                let in_a = canvas.alpha_a.get_or_bg(x, y);
                let in_b = canvas.alpha_b.get_or_bg(x, y);
                let vote = if dir > T::zero() { 1 } else { -1 };
                if in_a && !in_b {
                    score += vote;
                }
                if in_b && !in_a {
                    score -= vote;
                }
            }
        }
        if score != 0 {
            break;
        }
    }
    let flip = if score < 0 { -T::one() } else { T::one() };
    let normals = (0..n)
        .map(|i| {
            let nm = raw_normal(i);
            Point::new(flip * nm.x, flip * nm.y)
        })
        .collect();
    Ok((Polyline::new(seam, false), normals))
}

/// Feather half-width around the seam, pixels; 0 composes hard (B wins).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BlendParams<T> {
    pub feather_width: T,
}

impl<T: Real> Default for BlendParams<T> {
    fn default() -> Self {
        BlendParams { feather_width: T::from_f64_lit(3.0) }
    }
}

/// Composes the canvas layers: pixels covered by one fragment copy it,
/// pixels covered by both mix linearly across the seam band (fragment A's
/// weight ramps from 0 to 1 over `2w` perpendicular to the seam), and
/// pixels covered by neither stay white.
pub fn blend<T: Real>(canvas: &Canvas<T>, params: &BlendParams<T>) -> GrayImage {
    let (w, h) = (canvas.image.width(), canvas.image.height());
    let mut out = GrayImage::new(w, h, 255);
    let feather = params.feather_width.to_f64_lossy();
    let seam = canvas.seam.points();
    for y in 0..h {
        for x in 0..w {
            let (in_a, in_b) = (canvas.alpha_a.get(x, y), canvas.alpha_b.get(x, y));
            let v = match (in_a, in_b) {
                (false, false) => continue,
                (true, false) => canvas.layer_a.get(x, y),
                (false, true) => canvas.layer_b.get(x, y),
                (true, true) => {
                    if feather <= 0.0 || seam.len() < 2 {
                        canvas.layer_b.get(x, y)
                    } else {
                        let q = Point::new(
                            T::from_f64_lit(x as f64),
                            T::from_f64_lit(y as f64),
                        );
                        let d = signed_seam_distance(q, seam, &canvas.seam_normals)
                            .to_f64_lossy();
                        let alpha = (0.5 + d / (2.0 * feather)).clamp(0.0, 1.0);
                        let a = canvas.layer_a.get(x, y) as f64;
                        let b = canvas.layer_b.get(x, y) as f64;
                        (alpha * a + (1.0 - alpha) * b).round().clamp(0.0, 255.0) as u8
                    }
                }
            };
            out.set(x, y, v);
        }
    }
    out
}

/// Distance from `q` to the seam, positive on fragment A's side.
fn signed_seam_distance<T: Real>(q: Point<T>, seam: &[Point<T>], normals: &[Point<T>]) -> T {
    let mut best = T::infinity();
    let mut best_pt = seam[0];
    let mut best_idx = 0;
    for (i, seg) in seam.windows(2).enumerate() {
        let ab = seg[1] - seg[0];
        let len_sq = ab.dot(ab);
        let u = if len_sq == T::zero() {
            T::zero()
        } else {
            ((q - seg[0]).dot(ab) / len_sq).max(T::zero()).min(T::one())
        };
        let c = seg[0].lerp(seg[1], u);
        let d = q.dist(c);
        if d < best {
            best = d;
            best_pt = c;
            best_idx = i;
        }
    }
    let n = normals[best_idx] + normals[(best_idx + 1).min(normals.len() - 1)];
    if (q - best_pt).dot(n) < T::zero() {
        -best
    } else {
        best
    }
}
