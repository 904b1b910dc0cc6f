//! Fragment boundary extraction, side splitting, and polyline simplification.
//!
//! The silhouette's outer boundary is traced with Moore-neighbor tracing,
//! split into sides at corners of its simplified polygon, and each side is
//! classified as uniform (straight cut or page edge) or non-uniform (torn).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Point, Polyline};
use crate::raster::{BinaryMask, GrayImage};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum ContourError {
    #[error("mask has no foreground pixels")]
    EmptyMask,
    #[error("largest component is a degenerate speck (area < 4)")]
    EmptyBoundary,
    #[error("boundary has fewer than 4 points")]
    DegenerateBoundary,
}

/// Douglas-Peucker tolerance in pixels; corners are detected at three times
/// this tolerance.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SimplifyParams<T> {
    pub tolerance: T,
}

impl<T: Real> Default for SimplifyParams<T> {
    fn default() -> Self {
        SimplifyParams { tolerance: T::from_f64_lit(0.4) }
    }
}

/// Dark-rim detection settings for inner-boundary extraction.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RimParams {
    /// Band width in pixels measured inward from the outer boundary.
    pub band_px: u32,
    /// Mean band intensity below this value indicates a burned or inked rim.
    pub intensity_threshold: f64,
}

impl Default for RimParams {
    fn default() -> Self {
        RimParams { band_px: 3, intensity_threshold: 100.0 }
    }
}

/// Outer silhouette boundary plus the optional inner (rim) boundary.
/// Downstream matching uses the inner boundary when present.
#[derive(Clone, Debug)]
pub struct BoundarySet<T> {
    pub outer: Polyline<T>,
    pub inner: Option<Polyline<T>>,
}

impl<T> BoundarySet<T> {
    pub fn active(&self) -> &Polyline<T> {
        self.inner.as_ref().unwrap_or(&self.outer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Uniform,
    NonUniform,
}

/// One side of a fragment boundary: an open chain between consecutive corners.
#[derive(Clone, Debug)]
pub struct SideSegment<T> {
    pub chain: Polyline<T>,
    pub classification: Classification,
    pub fragment_id: usize,
    pub side_index: usize,
}

impl<T> SideSegment<T> {
    pub fn is_non_uniform(&self) -> bool {
        self.classification == Classification::NonUniform
    }
}

/// Largest 8-connected foreground component, or `None` for an empty mask.
pub fn largest_component(mask: &BinaryMask) -> Option<BinaryMask> {
    let (w, h) = (mask.width(), mask.height());
    let mut label = vec![0u32; w as usize * h as usize];
    let mut sizes: Vec<usize> = vec![0]; // label 0 = background
    let idx = |x: u32, y: u32| y as usize * w as usize + x as usize;

    for sy in 0..h {
        for sx in 0..w {
            if !mask.get(sx, sy) || label[idx(sx, sy)] != 0 {
                continue;
            }
            let id = sizes.len() as u32;
            sizes.push(0);
            let mut queue = vec![(sx, sy)];
            label[idx(sx, sy)] = id;
            while let Some((x, y)) = queue.pop() {
                sizes[id as usize] += 1;
                for dy in -1..=1i64 {
                    for dx in -1..=1i64 {
                        let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                        if mask.get_or_bg(nx, ny) && label[idx(nx as u32, ny as u32)] == 0 {
                            label[idx(nx as u32, ny as u32)] = id;
                            queue.push((nx as u32, ny as u32));
                        }
                    }
                }
            }
        }
    }
    if sizes.len() == 1 {
        return None;
    }
    // First component wins ties, making the choice scan-order deterministic.
    let best = (1..sizes.len()).max_by_key(|&i| (sizes[i], std::cmp::Reverse(i))).unwrap() as u32;
    let mut out = BinaryMask::new(w, h, false);
    for y in 0..h {
        for x in 0..w {
            if label[idx(x, y)] == best {
                out.set(x, y, true);
            }
        }
    }
    Some(out)
}

/// Fills interior holes: background not 4-connected to the border becomes
/// foreground. Text and noise inside the paper must not affect the silhouette.
pub fn fill_holes(mask: &BinaryMask) -> BinaryMask {
    let (w, h) = (mask.width(), mask.height());
    let mut outside = vec![false; w as usize * h as usize];
    let idx = |x: u32, y: u32| y as usize * w as usize + x as usize;
    let mut queue = Vec::new();
    let push = |x: u32, y: u32, outside: &mut Vec<bool>, queue: &mut Vec<(u32, u32)>| {
        if !mask.get(x, y) && !outside[idx(x, y)] {
            outside[idx(x, y)] = true;
            queue.push((x, y));
        }
    };
    for x in 0..w {
        push(x, 0, &mut outside, &mut queue);
        push(x, h - 1, &mut outside, &mut queue);
    }
    for y in 0..h {
        push(0, y, &mut outside, &mut queue);
        push(w - 1, y, &mut outside, &mut queue);
    }
    while let Some((x, y)) = queue.pop() {
        for (dx, dy) in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
            let (nx, ny) = (x as i64 + dx, y as i64 + dy);
            if nx >= 0 && ny >= 0 && nx < w as i64 && ny < h as i64 {
                push(nx as u32, ny as u32, &mut outside, &mut queue);
            }
        }
    }
    let mut out = BinaryMask::new(w, h, true);
    for y in 0..h {
        for x in 0..w {
            if outside[idx(x, y)] {
                out.set(x, y, false);
            }
        }
    }
    out
}

/// Hole-filled largest component: the shape whose outer boundary we trace.
pub fn silhouette(mask: &BinaryMask) -> Result<BinaryMask, ContourError> {
    let comp = largest_component(mask).ok_or(ContourError::EmptyMask)?;
    Ok(fill_holes(&comp))
}

/// Moore neighborhood in counter-clockwise visual order (y points down):
/// W, SW, S, SE, E, NE, N, NW.
const MOORE_CCW: [(i64, i64); 8] = [(-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1)];

/// Traces the outer boundary of the largest component as a closed pixel
/// chain, counter-clockwise, starting at the topmost-then-leftmost pixel.
pub fn trace_boundary_pixels(mask: &BinaryMask) -> Result<Vec<(i64, i64)>, ContourError> {
    let sil = silhouette(mask)?;
    if sil.count() < 4 {
        return Err(ContourError::EmptyBoundary);
    }
    let start = {
        let mut found = None;
        'scan: for y in 0..sil.height() {
            for x in 0..sil.width() {
                if sil.get(x, y) {
                    found = Some((x as i64, y as i64));
                    break 'scan;
                }
            }
        }
        found.expect("non-empty silhouette")
    };

    // Walk: from the backtrack direction, scan the Moore neighborhood
    // counter-clockwise; the first foreground pixel is the next contour
    // pixel and the previously examined background pixel the new backtrack.
    let step = |c: (i64, i64), b: (i64, i64)| -> ((i64, i64), (i64, i64)) {
        let rel = (b.0 - c.0, b.1 - c.1);
        let from = MOORE_CCW.iter().position(|&d| d == rel).expect("backtrack is a neighbor");
        let mut last_bg = b;
        for k in 1..=8 {
            let d = MOORE_CCW[(from + k) % 8];
            let cand = (c.0 + d.0, c.1 + d.1);
            if sil.get_or_bg(cand.0, cand.1) {
                return (cand, last_bg);
            }
            last_bg = cand;
        }
        unreachable!("area >= 4 guarantees a foreground neighbor");
    };

    // The walk is a deterministic function of (current, backtrack), so it is
    // eventually periodic; the cycle is the contour. The artificial initial
    // backtrack may put the first state off-cycle.
    let mut states: HashMap<((i64, i64), (i64, i64)), usize> = HashMap::new();
    let mut seq: Vec<(i64, i64)> = Vec::new();
    let mut c = start;
    let mut b = (start.0 - 1, start.1);
    let cycle_from = loop {
        if let Some(&p) = states.get(&(c, b)) {
            break p;
        }
        states.insert((c, b), seq.len());
        seq.push(c);
        let (nc, nb) = step(c, b);
        c = nc;
        b = nb;
    };
    let mut cycle = seq[cycle_from..].to_vec();
    // Begin at the topmost-then-leftmost pixel of the cycle.
    let anchor = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, &(x, y))| (y, x))
        .map(|(i, _)| i)
        .expect("non-empty cycle");
    cycle.rotate_left(anchor);
    Ok(cycle)
}

/// [`trace_boundary_pixels`] lifted to a closed real-valued polyline of
/// pixel centers.
pub fn trace_boundary<T: Real>(mask: &BinaryMask) -> Result<Polyline<T>, ContourError> {
    let chain = trace_boundary_pixels(mask)?;
    let pts = chain
        .into_iter()
        .map(|(x, y)| Point::new(T::from_i64(x).expect("pixel"), T::from_i64(y).expect("pixel")))
        .collect();
    Ok(Polyline::new(pts, true))
}

/// Extracts the outer boundary, plus the inner boundary when a dark rim band
/// (burned or inked tear edge) hugs the silhouette.
pub fn extract_boundaries<T: Real>(
    img: &GrayImage,
    mask: &BinaryMask,
    rim: &RimParams,
) -> Result<BoundarySet<T>, ContourError> {
    let sil = silhouette(mask)?;
    let outer = trace_boundary(&sil)?;
    let core = sil.erode8(rim.band_px);
    let mut band_sum = 0u64;
    let mut band_count = 0u64;
    for y in 0..sil.height() {
        for x in 0..sil.width() {
            if sil.get(x, y) && !core.get(x, y) {
                band_sum += img.get(x, y) as u64;
                band_count += 1;
            }
        }
    }
    let rim_present = band_count > 0
        && (band_sum as f64 / band_count as f64) < rim.intensity_threshold
        && core.count() >= 4;
    let inner = if rim_present { trace_boundary(&core).ok() } else { None };
    Ok(BoundarySet { outer, inner })
}

/// Distance from `p` to segment `ab`: perpendicular distance to the line,
/// clamped to the nearer endpoint when the projection falls outside.
pub fn point_segment_distance<T: Real>(p: Point<T>, a: Point<T>, b: Point<T>) -> T {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == T::zero() {
        return p.dist(a);
    }
    let t = (p - a).dot(ab) / len2;
    let t = t.max(T::zero()).min(T::one());
    p.dist(a.lerp(b, t))
}

/// Douglas-Peucker on an open chain; returns the kept indices (ascending,
/// endpoints always included). A vertex is kept iff its distance to the
/// current approximation strictly exceeds the tolerance; ties drop.
pub fn simplify_dp_indices<T: Real>(points: &[Point<T>], tolerance: T) -> Vec<usize> {
    assert!(tolerance > T::zero(), "tolerance must be positive");
    let n = points.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut keep = vec![false; n];
    keep[0] = true;
    keep[n - 1] = true;
    dp_recurse(points, 0, n - 1, tolerance, &mut keep);
    (0..n).filter(|&i| keep[i]).collect()
}

fn dp_recurse<T: Real>(points: &[Point<T>], lo: usize, hi: usize, tol: T, keep: &mut [bool]) {
    if hi <= lo + 1 {
        return;
    }
    let (a, b) = (points[lo], points[hi]);
    let mut best = lo;
    let mut best_d = T::zero();
    for i in lo + 1..hi {
        let d = point_segment_distance(points[i], a, b);
        // First maximum wins so both implementations agree bit-for-bit.
        if d > best_d {
            best_d = d;
            best = i;
        }
    }
    if best_d > tol {
        keep[best] = true;
        dp_recurse(points, lo, best, tol, keep);
        dp_recurse(points, best, hi, tol, keep);
    }
}

/// The two mutually farthest vertices of a point set, as an index pair
/// `(i, j)` with `i < j`; ties pick the lexicographically smallest pair.
pub fn farthest_vertex_pair<T: Real>(points: &[Point<T>]) -> (usize, usize) {
    assert!(points.len() >= 2, "need at least two vertices");
    let mut best = (0usize, 1usize);
    let mut best_d = points[0].dist(points[1]);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = points[i].dist(points[j]);
            if d > best_d {
                best_d = d;
                best = (i, j);
            }
        }
    }
    best
}

/// Kept original indices for a closed chain: split at the two mutually
/// farthest vertices, simplify each half, and merge.
pub fn simplify_closed_indices<T: Real>(points: &[Point<T>], tolerance: T) -> Vec<usize> {
    let n = points.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let (i, j) = farthest_vertex_pair(points);
    let first: Vec<Point<T>> = points[i..=j].to_vec();
    let second: Vec<Point<T>> = points[j..n].iter().chain(points[..=i].iter()).copied().collect();
    let mut kept: Vec<usize> = simplify_dp_indices(&first, tolerance)
        .into_iter()
        .map(|k| i + k)
        .chain(
            simplify_dp_indices(&second, tolerance)
                .into_iter()
                .map(|k| (j + k) % n),
        )
        .collect();
    kept.sort_unstable();
    kept.dedup();
    kept
}

/// Simplifies an open or closed polyline, preserving its closedness.
pub fn simplify_dp<T: Real>(line: &Polyline<T>, params: &SimplifyParams<T>) -> Polyline<T> {
    let pts = line.points();
    let kept = if line.is_closed() {
        simplify_closed_indices(pts, params.tolerance)
    } else {
        simplify_dp_indices(pts, params.tolerance)
    };
    Polyline::new(kept.into_iter().map(|i| pts[i]).collect(), line.is_closed())
}

/// Interior angle in degrees at vertex `v` between neighbors `prev` and
/// `next`, given the loop orientation (`ccw_visual` = negative signed area).
fn interior_angle_deg<T: Real>(prev: Point<T>, v: Point<T>, next: Point<T>, ccw_visual: bool) -> f64 {
    let a = prev - v;
    let b = next - v;
    let (na, nb) = (a.norm(), b.norm());
    if na == T::zero() || nb == T::zero() {
        return 0.0; // coincident neighbor: sharpest possible turn
    }
    let cos = (a.dot(b) / (na * nb)).to_f64_lossy().clamp(-1.0, 1.0);
    let theta = cos.acos().to_degrees();
    // Convexity: incoming x outgoing cross sign, flipped for opposite winding.
    let cross = (v - prev).cross(b).to_f64_lossy();
    let convex = if ccw_visual { cross <= 0.0 } else { cross >= 0.0 };
    if convex {
        theta
    } else {
        360.0 - theta
    }
}

const CORNER_ANGLE_DEG: f64 = 120.0;

/// Splits a closed boundary into sides at corners of its simplified polygon
/// and classifies each side as uniform or non-uniform (torn).
///
/// Corners are vertices surviving simplification at three times the side
/// tolerance whose interior angle is at most 120 degrees. Sides are chains of
/// the original boundary between consecutive corners, so concatenating them
/// reproduces the boundary exactly.
pub fn split_sides<T: Real>(
    boundary: &Polyline<T>,
    params: &SimplifyParams<T>,
    fragment_id: usize,
) -> Result<Vec<SideSegment<T>>, ContourError> {
    debug_assert!(boundary.is_closed(), "side splitting expects a closed boundary");
    let pts = boundary.points();
    let n = pts.len();
    if n < 4 {
        return Err(ContourError::DegenerateBoundary);
    }

    let corner_tol = params.tolerance * T::from_f64_lit(3.0);
    let kept = simplify_closed_indices(pts, corner_tol);
    let ccw_visual = boundary.signed_area() <= T::zero();
    let mut corners: Vec<usize> = Vec::new();
    for (m, &i) in kept.iter().enumerate() {
        let prev = pts[kept[(m + kept.len() - 1) % kept.len()]];
        let next = pts[kept[(m + 1) % kept.len()]];
        if interior_angle_deg(prev, pts[i], next, ccw_visual) <= CORNER_ANGLE_DEG + 1e-9 {
            corners.push(i);
        }
    }

    // A boundary without two detectable corners (smooth blob) still needs a
    // decomposition; split it at the farthest pair of simplified vertices.
    if corners.len() < 2 {
        let kept_pts: Vec<Point<T>> = kept.iter().map(|&i| pts[i]).collect();
        let (a, b) = farthest_vertex_pair(&kept_pts);
        for idx in [kept[a], kept[b]] {
            if !corners.contains(&idx) {
                corners.push(idx);
            }
        }
        corners.sort_unstable();
        corners.truncate(2);
        if corners.len() < 2 {
            return Err(ContourError::DegenerateBoundary);
        }
    }

    let mut sides = Vec::with_capacity(corners.len());
    for (k, &c0) in corners.iter().enumerate() {
        let c1 = corners[(k + 1) % corners.len()];
        let chain: Vec<Point<T>> = if c0 < c1 {
            pts[c0..=c1].to_vec()
        } else {
            pts[c0..n].iter().chain(pts[..=c1].iter()).copied().collect()
        };
        let classification = classify_chain(&chain, params.tolerance);
        sides.push(SideSegment {
            chain: Polyline::new(chain, false),
            classification,
            fragment_id,
            side_index: k,
        });
    }
    Ok(sides)
}

/// Non-uniform iff simplification retains more than the endpoints or the
/// chain strays from its chord by more than twice the tolerance.
fn classify_chain<T: Real>(chain: &[Point<T>], tolerance: T) -> Classification {
    if chain.len() <= 2 {
        return Classification::Uniform;
    }
    let kept = simplify_dp_indices(chain, tolerance);
    if kept.len() > 2 {
        return Classification::NonUniform;
    }
    let (a, b) = (chain[0], chain[chain.len() - 1]);
    let two_t = tolerance * T::from_f64_lit(2.0);
    let strays = chain.iter().any(|&p| point_segment_distance(p, a, b) > two_t);
    if strays {
        Classification::NonUniform
    } else {
        Classification::Uniform
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Point<f64>;

    fn rect_mask(w: u32, h: u32, x0: u32, y0: u32, x1: u32, y1: u32) -> BinaryMask {
        let mut m = BinaryMask::new(w, h, false);
        for y in y0..=y1 {
            for x in x0..=x1 {
                m.set(x, y, true);
            }
        }
        m
    }

    #[test]
    fn trace_full_rect_is_ccw_perimeter() {
        let m = rect_mask(3, 3, 0, 0, 2, 2);
        let chain = trace_boundary_pixels(&m).unwrap();
        assert_eq!(
            chain,
            vec![(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)]
        );
    }

    #[test]
    fn trace_starts_topmost_then_leftmost() {
        let mut m = rect_mask(8, 8, 2, 3, 6, 6);
        m.set(4, 2, true); // lone bump above the block
        let chain = trace_boundary_pixels(&m).unwrap();
        assert_eq!(chain[0], (4, 2));
    }

    #[test]
    fn trace_empty_and_speck_errors() {
        let empty = BinaryMask::new(4, 4, false);
        assert!(matches!(trace_boundary_pixels(&empty), Err(ContourError::EmptyMask)));
        let mut speck = BinaryMask::new(4, 4, false);
        speck.set(1, 1, true);
        speck.set(2, 1, true);
        assert!(matches!(trace_boundary_pixels(&speck), Err(ContourError::EmptyBoundary)));
    }

    #[test]
    fn trace_picks_largest_component() {
        let mut m = rect_mask(12, 6, 0, 0, 2, 2);
        for y in 0..6 {
            for x in 6..12 {
                m.set(x, y, true);
            }
        }
        let chain = trace_boundary_pixels(&m).unwrap();
        assert!(chain.iter().all(|&(x, _)| x >= 6));
    }

    #[test]
    fn trace_one_pixel_filament_walks_out_and_back() {
        let m = rect_mask(6, 3, 1, 1, 4, 1);
        let chain = trace_boundary_pixels(&m).unwrap();
        let set: std::collections::HashSet<_> = chain.iter().copied().collect();
        assert_eq!(set.len(), 4);
        assert_eq!(chain.len(), 6); // interior pixels visited twice
        assert_eq!(chain[0], (1, 1));
    }

    #[test]
    fn fill_holes_closes_interior_text() {
        let mut m = rect_mask(7, 7, 1, 1, 5, 5);
        m.set(3, 3, false);
        m.set(2, 3, false);
        let filled = fill_holes(&m);
        assert_eq!(filled.count(), 25);
        // Border-connected background stays background.
        assert!(!filled.get(0, 0));
    }

    #[test]
    fn point_segment_distance_examples() {
        let d = point_segment_distance::<f64>;
        assert_eq!(d(P::new(1.0, 0.0), P::new(0.0, 0.0), P::new(2.0, 0.0)), 0.0);
        assert_eq!(d(P::new(1.0, 1.0), P::new(0.0, 0.0), P::new(2.0, 0.0)), 1.0);
        let clamped = d(P::new(5.0, 1.0), P::new(0.0, 0.0), P::new(2.0, 0.0));
        assert!((clamped - 10.0f64.sqrt()).abs() < 1e-12);
        // Degenerate segment falls back to point distance.
        assert_eq!(d(P::new(3.0, 4.0), P::new(0.0, 0.0), P::new(0.0, 0.0)), 5.0);
    }

    #[test]
    fn simplify_collinear_keeps_endpoints_only() {
        let pts: Vec<P> = (0..4).map(|i| P::new(i as f64, 0.0)).collect();
        assert_eq!(simplify_dp_indices(&pts, 0.1), vec![0, 3]);
    }

    #[test]
    fn simplify_keeps_peak_above_tolerance_and_drops_ties() {
        let pts = vec![P::new(0.0, 0.0), P::new(1.0, 1.0), P::new(2.0, 0.0)];
        assert_eq!(simplify_dp_indices(&pts, 0.5), vec![0, 1, 2]);
        // Deviation exactly 1.0 is not strictly greater than the tolerance.
        assert_eq!(simplify_dp_indices(&pts, 1.0), vec![0, 2]);
    }

    #[test]
    fn simplify_two_points_unchanged() {
        let pts = vec![P::new(0.0, 0.0), P::new(9.0, 2.0)];
        assert_eq!(simplify_dp_indices(&pts, 5.0), vec![0, 1]);
    }

    #[test]
    fn simplify_closed_splits_at_farthest_pair() {
        // Elongated hexagon: farthest pair is the two extreme x vertices.
        let pts = vec![
            P::new(0.0, 0.0),
            P::new(5.0, -1.0),
            P::new(10.0, 0.0),
            P::new(10.2, 3.0),
            P::new(5.0, 4.0),
            P::new(0.2, 3.0),
        ];
        let kept = simplify_closed_indices(&pts, 0.5);
        assert!(kept.contains(&0));
        assert!(kept.contains(&3) || kept.contains(&2));
        let line = Polyline::new(pts, true);
        let simp = simplify_dp(&line, &SimplifyParams { tolerance: 0.5 });
        assert!(simp.is_closed());
        assert!(simp.len() <= line.len());
    }

    #[test]
    fn split_rect_boundary_into_four_uniform_sides() {
        let m = rect_mask(40, 30, 4, 3, 35, 26);
        let boundary = trace_boundary::<f64>(&m).unwrap();
        let sides = split_sides(&boundary, &SimplifyParams::default(), 0).unwrap();
        assert_eq!(sides.len(), 4);
        assert!(sides.iter().all(|s| s.classification == Classification::Uniform));
        for (k, s) in sides.iter().enumerate() {
            assert_eq!(s.side_index, k);
            assert_eq!(s.fragment_id, 0);
        }
    }

    #[test]
    fn split_sawtooth_rectangle_flags_one_side() {
        // Rectangle outline with the right side replaced by a sawtooth of
        // height 10. Apex angles (~127 degrees) exceed the corner cutoff, so
        // the whole sawtooth stays one side and classifies non-uniform at T=2.
        let pts = vec![
            P::new(0.0, 0.0),
            P::new(0.0, 100.0),
            P::new(60.0, 100.0),
            P::new(70.0, 80.0),
            P::new(60.0, 60.0),
            P::new(70.0, 40.0),
            P::new(60.0, 20.0),
            P::new(60.0, 0.0),
        ];
        let boundary = Polyline::new(pts, true);
        let sides = split_sides(&boundary, &SimplifyParams { tolerance: 2.0 }, 1).unwrap();
        let summary: Vec<_> =
            sides.iter().map(|s| (s.side_index, s.classification, s.chain.len())).collect();
        let non_uniform = sides.iter().filter(|s| s.is_non_uniform()).count();
        assert_eq!(non_uniform, 1, "sides: {summary:?}");
        assert_eq!(sides.len() - non_uniform, 3, "sides: {summary:?}");
        // The torn side is the one carrying the sawtooth vertices.
        let torn = sides.iter().find(|s| s.is_non_uniform()).unwrap();
        assert!(torn.chain.len() >= 5);
    }

    #[test]
    fn sharp_teeth_become_corners() {
        // Steep teeth (90 degree apexes) legitimately split into many sides.
        let mut pts: Vec<P> = vec![P::new(0.0, 0.0), P::new(0.0, 100.0)];
        for k in 0..5 {
            let y0 = 100.0 - k as f64 * 20.0;
            pts.push(P::new(60.0, y0));
            pts.push(P::new(70.0, y0 - 10.0));
        }
        pts.push(P::new(60.0, 0.0));
        let boundary = Polyline::new(pts, true);
        let sides = split_sides(&boundary, &SimplifyParams { tolerance: 2.0 }, 1).unwrap();
        assert!(sides.len() > 4);
    }

    #[test]
    fn sides_reconstitute_boundary() {
        let m = rect_mask(20, 16, 2, 2, 17, 13);
        let boundary = trace_boundary::<f64>(&m).unwrap();
        let sides = split_sides(&boundary, &SimplifyParams::default(), 0).unwrap();
        // Consecutive sides share exactly one endpoint.
        for k in 0..sides.len() {
            let cur = sides[k].chain.points();
            let nxt = sides[(k + 1) % sides.len()].chain.points();
            assert_eq!(cur.last(), nxt.first());
        }
        // Concatenation (dropping shared endpoints) is a rotation of the boundary.
        let mut rebuilt: Vec<P> = Vec::new();
        for s in &sides {
            let pts = s.chain.points();
            rebuilt.extend_from_slice(&pts[..pts.len() - 1]);
        }
        let orig = boundary.points();
        assert_eq!(rebuilt.len(), orig.len());
        let start = orig.iter().position(|p| *p == rebuilt[0]).unwrap();
        for (k, p) in rebuilt.iter().enumerate() {
            assert_eq!(*p, orig[(start + k) % orig.len()]);
        }
    }

    #[test]
    fn rim_detection_extracts_inner_boundary() {
        let m = rect_mask(24, 20, 2, 2, 21, 17);
        let mut img = GrayImage::new(24, 20, 220);
        // Paint a dark 3-px rim just inside the silhouette border.
        let core = m.erode8(3);
        for y in 0..20 {
            for x in 0..24 {
                if m.get(x, y) && !core.get(x, y) {
                    img.set(x, y, 40);
                }
            }
        }
        let set = extract_boundaries::<f64>(&img, &m, &RimParams::default()).unwrap();
        let inner = set.inner.as_ref().expect("rim should produce an inner boundary");
        assert!(std::ptr::eq(set.active(), inner));
        // Inner vertices lie strictly inside the outer bounds.
        let (lo, hi) = set.outer.bounds().unwrap();
        for p in inner.points() {
            assert!(p.x > lo.x && p.x < hi.x && p.y > lo.y && p.y < hi.y);
        }

        // Bright rim: no inner boundary, outer is active.
        let bright = GrayImage::new(24, 20, 220);
        let set2 = extract_boundaries::<f64>(&bright, &m, &RimParams::default()).unwrap();
        assert!(set2.inner.is_none());
        assert!(std::ptr::eq(set2.active(), &set2.outer));
    }
}
