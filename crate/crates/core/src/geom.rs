//! Points, polylines, and pixel rectangles shared by all stages.

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// 2-D point; `x` grows rightward, `y` grows downward.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

/// Half-turn rotation candidates for fragment placement; torn halves either
/// face the scanner the same way or one is upside down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rotation {
    Deg0,
    Deg180,
}

impl Rotation {
    /// Applies the rotation about `pivot`: identity, or point reflection.
    pub fn apply<T: Real>(self, p: Point<T>, pivot: Point<T>) -> Point<T> {
        match self {
            Rotation::Deg0 => p,
            Rotation::Deg180 => Point::new(
                pivot.x + pivot.x - p.x,
                pivot.y + pivot.y - p.y,
            ),
        }
    }
}

impl<T: Real> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Self) -> T {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }

    pub fn norm(self) -> T {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, sign tells which side `other` lies on.
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    pub fn lerp(self, other: Self, t: T) -> Self {
        Point {
            x: self.x + (other.x - self.x) * t,
            y: self.y + (other.y - self.y) * t,
        }
    }
}

impl<T: Real> std::ops::Add for Point<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> std::ops::Sub for Point<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> std::ops::Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl<T: Real> std::ops::Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Point::new(-self.x, -self.y)
    }
}

/// Ordered vertex chain. No two consecutive vertices are identical; for a
/// closed chain the last vertex also differs from the first (the closing
/// segment is implicit).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polyline<T> {
    points: Vec<Point<T>>,
    closed: bool,
}

impl<T: Real> Polyline<T> {
    /// Builds a chain, dropping consecutive duplicate vertices (and a
    /// duplicated closing vertex on closed chains).
    pub fn new(points: Vec<Point<T>>, closed: bool) -> Self {
        let mut pts: Vec<Point<T>> = Vec::with_capacity(points.len());
        for p in points {
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        if closed && pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        Polyline { points: pts, closed }
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Segments of the chain, including the implicit closing segment.
    pub fn segments(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        let n = self.points.len();
        let wrap = if self.closed && n > 1 { n } else { n.saturating_sub(1) };
        (0..wrap).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    pub fn arc_length(&self) -> T {
        self.segments().map(|(a, b)| a.dist(b)).sum()
    }

    pub fn reversed(&self) -> Self {
        let mut pts = self.points.clone();
        pts.reverse();
        Polyline { points: pts, closed: self.closed }
    }

    pub fn centroid(&self) -> Point<T> {
        let n = T::from_usize(self.points.len()).expect("point count");
        let mut sx = T::zero();
        let mut sy = T::zero();
        for p in &self.points {
            sx += p.x;
            sy += p.y;
        }
        Point::new(sx / n, sy / n)
    }

    /// Shoelace area over `segments()`; negative for a visually
    /// counter-clockwise loop in y-down screen coordinates.
    pub fn signed_area(&self) -> T {
        let two = T::from_f64_lit(2.0);
        self.segments().map(|(a, b)| a.cross(b)).sum::<T>() / two
    }

    /// `n` points spaced uniformly by arc length along the chain, endpoints
    /// included. A zero-length chain yields `n` copies of the first point.
    pub fn resample(&self, n: usize) -> Vec<Point<T>> {
        assert!(n >= 2, "resample needs at least two points");
        assert!(!self.points.is_empty(), "resample needs a non-empty chain");
        let total = self.arc_length();
        if total == T::zero() {
            return vec![self.points[0]; n];
        }
        let step = total / T::from_usize(n - 1).expect("count");
        let mut out = Vec::with_capacity(n);
        let mut segs = self.segments();
        let (mut a, mut b) = segs.next().expect("non-degenerate chain");
        let mut seg_start = T::zero();
        let mut seg_len = a.dist(b);
        for k in 0..n {
            let target = if k == n - 1 { total } else { step * T::from_usize(k).expect("count") };
            while seg_start + seg_len < target {
                match segs.next() {
                    Some((na, nb)) => {
                        seg_start += seg_len;
                        a = na;
                        b = nb;
                        seg_len = a.dist(b);
                    }
                    None => break,
                }
            }
            let t = if seg_len > T::zero() { (target - seg_start) / seg_len } else { T::zero() };
            out.push(a.lerp(b, t.min(T::one())));
        }
        out
    }

    /// Moving average over a symmetric window of `half_width` vertices per
    /// side. On open chains the window shrinks symmetrically toward the ends,
    /// so the endpoints stay fixed; closed chains average across the wrap.
    /// Chains traced from rasters carry staircase noise of roughly half a
    /// pixel, which this suppresses while leaving the underlying shape
    /// intact.
    pub fn smoothed(&self, half_width: usize) -> Self {
        let n = self.points.len();
        if half_width == 0 || n < 3 {
            return self.clone();
        }
        let pts = &self.points;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let r = if self.closed {
                half_width.min((n - 1) / 2)
            } else {
                half_width.min(i).min(n - 1 - i)
            };
            let mut sx = T::zero();
            let mut sy = T::zero();
            for k in 0..=2 * r {
                let j = if self.closed { (i + n + k - r) % n } else { i + k - r };
                sx += pts[j].x;
                sy += pts[j].y;
            }
            let count = T::from_usize(2 * r + 1).expect("window size");
            out.push(Point::new(sx / count, sy / count));
        }
        Polyline { points: out, closed: self.closed }
    }

    /// Axis-aligned bounds as (min, max) corners; `None` when empty.
    pub fn bounds(&self) -> Option<(Point<T>, Point<T>)> {
        let first = *self.points.first()?;
        let mut lo = first;
        let mut hi = first;
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }
}

/// Inclusive integer pixel rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PixelRect {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl PixelRect {
    pub fn width(&self) -> i64 {
        self.x1 - self.x0 + 1
    }

    pub fn height(&self) -> i64 {
        self.y1 - self.y0 + 1
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        x >= self.x0 && x <= self.x1 && y >= self.y0 && y <= self.y1
    }

    pub fn union(&self, other: &PixelRect) -> PixelRect {
        PixelRect {
            x0: self.x0.min(other.x0),
            y0: self.y0.min(other.y0),
            x1: self.x1.max(other.x1),
            y1: self.y1.max(other.y1),
        }
    }

    pub fn intersect(&self, other: &PixelRect) -> Option<PixelRect> {
        let r = PixelRect {
            x0: self.x0.max(other.x0),
            y0: self.y0.max(other.y0),
            x1: self.x1.min(other.x1),
            y1: self.y1.min(other.y1),
        };
        (r.x0 <= r.x1 && r.y0 <= r.y1).then_some(r)
    }

    pub fn area(&self) -> i64 {
        self.width() * self.height()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Point<f64>;

    #[test]
    fn polyline_drops_consecutive_duplicates() {
        let pl = Polyline::new(
            vec![P::new(0.0, 0.0), P::new(0.0, 0.0), P::new(1.0, 0.0), P::new(1.0, 0.0)],
            false,
        );
        assert_eq!(pl.len(), 2);
    }

    #[test]
    fn closed_polyline_drops_repeated_closing_vertex() {
        let pl = Polyline::new(
            vec![P::new(0.0, 0.0), P::new(1.0, 0.0), P::new(1.0, 1.0), P::new(0.0, 0.0)],
            true,
        );
        assert_eq!(pl.len(), 3);
        assert_eq!(pl.segments().count(), 3);
    }

    #[test]
    fn arc_length_of_unit_square_is_four() {
        let pl = Polyline::new(
            vec![P::new(0.0, 0.0), P::new(1.0, 0.0), P::new(1.0, 1.0), P::new(0.0, 1.0)],
            true,
        );
        assert_eq!(pl.arc_length(), 4.0);
    }

    #[test]
    fn arc_length_generic_over_f32() {
        let pl = Polyline::new(
            vec![Point::<f32>::new(0.0, 0.0), Point::new(3.0, 4.0)],
            false,
        );
        assert_eq!(pl.arc_length(), 5.0f32);
    }

    #[test]
    fn signed_area_is_negative_for_visual_ccw() {
        // Left edge down, bottom right, right edge up, top back (y points down).
        let pl = Polyline::new(
            vec![P::new(0.0, 0.0), P::new(0.0, 2.0), P::new(2.0, 2.0), P::new(2.0, 0.0)],
            true,
        );
        assert_eq!(pl.signed_area(), -4.0);
        assert_eq!(pl.reversed().signed_area(), 4.0);
    }

    #[test]
    fn resample_straight_segment_is_uniform() {
        let pl = Polyline::new(vec![P::new(0.0, 0.0), P::new(10.0, 0.0)], false);
        let pts = pl.resample(11);
        for (k, p) in pts.iter().enumerate() {
            assert!((p.x - k as f64).abs() < 1e-12);
            assert_eq!(p.y, 0.0);
        }
    }

    #[test]
    fn resample_spans_multiple_segments() {
        let pl = Polyline::new(
            vec![P::new(0.0, 0.0), P::new(3.0, 0.0), P::new(3.0, 3.0)],
            false,
        );
        let pts = pl.resample(7);
        assert_eq!(pts.len(), 7);
        assert_eq!(pts[0], P::new(0.0, 0.0));
        assert_eq!(pts[6], P::new(3.0, 3.0));
        assert_eq!(pts[3], P::new(3.0, 0.0)); // corner lies exactly halfway
        // Consecutive samples are equidistant along the chain.
        for w in pts.windows(2) {
            assert!((w[0].dist(w[1]) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn resample_zero_length_chain_repeats_point() {
        let pl = Polyline::new(vec![P::new(2.0, 5.0)], false);
        assert_eq!(pl.resample(4), vec![P::new(2.0, 5.0); 4]);
    }

    #[test]
    fn smoothing_keeps_straight_chains_and_endpoints() {
        let line: Vec<P> = (0..=20).map(|k| P::new(k as f64, 2.0 * k as f64)).collect();
        let pl = Polyline::new(line.clone(), false);
        let sm = pl.smoothed(3);
        assert_eq!(sm.len(), pl.len());
        assert_eq!(sm.points()[0], line[0]);
        assert_eq!(*sm.points().last().unwrap(), *line.last().unwrap());
        for (p, q) in sm.points().iter().zip(&line) {
            assert!(p.dist(*q) < 1e-12, "{p:?} vs {q:?}");
        }
    }

    #[test]
    fn smoothing_flattens_a_staircase_toward_its_line() {
        // 8-connected staircase tracing the line y = x/2: alternating right
        // and diagonal steps wander half a pixel around it.
        let mut pts = vec![P::new(0.0, 0.0)];
        for k in 0..40 {
            let last = *pts.last().unwrap();
            if k % 2 == 0 {
                pts.push(P::new(last.x + 1.0, last.y));
            } else {
                pts.push(P::new(last.x + 1.0, last.y + 1.0));
            }
        }
        // Interior wobble about the line: spread of y - x/2 away from the
        // tapered ends. Smoothing must shrink it well below the raster step.
        let wobble = |pl: &Polyline<f64>| {
            let devs: Vec<f64> =
                pl.points()[4..pl.len() - 4].iter().map(|p| p.y - p.x / 2.0).collect();
            devs.iter().cloned().fold(f64::MIN, f64::max)
                - devs.iter().cloned().fold(f64::MAX, f64::min)
        };
        let raw = Polyline::new(pts, false);
        let sm = raw.smoothed(3);
        assert!(wobble(&raw) >= 0.5);
        assert!(wobble(&sm) < 0.15, "residual wobble {}", wobble(&sm));
    }

    #[test]
    fn smoothing_a_closed_ring_shrinks_it_symmetrically() {
        let ring: Vec<P> = (0..24)
            .map(|k| {
                let a = k as f64 / 24.0 * std::f64::consts::TAU;
                P::new(10.0 * a.cos(), 10.0 * a.sin())
            })
            .collect();
        let sm = Polyline::new(ring, true).smoothed(2);
        assert!(sm.is_closed());
        let radii: Vec<f64> = sm.points().iter().map(|p| p.norm()).collect();
        let first = radii[0];
        assert!(first < 10.0);
        for r in radii {
            assert!((r - first).abs() < 1e-9, "asymmetric radius {r} vs {first}");
        }
    }

    #[test]
    fn rect_union_and_intersection() {
        let a = PixelRect { x0: 0, y0: 0, x1: 4, y1: 4 };
        let b = PixelRect { x0: 3, y0: 2, x1: 9, y1: 3 };
        assert_eq!(a.union(&b), PixelRect { x0: 0, y0: 0, x1: 9, y1: 4 });
        assert_eq!(a.intersect(&b), Some(PixelRect { x0: 3, y0: 2, x1: 4, y1: 3 }));
        let far = PixelRect { x0: 10, y0: 10, x1: 11, y1: 11 };
        assert_eq!(a.intersect(&far), None);
    }
}
