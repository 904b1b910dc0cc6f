//! Torn-side matching by distance-profile variance.
//!
//! Two sides belong together when, placed correctly, the point-to-point
//! distances between their resampled chains are near-constant: the profile's
//! variance is (close to) zero for true counterparts and large for strangers.
//! A coarse-to-fine translation search finds the placement; candidates are
//! accepted when the best variance stays within the configured tolerance.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contour::SideSegment;
use crate::geom::{Point, Polyline, Rotation};
use crate::raster::BinaryMask;
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("side chain has zero length")]
    ZeroLengthChain,
    #[error("fragment {fragment} has no non-uniform side to match")]
    NoCandidate { fragment: usize },
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MatchParams<T> {
    /// Number of resampled correspondences per side.
    pub resample_n: usize,
    /// Acceptance threshold in pixels: accept iff variance <= tau^2.
    pub tau: T,
    /// Minimum fraction of samples that must lie near a detected edge.
    pub edge_support_fraction: f64,
    /// Edge proximity radius in pixels for the support check.
    pub edge_support_radius: f64,
    /// Largest admissible mean gap between matched sides, pixels. Variance
    /// alone is scale-blind: any jagged profile flattens quadratically as the
    /// fragments are pulled apart, so an unconstrained search would happily
    /// accept incompatible sides placed far from each other. For gently
    /// sloped tears the objective is also nearly flat along the tear normal,
    /// letting rasterization noise drift the optimum away from contact. The
    /// cap keeps candidate placements in the physically mated regime; it must
    /// stay comfortably above the widest tear gap expected in the input.
    pub max_mean_gap: T,
}

impl<T: Real> Default for MatchParams<T> {
    fn default() -> Self {
        MatchParams {
            resample_n: 64,
            tau: T::from_f64_lit(1.5),
            edge_support_fraction: 0.70,
            edge_support_radius: 2.0,
            max_mean_gap: T::from_f64_lit(8.0),
        }
    }
}

/// Rigid placement of fragment B: half-turn about `pivot`, then translation.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Placement<T> {
    pub rotation: Rotation,
    /// Rotation center (the matched side's raw-chain centroid).
    pub pivot: Point<T>,
    pub translation: Point<T>,
}

impl<T: Real> Placement<T> {
    pub fn identity() -> Self {
        Placement {
            rotation: Rotation::Deg0,
            pivot: Point::new(T::zero(), T::zero()),
            translation: Point::new(T::zero(), T::zero()),
        }
    }

    pub fn apply(&self, p: Point<T>) -> Point<T> {
        self.rotation.apply(p, self.pivot) + self.translation
    }

    /// The placement expressed as `p' = R p + o`: the pivot folded into a
    /// single offset, comparable across different pivot choices.
    pub fn canonical_offset(&self) -> Point<T> {
        match self.rotation {
            Rotation::Deg0 => self.translation,
            Rotation::Deg180 => Point::new(
                self.pivot.x + self.pivot.x + self.translation.x,
                self.pivot.y + self.pivot.y + self.translation.y,
            ),
        }
    }
}

/// Point-to-point distances along two matched sides.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DistanceProfile<T> {
    pub samples: Vec<T>,
    pub mean: T,
    pub variance: T,
}

impl<T: Real> DistanceProfile<T> {
    fn from_samples(samples: Vec<T>) -> Self {
        let (mean, variance) = mean_variance(&samples);
        DistanceProfile { samples, mean, variance }
    }
}

/// Straight distance between two points.
pub fn euclidean_distance<T: Real>(p: Point<T>, q: Point<T>) -> T {
    p.dist(q)
}

/// Population mean and variance in two passes.
fn mean_variance<T: Real>(values: &[T]) -> (T, T) {
    let n = T::from_usize(values.len()).expect("count");
    let mean = values.iter().copied().sum::<T>() / n;
    let var = values.iter().map(|&v| (v - mean) * (v - mean)).sum::<T>() / n;
    (mean, var)
}

/// `n` equal-arc-length samples along an open chain.
pub fn resample_chain<T: Real>(chain: &Polyline<T>, n: usize) -> Result<Vec<Point<T>>, MatchError> {
    if chain.is_empty() || chain.arc_length() == T::zero() {
        return Err(MatchError::ZeroLengthChain);
    }
    Ok(chain.resample(n))
}

/// Distance profile between `side_a` and the placed, traversal-reversed
/// `side_b` (facing boundaries run in opposite directions along a tear).
pub fn distance_profile<T: Real>(
    side_a: &SideSegment<T>,
    side_b: &SideSegment<T>,
    placement: &Placement<T>,
    n: usize,
) -> Result<DistanceProfile<T>, MatchError> {
    let a = resample_chain(&side_a.chain, n)?;
    let b = resample_chain(&side_b.chain.reversed(), n)?;
    let samples = a
        .iter()
        .zip(&b)
        .map(|(&pa, &pb)| euclidean_distance(pa, placement.apply(pb)))
        .collect();
    Ok(DistanceProfile::from_samples(samples))
}

/// Absolute translation search window; candidate offsets span
/// `[-half_extent, half_extent]` in both axes.
#[derive(Clone, Copy, Debug)]
pub struct SearchWindow {
    pub half_extent: f64,
}

impl SearchWindow {
    /// Window sized to the larger of the two fragment canvases.
    pub fn from_dims(dims: [(u32, u32); 2]) -> Self {
        let extent = dims.iter().flat_map(|&(w, h)| [w, h]).max().unwrap_or(0);
        SearchWindow { half_extent: extent as f64 / 2.0 }
    }
}

/// Candidate ranking key: variance, then smaller translation norm, then
/// lexicographic (dx, dy). Strictly-better comparisons keep search greedy
/// and deterministic.
fn better<T: Real>(var_a: T, t_a: Point<T>, var_b: T, t_b: Point<T>) -> bool {
    if var_a != var_b {
        return var_a < var_b;
    }
    let (na, nb) = (t_a.dot(t_a), t_b.dot(t_b));
    if na != nb {
        return na < nb;
    }
    if t_a.x != t_b.x {
        return t_a.x < t_b.x;
    }
    t_a.y < t_b.y
}

/// Outward unit normals of a resampled chain, one per sample, from central
/// differences. Only the orientation consistency matters to the caller.
fn chain_normals<T: Real>(pts: &[Point<T>]) -> Vec<Point<T>> {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let d = pts[(i + 1).min(n - 1)] - pts[i.saturating_sub(1)];
            let len = d.norm();
            if len == T::zero() {
                Point::new(T::one(), T::zero())
            } else {
                Point::new(d.y / len, -d.x / len)
            }
        })
        .collect()
}

/// Nearest point to `q` on segment `ab`.
fn nearest_on_segment<T: Real>(q: Point<T>, a: Point<T>, b: Point<T>) -> Point<T> {
    let ab = b - a;
    let len_sq = ab.dot(ab);
    if len_sq == T::zero() {
        return a;
    }
    let t = ((q - a).dot(ab) / len_sq).max(T::zero()).min(T::one());
    a.lerp(b, t)
}

/// Signed distance from each A sample to the placed B chain, where the sign
/// is the side of A's local normal the closest B point falls on. Returns
/// (mean |distance|, variance of signed distances).
///
/// Point-to-chain distances make the profile exactly constant for truly
/// mated sides (parallel tear flanks) regardless of how arc length
/// redistributes between them, and the sign makes interleaved placements
/// (fragments overlapping) pay for their crossings, so the search prefers
/// genuinely mated placements over superimposed or slid-apart ones.
pub(crate) fn profile_stats_at<T: Real>(
    a: &[Point<T>],
    normals: &[Point<T>],
    b_rot: &[Point<T>],
    t: Point<T>,
) -> (T, T) {
    let n = T::from_usize(a.len()).expect("count");
    let mut signed = Vec::with_capacity(a.len());
    let mut sum_abs = T::zero();
    let mut sum = T::zero();
    for (&pa, &nm) in a.iter().zip(normals) {
        let q = pa - t;
        let mut best = T::infinity();
        let mut best_pt = b_rot[0];
        for seg in b_rot.windows(2) {
            let c = nearest_on_segment(q, seg[0], seg[1]);
            let d = q.dist(c);
            if d < best {
                best = d;
                best_pt = c;
            }
        }
        let s = if (q - best_pt).dot(nm) < T::zero() { -best } else { best };
        sum_abs += best;
        sum += s;
        signed.push(s);
    }
    let mean_abs = sum_abs / n;
    let mean = sum / n;
    let var = signed
        .iter()
        .map(|&s| {
            let dev = s - mean;
            dev * dev
        })
        .sum::<T>()
        / n;
    (mean_abs, var)
}

/// Normal-direction spread (one minus the mean resultant length of the
/// sample normals) below which a side chain counts as straight, making the
/// across-tear offset unobservable from shape alone.
const STRAIGHT_NORMAL_SPREAD: f64 = 0.005;

/// Mean gap at which across-tear settling stops: chains traced on pixel
/// centers sit about a pixel apart when the fragments actually touch, so
/// pushing the mean further would interleave the flanks.
const SETTLE_MEAN_FLOOR: f64 = 1.25;

/// Pins the across-tear component of a converged alignment. The variance
/// statistic localizes the placement along the tear but is nearly flat
/// across it, and chain noise tilts that flat valley away from contact (a
/// pulled-apart placement measures to the smoothed envelope of a noisy
/// chain, which spuriously lowers the variance). Two priors close the gap
/// in what shape alone cannot determine:
///
/// - straight chains carry no across-tear information at all, so the normal
///   component of the translation is dropped entirely: the smallest
///   consistent translation, which also preserves an unknowable tear gap;
/// - shaped chains settle toward contact: walk down the mean gap while the
///   variance stays within a small budget of the optimum, stopping at the
///   raster contact floor.
fn settle_across_tear<T: Real>(
    a: &[Point<T>],
    normals: &[Point<T>],
    b_rot: &[Point<T>],
    best_t: Point<T>,
    best_var: T,
) -> (Point<T>, T) {
    let n = T::from_usize(normals.len()).expect("count");
    let mut sx = T::zero();
    let mut sy = T::zero();
    for nm in normals {
        sx += nm.x;
        sy += nm.y;
    }
    let (mx, my) = (sx / n, sy / n);
    let resultant = (mx * mx + my * my).sqrt();
    if resultant == T::zero() {
        return (best_t, best_var);
    }
    let n_mean = Point::new(mx / resultant, my / resultant);

    if T::one() - resultant < T::from_f64_lit(STRAIGHT_NORMAL_SPREAD) {
        let s = best_t.dot(n_mean);
        let t = Point::new(best_t.x - n_mean.x * s, best_t.y - n_mean.y * s);
        let (_, var) = profile_stats_at(a, normals, b_rot, t);
        return (t, var);
    }

    // Purely relative: the optimum's variance is the chain-noise level, and
    // the spurious valley tilt stays under half of it. Noise-free chains get
    // no budget and stay put, preserving analytic gaps exactly.
    let budget = best_var + best_var / T::from_f64_lit(2.0);
    let floor = T::from_f64_lit(SETTLE_MEAN_FLOOR);
    let step = T::from_f64_lit(0.25);
    let stats = |t: Point<T>| profile_stats_at(a, normals, b_rot, t);
    let (mut cur_mean, mut cur_var) = stats(best_t);
    let mut cur_t = best_t;
    if cur_mean <= floor {
        return (best_t, best_var);
    }
    // Whichever way along the mean normal shrinks the gap.
    let fwd = Point::new(best_t.x + n_mean.x * step, best_t.y + n_mean.y * step);
    let dir = if stats(fwd).0 < cur_mean { step } else { -step };
    for _ in 0..64 {
        let next_t = Point::new(cur_t.x + n_mean.x * dir, cur_t.y + n_mean.y * dir);
        let (mean, var) = stats(next_t);
        if mean >= cur_mean || var > budget {
            break;
        }
        cur_t = next_t;
        cur_mean = mean;
        cur_var = var;
        if mean <= floor {
            break;
        }
    }
    (cur_t, cur_var)
}

/// Finds the translation minimizing profile variance for the given rotation:
/// a 4-px grid over the window, then greedy 1-px and 0.25-px refinement,
/// then an across-tear settling pass (see [`settle_across_tear`]).
/// Candidates whose mean gap exceeds `max_mean_gap` are skipped unless no
/// candidate in the window satisfies the cap.
pub fn align_sides<T: Real>(
    side_a: &SideSegment<T>,
    side_b: &SideSegment<T>,
    rotation: Rotation,
    window: &SearchWindow,
    params: &MatchParams<T>,
) -> Result<(Placement<T>, T), MatchError> {
    let a = resample_chain(&side_a.chain, params.resample_n)?;
    let b = resample_chain(&side_b.chain.reversed(), params.resample_n)?;
    let pivot = side_b.chain.centroid();
    let b_rot: Vec<Point<T>> = b.iter().map(|&pb| rotation.apply(pb, pivot)).collect();
    let normals = chain_normals(&a);

    // Coarse pass on an absolute 4-px lattice (always contains the origin)
    // with subsampled queries, tracking the best capped candidate and an
    // uncapped fallback.
    let stride = (a.len() / 16).max(1);
    let a_sub: Vec<Point<T>> = a.iter().copied().step_by(stride).collect();
    let n_sub: Vec<Point<T>> = normals.iter().copied().step_by(stride).collect();
    let half = window.half_extent;
    let k_min = (-half / 4.0).ceil() as i64;
    let k_max = (half / 4.0).floor() as i64;
    let mut best: Option<(Point<T>, T)> = None;
    let mut fallback_t = Point::new(T::zero(), T::zero());
    let mut fallback_var = T::infinity();
    for ky in k_min..=k_max {
        for kx in k_min..=k_max {
            let t = Point::new(
                T::from_i64(kx * 4).expect("grid"),
                T::from_i64(ky * 4).expect("grid"),
            );
            let (mean, v) = profile_stats_at(&a_sub, &n_sub, &b_rot, t);
            if mean <= params.max_mean_gap {
                if best.is_none_or(|(bt, bv)| better(v, t, bv, bt)) {
                    best = Some((t, v));
                }
            } else if better(v, t, fallback_var, fallback_t) {
                fallback_var = v;
                fallback_t = t;
            }
        }
    }
    let capped = best.is_some();
    let mut best_t = best.map_or(fallback_t, |(bt, _)| bt);
    let (_, mut best_var) = profile_stats_at(&a, &normals, &b_rot, best_t);

    // Greedy descent at 1 px, then 0.25 px, on the full-resolution profile.
    for step in [1.0, 0.25] {
        let step = T::from_f64_lit(step);
        for _ in 0..64 {
            let mut moved = false;
            for dy in -1..=1i32 {
                for dx in -1..=1i32 {
                    if dx == 0 && dy == 0 {
                        continue;
                    }
                    let t = Point::new(
                        best_t.x + step * T::from_i32(dx).expect("step"),
                        best_t.y + step * T::from_i32(dy).expect("step"),
                    );
                    let (mean, v) = profile_stats_at(&a, &normals, &b_rot, t);
                    if capped && mean > params.max_mean_gap {
                        continue;
                    }
                    if better(v, t, best_var, best_t) {
                        best_var = v;
                        best_t = t;
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
    }

    let (best_t, best_var) = settle_across_tear(&a, &normals, &b_rot, best_t, best_var);
    Ok((Placement { rotation, pivot, translation: best_t }, best_var))
}

/// Fraction of sample points having a detected edge pixel within `radius`.
pub fn edge_support<T: Real>(samples: &[Point<T>], edges: &BinaryMask, radius: f64) -> f64 {
    if samples.is_empty() {
        return 0.0;
    }
    let r2 = radius * radius;
    let hits = samples
        .iter()
        .filter(|p| {
            let (px, py) = (p.x.to_f64_lossy(), p.y.to_f64_lossy());
            let x0 = (px - radius).ceil() as i64;
            let x1 = (px + radius).floor() as i64;
            let y0 = (py - radius).ceil() as i64;
            let y1 = (py + radius).floor() as i64;
            for y in y0..=y1 {
                for x in x0..=x1 {
                    let (dx, dy) = (x as f64 - px, y as f64 - py);
                    if dx * dx + dy * dy <= r2 && edges.get_or_bg(x, y) {
                        return true;
                    }
                }
            }
            false
        })
        .count();
    hits as f64 / samples.len() as f64
}

/// One evaluated (side_a, side_b, rotation) candidate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CandidateScore<T> {
    pub side_a: usize,
    pub side_b: usize,
    pub placement: Placement<T>,
    pub variance: T,
    pub accepted: bool,
}

/// Winning candidate plus acceptance verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatchScore<T> {
    pub side_a: usize,
    pub side_b: usize,
    pub placement: Placement<T>,
    /// Variance of the signed A-sample-to-placed-B-chain distance profile at
    /// the chosen placement; the acceptance statistic.
    pub variance: T,
    pub accepted: bool,
    /// Fraction of matched samples near detected edges (when maps supplied).
    pub edge_support: Option<f64>,
}

/// Winner and the full candidate table (for reports and debugging).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Selection<T> {
    pub best: MatchScore<T>,
    pub candidates: Vec<CandidateScore<T>>,
}

/// Evaluates every non-uniform (side_a, side_b, rotation) triple and selects
/// the minimum-variance one; ties prefer lower side_a index, lower side_b
/// index, then rotation 0. The winner is demoted to `accepted = false` when
/// its samples do not lie on detected edges.
pub fn select_pair<T: Real>(
    sides_a: &[SideSegment<T>],
    sides_b: &[SideSegment<T>],
    flips: &[Rotation],
    edge_maps: Option<(&BinaryMask, &BinaryMask)>,
    window: &SearchWindow,
    params: &MatchParams<T>,
) -> Result<Selection<T>, MatchError> {
    let torn_a: Vec<&SideSegment<T>> = sides_a.iter().filter(|s| s.is_non_uniform()).collect();
    let torn_b: Vec<&SideSegment<T>> = sides_b.iter().filter(|s| s.is_non_uniform()).collect();
    if torn_a.is_empty() {
        return Err(MatchError::NoCandidate { fragment: 0 });
    }
    if torn_b.is_empty() {
        return Err(MatchError::NoCandidate { fragment: 1 });
    }

    let tau_sq = params.tau * params.tau;
    let mut candidates = Vec::new();
    let mut best: Option<CandidateScore<T>> = None;
    for sa in &torn_a {
        for sb in &torn_b {
            for &rotation in flips {
                let (placement, variance) = align_sides(sa, sb, rotation, window, params)?;
                let cand = CandidateScore {
                    side_a: sa.side_index,
                    side_b: sb.side_index,
                    placement,
                    variance,
                    accepted: variance <= tau_sq,
                };
                let replace = match &best {
                    None => true,
                    Some(cur) => {
                        let key_new =
                            (cand.side_a, cand.side_b, cand.placement.rotation != Rotation::Deg0);
                        let key_cur =
                            (cur.side_a, cur.side_b, cur.placement.rotation != Rotation::Deg0);
                        cand.variance < cur.variance
                            || (cand.variance == cur.variance && key_new < key_cur)
                    }
                };
                if replace {
                    best = Some(cand.clone());
                }
                candidates.push(cand);
            }
        }
    }
    let winner = best.expect("at least one candidate evaluated");

    let mut support = None;
    let mut accepted = winner.accepted;
    if let Some((edges_a, edges_b)) = edge_maps {
        let sa = sides_a.iter().find(|s| s.side_index == winner.side_a).expect("winner side");
        let sb = sides_b.iter().find(|s| s.side_index == winner.side_b).expect("winner side");
        let a_pts = resample_chain(&sa.chain, params.resample_n)?;
        let b_pts = resample_chain(&sb.chain.reversed(), params.resample_n)?;
        let frac_a = edge_support(&a_pts, edges_a, params.edge_support_radius);
        let frac_b = edge_support(&b_pts, edges_b, params.edge_support_radius);
        let pooled = (frac_a + frac_b) / 2.0;
        support = Some(pooled);
        if pooled < params.edge_support_fraction {
            accepted = false;
        }
    }

    Ok(Selection {
        best: MatchScore {
            side_a: winner.side_a,
            side_b: winner.side_b,
            placement: winner.placement,
            variance: winner.variance,
            accepted,
            edge_support: support,
        },
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contour::Classification;

    type P = Point<f64>;

    pub(crate) fn side(points: Vec<P>, index: usize) -> SideSegment<f64> {
        SideSegment {
            chain: Polyline::new(points, false),
            classification: Classification::NonUniform,
            fragment_id: 0,
            side_index: index,
        }
    }

    fn vertical(x: f64, y0: f64, y1: f64, steps: usize) -> Vec<P> {
        (0..=steps)
            .map(|k| P::new(x, y0 + (y1 - y0) * k as f64 / steps as f64))
            .collect()
    }

    #[test]
    fn euclidean_examples() {
        assert_eq!(euclidean_distance(P::new(0.0, 0.0), P::new(3.0, 4.0)), 5.0);
        assert_eq!(euclidean_distance(P::new(2.0, 7.0), P::new(2.0, 7.0)), 0.0);
    }

    #[test]
    fn resample_zero_length_chain_errors() {
        let chain = Polyline::new(vec![P::new(1.0, 1.0)], false);
        assert!(matches!(resample_chain(&chain, 8), Err(MatchError::ZeroLengthChain)));
    }

    #[test]
    fn facing_straight_sides_have_constant_profile() {
        // A runs top to bottom; B, traced on the other fragment, runs bottom
        // to top. After the reversal inside the profile they correspond.
        let a = side(vertical(0.0, 0.0, 10.0, 10), 0);
        let b = side(vertical(3.0, 10.0, 0.0, 10), 0);
        let profile = distance_profile(&a, &b, &Placement::identity(), 16).unwrap();
        assert!((profile.mean - 3.0).abs() < 1e-12);
        assert_eq!(profile.variance, 0.0);
        assert!(profile.samples.iter().all(|&s| (s - 3.0).abs() < 1e-12));
    }

    /// A wavy chain with at least three distinct local slopes, plus its two
    /// parallel offsets at distance `off` along the local normal.
    fn wavy(off: f64, phase: f64, scale: f64) -> Vec<P> {
        (0..=120)
            .map(|k| {
                let s = k as f64;
                let x = scale * (6.0 * (s / 15.0 + phase).sin() + 4.0 * (s / 7.0 + 1.0).sin());
                let dx = scale * (6.0 / 15.0 * (s / 15.0 + phase).cos()
                    + 4.0 / 7.0 * (s / 7.0 + 1.0).cos());
                let norm = (1.0 + dx * dx).sqrt();
                P::new(x + off / norm, s - off * dx / norm)
            })
            .collect()
    }

    #[test]
    fn sawtooth_against_straight_is_rejected() {
        let mut saw = Vec::new();
        for k in 0..=10 {
            let y = k as f64 * 10.0;
            let x = if k % 2 == 0 { 0.0 } else { 10.0 }; // tooth height 10
            saw.push(P::new(x, y));
        }
        let a = side(saw, 0);
        let b = side(vertical(5.0, 100.0, 0.0, 20), 0);
        for t in [(0.0, 0.0), (7.0, -3.0), (-12.0, 5.0)] {
            let placement = Placement {
                rotation: Rotation::Deg0,
                pivot: P::new(0.0, 0.0),
                translation: P::new(t.0, t.1),
            };
            let profile = distance_profile(&a, &b, &placement, 24).unwrap();
            assert!(profile.variance >= 1.0, "variance {} at {t:?}", profile.variance);
        }
    }

    #[test]
    fn mismatched_wavy_sides_stay_above_threshold() {
        // Two unrelated tear shapes: even the best capped alignment keeps
        // the profile variance far beyond acceptance.
        let a = side(wavy(0.0, 0.0, 1.0), 0);
        let mut b_pts = wavy(0.0, 2.5, 2.0);
        b_pts.reverse();
        let b = side(b_pts, 0);
        let window = SearchWindow { half_extent: 80.0 };
        let params = MatchParams::default();
        let (_, best_var) = align_sides(&a, &b, Rotation::Deg0, &window, &params).unwrap();
        assert!(best_var > params.tau * params.tau, "aligned variance {best_var}");
    }

    #[test]
    fn identical_sides_tie_break_to_origin() {
        let a = side(vertical(4.0, 0.0, 20.0, 20), 0);
        let b = side(vertical(4.0, 20.0, 0.0, 20), 0);
        let window = SearchWindow { half_extent: 40.0 };
        let (placement, var) =
            align_sides(&a, &b, Rotation::Deg0, &window, &MatchParams::default()).unwrap();
        assert_eq!(var, 0.0);
        assert_eq!(placement.translation, P::new(0.0, 0.0));
    }

    /// Parallel offset of an open polyline at signed distance `off` (miter
    /// joins), the shape of a tear side when a gap-wide sliver is lost.
    fn offset_polyline(pts: &[P], off: f64) -> Vec<P> {
        let seg_normal = |a: P, b: P| {
            let d = b - a;
            let len = (d.x * d.x + d.y * d.y).sqrt();
            P::new(d.y / len, -d.x / len)
        };
        let n = pts.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let shift = if i == 0 {
                seg_normal(pts[0], pts[1])
            } else if i == n - 1 {
                seg_normal(pts[n - 2], pts[n - 1])
            } else {
                let n1 = seg_normal(pts[i - 1], pts[i]);
                let n2 = seg_normal(pts[i], pts[i + 1]);
                let m = P::new(n1.x + n2.x, n1.y + n2.y);
                let mlen = (m.x * m.x + m.y * m.y).sqrt();
                let m = P::new(m.x / mlen, m.y / mlen);
                // Miter scale keeps the offset segments at exact distance.
                let cos_half = m.x * n1.x + m.y * n1.y;
                P::new(m.x / cos_half, m.y / cos_half)
            };
            out.push(pts[i] + P::new(shift.x * off, shift.y * off));
        }
        out
    }

    fn irregular_tear_path() -> Vec<P> {
        let xs = [3.0, -4.0, 6.0, 0.0, -7.0, 5.0, -2.0, 7.0, -5.0, 2.0];
        let ys = [0.0, 12.0, 25.0, 40.0, 52.0, 68.0, 81.0, 95.0, 110.0, 120.0];
        xs.iter().zip(ys).map(|(&x, y)| P::new(x, y)).collect()
    }

    #[test]
    fn alignment_recovers_known_displacement() {
        // The two sides of a gap-2 tear: parallel offsets of one irregular
        // polyline. B is displaced by (37, -12); alignment must undo it:
        // with varied tooth slopes the side samples sit at constant distance
        // from each other only at the true translation.
        let path = irregular_tear_path();
        let a = side(offset_polyline(&path, -1.0), 0);
        let mut b_pts = offset_polyline(&path, 1.0);
        b_pts.reverse();
        let b_pts: Vec<P> = b_pts.into_iter().map(|p| p + P::new(37.0, -12.0)).collect();
        let b = side(b_pts, 0);
        let window = SearchWindow { half_extent: 60.0 };
        let (placement, var) =
            align_sides(&a, &b, Rotation::Deg0, &window, &MatchParams::default()).unwrap();
        assert!(var < 0.5, "variance {var}");
        assert!((placement.translation.x - -37.0).abs() <= 1.0, "{:?}", placement.translation);
        assert!((placement.translation.y - 12.0).abs() <= 1.0, "{:?}", placement.translation);
    }

    #[test]
    fn half_turn_placement_applies_point_reflection() {
        let placement = Placement {
            rotation: Rotation::Deg180,
            pivot: P::new(5.0, 5.0),
            translation: P::new(1.0, 0.0),
        };
        assert_eq!(placement.apply(P::new(2.0, 3.0)), P::new(9.0, 7.0));
        assert_eq!(placement.canonical_offset(), P::new(11.0, 10.0));
    }

    #[test]
    fn select_pair_requires_non_uniform_sides() {
        let mut a = side(vertical(0.0, 0.0, 10.0, 10), 0);
        a.classification = Classification::Uniform;
        let b = side(vertical(3.0, 10.0, 0.0, 10), 0);
        let window = SearchWindow { half_extent: 20.0 };
        let err = select_pair(
            &[a],
            &[b],
            &[Rotation::Deg0],
            None,
            &window,
            &MatchParams::default(),
        )
        .unwrap_err();
        assert!(matches!(err, MatchError::NoCandidate { fragment: 0 }));
    }

    #[test]
    fn select_pair_prefers_lower_variance_then_indices() {
        let a_straight = side(vertical(0.0, 0.0, 20.0, 20), 0);
        let mut saw = Vec::new();
        for k in 0..=10 {
            saw.push(P::new(if k % 2 == 0 { 30.0 } else { 40.0 }, k as f64 * 2.0));
        }
        let a_saw = side(saw, 1);
        let b = side(vertical(3.0, 20.0, 0.0, 20), 0);
        let window = SearchWindow { half_extent: 30.0 };
        let sel = select_pair(
            &[a_straight, a_saw],
            &[b],
            &[Rotation::Deg0, Rotation::Deg180],
            None,
            &window,
            &MatchParams::default(),
        )
        .unwrap();
        assert_eq!(sel.best.side_a, 0);
        assert_eq!(sel.best.placement.rotation, Rotation::Deg0);
        assert!(sel.best.accepted);
        assert_eq!(sel.candidates.len(), 4);
    }

    #[test]
    fn edge_support_counts_nearby_edges() {
        let mut edges = BinaryMask::new(20, 20, false);
        for y in 0..20 {
            edges.set(10, y, true);
        }
        let on: Vec<P> = (0..10).map(|k| P::new(10.4, k as f64 * 2.0)).collect();
        let off: Vec<P> = (0..10).map(|k| P::new(15.0, k as f64 * 2.0)).collect();
        assert_eq!(edge_support(&on, &edges, 2.0), 1.0);
        assert_eq!(edge_support(&off, &edges, 2.0), 0.0);
    }
}
