//! The end-to-end reconstruction chain.
//!
//! `mend_images` runs denoise → deskew → boundary split → edge detection →
//! side matching → placement → blending → character repair and returns the
//! stitched image together with a machine-readable report. A rejected match
//! is a result (`image: None`, candidate table retained), not an error.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assemble::{blend, place, AssembleError, FragmentLayer};
use crate::canny::{canny, CannyError};
use crate::config::{Config, ConfigError};
use crate::contour::{extract_boundaries, split_sides, ContourError, SideSegment};
use crate::diffusion::{diffuse_step, DiffusionParams};
use crate::geom::Rotation;
use crate::matching::{select_pair, MatchError, SearchWindow, Selection};
use crate::orient::{estimate_skew, rotate_image, Fragment, OrientError};
use crate::raster::{binarize, BinaryMask, BinarizeMethod, GrayImage};
use crate::repair::{
    bundled_atlas, bundled_dictionary, complete_word, find_damaged_words, render_repair,
    CompletionError, WordCandidate,
};
use crate::{PolylineF, RealImageF, Scalar};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Vertices averaged on each side when smoothing traced side chains; spans
/// about thirteen pixels of arc, well under any admissible tooth spacing.
const CHAIN_SMOOTH_HALF_WIDTH: usize = 6;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("no fragment silhouette in input {which}: {reason}")]
    NoFragment { which: char, reason: String },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Contour(#[from] ContourError),
    #[error(transparent)]
    Canny(#[from] CannyError),
    #[error(transparent)]
    Match(#[from] MatchError),
    #[error(transparent)]
    Assemble(#[from] AssembleError),
}

/// Runs the configured number of diffusion steps on a grayscale image.
pub fn denoise(img: &GrayImage, params: &DiffusionParams<Scalar>) -> GrayImage {
    let mut field = RealImageF::from_gray(img);
    for _ in 0..params.iterations {
        field = diffuse_step(&field, params);
    }
    field.to_gray()
}


/// One input scan after the per-fragment stages: denoised and deskewed,
/// with its silhouette, torn-side decomposition, and edge map.
pub struct PreparedFragment {
    pub fragment: Fragment,
    pub skew_degrees: Option<Scalar>,
    pub sides: Vec<SideSegment<Scalar>>,
    pub edges: BinaryMask,
}

/// Denoises, masks, deskews, and decomposes one scan.
pub fn prepare_fragment(
    img: &GrayImage,
    fragment_id: usize,
    config: &Config,
) -> Result<PreparedFragment, PipelineError> {
    let which = if fragment_id == 0 { 'a' } else { 'b' };
    let denoised = denoise(img, &config.diffusion);
    let bin = binarize(&denoised, BinarizeMethod::Otsu);
    if bin.degenerate {
        return Err(PipelineError::NoFragment {
            which,
            reason: "image is a single flat intensity".into(),
        });
    }
    let component = crate::contour::largest_component(&bin.mask).ok_or_else(|| {
        PipelineError::NoFragment { which, reason: "no foreground pixels".into() }
    })?;
    // Ink is as dark as the scanner bed, so strokes cut by the tear notch
    // into the paper silhouette. A small closing heals those notches
    // without moving the outline extremes; filling afterwards removes the
    // interior ink holes. Skew is estimated on the unclosed silhouette:
    // the closing pulls bed-dark pixels into the mask along the tear, and
    // those must not pass for ink.
    let ink_mask = crate::contour::fill_holes(&component);
    let mask = crate::contour::fill_holes(&component.dilate8(2).erode8(2));
    let mut fragment = Fragment { image: denoised, mask };

    let skew_degrees = match estimate_skew(&fragment.image, &ink_mask, &config.orient) {
        Ok(est) => {
            if est.skew_degrees.abs() >= config.orient.snap_degrees {
                let (image, mask) =
                    rotate_image(&fragment.image, &fragment.mask, -est.skew_degrees);
                fragment = Fragment { image, mask };
            }
            Some(est.skew_degrees)
        }
        Err(OrientError::NoText { .. }) => None,
    };

    let boundaries = extract_boundaries::<Scalar>(&fragment.image, &fragment.mask, &config.rim)?;
    let mut sides = split_sides(boundaries.active(), &config.simplify, fragment_id)?;
    // Traced chains keep the raster staircase; that noise makes the match
    // variance nearly flat along the tear normal, letting the placement
    // drift off contact. Both flanks of a tear sample the same path, so
    // averaging pulls the two chains onto a common smooth curve.
    // Classification has already happened on the raw chains, where the
    // staircase is signal: it is what separates an oblique tear from a
    // clean scanner-cropped border.
    for s in &mut sides {
        s.chain = s.chain.smoothed(CHAIN_SMOOTH_HALF_WIDTH);
    }
    let edges = canny(&fragment.image, &config.canny)?;
    Ok(PreparedFragment { fragment, skew_degrees, sides, edges })
}

/// Per-word repair record: the wildcard pattern found at the gap and what
/// the dictionary made of it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepairOutcome {
    pub word: WordCandidate,
    pub completion: Result<String, CompletionError>,
}

/// One candidate row of the match table, reduced to report form.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CandidateRow {
    pub side_a: usize,
    pub side_b: usize,
    pub rotation: Rotation,
    pub variance: f64,
    pub accepted: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepairRow {
    pub pattern: String,
    pub completion: Option<String>,
    pub status: String,
}

/// Machine-readable reconstruction report (stable JSON schema).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MendReport {
    pub schema_version: u32,
    pub accepted: bool,
    pub side_a: Option<usize>,
    pub side_b: Option<usize>,
    pub rotation: Option<Rotation>,
    pub canonical_offset: Option<(f64, f64)>,
    pub variance: Option<f64>,
    pub edge_support: Option<f64>,
    pub self_match_rejected: bool,
    pub skew_a: Option<f64>,
    pub skew_b: Option<f64>,
    pub gap_pixels: Option<u64>,
    pub candidates: Vec<CandidateRow>,
    pub repairs: Vec<RepairRow>,
}

/// Everything the pipeline produced. `image` is present only for an
/// accepted match; the selection table is kept either way.
pub struct ReconstructionResult {
    pub image: Option<GrayImage>,
    pub gap_mask: Option<BinaryMask>,
    pub selection: Option<Selection<Scalar>>,
    /// Chains of the best candidate's sides, in deskewed fragment frames.
    pub chain_a: Option<PolylineF>,
    pub chain_b: Option<PolylineF>,
    pub repairs: Vec<RepairOutcome>,
    pub report: MendReport,
}

impl ReconstructionResult {
    pub fn accepted(&self) -> bool {
        self.report.accepted
    }

    fn rejected(
        selection: Option<Selection<Scalar>>,
        chains: Option<(PolylineF, PolylineF)>,
        skews: (Option<Scalar>, Option<Scalar>),
        self_match: bool,
    ) -> Self {
        let (chain_a, chain_b) = match chains {
            Some((a, b)) => (Some(a), Some(b)),
            None => (None, None),
        };
        let report = report_skeleton(selection.as_ref(), skews, self_match);
        ReconstructionResult {
            image: None,
            gap_mask: None,
            selection,
            chain_a,
            chain_b,
            repairs: Vec::new(),
            report,
        }
    }
}

fn report_skeleton(
    selection: Option<&Selection<Scalar>>,
    skews: (Option<Scalar>, Option<Scalar>),
    self_match_rejected: bool,
) -> MendReport {
    let mut report = MendReport {
        schema_version: REPORT_SCHEMA_VERSION,
        accepted: false,
        side_a: None,
        side_b: None,
        rotation: None,
        canonical_offset: None,
        variance: None,
        edge_support: None,
        self_match_rejected,
        skew_a: skews.0,
        skew_b: skews.1,
        gap_pixels: None,
        candidates: Vec::new(),
        repairs: Vec::new(),
    };
    if let Some(sel) = selection {
        let best = &sel.best;
        let offset = best.placement.canonical_offset();
        report.accepted = best.accepted && !self_match_rejected;
        report.side_a = Some(best.side_a);
        report.side_b = Some(best.side_b);
        report.rotation = Some(best.placement.rotation);
        report.canonical_offset = Some((offset.x, offset.y));
        report.variance = Some(best.variance);
        report.edge_support = best.edge_support;
        report.candidates = sel
            .candidates
            .iter()
            .map(|c| CandidateRow {
                side_a: c.side_a,
                side_b: c.side_b,
                rotation: c.placement.rotation,
                variance: c.variance,
                accepted: c.accepted,
            })
            .collect();
    }
    report
}

fn masks_equal(a: &BinaryMask, b: &BinaryMask) -> bool {
    if a.width() != b.width() || a.height() != b.height() {
        return false;
    }
    for y in 0..a.height() {
        for x in 0..a.width() {
            if a.get(x, y) != b.get(x, y) {
                return false;
            }
        }
    }
    true
}

fn side_chain(sides: &[SideSegment<Scalar>], index: usize) -> PolylineF {
    sides
        .iter()
        .find(|s| s.side_index == index)
        .map(|s| s.chain.clone())
        .expect("selected side index exists")
}

/// Full reconstruction from two decoded scans.
pub fn mend_images(
    img_a: &GrayImage,
    img_b: &GrayImage,
    config: &Config,
) -> Result<ReconstructionResult, PipelineError> {
    config.validate()?;
    let pa = prepare_fragment(img_a, 0, config)?;
    let pb = prepare_fragment(img_b, 1, config)?;
    let skews = (pa.skew_degrees, pb.skew_degrees);

    let window = SearchWindow::from_dims([
        (pa.fragment.image.width(), pa.fragment.image.height()),
        (pb.fragment.image.width(), pb.fragment.image.height()),
    ]);
    let selection = match select_pair(
        &pa.sides,
        &pb.sides,
        &[Rotation::Deg0, Rotation::Deg180],
        Some((&pa.edges, &pb.edges)),
        &window,
        &config.matching,
    ) {
        Ok(sel) => sel,
        // A fragment without any torn side cannot match anything: that is
        // a no-match verdict, not a pipeline failure.
        Err(MatchError::NoCandidate { .. }) => {
            return Ok(ReconstructionResult::rejected(None, None, skews, false));
        }
        Err(e) => return Err(e.into()),
    };

    let best = selection.best.clone();
    let chain_a = side_chain(&pa.sides, best.side_a);
    let chain_b = side_chain(&pb.sides, best.side_b);

    // Scanning the same physical fragment twice yields a perfect self-match
    // at the identity; gluing a fragment to itself is never the answer.
    let offset = best.placement.canonical_offset();
    let self_match = best.accepted
        && best.placement.rotation == Rotation::Deg0
        && offset.norm() < 1.0
        && masks_equal(&pa.fragment.mask, &pb.fragment.mask);

    if !best.accepted || self_match {
        return Ok(ReconstructionResult::rejected(
            Some(selection),
            Some((chain_a, chain_b)),
            skews,
            self_match,
        ));
    }

    let layer_a = FragmentLayer {
        image: pa.fragment.image.clone(),
        mask: pa.fragment.mask.clone(),
        side: chain_a.clone(),
    };
    let layer_b = FragmentLayer {
        image: pb.fragment.image.clone(),
        mask: pb.fragment.mask.clone(),
        side: chain_b.clone(),
    };
    let canvas = place(&layer_a, &layer_b, &best.placement, config.matching.resample_n)?;
    let mut image = blend(&canvas, &config.blend);
    let gap_mask = canvas.gap_mask();

    let mut repairs = Vec::new();
    if config.repair {
        let atlas = bundled_atlas();
        let dictionary = bundled_dictionary();
        for word in find_damaged_words(&image, &gap_mask, atlas) {
            let completion = complete_word(&word, dictionary);
            if let Ok(text) = &completion {
                image = render_repair(&image, &word, text, atlas);
            }
            repairs.push(RepairOutcome { word, completion });
        }
    }

    let mut report = report_skeleton(Some(&selection), skews, false);
    report.gap_pixels = Some(gap_mask.count() as u64);
    report.repairs = repairs
        .iter()
        .map(|r| RepairRow {
            pattern: r.word.text.clone(),
            completion: r.completion.as_ref().ok().cloned(),
            status: match &r.completion {
                Ok(_) => "completed".into(),
                Err(CompletionError::Ambiguous(_)) => "ambiguous".into(),
                Err(CompletionError::NoCompletion) => "no_completion".into(),
            },
        })
        .collect();

    Ok(ReconstructionResult {
        image: Some(image),
        gap_mask: Some(gap_mask),
        selection: Some(selection),
        chain_a: Some(chain_a),
        chain_b: Some(chain_b),
        repairs,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BED: u8 = 30;

    /// A white page with a few ink strokes, torn along a zigzag and pasted
    /// onto two separate dark scanner beds.
    fn torn_pair(flip_b: bool) -> (GrayImage, GrayImage, GrayImage) {
        let (pw, ph) = (120u32, 100u32);
        // Ink stays away from the page borders (as printed text does);
        // inked borders would wobble the cut edges and misclassify them.
        let mut page = GrayImage::new(pw, ph, 250);
        for y in 8..ph - 8 {
            for x in 8..pw - 8 {
                if y % 16 < 3 {
                    page.set(x, y, 15);
                }
            }
        }
        // Gentle piecewise-linear teeth: flank slopes stay shallow so tooth
        // apexes do not register as corners (the torn side must stay one
        // side), and distinct amplitudes keep the tear asymmetric under a
        // half turn so the correct rotation wins outright.
        let knots = [3.0, -4.0, 5.0, -2.0, 4.0];
        let boundary = move |y: u32| -> f64 {
            let pos = y as f64 / 25.0;
            let i = (pos.floor() as usize).min(knots.len() - 2);
            let f = pos - i as f64;
            60.0 + knots[i] * (1.0 - f) + knots[i + 1] * f + y as f64 * 0.07
        };
        let margin = 14u32;
        let (bw, bh) = (pw + 2 * margin, ph + 2 * margin);
        let mut a = GrayImage::new(bw, bh, BED);
        let mut b = GrayImage::new(bw, bh, BED);
        for y in 0..ph {
            let split = boundary(y);
            for x in 0..pw {
                let v = page.get(x, y);
                if (x as f64) < split {
                    a.set(x + margin, y + margin, v);
                } else {
                    b.set(x + margin, y + margin, v);
                }
            }
        }
        if flip_b {
            let mut flipped = GrayImage::new(bw, bh, BED);
            for y in 0..bh {
                for x in 0..bw {
                    flipped.set(bw - 1 - x, bh - 1 - y, b.get(x, y));
                }
            }
            b = flipped;
        }
        (a, b, page)
    }

    fn fast_config() -> Config {
        let mut cfg = Config::default();
        cfg.diffusion.iterations = 4;
        cfg.repair = false;
        cfg
    }

    #[test]
    fn torn_pair_reconstructs_and_reports() {
        let (a, b, _page) = torn_pair(false);
        let result = mend_images(&a, &b, &fast_config()).unwrap();
        assert!(result.accepted(), "report: {:?}", result.report);
        assert!(result.image.is_some());
        assert_eq!(result.report.rotation, Some(Rotation::Deg0));
        let (ox, oy) = result.report.canonical_offset.unwrap();
        assert!(
            ox.abs() <= 1.5 && oy.abs() <= 1.5,
            "fragments share a frame, offset should be near zero: ({ox}, {oy})"
        );
        assert!(!result.report.candidates.is_empty());
    }

    #[test]
    fn flipped_fragment_is_recovered_with_half_turn() {
        let (a, b, _page) = torn_pair(true);
        let result = mend_images(&a, &b, &fast_config()).unwrap();
        assert!(result.accepted(), "report: {:?}", result.report);
        assert_eq!(result.report.rotation, Some(Rotation::Deg180));
    }

    #[test]
    fn same_scan_twice_is_rejected_as_self_match() {
        let (a, _b, _page) = torn_pair(false);
        let result = mend_images(&a, &a, &fast_config()).unwrap();
        assert!(!result.accepted());
        assert!(result.report.self_match_rejected);
        assert!(result.image.is_none());
    }

    #[test]
    fn flat_input_is_a_pipeline_error() {
        let flat = GrayImage::new(40, 40, 200);
        let (a, _b, _page) = torn_pair(false);
        assert!(matches!(
            mend_images(&flat, &a, &fast_config()),
            Err(PipelineError::NoFragment { which: 'a', .. })
        ));
    }

    #[test]
    fn mend_is_deterministic() {
        let (a, b, _page) = torn_pair(false);
        let cfg = fast_config();
        let r1 = mend_images(&a, &b, &cfg).unwrap();
        let r2 = mend_images(&a, &b, &cfg).unwrap();
        assert_eq!(r1.image.as_ref().unwrap().data(), r2.image.as_ref().unwrap().data());
        assert_eq!(
            serde_json::to_string(&r1.report).unwrap(),
            serde_json::to_string(&r2.report).unwrap()
        );
    }

    #[test]
    fn probe_normal_sweep() {
        use crate::matching::{profile_stats_at, resample_chain};
        let (a, b, _page) = torn_pair(false);
        let cfg = fast_config();
        let pa = prepare_fragment(&a, 0, &cfg).unwrap();
        let pb = prepare_fragment(&b, 1, &cfg).unwrap();
        for (tag, p) in [("A", &pa), ("B", &pb)] {
            for (i, s) in p.sides.iter().enumerate() {
                let c = &s.chain;
                eprintln!(
                    "{tag} side {i}: {:?} len {:.1} from ({:.0},{:.0}) to ({:.0},{:.0})",
                    s.classification,
                    c.arc_length(),
                    c.points()[0].x,
                    c.points()[0].y,
                    c.points().last().unwrap().x,
                    c.points().last().unwrap().y
                );
            }
        }
        let result = mend_images(&a, &b, &cfg).unwrap();
        let sel = result.selection.as_ref().unwrap();
        eprintln!(
            "winner: sides ({}, {}) rot {:?} t ({:.2}, {:.2}) var {:.4}",
            sel.best.side_a,
            sel.best.side_b,
            sel.best.placement.rotation,
            sel.best.placement.translation.x,
            sel.best.placement.translation.y,
            sel.best.variance
        );
        for c in &sel.candidates {
            eprintln!(
                "  cand ({}, {}) {:?} t ({:.2}, {:.2}) var {:.4} acc {}",
                c.side_a,
                c.side_b,
                c.placement.rotation,
                c.placement.translation.x,
                c.placement.translation.y,
                c.variance,
                c.accepted
            );
        }
        let sa = &pa.sides[sel.best.side_a];
        let sb = &pb.sides[sel.best.side_b];
        let ra = resample_chain(&sa.chain, cfg.matching.resample_n).unwrap();
        let rb = resample_chain(&sb.chain.reversed(), cfg.matching.resample_n).unwrap();
        let normals = {
            let n = ra.len();
            (0..n)
                .map(|i| {
                    let d = ra[(i + 1).min(n - 1)] - ra[i.saturating_sub(1)];
                    let len = d.norm();
                    crate::geom::Point::new(d.y / len, -d.x / len)
                })
                .collect::<Vec<_>>()
        };
        for k in -16..=40 {
            let s = k as f64 * 0.25;
            let (mean, var) =
                profile_stats_at(&ra, &normals, &rb, crate::geom::Point::new(s, 0.0));
            eprintln!("sweep x={s:6.2}  mean {mean:7.3}  var {var:8.4}");
        }
    }
}
