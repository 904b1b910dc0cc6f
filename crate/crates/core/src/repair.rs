//! Lost-character recovery around the seam.
//!
//! Ink near the gap is grouped into monospaced words; cells whose grid box
//! the gap has eaten become wildcards. Surviving glyphs are recognized by
//! normalized cross-correlation against a bundled atlas, the word is
//! completed against a dictionary, and unique completions are drawn back
//! into the damaged cells.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::PixelRect;
use crate::raster::{decode_image, BinaryMask, FileFormat, GrayImage};

#[derive(Debug, Error)]
pub enum RepairError {
    #[error("malformed glyph atlas: {0}")]
    AtlasFormat(String),
    #[error("no confident recognition (best score {score:.3})")]
    LowConfidence { score: f64 },
}

/// Recognition is trusted at or above this correlation.
pub const RECOGNITION_THRESHOLD: f64 = 0.5;

/// A cell counts as damaged when the gap covers more than this fraction.
const DAMAGE_FRACTION: f64 = 0.30;

/// One atlas character: its cell bitmap, tight ink bounds within the cell,
/// advance width, and the bbox-normalized template recognition compares to.
#[derive(Clone, Debug)]
pub struct Glyph {
    pub ink: BinaryMask,
    pub bbox: PixelRect,
    pub advance: u32,
    normalized: Vec<f64>,
}

/// Fixed-cell monospaced glyph set loaded from a PGM strip plus a text
/// manifest of `char offset advance` lines.
#[derive(Clone, Debug)]
pub struct GlyphAtlas {
    cell_w: u32,
    cell_h: u32,
    charset: Vec<char>,
    glyphs: Vec<Glyph>,
}

impl GlyphAtlas {
    pub fn parse(strip_pgm: &[u8], manifest: &str) -> Result<Self, RepairError> {
        let strip = decode_image(strip_pgm, FileFormat::Pgm)
            .map_err(|e| RepairError::AtlasFormat(e.to_string()))?;
        let mut lines = manifest.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty manifest"))?;
        let mut head = header.split_whitespace();
        if head.next() != Some("cell") {
            return Err(bad("manifest must start with a cell line"));
        }
        let cell_w: u32 = parse_field(head.next(), "cell width")?;
        let cell_h: u32 = parse_field(head.next(), "cell height")?;
        if cell_w == 0 || cell_h == 0 || strip.height() != cell_h {
            return Err(bad("cell size does not match the strip"));
        }

        let mut charset = Vec::new();
        let mut glyphs = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            let ch_tok = parts.next().ok_or_else(|| bad("missing glyph char"))?;
            let mut chars = ch_tok.chars();
            let ch = chars.next().ok_or_else(|| bad("empty glyph char"))?;
            if chars.next().is_some() {
                return Err(bad("glyph char must be a single character"));
            }
            let offset: u32 = parse_field(parts.next(), "glyph offset")?;
            let advance: u32 = parse_field(parts.next(), "glyph advance")?;
            if offset + cell_w > strip.width() || advance == 0 {
                return Err(bad("glyph cell outside the strip"));
            }
            if charset.contains(&ch) {
                return Err(bad("duplicate glyph char"));
            }
            let mut ink = BinaryMask::new(cell_w, cell_h, false);
            for y in 0..cell_h {
                for x in 0..cell_w {
                    ink.set(x, y, strip.get(offset + x, y) < 128);
                }
            }
            let bbox = ink
                .bounds()
                .ok_or_else(|| bad("blank glyph"))?;
            let normalized = normalize(&crop_resized(
                &|x, y| if ink.get(x, y) { 1.0 } else { 0.0 },
                bbox,
                cell_w,
                cell_h,
            ))
            .ok_or_else(|| bad("degenerate glyph"))?;
            charset.push(ch);
            glyphs.push(Glyph { ink, bbox, advance, normalized });
        }
        if charset.is_empty() {
            return Err(bad("atlas has no glyphs"));
        }
        Ok(GlyphAtlas { cell_w, cell_h, charset, glyphs })
    }

    pub fn cell_size(&self) -> (u32, u32) {
        (self.cell_w, self.cell_h)
    }

    pub fn charset(&self) -> &[char] {
        &self.charset
    }

    pub fn glyph(&self, ch: char) -> Option<&Glyph> {
        self.charset.iter().position(|&c| c == ch).map(|i| &self.glyphs[i])
    }

    /// Advance width shared by the monospaced charset.
    pub fn advance(&self) -> u32 {
        self.glyphs.first().map_or(0, |g| g.advance)
    }
}

fn bad(msg: &str) -> RepairError {
    RepairError::AtlasFormat(msg.to_string())
}

fn parse_field<T: std::str::FromStr>(tok: Option<&str>, what: &str) -> Result<T, RepairError> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| RepairError::AtlasFormat(format!("bad {what}")))
}

/// The atlas checked into the crate.
pub fn bundled_atlas() -> &'static GlyphAtlas {
    static ATLAS: OnceLock<GlyphAtlas> = OnceLock::new();
    ATLAS.get_or_init(|| {
        GlyphAtlas::parse(
            include_bytes!("../assets/atlas.pgm"),
            include_str!("../assets/atlas.txt"),
        )
        .expect("bundled atlas is valid")
    })
}

/// Newline-delimited lowercase word list.
#[derive(Clone, Debug)]
pub struct Dictionary {
    words: Vec<String>,
}

impl Dictionary {
    pub fn parse(text: &str) -> Dictionary {
        Dictionary {
            words: text
                .lines()
                .map(str::trim)
                .filter(|w| !w.is_empty())
                .map(str::to_string)
                .collect(),
        }
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }
}

/// The word list checked into the crate.
pub fn bundled_dictionary() -> &'static Dictionary {
    static DICT: OnceLock<Dictionary> = OnceLock::new();
    DICT.get_or_init(|| Dictionary::parse(include_str!("../assets/words.txt")))
}

/// Samples a source region into a cell-sized ink-intensity vector: the
/// tight crop is scaled aspect-preserving (nearest neighbor) into the top
/// left of the cell and the remainder stays background, so solid-bar
/// glyphs of different heights remain distinguishable.
fn crop_resized(
    src: &dyn Fn(u32, u32) -> f64,
    bbox: PixelRect,
    cell_w: u32,
    cell_h: u32,
) -> Vec<f64> {
    let (bw, bh) = (bbox.width() as u32, bbox.height() as u32);
    let scale = (cell_w as f64 / bw as f64).min(cell_h as f64 / bh as f64);
    let tw = ((bw as f64 * scale).round() as u32).clamp(1, cell_w);
    let th = ((bh as f64 * scale).round() as u32).clamp(1, cell_h);
    let mut out = vec![0.0; (cell_w * cell_h) as usize];
    for y in 0..th {
        let sy = bbox.y0 as u32 + (y * bh) / th;
        for x in 0..tw {
            let sx = bbox.x0 as u32 + (x * bw) / tw;
            out[(y * cell_w + x) as usize] = src(sx, sy);
        }
    }
    out
}

/// Zero-mean, unit-norm; `None` for constant input.
fn normalize(v: &[f64]) -> Option<Vec<f64>> {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    let centered: Vec<f64> = v.iter().map(|&x| x - mean).collect();
    let norm = centered.iter().map(|&x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return None;
    }
    Some(centered.iter().map(|&x| x / norm).collect())
}

/// Recognizes one extracted cell by normalized cross-correlation of its
/// bbox-normalized ink against every atlas glyph. Scores below
/// `RECOGNITION_THRESHOLD` (and blank cells) are low-confidence.
pub fn recognize_glyph(cell: &GrayImage, atlas: &GlyphAtlas) -> Result<(char, f64), RepairError> {
    let mut ink = BinaryMask::new(cell.width(), cell.height(), false);
    for y in 0..cell.height() {
        for x in 0..cell.width() {
            ink.set(x, y, cell.get(x, y) < 128);
        }
    }
    let Some(bbox) = ink.bounds() else {
        return Err(RepairError::LowConfidence { score: 0.0 });
    };
    let sampled = crop_resized(
        &|x, y| (255.0 - cell.get(x, y) as f64) / 255.0,
        bbox,
        atlas.cell_w,
        atlas.cell_h,
    );
    let Some(query) = normalize(&sampled) else {
        return Err(RepairError::LowConfidence { score: 0.0 });
    };

    let mut best = ('?', f64::NEG_INFINITY);
    for (i, glyph) in atlas.glyphs.iter().enumerate() {
        let score: f64 = query.iter().zip(&glyph.normalized).map(|(a, b)| a * b).sum();
        if score > best.1 {
            best = (atlas.charset[i], score);
        }
    }
    if best.1 < RECOGNITION_THRESHOLD {
        return Err(RepairError::LowConfidence { score: best.1 });
    }
    Ok(best)
}

/// A word found near the gap: per-character grid cells on the canvas, the
/// recognized text with `?` wildcards, and how many cells are damaged.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WordCandidate {
    pub cells: Vec<PixelRect>,
    pub text: String,
    pub damaged_count: usize,
}

#[derive(Debug, Error, Clone, Serialize, Deserialize)]
pub enum CompletionError {
    #[error("no dictionary word matches")]
    NoCompletion,
    #[error("{} dictionary words match", .0.len())]
    Ambiguous(Vec<String>),
}

/// Case-insensitive wildcard completion against the dictionary: exactly one
/// hit fills the wildcards (matching the word's case style), zero or many
/// hits are reported as is.
pub fn complete_word(
    candidate: &WordCandidate,
    dictionary: &Dictionary,
) -> Result<String, CompletionError> {
    if candidate.damaged_count == 0 {
        return Ok(candidate.text.clone());
    }
    let pattern: Vec<char> = candidate.text.chars().collect();
    let hits: Vec<&String> = dictionary
        .words
        .iter()
        .filter(|w| {
            let wc: Vec<char> = w.chars().collect();
            wc.len() == pattern.len()
                && wc
                    .iter()
                    .zip(&pattern)
                    .all(|(&a, &b)| b == '?' || a.eq_ignore_ascii_case(&b))
        })
        .collect();
    match hits.len() {
        0 => Err(CompletionError::NoCompletion),
        1 => {
            let word: Vec<char> = hits[0].chars().collect();
            let uppercase = pattern
                .iter()
                .filter(|c| c.is_ascii_alphabetic())
                .all(|c| c.is_ascii_uppercase())
                && pattern.iter().any(|c| c.is_ascii_alphabetic());
            let completed = pattern
                .iter()
                .zip(&word)
                .map(|(&p, &w)| {
                    if p != '?' {
                        p
                    } else if uppercase {
                        w.to_ascii_uppercase()
                    } else {
                        w
                    }
                })
                .collect();
            Ok(completed)
        }
        _ => Err(CompletionError::Ambiguous(
            hits.into_iter().map(|w| w.to_string()).collect(),
        )),
    }
}

/// Draws the completed characters into the wildcard cells (black on white,
/// glyphs scaled to each cell box); all other pixels are left untouched.
pub fn render_repair(
    image: &GrayImage,
    candidate: &WordCandidate,
    completed: &str,
    atlas: &GlyphAtlas,
) -> GrayImage {
    let mut out = image.clone();
    let marks: Vec<char> = candidate.text.chars().collect();
    for ((rect, &mark), ch) in candidate.cells.iter().zip(&marks).zip(completed.chars()) {
        if mark != '?' {
            continue;
        }
        let Some(glyph) = atlas.glyph(ch) else { continue };
        let (cw, ch_px) = (rect.width().max(1) as u32, rect.height().max(1) as u32);
        for dy in 0..ch_px {
            for dx in 0..cw {
                let (x, y) = (rect.x0 + dx as i64, rect.y0 + dy as i64);
                if x < 0 || y < 0 || x >= out.width() as i64 || y >= out.height() as i64 {
                    continue;
                }
                let sx = (dx * atlas.cell_w) / cw;
                let sy = (dy * atlas.cell_h) / ch_px;
                let v = if glyph.ink.get(sx, sy) { 0 } else { 255 };
                out.set(x as u32, y as u32, v);
            }
        }
    }
    out
}

/// 8-connected dark-pixel component with its bounding box.
struct InkComponent {
    bbox: PixelRect,
}

fn ink_components(ink: &BinaryMask) -> Vec<InkComponent> {
    let (w, h) = (ink.width(), ink.height());
    let mut seen = BinaryMask::new(w, h, false);
    let mut out = Vec::new();
    for sy in 0..h {
        for sx in 0..w {
            if !ink.get(sx, sy) || seen.get(sx, sy) {
                continue;
            }
            let mut bbox =
                PixelRect { x0: sx as i64, y0: sy as i64, x1: sx as i64, y1: sy as i64 };
            let mut area = 0usize;
            let mut queue = VecDeque::from([(sx, sy)]);
            seen.set(sx, sy, true);
            while let Some((x, y)) = queue.pop_front() {
                area += 1;
                bbox = bbox.union(&PixelRect {
                    x0: x as i64,
                    y0: y as i64,
                    x1: x as i64,
                    y1: y as i64,
                });
                for dy in -1i64..=1 {
                    for dx in -1i64..=1 {
                        let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                        if nx >= 0
                            && ny >= 0
                            && (nx as u32) < w
                            && (ny as u32) < h
                            && ink.get_or_bg(nx, ny)
                            && !seen.get(nx as u32, ny as u32)
                        {
                            seen.set(nx as u32, ny as u32, true);
                            queue.push_back((nx as u32, ny as u32));
                        }
                    }
                }
            }
            // Single-pixel specks are noise; two pixels can be a glyph
            // dot, so keep those.
            if area >= 2 {
                out.push(InkComponent { bbox });
            }
        }
    }
    out
}

/// Gap pixels that represent damage: the canvas sizing margin hugs the
/// border, so anything within 3 px of it is excluded.
fn interior_gap(gap: &BinaryMask) -> BinaryMask {
    let (w, h) = (gap.width(), gap.height());
    let mut out = BinaryMask::new(w, h, false);
    for y in 3..h.saturating_sub(3) {
        for x in 3..w.saturating_sub(3) {
            if gap.get(x, y) {
                out.set(x, y, true);
            }
        }
    }
    out
}

fn gap_in_rect(gap: &BinaryMask, rect: PixelRect) -> usize {
    let mut n = 0;
    for y in rect.y0.max(0)..=rect.y1.min(gap.height() as i64 - 1) {
        for x in rect.x0.max(0)..=rect.x1.min(gap.width() as i64 - 1) {
            if gap.get(x as u32, y as u32) {
                n += 1;
            }
        }
    }
    n
}

fn median(mut v: Vec<i64>) -> Option<i64> {
    if v.is_empty() {
        return None;
    }
    v.sort_unstable();
    Some(v[v.len() / 2])
}

/// Finds words whose cells the gap has damaged.
///
/// Ink components are grouped into lines and then words; grouping bridges
/// holes that coincide with the gap, so fully erased characters still get
/// a cell. Each cell is marked `?` when the (interior) gap covers over 30%
/// of its box, or when recognition of its ink is not confident. Only words
/// with at least one gap-eaten cell are reported.
pub fn find_damaged_words(
    image: &GrayImage,
    gap: &BinaryMask,
    atlas: &GlyphAtlas,
) -> Vec<WordCandidate> {
    let interior = interior_gap(gap);
    if !interior.any() {
        return Vec::new();
    }
    let hist = crate::raster::histogram(image);
    let threshold = crate::raster::otsu_threshold(&hist);
    let (w, h) = (image.width(), image.height());
    let mut ink = BinaryMask::new(w, h, false);
    for y in 0..h {
        for x in 0..w {
            if image.get(x, y) < threshold && !gap.get(x, y) {
                ink.set(x, y, true);
            }
        }
    }

    let mut comps = ink_components(&ink);
    comps.sort_by_key(|c| (c.bbox.y0, c.bbox.x0));

    // Lines: cluster by vertical center.
    let mut lines: Vec<Vec<InkComponent>> = Vec::new();
    for comp in comps {
        let cy = (comp.bbox.y0 + comp.bbox.y1) / 2;
        match lines.last_mut() {
            Some(line)
                if (cy - (line[0].bbox.y0 + line[0].bbox.y1) / 2).abs()
                    < atlas.cell_h as i64 / 2 =>
            {
                line.push(comp)
            }
            _ => lines.push(vec![comp]),
        }
    }

    let advance = atlas.advance() as i64;
    let mut out = Vec::new();
    for mut line in lines {
        line.sort_by_key(|c| c.bbox.x0);
        // Words: split when centers jump more than one advance, unless the
        // jump crosses the gap (an erased cell is not a word break). Tight
        // boxes make edge-to-edge holes unreliable for narrow glyphs, so
        // the split test uses centers in advance units.
        let mut words: Vec<Vec<InkComponent>> = Vec::new();
        for comp in line {
            let bridge = match words.last().and_then(|w| w.last()) {
                None => false,
                Some(prev) => {
                    let step = (comp.bbox.x0 + comp.bbox.x1 - prev.bbox.x0 - prev.bbox.x1)
                        as f64
                        / (2 * advance) as f64;
                    let dk = step.round() as i64;
                    dk <= 1 || {
                        let between = PixelRect {
                            x0: prev.bbox.x1 + 1,
                            y0: prev.bbox.y0.min(comp.bbox.y0),
                            x1: comp.bbox.x0 - 1,
                            y1: prev.bbox.y1.max(comp.bbox.y1),
                        };
                        dk <= 3 && gap_in_rect(&interior, between) > 0
                    }
                }
            };
            if bridge {
                words.last_mut().expect("non-empty").push(comp);
            } else {
                words.push(vec![comp]);
            }
        }

        for word in words {
            if let Some(candidate) = word_candidate(&word, image, &interior, atlas) {
                out.push(candidate);
            }
        }
    }
    out
}

/// Reconstructs the monospaced grid for one word's components and marks the
/// damaged cells.
fn word_candidate(
    word: &[InkComponent],
    image: &GrayImage,
    interior: &BinaryMask,
    atlas: &GlyphAtlas,
) -> Option<WordCandidate> {
    let advance = atlas.advance() as i64;
    let cell_h = atlas.cell_h as i64;
    let cx0 = (word[0].bbox.x0 + word[0].bbox.x1) / 2;

    // Multi-part glyphs (dotted letters) arrive as separate components in
    // the same cell: merge boxes by cell index before recognition.
    let mut merged: Vec<(i64, PixelRect)> = Vec::new();
    for comp in word {
        let cx = (comp.bbox.x0 + comp.bbox.x1) / 2;
        let k = ((cx - cx0) as f64 / advance as f64).round() as i64;
        match merged.iter_mut().find(|(mk, _)| *mk == k) {
            Some((_, bbox)) => *bbox = bbox.union(&comp.bbox),
            None => merged.push((k, comp.bbox)),
        }
    }

    // Recognize each cell and vote for the grid origin with the glyph's
    // known ink offsets inside its cell.
    let mut entries = Vec::new();
    let mut top_votes = Vec::new();
    let mut left_votes = Vec::new();
    for &(k, bbox) in &merged {
        let mut cell = GrayImage::new(bbox.width() as u32, bbox.height() as u32, 255);
        for y in 0..cell.height() {
            for x in 0..cell.width() {
                cell.set(x, y, image.get((bbox.x0 + x as i64) as u32, (bbox.y0 + y as i64) as u32));
            }
        }
        let ch = match recognize_glyph(&cell, atlas) {
            Ok((ch, _)) => {
                let glyph = atlas.glyph(ch).expect("recognized char is in charset");
                top_votes.push(bbox.y0 - glyph.bbox.y0);
                left_votes.push(bbox.x0 - glyph.bbox.x0 - k * advance);
                ch
            }
            Err(_) => '?',
        };
        entries.push((k, ch));
    }

    let line_top = median(top_votes)
        .unwrap_or_else(|| word.iter().map(|c| c.bbox.y0).min().expect("non-empty"));
    let origin_x = median(left_votes).unwrap_or_else(|| {
        word[0].bbox.x0 - (advance - word[0].bbox.width()).max(0) / 2
    });

    let k_min = entries.iter().map(|e| e.0).min().expect("non-empty");
    let k_max = entries.iter().map(|e| e.0).max().expect("non-empty");
    let mut cells = Vec::new();
    let mut text = String::new();
    let mut damaged = 0usize;
    let mut eaten_cells = 0usize;
    for k in k_min..=k_max {
        let rect = PixelRect {
            x0: origin_x + k * advance,
            y0: line_top,
            x1: origin_x + k * advance + advance - 1,
            y1: line_top + cell_h - 1,
        };
        let occupant = entries.iter().find(|e| e.0 == k);
        let area = (advance * cell_h) as f64;
        let eaten = gap_in_rect(interior, rect) as f64 / area > DAMAGE_FRACTION;
        if eaten {
            eaten_cells += 1;
        }
        let ch = match occupant {
            Some(&(_, ch)) if !eaten => ch,
            Some(_) => '?',
            // A grid hole holds an erased character only if the gap ran
            // through it; otherwise the grouping was wrong and inventing
            // cells would be worse than skipping the word.
            None if eaten => '?',
            None => return None,
        };
        if ch == '?' {
            damaged += 1;
        }
        text.push(ch);
        cells.push(rect);
    }
    // Words the gap never touched are not repair candidates, even when a
    // cell failed recognition.
    if eaten_cells == 0 {
        return None;
    }
    Some(WordCandidate { cells, text, damaged_count: damaged })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blit_word(img: &mut GrayImage, atlas: &GlyphAtlas, text: &str, x0: u32, y0: u32) {
        let advance = atlas.advance();
        for (k, ch) in text.chars().enumerate() {
            let glyph = atlas.glyph(ch).expect("char in atlas");
            for y in 0..atlas.cell_h {
                for x in 0..atlas.cell_w {
                    if glyph.ink.get(x, y) {
                        img.set(x0 + k as u32 * advance + x, y0 + y, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn bundled_atlas_is_well_formed() {
        let atlas = bundled_atlas();
        assert_eq!(atlas.cell_size(), (16, 24));
        assert_eq!(atlas.charset().len(), 62);
        assert_eq!(atlas.advance(), 16);
        for &ch in atlas.charset() {
            let glyph = atlas.glyph(ch).unwrap();
            assert!(glyph.ink.any(), "glyph {ch} is blank");
            assert_eq!((glyph.ink.width(), glyph.ink.height()), (16, 24));
        }
    }

    #[test]
    fn malformed_manifest_is_rejected() {
        let pgm = include_bytes!("../assets/atlas.pgm");
        assert!(GlyphAtlas::parse(pgm, "").is_err());
        assert!(GlyphAtlas::parse(pgm, "cell 16 24\nAB 0 16").is_err());
        assert!(GlyphAtlas::parse(pgm, "cell 16 24\nA 0 16\nA 16 16").is_err());
        assert!(GlyphAtlas::parse(pgm, "cell 16 24\nA 99999 16").is_err());
    }

    #[test]
    fn recognizes_every_clean_glyph() {
        let atlas = bundled_atlas();
        for &ch in atlas.charset() {
            let mut img = GrayImage::new(40, 40, 255);
            blit_word(&mut img, atlas, &ch.to_string(), 10, 8);
            let (got, score) = recognize_glyph(&img, atlas).unwrap();
            assert_eq!(got, ch, "misread {ch} as {got} (score {score:.3})");
            assert!(score >= 0.99, "{ch}: score {score}");
        }
    }

    #[test]
    fn recognition_survives_pixel_noise() {
        let atlas = bundled_atlas();
        let mut img = GrayImage::new(40, 40, 255);
        blit_word(&mut img, atlas, "R", 10, 8);
        // Deterministic pseudo-noise, sigma roughly 8.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut noisy = img.clone();
        for y in 0..noisy.height() {
            for x in 0..noisy.width() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let n = ((state >> 33) % 33) as i32 - 16;
                noisy.set(x, y, (noisy.get(x, y) as i32 + n).clamp(0, 255) as u8);
            }
        }
        let (got, _) = recognize_glyph(&noisy, atlas).unwrap();
        assert_eq!(got, 'R');
    }

    #[test]
    fn blank_cell_is_low_confidence() {
        let img = GrayImage::new(16, 24, 255);
        assert!(matches!(
            recognize_glyph(&img, bundled_atlas()),
            Err(RepairError::LowConfidence { .. })
        ));
    }

    fn word_with(text: &str, damaged: &[usize]) -> WordCandidate {
        let cells = (0..text.len())
            .map(|k| PixelRect { x0: k as i64 * 16, y0: 0, x1: k as i64 * 16 + 15, y1: 23 })
            .collect();
        let marked: String = text
            .chars()
            .enumerate()
            .map(|(i, c)| if damaged.contains(&i) { '?' } else { c })
            .collect();
        WordCandidate { cells, text: marked, damaged_count: damaged.len() }
    }

    #[test]
    fn completion_examples() {
        let dict = bundled_dictionary();
        assert_eq!(complete_word(&word_with("recognize", &[7]), dict).unwrap(), "recognize");
        assert_eq!(complete_word(&word_with("hello", &[]), dict).unwrap(), "hello");

        let small = Dictionary::parse("cat\nhat\n");
        match complete_word(&word_with("cat", &[0]), &small) {
            Err(CompletionError::Ambiguous(hits)) => assert_eq!(hits, vec!["cat", "hat"]),
            other => panic!("expected ambiguity, got {other:?}"),
        }
        assert!(matches!(
            complete_word(&word_with("qzq", &[1]), &small),
            Err(CompletionError::NoCompletion)
        ));
    }

    #[test]
    fn completion_respects_case_style() {
        let dict = Dictionary::parse("table\n");
        assert_eq!(complete_word(&word_with("TABLE", &[2]), &dict).unwrap(), "TABLE");
    }

    #[test]
    fn erased_middle_glyph_is_found_and_restored() {
        let atlas = bundled_atlas();
        let dict = bundled_dictionary();
        let mut img = GrayImage::new(220, 60, 255);
        blit_word(&mut img, atlas, "recognize", 20, 18);
        let original = img.clone();

        // The tear erases the 'z' cell: white it out and mark it as gap.
        let cell = PixelRect { x0: 20 + 7 * 16, y0: 18, x1: 20 + 8 * 16 - 1, y1: 41 };
        let mut gap = BinaryMask::new(220, 60, false);
        for y in cell.y0..=cell.y1 {
            for x in cell.x0..=cell.x1 {
                img.set(x as u32, y as u32, 255);
                gap.set(x as u32, y as u32, true);
            }
        }

        let words = find_damaged_words(&img, &gap, atlas);
        assert_eq!(words.len(), 1, "{words:?}");
        let word = &words[0];
        assert_eq!(word.text, "recogni?e");
        assert_eq!(word.damaged_count, 1);
        assert_eq!(word.cells.len(), 9);
        assert_eq!(word.cells[7], cell);

        let completed = complete_word(word, dict).unwrap();
        assert_eq!(completed, "recognize");
        let restored = render_repair(&img, word, &completed, atlas);
        assert_eq!(restored.data(), original.data(), "repair must reproduce the clean render");
    }

    #[test]
    fn undamaged_or_distant_ink_yields_no_candidates() {
        let atlas = bundled_atlas();
        let mut img = GrayImage::new(200, 120, 255);
        blit_word(&mut img, atlas, "intact", 20, 10);

        // No gap at all.
        let empty = BinaryMask::new(200, 120, false);
        assert!(find_damaged_words(&img, &empty, atlas).is_empty());

        // Gap far below the text: nothing within reach is damaged.
        let mut far = BinaryMask::new(200, 120, false);
        for x in 20..60 {
            far.set(x, 110, true);
        }
        assert!(find_damaged_words(&img, &far, atlas).is_empty());
    }

    #[test]
    fn repair_is_local_to_wildcard_cells() {
        let atlas = bundled_atlas();
        let mut img = GrayImage::new(120, 40, 255);
        blit_word(&mut img, atlas, "cat", 10, 8);
        let word = WordCandidate {
            cells: vec![
                PixelRect { x0: 10, y0: 8, x1: 25, y1: 31 },
                PixelRect { x0: 26, y0: 8, x1: 41, y1: 31 },
                PixelRect { x0: 42, y0: 8, x1: 57, y1: 31 },
            ],
            text: "c?t".into(),
            damaged_count: 1,
        };
        let out = render_repair(&img, &word, "cat", atlas);
        for y in 0..40u32 {
            for x in 0..120u32 {
                let inside = (26..=41).contains(&x) && (8..=31).contains(&y);
                if !inside {
                    assert_eq!(out.get(x, y), img.get(x, y), "({x},{y}) changed outside cell");
                }
            }
        }
    }
}
