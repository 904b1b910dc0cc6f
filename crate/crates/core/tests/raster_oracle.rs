//! Cross-checks the raster codecs and Otsu against independent references:
//! a naive 256-way threshold scan, the `image` crate's PNM decoder, and the
//! `png` crate's decoder.

use proptest::prelude::*;
use tornmend_core::raster::{
    binarize, decode_image, encode_image, otsu_threshold, BinarizeMethod, FileFormat, GrayImage,
};

/// Reference Otsu: recompute class statistics from scratch for every split.
fn otsu_brute_force(hist: &[u64; 256]) -> u8 {
    let mut best_t = 0u8;
    let mut best_score = f64::NEG_INFINITY;
    for t in 0..=255usize {
        let (mut n0, mut s0, mut n1, mut s1) = (0u64, 0.0f64, 0u64, 0.0f64);
        for v in 0..256usize {
            if v < t {
                n0 += hist[v];
                s0 += v as f64 * hist[v] as f64;
            } else {
                n1 += hist[v];
                s1 += v as f64 * hist[v] as f64;
            }
        }
        let total = (n0 + n1) as f64;
        let score = if n0 == 0 || n1 == 0 {
            0.0
        } else {
            let (w0, w1) = (n0 as f64 / total, n1 as f64 / total);
            let d = s0 / n0 as f64 - s1 / n1 as f64;
            w0 * w1 * d * d
        };
        if score > best_score {
            best_score = score;
            best_t = t as u8;
        }
    }
    best_t
}

proptest! {
    #[test]
    fn otsu_matches_brute_force_scan(pixels in prop::collection::vec(any::<u8>(), 1..400)) {
        let mut hist = [0u64; 256];
        for &v in &pixels {
            hist[v as usize] += 1;
        }
        prop_assert_eq!(otsu_threshold(&hist), otsu_brute_force(&hist));
    }

    #[test]
    fn otsu_threshold_separates_classes(pixels in prop::collection::vec(any::<u8>(), 2..400)) {
        let w = pixels.len() as u32;
        let img = GrayImage::from_raw(w, 1, pixels.clone());
        let bin = binarize(&img, BinarizeMethod::Otsu);
        // Every pixel lands on the side its intensity dictates.
        for (i, &v) in pixels.iter().enumerate() {
            prop_assert_eq!(bin.mask.get(i as u32, 0), v >= bin.threshold);
        }
    }

    #[test]
    fn otsu_is_permutation_invariant(pixels in prop::collection::vec(any::<u8>(), 2..200)) {
        let img = GrayImage::from_raw(pixels.len() as u32, 1, pixels.clone());
        let mut rev = pixels.clone();
        rev.reverse();
        let img_rev = GrayImage::from_raw(rev.len() as u32, 1, rev);
        let a = binarize(&img, BinarizeMethod::Otsu);
        let b = binarize(&img_rev, BinarizeMethod::Otsu);
        prop_assert_eq!(a.threshold, b.threshold);
        prop_assert_eq!(a.degenerate, b.degenerate);
    }

    #[test]
    fn pgm_encode_is_readable_by_image_crate(
        w in 1u32..24, h in 1u32..24, seed in any::<u64>()
    ) {
        let img = noise_image(w, h, seed);
        let bytes = encode_image(&img, FileFormat::Pgm).unwrap();
        let reference = image::load_from_memory_with_format(&bytes, image::ImageFormat::Pnm)
            .expect("image crate accepts our PGM")
            .into_luma8();
        prop_assert_eq!(reference.width(), w);
        prop_assert_eq!(reference.height(), h);
        prop_assert_eq!(reference.as_raw().as_slice(), img.data());
    }

    #[test]
    fn pgm_decode_accepts_image_crate_output(
        w in 1u32..24, h in 1u32..24, seed in any::<u64>()
    ) {
        let img = noise_image(w, h, seed);
        let mut bytes = Vec::new();
        let enc = image::codecs::pnm::PnmEncoder::new(std::io::Cursor::new(&mut bytes))
            .with_subtype(image::codecs::pnm::PnmSubtype::Graymap(
                image::codecs::pnm::SampleEncoding::Binary,
            ));
        image::ImageEncoder::write_image(enc, img.data(), w, h, image::ExtendedColorType::L8)
            .unwrap();
        let back = decode_image(&bytes, FileFormat::Pgm).unwrap();
        prop_assert_eq!(back.data(), img.data());
    }

    #[test]
    fn png_encode_is_readable_by_png_crate(
        w in 1u32..24, h in 1u32..24, seed in any::<u64>()
    ) {
        let img = noise_image(w, h, seed);
        let bytes = encode_image(&img, FileFormat::Png).unwrap();
        let decoder = png::Decoder::new(std::io::Cursor::new(&bytes));
        let mut reader = decoder.read_info().expect("png crate accepts our PNG");
        let mut buf = vec![0u8; reader.output_buffer_size()];
        let info = reader.next_frame(&mut buf).unwrap();
        prop_assert_eq!(info.width, w);
        prop_assert_eq!(info.height, h);
        prop_assert_eq!(info.color_type, png::ColorType::Grayscale);
        prop_assert_eq!(info.bit_depth, png::BitDepth::Eight);
        prop_assert_eq!(&buf[..info.buffer_size()], img.data());
    }
}

/// Deterministic pseudo-random image (xorshift) so failures reproduce.
fn noise_image(w: u32, h: u32, seed: u64) -> GrayImage {
    let mut state = seed | 1;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 24) as u8
    };
    let data = (0..w as usize * h as usize).map(|_| next()).collect();
    GrayImage::from_raw(w, h, data)
}

#[test]
fn sixteen_bit_png_is_rejected() {
    let mut bytes = Vec::new();
    {
        let mut enc = png::Encoder::new(std::io::Cursor::new(&mut bytes), 2, 2);
        enc.set_color(png::ColorType::Grayscale);
        enc.set_depth(png::BitDepth::Sixteen);
        let mut writer = enc.write_header().unwrap();
        writer.write_image_data(&[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    }
    assert!(matches!(
        decode_image(&bytes, FileFormat::Png),
        Err(tornmend_core::raster::RasterError::UnsupportedFormat(_))
    ));
}

#[test]
fn format_detection_matches_encoders() {
    use tornmend_core::raster::detect_format;
    let img = noise_image(5, 3, 42);
    let png_bytes = encode_image(&img, FileFormat::Png).unwrap();
    let pgm_bytes = encode_image(&img, FileFormat::Pgm).unwrap();
    assert_eq!(detect_format(&png_bytes).unwrap(), FileFormat::Png);
    assert_eq!(detect_format(&pgm_bytes).unwrap(), FileFormat::Pgm);
    assert!(detect_format(b"JFIF....").is_err());
}
