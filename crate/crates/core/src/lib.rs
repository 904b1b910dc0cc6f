//! Reconstruction of a torn document from two scanned fragments.
//!
//! The pipeline denoises each scan with edge-preserving diffusion, traces and
//! simplifies the fragment boundaries, matches tear sides by the variance of
//! point-to-point distance profiles, stitches the best placement onto a shared
//! canvas, and optionally repairs characters lost in the tear gap using a
//! glyph atlas and a wildcard dictionary.
//!
//! Numeric stages are generic over the scalar type via [`scalar::Real`]
//! (implemented for `f32` and `f64`); the crate-root aliases fix `f64`, which
//! every shipped entry point uses.

pub mod assemble;
pub mod canny;
pub mod config;
pub mod contour;
pub mod diffusion;
pub mod geom;
pub mod matching;
pub mod orient;
pub mod pipeline;
pub mod raster;
pub mod repair;
pub mod scalar;

pub use orient::Fragment;

/// Default scalar type for the shipped pipeline.
pub type Scalar = f64;

pub type PointF = geom::Point<Scalar>;
pub type PolylineF = geom::Polyline<Scalar>;
pub type RealImageF = raster::RealImage<Scalar>;
