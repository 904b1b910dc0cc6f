//! One serializable bundle of every stage's parameters.
//!
//! The CLI deserializes this from TOML; missing sections and fields fall
//! back to the per-module defaults. [`Config::validate`] checks every value
//! against its stage's preconditions so malformed files are reported as
//! errors instead of tripping assertions deep in the pipeline.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::assemble::BlendParams;
use crate::canny::{CannyParams, ThresholdSpec};
use crate::contour::{RimParams, SimplifyParams};
use crate::diffusion::DiffusionParams;
use crate::matching::MatchParams;
use crate::orient::OrientParams;
use crate::Scalar;

#[derive(Debug, Error)]
#[error("invalid config: {field}: {reason}")]
pub struct ConfigError {
    pub field: &'static str,
    pub reason: String,
}

fn invalid(field: &'static str, reason: impl Into<String>) -> ConfigError {
    ConfigError { field, reason: reason.into() }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    pub diffusion: DiffusionParams<Scalar>,
    pub orient: OrientParams<Scalar>,
    pub simplify: SimplifyParams<Scalar>,
    pub rim: RimParams,
    pub canny: CannyParams<Scalar>,
    pub matching: MatchParams<Scalar>,
    pub blend: BlendParams<Scalar>,
    /// Recover gap-damaged characters after blending.
    pub repair: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            diffusion: DiffusionParams::default(),
            orient: OrientParams::default(),
            simplify: SimplifyParams::default(),
            rim: RimParams::default(),
            canny: CannyParams::default(),
            matching: MatchParams::default(),
            blend: BlendParams::default(),
            repair: true,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let d = &self.diffusion;
        if !(d.lambda > 0.0 && d.lambda <= 0.25) {
            return Err(invalid("diffusion.lambda", "must be in (0, 0.25]"));
        }
        if !(d.kappa > 0.0) {
            return Err(invalid("diffusion.kappa", "must be positive"));
        }
        let o = &self.orient;
        if !(0.0..=1.0).contains(&o.min_ink_fraction) {
            return Err(invalid("orient.min_ink_fraction", "must be in [0, 1]"));
        }
        if !(o.snap_degrees >= 0.0) {
            return Err(invalid("orient.snap_degrees", "must be non-negative"));
        }
        if !(self.simplify.tolerance > 0.0) {
            return Err(invalid("simplify.tolerance", "must be positive"));
        }
        if self.rim.band_px == 0 {
            return Err(invalid("rim.band_px", "must be at least 1"));
        }
        let c = &self.canny;
        if !(c.sigma > 0.0) {
            return Err(invalid("canny.sigma", "must be positive"));
        }
        match c.thresholds {
            ThresholdSpec::Adaptive { high_quantile, low_ratio } => {
                if !(high_quantile > 0.0 && high_quantile < 1.0) {
                    return Err(invalid("canny.thresholds", "high_quantile must be in (0, 1)"));
                }
                if !(low_ratio > 0.0 && low_ratio <= 1.0) {
                    return Err(invalid("canny.thresholds", "low_ratio must be in (0, 1]"));
                }
            }
            ThresholdSpec::Absolute { low, high } => {
                if !(low >= 0.0 && low <= high) {
                    return Err(invalid("canny.thresholds", "need 0 <= low <= high"));
                }
            }
        }
        let m = &self.matching;
        if m.resample_n < 2 {
            return Err(invalid("matching.resample_n", "must be at least 2"));
        }
        if !(m.tau > 0.0) {
            return Err(invalid("matching.tau", "must be positive"));
        }
        if !(0.0..=1.0).contains(&m.edge_support_fraction) {
            return Err(invalid("matching.edge_support_fraction", "must be in [0, 1]"));
        }
        if !(m.edge_support_radius >= 0.0) {
            return Err(invalid("matching.edge_support_radius", "must be non-negative"));
        }
        if !(m.max_mean_gap > 0.0) {
            return Err(invalid("matching.max_mean_gap", "must be positive"));
        }
        if !(self.blend.feather_width >= 0.0) {
            return Err(invalid("blend.feather_width", "must be non-negative"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        Config::default().validate().unwrap();
    }

    #[test]
    fn out_of_range_values_are_reported_by_field() {
        let mut cfg = Config::default();
        cfg.diffusion.lambda = 0.3;
        let err = cfg.validate().unwrap_err();
        assert_eq!(err.field, "diffusion.lambda");

        let mut cfg = Config::default();
        cfg.matching.resample_n = 1;
        assert_eq!(cfg.validate().unwrap_err().field, "matching.resample_n");

        let mut cfg = Config::default();
        cfg.blend.feather_width = -1.0;
        assert_eq!(cfg.validate().unwrap_err().field, "blend.feather_width");
    }

    #[test]
    fn json_round_trip_preserves_every_field() {
        let cfg = Config::default();
        let text = serde_json::to_string(&cfg).unwrap();
        let back: Config = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string(&back).unwrap();
        assert_eq!(text, again);
    }

    #[test]
    fn missing_sections_take_defaults() {
        let cfg: Config = serde_json::from_str(r#"{"matching":{"resample_n":32,"tau":1.5,"edge_support_fraction":0.7,"edge_support_radius":2.0,"max_mean_gap":24.0}}"#).unwrap();
        assert_eq!(cfg.matching.resample_n, 32);
        assert_eq!(cfg.diffusion.iterations, DiffusionParams::<Scalar>::default().iterations);
        assert!(cfg.repair);
    }
}
