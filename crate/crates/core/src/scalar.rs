//! Floating-point scalar abstraction for the numeric stages.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};

/// Real scalar the image-processing kernels are generic over.
///
/// Implemented for `f32` and `f64`; the crate-root aliases pick `f64`
/// as the pipeline default.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssignOps + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from `f64` for parameters and constants.
    fn from_f64_lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    /// Conversion to `f64` for reporting.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}
