//! Scalar abstraction for the floating-point parts of the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar: implemented for `f32` and `f64`.
pub trait Real: Float + FromPrimitive + ToPrimitive + Default + Debug + Display + Sum + Send + Sync + 'static {
    /// Converts an `f64` constant.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal is representable")
    }

    /// Converts an exact integer count.
    #[inline]
    fn count(x: u64) -> Self {
        Self::from_u64(x).expect("integer count is representable")
    }

    #[inline]
    fn sqrt2() -> Self {
        Self::lit(std::f64::consts::SQRT_2)
    }

    /// √(a² + b²) for integer degrees.
    #[inline]
    fn hypot_u64(a: u64, b: u64) -> Self {
        Self::count(a * a + b * b).sqrt()
    }
}

impl Real for f32 {}
impl Real for f64 {}
