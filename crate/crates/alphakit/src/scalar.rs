use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the toolkit is generic over: `f32` or `f64`.
///
/// Everything needed by the numeric kernels: IEEE float operations,
/// mathematical constants, and conversions from tabulated `f64` data.
pub trait FloatScalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}
