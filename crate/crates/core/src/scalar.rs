use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating point type used by the numerical routines (`f32` or `f64`).
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts a count or small integer into the scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to every float type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
