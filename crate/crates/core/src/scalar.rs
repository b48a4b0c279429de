//! Scalar abstraction for the floating-point side of the library.
//!
//! Exact arithmetic (number fields, ideals, matrix identities) runs on
//! [`num_rational::BigRational`]; everything numerical (embeddings, theta
//! sums, Poincaré-type series, quadrature) is generic over [`Real`].

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion used when handing exact rational data to the
    /// numeric side.
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("f64 -> Real conversion")
    }
}

impl Real for f32 {}
impl Real for f64 {}
