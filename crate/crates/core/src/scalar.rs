use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

/// Floating-point scalar used by every numeric evaluator.
pub trait Real: Float + FloatConst + FromPrimitive + Scalar + Display + Send + Sync + 'static {
    /// Converts an `f64` constant; panics only if the type cannot hold it.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal not representable")
    }

    fn lit_usize(v: usize) -> Self {
        <Self as FromPrimitive>::from_usize(v).expect("integer not representable")
    }
}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Scalar + Display + Send + Sync + 'static {}

/// Nearest float to an arbitrary-precision integer (infinite on overflow).
fn float_from_bigint<F: Float + FromPrimitive>(v: &BigInt) -> F {
    match v.to_f64() {
        Some(f) => F::from_f64(f).unwrap_or_else(F::infinity),
        None => F::infinity(),
    }
}

/// Field-like scalar that polynomials and rational forms can be evaluated in.
///
/// Implemented for `f32`, `f64` and [`BigRational`]; evaluation is exact for
/// the latter.
pub trait Scalar: Clone + Num + PartialOrd + std::ops::Neg<Output = Self> + Debug + Display {
    fn from_bigint(v: &BigInt) -> Self;
}

impl Scalar for f64 {
    fn from_bigint(v: &BigInt) -> Self {
        float_from_bigint(v)
    }
}

impl Scalar for f32 {
    fn from_bigint(v: &BigInt) -> Self {
        float_from_bigint(v)
    }
}

impl Scalar for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

/// `|a - b| / max(|a|, |b|, 1)`.
pub(crate) fn rel_diff<F: Real>(a: F, b: F) -> F {
    let scale = a.abs().max(b.abs()).max(F::one());
    (a - b).abs() / scale
}
