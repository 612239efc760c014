//! Closed-form higher derivatives of the tangent family (tan, cot, tanh, coth)
//! and the inverse-tangent family (arctan, arctanh, arccot, arccoth).
//!
//! Exact quantities live on [`IntPoly`] (arbitrary-precision integer
//! coefficients) and [`Rational`]. Floating-point evaluators are generic over
//! [`Real`], so the same code runs in `f32`, `f64`, or any wider type that
//! implements the `num-traits` float traits.
//!
//! Independent engines in [`oracles`] (exact rational-function calculus,
//! exact power series, Taylor jets, finite differences) cross-check every
//! closed form; [`verify`] bundles those checks into runnable suites.

pub mod arc;
pub mod chebyshev;
mod error;
mod func;
pub mod oracles;
pub mod poly;
mod scalar;
pub mod signum;
pub mod triangle;
pub mod verify;

pub use arc::{arc_deriv, arc_deriv_at_zero, arc_deriv_eval, ArcDerivForm, ArcFunc};
pub use chebyshev::{cheb_closed, cheb_recurrence, t_from_u, ChebKind, ChebPoly};
pub use error::{Error, Result};
pub use func::Func;
pub use poly::{binomial, factorial, IntPoly};
pub use scalar::{Real, Scalar};
pub use signum::{sg_complex, sg_real, Sg};
pub use triangle::{tan_family_deriv, tangent_number, triangle_coeff, CoeffTriangle, TanDerivExpansion, TanFunc};

pub use num_bigint::BigInt;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Default floating-point scalar.
pub type Float = f64;
/// Complex value over the default float.
pub type ComplexVal = num_complex::Complex<f64>;
/// Taylor jet over the default float.
pub type Jet64 = oracles::Jet<f64>;
/// Exact truncated power series.
pub type SeriesQ = oracles::TruncSeries<Rational>;
