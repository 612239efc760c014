//! Independent engines used to check the closed forms.
//!
//! None of these read the triangle or the closed-form numerators: exact
//! rational-function differentiation ([`RatFun`]), exact power series
//! ([`TruncSeries`], [`tan_series`]), Taylor jets ([`Jet`],
//! [`jet_derivative`]) and central finite differences.

mod finite_diff;
mod jet;
mod ratfun;
mod series;

pub use finite_diff::{default_step, finite_difference, finite_difference_fn, finite_difference_richardson};
pub use jet::{jet_derivative, Jet};
pub use ratfun::{nth_derivative_exact, RatFun};
pub use series::{tan_series, TruncSeries};
