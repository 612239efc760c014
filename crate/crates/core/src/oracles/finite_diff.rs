//! Central finite differences, for verification only.

use crate::{binomial, Error, Func, Real, Result};

/// Step used when the caller has no better choice.
///
/// `1e-4·max(1, |x0|)` for orders 1 and 2. Orders 3 and 4 divide rounding
/// error by `h^3` and `h^4`, so they use `1e-3` and `2e-3` instead.
pub fn default_step<F: Real>(n: usize, x0: F) -> F {
    let h = match n {
        0..=2 => 1e-4,
        3 => 1e-3,
        _ => 2e-3,
    };
    F::lit(h) * x0.abs().max(F::one())
}

/// Order-`n` central difference of an arbitrary function:
/// `h^-n · sum_j (-1)^j C(n,j) f(x0 + (n/2 - j) h)`, error `O(h^2)`.
///
/// Odd orders sample at half-steps. `f` may fail, e.g. when the stencil
/// leaves its domain.
pub fn finite_difference_fn<F: Real>(f: impl Fn(F) -> Result<F>, n: usize, x0: F, h: F) -> Result<F> {
    if n > 4 {
        return Err(Error::Domain(format!("finite differences support n <= 4, got {n}")));
    }
    if h.is_nan() || h <= F::zero() {
        return Err(Error::Domain(format!("step must be positive, got {h}")));
    }
    let half_n = F::lit_usize(n) / F::lit(2.0);
    let mut acc = F::zero();
    for j in 0..=n {
        let w = F::from_bigint(&binomial(n as u64, j as u64));
        let fx = f(x0 + (half_n - F::lit_usize(j)) * h)?;
        acc = if j % 2 == 1 { acc - w * fx } else { acc + w * fx };
    }
    Ok(acc / h.powi(n as i32))
}

/// Central difference of one of the eight functions.
pub fn finite_difference<F: Real>(func: Func, n: usize, x0: F, h: F) -> Result<F> {
    let reach = F::lit_usize(n) / F::lit(2.0) * h;
    let eval = |x: F| -> Result<F> {
        match (func.as_tan(), func.as_arc()) {
            (Some(t), _) => {
                let v = t.apply(x);
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Error::Domain(format!("stencil hits a pole of {func} at {x}")))
                }
            }
            (_, Some(a)) => a.apply(x),
            _ => unreachable!("every Func is in one family"),
        }
    };
    // A stencil straddling a branch point or the arccot jump is invalid even
    // if every sample is defined.
    let (lo, hi) = (x0 - reach, x0 + reach);
    let straddles = |p: F| lo <= p && p <= hi;
    let crosses = match func {
        Func::Arccot => straddles(F::zero()),
        Func::Arctanh | Func::Arccoth => straddles(F::one()) || straddles(-F::one()),
        Func::Cot | Func::Coth => straddles(F::zero()),
        _ => false,
    };
    if crosses {
        return Err(Error::Domain(format!(
            "stencil around {x0} leaves the domain of {func}"
        )));
    }
    finite_difference_fn(eval, n, x0, h)
}

/// One Richardson step on [`finite_difference`]: `(4 D(h/2) - D(h)) / 3`,
/// error `O(h^4)`.
///
/// With `h = None` the step is `2e-3·max(1, |x0|)`; the higher order lets a
/// larger step keep rounding error small at `n = 3`.
pub fn finite_difference_richardson<F: Real>(func: Func, n: usize, x0: F, h: Option<F>) -> Result<F> {
    let h = h.unwrap_or_else(|| F::lit(2e-3) * x0.abs().max(F::one()));
    let coarse = finite_difference(func, n, x0, h)?;
    let fine = finite_difference(func, n, x0, h / F::lit(2.0))?;
    Ok((F::lit(4.0) * fine - coarse) / F::lit(3.0))
}
