//! The sign function `sg`, with `sg(0) = 1`, for real and complex arguments.
//!
//! For complex `x != 0`, `sg(x) = sqrt(x^2)/x` with the principal square root
//! (argument in `(-π, π]`). That reduces to the sign of `Re(x)`, with the
//! imaginary axis split by `Im(x) >= 0`. The branch table is the
//! implementation here; [`sg_complex_via_sqrt`] is kept as its oracle.
//!
//! The complex inverse functions follow their logarithmic definitions:
//!
//! ```text
//! arctan(x)  = -i/2 · ln((1+ix)/(1-ix))     arccot(x)  = -i/2 · ln((ix-1)/(ix+1))
//! arctanh(x) =  1/2 · ln((1+x)/(1-x))       arccoth(x) =  1/2 · ln((x+1)/(x-1))
//! ```
//!
//! Logarithms take the principal branch. A log argument that lands exactly on
//! the negative real axis takes the one-sided limit from the side `sg`
//! selects: for arctan/arccot the limit `Re(x) -> 0` from the sign of
//! `sg(x)`, for arctanh/arccoth the limit `Re(ix) -> 0` from the sign of
//! `sg(ix)`. Under that convention
//! `arccot(x) + arctan(x) = π/2 · sg(x)` and
//! `arccoth(x) - arctanh(x) = π/2 · i · sg(ix)` hold on the cuts too.

use std::fmt;

use num_complex::Complex;

use crate::{Error, Real, Result};

/// A value of `sg`: always `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sg {
    Plus,
    Minus,
}

impl Sg {
    pub fn value(self) -> i8 {
        match self {
            Sg::Plus => 1,
            Sg::Minus => -1,
        }
    }

    pub fn as_real<F: Real>(self) -> F {
        match self {
            Sg::Plus => F::one(),
            Sg::Minus => -F::one(),
        }
    }

    pub fn negate(self) -> Sg {
        match self {
            Sg::Plus => Sg::Minus,
            Sg::Minus => Sg::Plus,
        }
    }
}

impl std::ops::Mul for Sg {
    type Output = Sg;
    fn mul(self, rhs: Sg) -> Sg {
        if self == rhs {
            Sg::Plus
        } else {
            Sg::Minus
        }
    }
}

impl fmt::Display for Sg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// `1` for `x >= 0`, `-1` for `x < 0`. `-0.0` counts as zero.
pub fn sg_real<F: Real>(x: F) -> Sg {
    if x >= F::zero() {
        Sg::Plus
    } else {
        Sg::Minus
    }
}

pub fn sg_complex<F: Real>(x: Complex<F>) -> Sg {
    if x.re > F::zero() {
        Sg::Plus
    } else if x.re < F::zero() {
        Sg::Minus
    } else {
        sg_real(x.im)
    }
}

/// Principal argument in `(-π, π]`; the negative real axis maps to `+π`
/// whatever the sign of a zero imaginary part.
pub fn principal_arg<F: Real>(z: Complex<F>) -> F {
    if z.im.is_zero() {
        if z.re < F::zero() {
            F::PI()
        } else {
            F::zero()
        }
    } else {
        z.im.atan2(z.re)
    }
}

/// `sqrt(r)·e^{iφ/2}` with `φ` the principal argument.
pub fn principal_sqrt<F: Real>(z: Complex<F>) -> Complex<F> {
    let half = principal_arg(z) / F::lit(2.0);
    Complex::from_polar(z.norm().sqrt(), half)
}

/// `sqrt(x^2)/x`, the defining formula; `+1` at zero.
pub fn sg_complex_via_sqrt<F: Real>(x: Complex<F>) -> Complex<F> {
    if x.re.is_zero() && x.im.is_zero() {
        return Complex::new(F::one(), F::zero());
    }
    principal_sqrt(x * x) / x
}

/// Principal log; on the negative real axis the argument is `+π` when
/// `upper` and `-π` otherwise.
fn ln_sided<F: Real>(z: Complex<F>, upper: bool) -> Complex<F> {
    let arg = if z.im.is_zero() && z.re < F::zero() {
        if upper {
            F::PI()
        } else {
            -F::PI()
        }
    } else {
        principal_arg(z)
    };
    Complex::new(z.norm().ln(), arg)
}

fn check_finite<F: Real>(z: Complex<F>, what: &str) -> Result<Complex<F>> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain(format!("{what} is singular here")))
    }
}

fn i<F: Real>() -> Complex<F> {
    Complex::new(F::zero(), F::one())
}

fn half<F: Real>() -> F {
    F::lit(0.5)
}

pub fn arctan_c<F: Real>(x: Complex<F>) -> Result<Complex<F>> {
    let one = Complex::new(F::one(), F::zero());
    let ix = i::<F>() * x;
    let w = (one + ix) / (one - ix);
    let upper = sg_complex(x) == Sg::Plus;
    check_finite(-i::<F>() * half::<F>() * ln_sided(w, upper), "arctan")
}

pub fn arccot_c<F: Real>(x: Complex<F>) -> Result<Complex<F>> {
    let one = Complex::new(F::one(), F::zero());
    let ix = i::<F>() * x;
    let w = (ix - one) / (ix + one);
    let upper = sg_complex(x) == Sg::Plus;
    check_finite(-i::<F>() * half::<F>() * ln_sided(w, upper), "arccot")
}

pub fn arctanh_c<F: Real>(x: Complex<F>) -> Result<Complex<F>> {
    let one = Complex::new(F::one(), F::zero());
    let w = (one + x) / (one - x);
    // Im((1+x)/(1-x)) has the sign of Im(x) = -Re(ix).
    let upper = sg_complex(i::<F>() * x) == Sg::Minus;
    check_finite(ln_sided(w, upper) * half::<F>(), "arctanh")
}

pub fn arccoth_c<F: Real>(x: Complex<F>) -> Result<Complex<F>> {
    let one = Complex::new(F::one(), F::zero());
    let w = (x + one) / (x - one);
    let upper = sg_complex(i::<F>() * x) == Sg::Plus;
    check_finite(ln_sided(w, upper) * half::<F>(), "arccoth")
}

/// `|arccot(x) + arctan(x) - π/2·sg(x)|` on the real line, with
/// `arccot(x) = arctan(1/x)` (so `arccot(0) = π/2`).
pub fn arctan_arccot_residual_real<F: Real>(x: F) -> F {
    let sum = x.atan() + x.recip().atan();
    (sum - F::FRAC_PI_2() * sg_real(x).as_real::<F>()).abs()
}

/// `|arccot(x) + arctan(x) - π/2·sg(x)|` for complex `x`, `x != ±i`.
pub fn arctan_arccot_identity_residual<F: Real>(x: Complex<F>) -> Result<F> {
    let sum = arccot_c(x)? + arctan_c(x)?;
    let want = Complex::new(F::FRAC_PI_2() * sg_complex(x).as_real::<F>(), F::zero());
    Ok((sum - want).norm())
}

/// `|arccoth(x) - arctanh(x) - π/2·i·sg(ix)|`, for `x` not in `{-1, 0, 1}`.
pub fn arctanh_arccoth_identity_residual<F: Real>(x: Complex<F>) -> Result<F> {
    let one = F::one();
    if x.im.is_zero() && (x.re.is_zero() || x.re.abs() == one) {
        return Err(Error::Domain(format!("arccoth - arctanh is undefined at {}", x.re)));
    }
    let diff = arccoth_c(x)? - arctanh_c(x)?;
    let want = i::<F>() * F::FRAC_PI_2() * sg_complex(i::<F>() * x).as_real::<F>();
    Ok((diff - want).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn grid() -> impl Iterator<Item = C> {
        (0..41).flat_map(|a| (0..41).map(move |b| c(-2.0 + 0.1 * a as f64, -2.0 + 0.1 * b as f64)))
    }

    fn snap(v: f64) -> f64 {
        // grid coordinates like -2.0 + 0.1*20 are not exactly zero
        if v.abs() < 1e-12 {
            0.0
        } else {
            v
        }
    }

    fn sgrid() -> impl Iterator<Item = C> {
        grid().map(|z| c(snap(z.re), snap(z.im)))
    }

    #[test]
    fn real_examples() {
        assert_eq!(sg_real(5.0), Sg::Plus);
        assert_eq!(sg_real(-2.0), Sg::Minus);
        assert_eq!(sg_real(0.0), Sg::Plus);
        assert_eq!(sg_real(-0.0), Sg::Plus);
    }

    #[test]
    fn complex_examples() {
        assert_eq!(sg_complex(c(0.0, 3.0)), Sg::Plus);
        assert_eq!(sg_complex(c(0.0, -1.0)), Sg::Minus);
        assert_eq!(sg_complex(c(-2.0, 1.0)), Sg::Minus);
        assert_eq!(sg_complex(c(0.0, 0.0)), Sg::Plus);
    }

    #[test]
    fn table_matches_sqrt_formula() {
        for z in sgrid() {
            let oracle = sg_complex_via_sqrt(z);
            let want = sg_complex(z).value() as f64;
            assert!((oracle - c(want, 0.0)).norm() < 1e-14, "{z}: {oracle}");
        }
    }

    #[test]
    fn sqrt_identities() {
        for z in sgrid() {
            let s: f64 = sg_complex(z).as_real();
            let r = principal_sqrt(z * z);
            assert!((r * s - z).norm() <= 1e-14 * z.norm().max(1.0));
            assert!((z * s - r).norm() <= 1e-14 * z.norm().max(1.0));
            assert_eq!(sg_complex(principal_sqrt(z)), Sg::Plus);
            if z != c(0.0, 0.0) {
                assert_eq!(sg_complex(-z), sg_complex(z).negate());
            }
            assert_eq!(sg_complex(z) * sg_complex(z), Sg::Plus);
        }
        for x in [-2.0, -0.5, 0.0, 0.5, 3.0] {
            assert_eq!(sg_complex(c(0.0, x)), sg_real(x));
        }
    }

    #[test]
    fn arctan_identity_examples() {
        assert!(arctan_arccot_residual_real(1.0) < 1e-15);
        assert!(arctan_arccot_residual_real(-3.0) < 1e-12);
        assert!(arctan_arccot_residual_real(0.5) < 1e-12);
        assert!(arctan_arccot_residual_real(0.0) < 1e-15);
        for z in [
            c(1.0, 0.0),
            c(-3.0, 0.0),
            c(0.5, 0.0),
            c(0.0, 2.0),
            c(0.0, -2.0),
            c(0.0, 0.5),
            c(0.0, -0.5),
            c(-1.0, 1.0),
        ] {
            let r = arctan_arccot_identity_residual(z).unwrap();
            assert!(r < 1e-12, "{z}: {r}");
        }
    }

    #[test]
    fn arctanh_identity_examples() {
        for z in [
            c(0.0, 2.0),
            c(0.5, 0.5),
            c(0.0, -2.0),
            c(0.5, 0.0),
            c(-0.5, 0.0),
            c(2.0, 0.0),
            c(-2.0, 0.0),
        ] {
            let r = arctanh_arccoth_identity_residual(z).unwrap();
            assert!(r < 1e-12, "{z}: {r}");
        }
        for bad in [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)] {
            assert!(matches!(arctanh_arccoth_identity_residual(bad), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn strict_principal_log_misses_lower_imaginary_axis() {
        // With arg(-r) = +π on both logs the sum is +π/2 even where sg = -1.
        let x = c(0.0, -0.5);
        let one = c(1.0, 0.0);
        let ix = c(0.0, 1.0) * x;
        let ln = |z: C| C::new(z.norm().ln(), principal_arg(z));
        let sum = -c(0.0, 0.5) * (ln((ix - one) / (ix + one)) + ln((one + ix) / (one - ix)));
        assert!((sum.re - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(arctan_arccot_identity_residual(x).unwrap() < 1e-15);
    }

    #[test]
    fn identities_on_grid() {
        for z in sgrid() {
            if (z - c(0.0, 1.0)).norm() < 1e-9 || (z + c(0.0, 1.0)).norm() < 1e-9 {
                continue;
            }
            let r = arctan_arccot_identity_residual(z).unwrap();
            assert!(r < 1e-12, "arctan at {z}: {r}");
            if z.im == 0.0 && (z.re == 0.0 || z.re.abs() == 1.0) {
                continue;
            }
            let r = arctanh_arccoth_identity_residual(z).unwrap();
            assert!(r < 1e-12, "arctanh at {z}: {r}");
        }
    }

    #[test]
    fn agrees_with_real_functions_off_the_cuts() {
        for x in [-2.5, -0.7, 0.3, 1.9] {
            let z = c(x, 0.0);
            assert!((arctan_c(z).unwrap() - c(x.atan(), 0.0)).norm() < 1e-15);
            assert!((arccot_c(z).unwrap() - c((1.0 / x).atan(), 0.0)).norm() < 1e-15);
        }
        for x in [-0.7, 0.3] {
            assert!((arctanh_c(c(x, 0.0)).unwrap() - c(x.atanh(), 0.0)).norm() < 1e-15);
        }
        for x in [-2.5, 1.9] {
            assert!((arccoth_c(c(x, 0.0)).unwrap() - c((1.0 / x).atanh(), 0.0)).norm() < 1e-15);
        }
    }
}
