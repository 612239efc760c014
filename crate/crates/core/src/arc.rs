//! Closed-form `D^n` of arctan, arccot, arctanh and arccoth.
//!
//! For `n >= 1`,
//!
//! ```text
//! D^n arctan(x)  = (-1)^{n+1} (n-1)! / (1+x^2)^n · sum_k C(n,2k+1) (-1)^k x^{n-2k-1}
//! D^n arctanh(x) =            (n-1)! / (1-x^2)^n · sum_k C(n,2k+1)        x^{n-2k-1}
//! ```
//!
//! with `D^n arccot = -D^n arctan` and `D^n arccoth = D^n arctanh`. Two
//! further evaluators, one through the Chebyshev polynomial `U_{n-1}` and one
//! through `sin(n·arcsin(1/sqrt(1+x^2)))`, compute the same values by
//! independent routes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chebyshev::{cheb_closed, ChebKind};
use crate::signum::sg_real;
use crate::{binomial, factorial, Error, IntPoly, Real, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcFunc {
    Arctan,
    Arccot,
    Arctanh,
    Arccoth,
}

impl ArcFunc {
    pub const ALL: [ArcFunc; 4] = [ArcFunc::Arctan, ArcFunc::Arccot, ArcFunc::Arctanh, ArcFunc::Arccoth];

    pub fn name(self) -> &'static str {
        crate::Func::from(self).name()
    }

    /// `+1` for the `1 + x^2` denominator, `-1` for `1 - x^2`.
    pub fn base_sign(self) -> i8 {
        match self {
            ArcFunc::Arctan | ArcFunc::Arccot => 1,
            ArcFunc::Arctanh | ArcFunc::Arccoth => -1,
        }
    }

    /// Real-line value of the function itself, `arccot(x) = arctan(1/x)` and
    /// `arccoth(x) = arctanh(1/x)`.
    pub fn apply<F: Real>(self, x: F) -> Result<F> {
        match self {
            ArcFunc::Arctan => Ok(x.atan()),
            ArcFunc::Arccot => Ok(x.recip().atan()),
            ArcFunc::Arctanh if x.abs() < F::one() => Ok(x.atanh()),
            ArcFunc::Arccoth if x.abs() > F::one() => Ok(x.recip().atanh()),
            _ => Err(Error::Domain(format!("{}({x}) is not real", self.name()))),
        }
    }
}

impl fmt::Display for ArcFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `scalar · numerator(x) / (1 + base_sign·x^2)^denom_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDerivForm {
    pub func: ArcFunc,
    pub order: usize,
    /// `±(n-1)!`.
    pub scalar: BigInt,
    pub base_sign: i8,
    /// Binomial-level coefficients; degree `n-1`, parity of `n-1`.
    pub numerator: IntPoly,
    pub denom_power: usize,
}

/// Presentation form `coefficient · x^x_power · body(x)`, where `body` has a
/// positive constant term and unit content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredNumerator {
    pub coefficient: BigInt,
    pub x_power: usize,
    pub body: IntPoly,
}

impl ArcDerivForm {
    /// The denominator base `1 ± x^2`.
    pub fn base(&self) -> IntPoly {
        IntPoly::from_i64s(&[1, 0, self.base_sign as i64])
    }

    /// `scalar · numerator`.
    pub fn full_numerator(&self) -> IntPoly {
        self.numerator.scale(&self.scalar)
    }

    /// Evaluates exactly for rational `x`, in floating point for float `x`.
    pub fn eval<S: Scalar>(&self, x: &S) -> Result<S> {
        let x2 = x.clone() * x.clone();
        let base = if self.base_sign > 0 {
            S::one() + x2
        } else {
            S::one() - x2
        };
        if base.is_zero() {
            return Err(Error::Pole(format!("D^{} {} has a pole at {x}", self.order, self.func)));
        }
        let mut den = S::one();
        for _ in 0..self.denom_power {
            den = den * base.clone();
        }
        Ok(S::from_bigint(&self.scalar) * self.numerator.eval(x) / den)
    }

    /// Pulls the content and the lowest power of `x` out of the numerator,
    /// signed so the remaining body has a positive constant term.
    pub fn factored(&self) -> FactoredNumerator {
        let full = self.full_numerator();
        let x_power = full.low_power().unwrap_or(0);
        let mut content = full.content();
        if full.coeff(x_power).is_negative() {
            content = -content;
        }
        let body_coeffs = full.coeffs()[x_power..].iter().map(|c| c / &content).collect();
        FactoredNumerator {
            coefficient: content,
            x_power,
            body: IntPoly::new(body_coeffs),
        }
    }
}

/// Closed form of `D^n func` for `n >= 1`.
pub fn arc_deriv(func: ArcFunc, n: usize) -> Result<ArcDerivForm> {
    if n == 0 {
        return Err(Error::Domain(format!("order of D^n {func} must be at least 1")));
    }
    let alternating = matches!(func, ArcFunc::Arctan | ArcFunc::Arccot);
    let mut coeffs = vec![BigInt::zero(); n];
    for k in 0..=(n - 1) / 2 {
        let c = binomial(n as u64, 2 * k as u64 + 1);
        coeffs[n - 2 * k - 1] = if alternating && k % 2 == 1 { -c } else { c };
    }
    let mut scalar = factorial(n as u64 - 1);
    let negate = match func {
        ArcFunc::Arctan => n.is_multiple_of(2),
        ArcFunc::Arccot => n % 2 == 1,
        ArcFunc::Arctanh | ArcFunc::Arccoth => false,
    };
    if negate {
        scalar = -scalar;
    }
    Ok(ArcDerivForm {
        func,
        order: n,
        scalar,
        base_sign: func.base_sign(),
        numerator: IntPoly::new(coeffs),
        denom_power: n,
    })
}

/// `D^n func(x)` through the closed form; exact when `x` is rational.
///
/// Unlike [`ArcDerivForm::eval`], rejects points where the function itself is
/// not real: `|x| > 1` for arctanh and `|x| < 1` for arccoth.
pub fn arc_deriv_eval<S: Scalar>(func: ArcFunc, n: usize, x: &S) -> Result<S> {
    let form = arc_deriv(func, n)?;
    let x2 = x.clone() * x.clone();
    let outside = match func {
        ArcFunc::Arctanh => x2 > S::one(),
        ArcFunc::Arccoth => x2 < S::one(),
        _ => false,
    };
    if outside {
        return Err(Error::Domain(format!("{func}({x}) is not real")));
    }
    form.eval(x)
}

/// `D^n arctan(0)`: `(n-1)! (-1)^{(n-1)/2}` for odd `n`, zero for even `n`.
pub fn arc_deriv_at_zero(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    if n.is_multiple_of(2) {
        return Ok(BigInt::zero());
    }
    let f = factorial(n as u64 - 1);
    Ok(if ((n - 1) / 2) % 2 == 1 { -f } else { f })
}

fn signed_factorial<F: Real>(n: usize, negative: bool) -> F {
    let f = F::from_bigint(&factorial(n as u64 - 1));
    if negative {
        -f
    } else {
        f
    }
}

/// `D^n` through the second-kind Chebyshev polynomial:
///
/// `D^n arctan(x) = (-1)^{n+1} (n-1)! (1+x^2)^{-(n+1)/2} U_{n-1}(x/sqrt(1+x^2))`,
///
/// and for arctanh the same form at the imaginary argument
/// `i x/sqrt(1-x^2)`, evaluated as the real sum
/// `i^m U_m(i y) = sum_j u_j (-1)^{(m+j)/2} y^j` with `m = n-1`.
pub fn cheb_form_eval<F: Real>(func: ArcFunc, n: usize, x: F) -> Result<F> {
    if n == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let m = n - 1;
    let u = cheb_closed(ChebKind::Second, m).poly;
    let half_power = F::lit_usize(n + 1) / F::lit(2.0);
    match func {
        ArcFunc::Arctan | ArcFunc::Arccot => {
            let r = F::one() + x * x;
            let v = signed_factorial::<F>(n, n.is_multiple_of(2)) * u.eval(&(x / r.sqrt())) / r.powf(half_power);
            Ok(if func == ArcFunc::Arccot { -v } else { v })
        }
        ArcFunc::Arctanh | ArcFunc::Arccoth => {
            let r = F::one() - x * x;
            if r.is_zero() {
                return Err(Error::Pole(format!("D^n {func} at x = {x}")));
            }
            if r < F::zero() {
                return Err(Error::Domain(format!(
                    "the U-form of D^n {func} needs |x| < 1, got {x}"
                )));
            }
            let y = x / r.sqrt();
            let real_poly = IntPoly::new(
                u.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| if ((m + j) / 2) % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            );
            // (-1)^{n+1} · i^{n-1} · U_{n-1}(i y) = (-1)^{n+1} · real_poly(y)
            let v = signed_factorial::<F>(n, n.is_multiple_of(2)) * real_poly.eval(&y) / r.powf(half_power);
            Ok(v)
        }
    }
}

/// `sin(n·arcsin(1/sqrt(1+x^2))) / (1+x^2)^{n/2}`.
pub fn sin_arcsin_kernel<F: Real>(n: usize, x: F) -> F {
    let r = F::one() + x * x;
    let angle = F::lit_usize(n) * r.sqrt().recip().asin();
    angle.sin() / r.powf(F::lit_usize(n) / F::lit(2.0))
}

/// `D^n arctan(x) = (-1)^{n+1} (n-1)! sg^{n-1}(x) / (1+x^2)^{n/2} · sin(n·arcsin(1/sqrt(1+x^2)))`,
/// with `sg(0) = 1`.
pub fn sin_arcsin_form_eval<F: Real>(n: usize, x: F) -> Result<F> {
    if n == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let sg = F::from(sg_real(x).value()).expect("±1");
    let sg_pow = if (n - 1).is_multiple_of(2) { F::one() } else { sg };
    Ok(signed_factorial::<F>(n, n.is_multiple_of(2)) * sg_pow * sin_arcsin_kernel(n, x))
}

/// The derivative the induction step predicts for the kernel:
/// `-n·sg(x)·sin((n+1)·arcsin(1/sqrt(1+x^2))) / (1+x^2)^{(n+1)/2}`.
pub fn sin_arcsin_kernel_derivative<F: Real>(n: usize, x: F) -> F {
    let sg = F::from(sg_real(x).value()).expect("±1");
    -F::lit_usize(n) * sg * sin_arcsin_kernel(n + 1, x)
}

/// Absolute values of the arctan numerator coefficients.
pub(crate) fn abs_numerator(p: &IntPoly) -> IntPoly {
    IntPoly::new(p.coeffs().iter().map(Signed::abs).collect())
}
