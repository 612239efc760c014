//! Truncated Taylor jets: `d_j = f^(j)(x0) / j!` for `j = 0..=N`.

use crate::{Error, Func, Real, Result};

use super::TruncSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct Jet<F: Real> {
    pub point: F,
    series: TruncSeries<F>,
}

impl<F: Real> Jet<F> {
    /// The identity `x0 + t`.
    pub fn variable(point: F, order: usize) -> Self {
        Jet {
            point,
            series: TruncSeries::new(vec![point, F::one()], order),
        }
    }

    pub fn constant(point: F, c: F, order: usize) -> Self {
        Jet {
            point,
            series: TruncSeries::constant(c, order),
        }
    }

    fn with(&self, series: TruncSeries<F>) -> Self {
        Jet {
            point: self.point,
            series,
        }
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeffs(&self) -> &[F] {
        self.series.coeffs()
    }

    /// `f^(k)(x0) = k! · d_k`.
    pub fn derivative(&self, k: usize) -> F {
        let fact = (2..=k).fold(F::one(), |acc, i| acc * F::lit_usize(i));
        self.series.coeff(k) * fact
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.with(self.series.add(&rhs.series))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.with(self.series.sub(&rhs.series))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.with(self.series.mul(&rhs.series))
    }

    pub fn neg(&self) -> Self {
        self.with(self.series.neg())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.series
            .div(&rhs.series)
            .map(|s| self.with(s))
            .ok_or_else(|| Error::Pole(format!("division by a jet vanishing at {}", self.point)))
    }

    /// Shifted jet of the derivative, one order shorter.
    pub fn differentiate(&self) -> Self {
        self.with(self.series.derivative(F::lit_usize))
    }

    /// Antiderivative taking value `c0` at the point, one order longer.
    pub fn integrate(&self, c0: F) -> Self {
        self.with(self.series.integrate(c0, F::lit_usize))
    }

    /// `(sin u, cos u)` by the coupled recurrences
    /// `k s_k = sum j u_j c_{k-j}`, `k c_k = -sum j u_j s_{k-j}`.
    pub fn sin_cos(&self) -> (Self, Self) {
        self.trig_pair(-F::one())
    }

    /// `(sinh u, cosh u)`; same recurrences with `+` in the second.
    pub fn sinh_cosh(&self) -> (Self, Self) {
        self.trig_pair(F::one())
    }

    fn trig_pair(&self, sign: F) -> (Self, Self) {
        let u = self.series.coeffs();
        let n = self.order();
        let (u0, hyperbolic) = (u[0], sign > F::zero());
        let mut s = vec![F::zero(); n + 1];
        let mut c = vec![F::zero(); n + 1];
        if hyperbolic {
            s[0] = u0.sinh();
            c[0] = u0.cosh();
        } else {
            s[0] = u0.sin();
            c[0] = u0.cos();
        }
        for k in 1..=n {
            let mut sk = F::zero();
            let mut ck = F::zero();
            for j in 1..=k {
                let ju = F::lit_usize(j) * u[j];
                sk = sk + ju * c[k - j];
                ck = ck + ju * s[k - j];
            }
            let kf = F::lit_usize(k);
            s[k] = sk / kf;
            c[k] = sign * ck / kf;
        }
        (self.with(TruncSeries::new(s, n)), self.with(TruncSeries::new(c, n)))
    }
}

fn finite_or_pole<F: Real>(v: F, func: Func, n: usize, x0: F) -> Result<F> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Pole(format!("D^{n} {func}({x0}) is not finite")))
    }
}

/// `f^(n)(x0)` for any of the eight functions, by jet propagation.
///
/// tan, cot, tanh and coth come from sin/cos (sinh/cosh) jets by series
/// division. The inverse functions integrate the jet of `±1/(1 ± u^2)` with
/// the function value as constant term.
pub fn jet_derivative<F: Real>(func: Func, n: usize, x0: F) -> Result<F> {
    if !x0.is_finite() {
        return Err(Error::Domain(format!("non-finite point {x0}")));
    }
    let order = n.max(1);
    let u = Jet::variable(x0, order);
    let one = Jet::constant(x0, F::one(), order);
    let jet = match func {
        Func::Tan => {
            let (s, c) = u.sin_cos();
            s.div(&c)?
        }
        Func::Cot => {
            let (s, c) = u.sin_cos();
            c.div(&s)?
        }
        Func::Tanh => {
            let (s, c) = u.sinh_cosh();
            s.div(&c)?
        }
        Func::Coth => {
            let (s, c) = u.sinh_cosh();
            c.div(&s)?
        }
        Func::Arctan | Func::Arccot | Func::Arctanh | Func::Arccoth => {
            let u2 = u.mul(&u);
            let value = func.as_arc().expect("arc family").apply(x0)?;
            let base = match func {
                Func::Arctan | Func::Arccot => one.add(&u2),
                _ => one.sub(&u2),
            };
            let mut d1 = one.div(&base)?;
            if func == Func::Arccot {
                d1 = d1.neg();
            }
            // integrating raises the order by one; the extra term is unused
            d1.integrate(value)
        }
    };
    finite_or_pole(jet.derivative(n), func, n, x0)
}
