use num_bigint::BigInt;

use crate::{Error, IntPoly, Result, Scalar};

/// Exact rational function `num / base^power`.
///
/// Keeping the denominator as a power of its base lets results line up with
/// the `(1 ± x^2)^n` denominators of the closed forms without any polynomial
/// gcd. Factors of `base` shared by the numerator are divided out after every
/// operation, so the representation is canonical for a fixed base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: IntPoly,
    base: IntPoly,
    power: u32,
}

impl RatFun {
    pub fn new(num: IntPoly, base: IntPoly, power: u32) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        let mut f = RatFun { num, base, power };
        f.reduce();
        Ok(f)
    }

    /// `1 / (1 + sign·x^2)`.
    pub fn reciprocal_quadratic(sign: i8) -> Self {
        RatFun::new(IntPoly::one(), IntPoly::from_i64s(&[1, 0, sign as i64]), 1).expect("nonzero base")
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        RatFun::new(IntPoly::constant(c), IntPoly::one(), 0).expect("nonzero base")
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn base(&self) -> &IntPoly {
        &self.base
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    /// Expanded denominator.
    pub fn den(&self) -> IntPoly {
        self.base.pow(self.power)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.power = 0;
            return;
        }
        if self.base.degree() == Some(0) {
            return;
        }
        while self.power > 0 {
            match self.num.div_exact(&self.base) {
                Some(q) => {
                    self.num = q;
                    self.power -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator over `base^power` for a larger `power`; `None` if `power` is
    /// below the reduced one.
    pub fn numerator_at_power(&self, power: u32) -> Option<IntPoly> {
        let extra = power.checked_sub(self.power)?;
        Some(&self.num * &self.base.pow(extra))
    }

    /// Quotient rule on the expanded denominator `D = base^m`:
    /// `(N'D - N D') / D^2`, then exact division by `base` while possible.
    pub fn derivative(&self) -> RatFun {
        let d = self.den();
        let num = &(&self.num.derivative() * &d) - &(&self.num * &d.derivative());
        let mut out = RatFun {
            num,
            base: self.base.clone(),
            power: 2 * self.power,
        };
        out.reduce();
        out
    }

    pub fn eval<S: Scalar>(&self, x: &S) -> Result<S> {
        let d = self.den().eval(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at {x}")));
        }
        Ok(self.num.eval(x) / d)
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun {
            num: IntPoly::zero(),
            base: IntPoly::one(),
            power: 0,
        }
    }
}

/// `n`-fold exact derivative.
pub fn nth_derivative_exact(f: &RatFun, n: usize) -> RatFun {
    (0..n).fold(f.clone(), |acc, _| acc.derivative())
}
