use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::factorial;

/// Power series `c_0 + c_1 t + ... + c_N t^N`, truncated at order `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<S> {
    coeffs: Vec<S>,
}

impl<S> TruncSeries<S>
where
    S: Clone + Num + Neg<Output = S>,
{
    /// Pads or cuts `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order + 1, S::zero());
        TruncSeries { coeffs }
    }

    pub fn constant(c: S, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a - b)
    }

    pub fn scale(&self, c: &S) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    fn zip(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Self {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n)
                .map(|k| f(self.coeffs[k].clone(), rhs.coeffs[k].clone()))
                .collect(),
        }
    }

    /// Cauchy product, truncated to the shorter order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(S::zero(), |acc, j| {
                    acc + self.coeffs[j].clone() * rhs.coeffs[k - j].clone()
                })
            })
            .collect();
        TruncSeries { coeffs }
    }

    /// `self / rhs`; `None` when `rhs` has a zero constant term.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        let d0 = rhs.coeffs[0].clone();
        if d0.is_zero() {
            return None;
        }
        let n = self.order().min(rhs.order());
        let mut q: Vec<S> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc - rhs.coeffs[j].clone() * q[k - j].clone();
            }
            q.push(acc / d0.clone());
        }
        Some(TruncSeries { coeffs: q })
    }

    /// Term-wise derivative; the order drops by one.
    pub fn derivative(&self, from_usize: impl Fn(usize) -> S) -> Self {
        let coeffs: Vec<S> = (1..self.coeffs.len())
            .map(|k| self.coeffs[k].clone() * from_usize(k))
            .collect();
        let order = coeffs.len().saturating_sub(1);
        Self::new(coeffs, order)
    }

    /// Antiderivative with the given constant; the order rises by one.
    pub fn integrate(&self, c0: S, from_usize: impl Fn(usize) -> S) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(c0);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| a.clone() / from_usize(k + 1)),
        );
        TruncSeries { coeffs }
    }
}

fn q(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// Exact Taylor coefficients of `tan` at 0 through `t^order`, as the quotient
/// of the sine and cosine series.
pub fn tan_series(order: usize) -> TruncSeries<BigRational> {
    let sign = |j: usize| if j % 2 == 1 { -BigInt::one() } else { BigInt::one() };
    let mut sin = vec![BigRational::zero(); order + 1];
    let mut cos = vec![BigRational::zero(); order + 1];
    for k in 0..=order {
        let j = k / 2;
        let c = q(sign(j), factorial(k as u64));
        if k % 2 == 1 {
            sin[k] = c;
        } else {
            cos[k] = c;
        }
    }
    TruncSeries::new(sin, order)
        .div(&TruncSeries::new(cos, order))
        .expect("cos(0) = 1")
}
