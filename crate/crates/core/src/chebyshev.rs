//! Chebyshev polynomials from their binomial closed forms.
//!
//! `U_n(x) = sum_k C(n+1, 2k+1) (x^2-1)^k x^{n-2k}` and
//! `T_n(x) = sum_k C(n, 2k) (x^2-1)^k x^{n-2k}`; the three-term recurrence
//! is kept alongside as an independent oracle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{binomial, Error, IntPoly, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebKind {
    /// `T_n`.
    First,
    /// `U_n`.
    Second,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChebKind::First => "T",
            ChebKind::Second => "U",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebPoly {
    pub kind: ChebKind,
    pub degree: usize,
    pub poly: IntPoly,
}

impl ChebPoly {
    /// Float evaluation, exact up to one final rounding.
    pub fn eval<F: Real>(&self, x: F) -> F {
        self.poly.eval_exact(x)
    }
}

/// `(x^2 - 1)^k · x^shift`, expanded term by term.
fn shifted_power_of_x2_minus_1(k: usize, shift: usize) -> Vec<(usize, BigInt)> {
    (0..=k)
        .map(|j| {
            let c = binomial(k as u64, j as u64);
            let c = if (k - j) % 2 == 1 { -c } else { c };
            (2 * j + shift, c)
        })
        .collect()
}

/// Closed form of `T_n` or `U_n`.
pub fn cheb_closed(kind: ChebKind, n: usize) -> ChebPoly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        let weight = match kind {
            ChebKind::Second => binomial(n as u64 + 1, 2 * k as u64 + 1),
            ChebKind::First => binomial(n as u64, 2 * k as u64),
        };
        for (p, c) in shifted_power_of_x2_minus_1(k, n - 2 * k) {
            coeffs[p] += &weight * c;
        }
    }
    ChebPoly {
        kind,
        degree: n,
        poly: IntPoly::new(coeffs),
    }
}

/// `P_{n+1} = 2x P_n - P_{n-1}` from the seeds `T_0 = 1, T_1 = x` or
/// `U_0 = 1, U_1 = 2x`.
pub fn cheb_recurrence(kind: ChebKind, n: usize) -> ChebPoly {
    let two_x = IntPoly::monomial(2, 1);
    let mut prev = IntPoly::one();
    let mut cur = match kind {
        ChebKind::First => IntPoly::x(),
        ChebKind::Second => two_x.clone(),
    };
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    ChebPoly {
        kind,
        degree: n,
        poly: cur,
    }
}

/// `T_n = U_n - x U_{n-1}` for `n >= 1`.
pub fn t_from_u(n: usize) -> Result<ChebPoly> {
    if n == 0 {
        return Err(Error::Domain("T_n from U_n needs n >= 1".into()));
    }
    let un = cheb_closed(ChebKind::Second, n).poly;
    let un1 = cheb_closed(ChebKind::Second, n - 1).poly;
    Ok(ChebPoly {
        kind: ChebKind::First,
        degree: n,
        poly: &un - &un1.shift(1),
    })
}

/// Right-hand side of
/// `sin(n·arcsin x) = x sum_k C(n,2k+1) (-1)^k x^{2k} (1-x^2)^{(n-1)/2-k}`.
pub fn sin_n_arcsin<F: Real>(n: usize, x: F) -> Result<F> {
    if x.is_nan() || x.abs() > F::one() {
        return Err(Error::Domain(format!("sin(n·arcsin x) needs |x| <= 1, got {x}")));
    }
    if n == 0 {
        return Ok(F::zero());
    }
    let c = (F::one() - x * x).sqrt();
    let x2 = x * x;
    let mut sum = F::zero();
    for k in 0..=(n - 1) / 2 {
        let w = F::from_bigint(&binomial(n as u64, 2 * k as u64 + 1));
        let term = w * x2.powi(k as i32) * c.powi((n - 1 - 2 * k) as i32);
        sum = if k % 2 == 1 { sum - term } else { sum + term };
    }
    Ok(x * sum)
}
