//! The `T(n, k)` triangle: `D^n tan(x) = sum_k T(n, k) tan^k(x)`.
//!
//! Rows follow from `D tan^k = k (tan^{k-1} + tan^{k+1})`, giving
//! `T(n, k) = (k-1) T(n-1, k-1) + (k+1) T(n-1, k+1)` with row 0 equal to the
//! Kronecker row `δ(k, 1)`. The same coefficients, with function-specific
//! signs, expand the derivatives of cot, tanh and coth.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, IntPoly, Real, Result};

/// Rows `0..=nmax` of the triangle; row `n` has entries for `k = 0..=n+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl CoeffTriangle {
    pub fn new(nmax: usize) -> Self {
        let mut t = CoeffTriangle {
            rows: vec![vec![BigInt::zero(), BigInt::one()]],
        };
        t.extend_to(nmax);
        t
    }

    /// Builds from raw rows without checking them; used to feed deliberately
    /// corrupted data to the verification suites.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        CoeffTriangle { rows }
    }

    fn extend_to(&mut self, nmax: usize) {
        while self.rows.len() <= nmax {
            let prev = self.rows.last().expect("row 0 always present");
            let n = self.rows.len();
            let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let row = (0..=n + 1)
                .map(|k| {
                    let up = if k >= 1 {
                        get(k - 1) * BigInt::from(k - 1)
                    } else {
                        BigInt::zero()
                    };
                    up + get(k + 1) * BigInt::from(k + 1)
                })
                .collect();
            self.rows.push(row);
        }
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    /// `T(n, k)`, zero for `k` outside `0..=n+1`. Panics if `n > nmax`.
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        let row = &self.rows[n];
        usize::try_from(k)
            .ok()
            .and_then(|k| row.get(k).cloned())
            .unwrap_or_default()
    }
}

static SHARED: RwLock<Option<CoeffTriangle>> = RwLock::new(None);

/// Runs `f` on a cached triangle holding at least rows `0..=n`.
///
/// Rows are only ever appended under the write lock, so readers never see a
/// partially built row.
pub fn with_triangle<R>(n: usize, f: impl FnOnce(&CoeffTriangle) -> R) -> R {
    {
        let guard = SHARED.read().unwrap_or_else(|e| e.into_inner());
        if let Some(t) = guard.as_ref().filter(|t| t.nmax() >= n) {
            return f(t);
        }
    }
    let mut guard = SHARED.write().unwrap_or_else(|e| e.into_inner());
    let t = guard.get_or_insert_with(|| CoeffTriangle::new(0));
    t.extend_to(n);
    f(t)
}

/// `T(n, k)` from the shared cache.
pub fn triangle_coeff(n: usize, k: i64) -> BigInt {
    with_triangle(n, |t| t.get(n, k))
}

/// The tangent number `T(2m+1, 0)`.
pub fn tangent_number(m: usize) -> BigInt {
    triangle_coeff(2 * m + 1, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TanFunc {
    Tan,
    Cot,
    Tanh,
    Coth,
}

impl TanFunc {
    pub const ALL: [TanFunc; 4] = [TanFunc::Tan, TanFunc::Cot, TanFunc::Tanh, TanFunc::Coth];

    pub fn name(self) -> &'static str {
        crate::Func::from(self).name()
    }

    pub fn apply<F: Real>(self, x: F) -> F {
        match self {
            TanFunc::Tan => x.tan(),
            TanFunc::Cot => x.tan().recip(),
            TanFunc::Tanh => x.tanh(),
            TanFunc::Coth => x.tanh().recip(),
        }
    }

    /// Sign multiplying `T(n, p)` in the expansion of `D^n f` over `f^p`.
    fn sign(self, n: usize, power: usize) -> bool {
        let n_odd = n % 2 == 1;
        match self {
            TanFunc::Tan => false,
            TanFunc::Cot => n_odd,
            TanFunc::Tanh | TanFunc::Coth => {
                // power = n - 2k + 1
                let k = (n + 1 - power) / 2;
                n_odd ^ (k % 2 == 1)
            }
        }
    }
}

impl fmt::Display for TanFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `D^n f` written as `sum_p c_p f^p` with `f` the function itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TanDerivExpansion {
    pub func: TanFunc,
    pub order: usize,
    /// Nonzero coefficients keyed by power; powers share the parity of `n+1`.
    pub terms: BTreeMap<usize, BigInt>,
}

impl TanDerivExpansion {
    /// The expansion as a polynomial in `t = f(x)`.
    pub fn as_poly(&self) -> IntPoly {
        let Some((&top, _)) = self.terms.last_key_value() else {
            return IntPoly::zero();
        };
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (&p, c) in &self.terms {
            coeffs[p] = c.clone();
        }
        IntPoly::new(coeffs)
    }

    /// Evaluates at `x` by substituting `f(x)`.
    pub fn eval<F: Real>(&self, x: F) -> Result<F> {
        let t = self.func.apply(x);
        if !t.is_finite() {
            return Err(Error::Pole(format!("{}({x}) is not finite", self.func)));
        }
        let v = self.as_poly().eval(&t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Pole(format!("D^{} {}({x}) overflows", self.order, self.func)))
        }
    }
}

/// Expands `D^n f` for `f` in the tan family, from the shared triangle.
pub fn tan_family_deriv(func: TanFunc, n: usize) -> TanDerivExpansion {
    with_triangle(n, |t| expansion_from(t, func, n))
}

/// Same as [`tan_family_deriv`], reading a caller-supplied triangle.
pub fn expansion_from(t: &CoeffTriangle, func: TanFunc, n: usize) -> TanDerivExpansion {
    let terms = (0..=n.div_ceil(2))
        .map(|k| n + 1 - 2 * k)
        .filter_map(|p| {
            let c = t.get(n, p as i64);
            (!c.is_zero()).then(|| (p, if func.sign(n, p) { -c } else { c }))
        })
        .collect();
    TanDerivExpansion { func, order: n, terms }
}

/// Evaluates `D^n f(x)` through the expansion.
pub fn eval_tan_family_deriv<F: Real>(func: TanFunc, n: usize, x: F) -> Result<F> {
    tan_family_deriv(func, n).eval(x)
}

/// Applies one chain-rule step to an expansion in `t`: `p'(t) · f'(t)`,
/// where `f' = 1 + t^2` for tan and `-(1 + t^2)`, `1 - t^2` for the others.
pub fn chain_rule_step(e: &TanDerivExpansion) -> TanDerivExpansion {
    let dt = match e.func {
        TanFunc::Tan => IntPoly::from_i64s(&[1, 0, 1]),
        TanFunc::Cot => IntPoly::from_i64s(&[-1, 0, -1]),
        TanFunc::Tanh | TanFunc::Coth => IntPoly::from_i64s(&[1, 0, -1]),
    };
    let next = &e.as_poly().derivative() * &dt;
    let terms = next
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p, c.clone()))
        .collect();
    TanDerivExpansion {
        func: e.func,
        order: e.order + 1,
        terms,
    }
}

/// Checks the structural invariants of a triangle row by row, returning the
/// first violation.
pub fn check_row(t: &CoeffTriangle, n: usize) -> std::result::Result<(), String> {
    let row = t.row(n).ok_or_else(|| format!("row {n} missing"))?;
    if n == 0 {
        let want = [BigInt::zero(), BigInt::one()];
        return if row == want {
            Ok(())
        } else {
            Err("row 0 is not δ(k,1)".into())
        };
    }
    for (k, c) in row.iter().enumerate() {
        if (n + 1 - k.min(n + 1)) % 2 == 1 && !c.is_zero() {
            return Err(format!("T({n},{k}) = {c} should vanish by parity"));
        }
        if c.is_negative() {
            return Err(format!("T({n},{k}) = {c} is negative"));
        }
    }
    if t.get(n, n as i64 + 1) != crate::factorial(n as u64) {
        return Err(format!("T({n},{}) != {n}!", n + 1));
    }
    for k in 0..=n + 1 {
        let k = k as i64;
        let want = BigInt::from(k - 1) * t.get(n - 1, k - 1) + BigInt::from(k + 1) * t.get(n - 1, k + 1);
        if t.get(n, k) != want {
            return Err(format!("T({n},{k}) breaks the recursion"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorial;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn terms(pairs: &[(usize, i64)]) -> BTreeMap<usize, BigInt> {
        pairs.iter().map(|&(p, c)| (p, BigInt::from(c))).collect()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(triangle_coeff(0, 1), 1.into());
        assert_eq!(triangle_coeff(0, 0), 0.into());
        assert_eq!(triangle_coeff(6, 1), 272.into());
        assert_eq!(triangle_coeff(7, 0), 272.into());
        assert_eq!(triangle_coeff(5, 0), 16.into());
        assert_eq!(triangle_coeff(4, -1), 0.into());
        assert_eq!(triangle_coeff(4, 9), 0.into());
    }

    #[test]
    fn tangent_number_examples() {
        assert_eq!(tangent_number(0), 1.into());
        assert_eq!(tangent_number(1), 2.into());
        assert_eq!(tangent_number(2), 16.into());
        assert_eq!(tangent_number(4), 7936.into());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            tan_family_deriv(TanFunc::Tan, 6).terms,
            terms(&[(1, 272), (3, 1232), (5, 1680), (7, 720)])
        );
        assert_eq!(
            tan_family_deriv(TanFunc::Tanh, 3).terms,
            terms(&[(0, -2), (2, 8), (4, -6)])
        );
        assert_eq!(tan_family_deriv(TanFunc::Cot, 0).terms, terms(&[(1, 1)]));
        assert_eq!(tan_family_deriv(TanFunc::Tanh, 0).terms, terms(&[(1, 1)]));
        assert_eq!(
            tan_family_deriv(TanFunc::Coth, 6).terms,
            terms(&[(1, -272), (3, 1232), (5, -1680), (7, 720)])
        );
        assert_eq!(tan_family_deriv(TanFunc::Cot, 1).terms, terms(&[(0, -1), (2, -1)]));
    }

    #[test]
    fn eval_examples() {
        let v = eval_tan_family_deriv(TanFunc::Tan, 6, FRAC_PI_4).unwrap();
        assert!((v - 3904.0).abs() < 1e-9 * 3904.0, "{v}");
        assert_eq!(eval_tan_family_deriv(TanFunc::Tanh, 1, 0.0).unwrap(), 1.0);
        let v = eval_tan_family_deriv(TanFunc::Cot, 1, FRAC_PI_2).unwrap();
        assert!((v + 1.0).abs() < 1e-15);
        let v32 = eval_tan_family_deriv(TanFunc::Tan, 2, std::f32::consts::FRAC_PI_4).unwrap();
        assert!((v32 - 4.0).abs() < 1e-5);
    }

    #[test]
    fn pole_detection() {
        assert!(matches!(
            eval_tan_family_deriv(TanFunc::Cot, 2, 0.0),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            eval_tan_family_deriv(TanFunc::Coth, 0, 0.0),
            Err(Error::Pole(_))
        ));
        assert!(matches!(
            eval_tan_family_deriv(TanFunc::Tan, 40, std::f64::consts::FRAC_PI_2),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn rows_up_to_60() {
        let t = CoeffTriangle::new(60);
        for n in 0..=60 {
            check_row(&t, n).unwrap();
            assert_eq!(t.get(n, n as i64 + 1), factorial(n as u64));
            for k in 0..=n + 1 {
                if (n + 1 - k) % 2 == 1 {
                    assert!(t.get(n, k as i64).is_zero());
                }
            }
        }
    }

    #[test]
    fn chain_rule_reproduces_next_order() {
        for func in TanFunc::ALL {
            for n in 0..=60 {
                let step = chain_rule_step(&tan_family_deriv(func, n));
                assert_eq!(step, tan_family_deriv(func, n + 1), "{func} n={n}");
            }
        }
    }

    #[test]
    fn cot_is_signed_tan() {
        for n in 0..=30 {
            let tan = tan_family_deriv(TanFunc::Tan, n);
            let cot = tan_family_deriv(TanFunc::Cot, n);
            let sign = if n % 2 == 1 { -1 } else { 1 };
            let flipped: BTreeMap<_, _> = tan.terms.iter().map(|(&p, c)| (p, c * sign)).collect();
            assert_eq!(cot.terms, flipped);
        }
    }

    #[test]
    fn corrupted_row_is_caught() {
        let mut rows = CoeffTriangle::new(8).rows().to_vec();
        rows[5][2] += 1;
        let bad = CoeffTriangle::from_rows(rows);
        assert!(check_row(&bad, 4).is_ok());
        assert!(check_row(&bad, 5).is_err());
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || triangle_coeff(20 + 5 * i, 1)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), CoeffTriangle::new(20 + 5 * i).get(20 + 5 * i, 1));
        }
    }
}
