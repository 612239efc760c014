//! Runnable invariant suites.
//!
//! Every suite is deterministic for a given seed. A [`Report`] lists one
//! [`CheckResult`] per invariant, with how many individual comparisons ran.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::{
    abs_numerator, arc_deriv, arc_deriv_at_zero, cheb_form_eval, sin_arcsin_form_eval, sin_arcsin_kernel,
    sin_arcsin_kernel_derivative, ArcFunc,
};
use crate::chebyshev::{cheb_closed, cheb_recurrence, sin_n_arcsin, t_from_u, ChebKind};
use crate::oracles::{
    default_step, finite_difference_fn, finite_difference_richardson, jet_derivative, tan_series, Jet, RatFun,
};
use crate::scalar::rel_diff;
use crate::signum::{
    arctan_arccot_identity_residual, arctan_arccot_residual_real, arctanh_arccoth_identity_residual, principal_sqrt,
    sg_complex, sg_complex_via_sqrt, sg_real, Sg,
};
use crate::triangle::{chain_rule_step, check_row, expansion_from, CoeffTriangle, TanFunc};
use crate::{factorial, Error, Func};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Triangle,
    Arc,
    Cheb,
    Signum,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "triangle" => Ok(Suite::Triangle),
            "arc" => Ok(Suite::Arc),
            "cheb" => Ok(Suite::Cheb),
            "signum" => Ok(Suite::Signum),
            "all" => Ok(Suite::All),
            _ => Err(Error::Domain(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    /// Overrides every suite's default order limit (60, 20, 64).
    pub nmax: Option<usize>,
    pub seed: u64,
    /// Triangle the triangle checks read instead of a freshly built one.
    pub triangle: Option<CoeffTriangle>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            nmax: None,
            seed: 42,
            triangle: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failure: Option<String>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failure.is_none() && self.passed == self.total && self.total > 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{tag}  {:<34} {:>6}/{:<6}", self.name, self.passed, self.total)?;
        if let Some(msg) = &self.failure {
            write!(f, "  first failure: {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.ok()).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

struct Tally {
    name: &'static str,
    passed: usize,
    total: usize,
    failure: Option<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            passed: 0,
            total: 0,
            failure: None,
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    fn close(&mut self, a: f64, b: f64, tol: f64, ctx: impl FnOnce() -> String) {
        let d = rel_diff(a, b);
        self.check(d <= tol, || format!("{}: {a} vs {b} (rel {d:.2e})", ctx()));
    }

    fn done(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: self.passed,
            total: self.total,
            failure: self.failure,
            elapsed: self.start.elapsed(),
        }
    }
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs one suite (or all of them).
pub fn run(suite: Suite, cfg: &Config) -> Report {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Triangle | Suite::All) {
        checks.extend(triangle_checks(cfg));
    }
    if matches!(suite, Suite::Arc | Suite::All) {
        checks.extend(arc_checks(cfg));
    }
    if matches!(suite, Suite::Cheb | Suite::All) {
        checks.extend(cheb_checks(cfg));
    }
    if matches!(suite, Suite::Signum | Suite::All) {
        checks.extend(signum_checks(cfg));
    }
    Report { checks }
}

// ---------------------------------------------------------------- triangle

pub fn triangle_checks(cfg: &Config) -> Vec<CheckResult> {
    let nmax = cfg.nmax.unwrap_or(60);
    let built;
    let t = match &cfg.triangle {
        Some(t) => t,
        None => {
            built = CoeffTriangle::new(nmax.max(25));
            &built
        }
    };
    let nmax = nmax.min(t.nmax());
    let mut out = Vec::new();

    let mut c = Tally::new("triangle.rows");
    for n in 0..=nmax {
        let r = check_row(t, n);
        c.check(r.is_ok(), || r.unwrap_err());
    }
    out.push(c.done());

    let mut c = Tally::new("triangle.worked_values");
    if t.nmax() >= 7 {
        c.check(t.get(6, 1) == BigInt::from(272), || format!("T(6,1) = {}", t.get(6, 1)));
        c.check(t.get(5, 0) == BigInt::from(16), || format!("T(5,0) = {}", t.get(5, 0)));
        c.check(t.get(7, 0) == BigInt::from(272), || format!("T(7,0) = {}", t.get(7, 0)));
    }
    out.push(c.done());

    let mut c = Tally::new("triangle.chain_rule");
    for func in TanFunc::ALL {
        for n in 0..nmax {
            let ok = chain_rule_step(&expansion_from(t, func, n)) == expansion_from(t, func, n + 1);
            c.check(ok, || format!("D(D^{n} {func}) != D^{} {func}", n + 1));
        }
    }
    out.push(c.done());

    let mut c = Tally::new("triangle.cot_sign_symmetry");
    for n in 0..=nmax {
        let tan = expansion_from(t, TanFunc::Tan, n);
        let cot = expansion_from(t, TanFunc::Cot, n);
        let sign = if n % 2 == 1 { -1 } else { 1 };
        let ok =
            tan.terms.len() == cot.terms.len() && tan.terms.iter().all(|(p, v)| cot.terms.get(p) == Some(&(v * sign)));
        c.check(ok, || format!("cot expansion at n={n}"));
    }
    out.push(c.done());

    let mut c = Tally::new("triangle.tangent_numbers");
    let kmax = 12.min((t.nmax().saturating_sub(1)) / 2);
    let series = tan_series(2 * kmax + 1);
    for k in 0..=kmax {
        let m = 2 * k + 1;
        let want = series.coeff(m) * BigRational::from_integer(factorial(m as u64));
        let got = BigRational::from_integer(t.get(m, 0));
        c.check(want == got, || format!("T({m},0) = {got}, series gives {want}"));
    }
    out.push(c.done());

    let mut c = Tally::new("triangle.jet_agreement");
    let order = 8.min(t.nmax());
    for (salt, func) in TanFunc::ALL.into_iter().enumerate() {
        let mut r = rng(cfg.seed, 100 + salt as u64);
        for _ in 0..50 {
            let x = sample_point(Func::from(func), &mut r);
            for n in 0..=order {
                let closed = expansion_from(t, func, n).eval(x);
                let jet = jet_derivative(Func::from(func), n, x);
                match (closed, jet) {
                    (Ok(a), Ok(b)) => c.close(a, b, 1e-9, || format!("D^{n} {func}({x})")),
                    (a, b) => c.check(false, || format!("D^{n} {func}({x}): {a:?} / {b:?}")),
                }
            }
        }
    }
    out.push(c.done());

    out.push(jet_ode_check(cfg.seed));
    out.push(jet_vs_fd_check(cfg.seed));
    out
}

/// A point at least 0.2 from every pole or branch point of `func`.
pub fn sample_point(func: Func, r: &mut ChaCha8Rng) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    let margin = 0.2;
    loop {
        let x: f64 = match func {
            Func::Arctanh => r.gen_range(-0.8..0.8),
            Func::Arccoth => {
                let m: f64 = r.gen_range(1.2..4.0);
                if r.gen_bool(0.5) {
                    m
                } else {
                    -m
                }
            }
            _ => r.gen_range(-3.0..3.0),
        };
        let ok = match func {
            Func::Tan => ((x - FRAC_PI_2) / PI - ((x - FRAC_PI_2) / PI).round()).abs() * PI >= margin,
            Func::Cot => (x / PI - (x / PI).round()).abs() * PI >= margin,
            Func::Coth | Func::Arccot => x.abs() >= margin,
            _ => true,
        };
        if ok {
            return x;
        }
    }
}

fn jet_ode_check(seed: u64) -> CheckResult {
    let mut c = Tally::new("oracles.jet_tan_ode");
    let mut r = rng(seed, 7);
    for _ in 0..30 {
        let x0 = sample_point(Func::Tan, &mut r);
        let u = Jet::variable(x0, 10);
        let (s, co) = u.sin_cos();
        let Ok(t) = s.div(&co) else {
            c.check(false, || format!("cos jet vanishes at {x0}"));
            continue;
        };
        let lhs = t.differentiate();
        let rhs = Jet::constant(x0, 1.0, 10).add(&t.mul(&t));
        for k in 0..lhs.order() {
            c.close(lhs.coeffs()[k], rhs.coeffs()[k], 1e-12, || format!("x0={x0} k={k}"));
        }
    }
    c.done()
}

fn jet_vs_fd_check(seed: u64) -> CheckResult {
    let mut c = Tally::new("oracles.jet_vs_finite_difference");
    for (salt, func) in Func::ALL.into_iter().enumerate() {
        let mut r = rng(seed, 200 + salt as u64);
        for _ in 0..30 {
            let x = sample_point(func, &mut r);
            for n in 1..=3 {
                let fd = finite_difference_richardson(func, n, x, None);
                let jet = jet_derivative(func, n, x);
                match (fd, jet) {
                    (Ok(a), Ok(b)) => c.close(a, b, 1e-5, || format!("D^{n} {func}({x})")),
                    (a, b) => c.check(false, || format!("D^{n} {func}({x}): {a:?} / {b:?}")),
                }
            }
        }
    }
    c.done()
}

// ---------------------------------------------------------------- arc

pub fn arc_checks(cfg: &Config) -> Vec<CheckResult> {
    let nmax = cfg.nmax.unwrap_or(20).max(1);
    let mut out = Vec::new();

    let mut c = Tally::new("arc.symbolic_oracle");
    for func in ArcFunc::ALL {
        let scalar = if func == ArcFunc::Arccot { -1 } else { 1 };
        let first = RatFun::new(
            crate::IntPoly::constant(scalar),
            crate::IntPoly::from_i64s(&[1, 0, func.base_sign() as i64]),
            1,
        )
        .expect("nonzero base");
        let mut d = first;
        for n in 1..=nmax {
            if n > 1 {
                d = d.derivative();
            }
            let form = arc_deriv(func, n).expect("n >= 1");
            let ok = d.base() == &form.base() && d.numerator_at_power(n as u32) == Some(form.full_numerator());
            c.check(ok, || {
                format!("D^{n} {func}: oracle {} vs closed {}", d.num(), form.full_numerator())
            });
        }
    }
    out.push(c.done());

    let mut c = Tally::new("arc.reflection_theorems");
    for n in 1..=nmax {
        let tan = arc_deriv(ArcFunc::Arctan, n).unwrap();
        let cot = arc_deriv(ArcFunc::Arccot, n).unwrap();
        let tanh = arc_deriv(ArcFunc::Arctanh, n).unwrap();
        let coth = arc_deriv(ArcFunc::Arccoth, n).unwrap();
        c.check(
            cot.scalar == -&tan.scalar && cot.numerator == tan.numerator && cot.base_sign == tan.base_sign,
            || format!("arccot != -arctan at n={n}"),
        );
        c.check(
            coth.scalar == tanh.scalar && coth.numerator == tanh.numerator && coth.base_sign == tanh.base_sign,
            || format!("arccoth != arctanh at n={n}"),
        );
    }
    out.push(c.done());

    let mut c = Tally::new("arc.differentiation_closure");
    for func in ArcFunc::ALL {
        for n in 1..=nmax {
            let form = arc_deriv(func, n).unwrap();
            let next = arc_deriv(func, n + 1).unwrap();
            let f = RatFun::new(form.full_numerator(), form.base(), n as u32).unwrap();
            let d = f.derivative();
            let ok = d.numerator_at_power(n as u32 + 1) == Some(next.full_numerator());
            c.check(ok, || format!("D(D^{n} {func}) != D^{} {func}", n + 1));
        }
    }
    out.push(c.done());

    let mut c = Tally::new("arc.abs_relation");
    for n in 1..=nmax.max(30) {
        let t = arc_deriv(ArcFunc::Arctan, n).unwrap();
        let h = arc_deriv(ArcFunc::Arctanh, n).unwrap();
        c.check(abs_numerator(&t.numerator) == h.numerator, || format!("n={n}"));
    }
    out.push(c.done());

    let mut c = Tally::new("arc.value_at_zero");
    for n in 1..=nmax {
        let v = arc_deriv(ArcFunc::Arctan, n)
            .unwrap()
            .eval(&BigRational::zero())
            .unwrap();
        let want = BigRational::from_integer(arc_deriv_at_zero(n).unwrap());
        c.check(v == want, || format!("n={n}: {v} vs {want}"));
        // relative to (n-1)!, the size of the nonzero values
        let scale = <f64 as crate::Scalar>::from_bigint(&factorial(n as u64 - 1));
        let s = sin_arcsin_form_eval(n, 0.0).unwrap() / scale;
        let w = <f64 as crate::Scalar>::from_bigint(want.numer()) / scale;
        c.close(s, w, 1e-12, || format!("sin-arcsin form n={n}"));
    }
    out.push(c.done());

    let mut c = Tally::new("arc.parity");
    for n in 1..=nmax {
        let num = arc_deriv(ArcFunc::Arctan, n).unwrap().numerator;
        let want = if n % 2 == 1 { num.clone() } else { -&num };
        c.check(num.reflect() == want, || format!("numerator parity n={n}"));
    }
    out.push(c.done());

    out.push(three_way_check(cfg.seed));
    out.push(arctanh_pair_check(cfg.seed));

    let mut c = Tally::new("arc.jet_agreement");
    for (salt, func) in ArcFunc::ALL.into_iter().enumerate() {
        let mut r = rng(cfg.seed, 300 + salt as u64);
        for _ in 0..50 {
            let x = sample_point(Func::from(func), &mut r);
            for n in 1..=8 {
                let closed = arc_deriv(func, n).unwrap().eval(&x);
                let jet = jet_derivative(Func::from(func), n, x);
                match (closed, jet) {
                    (Ok(a), Ok(b)) => c.close(a, b, 1e-9, || format!("D^{n} {func}({x})")),
                    (a, b) => c.check(false, || format!("D^{n} {func}({x}): {a:?} / {b:?}")),
                }
            }
        }
    }
    out.push(c.done());

    out.push(induction_check());
    out
}

fn three_way_check(seed: u64) -> CheckResult {
    let mut c = Tally::new("arc.three_way_agreement");
    let mut r = rng(seed, 400);
    let points: Vec<f64> = (0..100).map(|_| r.gen_range(-3.0..3.0)).collect();
    for n in 1..=10 {
        let form = arc_deriv(ArcFunc::Arctan, n).unwrap();
        for &x in &points {
            let a = form.eval(&x).unwrap();
            let b = cheb_form_eval(ArcFunc::Arctan, n, x).unwrap();
            let s = sin_arcsin_form_eval(n, x).unwrap();
            c.close(a, b, 1e-10, || format!("poly vs U-form n={n} x={x}"));
            c.close(a, s, 1e-10, || format!("poly vs sin-arcsin n={n} x={x}"));
            c.close(b, s, 1e-10, || format!("U-form vs sin-arcsin n={n} x={x}"));
        }
    }
    c.done()
}

fn arctanh_pair_check(seed: u64) -> CheckResult {
    let mut c = Tally::new("arc.arctanh_chebyshev_pair");
    let mut r = rng(seed, 500);
    let points: Vec<f64> = (0..100).map(|_| r.gen_range(-0.9..0.9)).collect();
    for n in 1..=10 {
        let form = arc_deriv(ArcFunc::Arctanh, n).unwrap();
        for &x in &points {
            let a = form.eval(&x).unwrap();
            let b = cheb_form_eval(ArcFunc::Arctanh, n, x).unwrap();
            c.close(a, b, 1e-10, || format!("n={n} x={x}"));
        }
    }
    c.done()
}

/// Grid for the induction check: ±0.1..±3.0, never 0.
pub fn induction_grid() -> Vec<f64> {
    (1..=30).flat_map(|i| [i as f64 / 10.0, -(i as f64) / 10.0]).collect()
}

fn induction_check() -> CheckResult {
    let mut c = Tally::new("arc.induction_step");
    for n in 1..=8 {
        for x in induction_grid() {
            let h = default_step(1, x);
            let lhs = finite_difference_fn(|t| Ok(sin_arcsin_kernel(n, t)), 1, x, h);
            let rhs = sin_arcsin_kernel_derivative(n, x);
            match lhs {
                Ok(l) => c.close(l, rhs, 1e-6, || format!("n={n} x={x}")),
                Err(e) => c.check(false, || format!("n={n} x={x}: {e}")),
            }
        }
    }
    c.done()
}

// ---------------------------------------------------------------- chebyshev

pub fn cheb_checks(cfg: &Config) -> Vec<CheckResult> {
    let nmax = cfg.nmax.unwrap_or(64);
    let mut out = Vec::new();

    let mut c = Tally::new("cheb.closed_vs_recurrence");
    for kind in [ChebKind::First, ChebKind::Second] {
        for n in 1..=nmax {
            c.check(cheb_closed(kind, n) == cheb_recurrence(kind, n), || {
                format!("{kind}_{n}")
            });
        }
    }
    out.push(c.done());

    let mut c = Tally::new("cheb.t_from_u");
    for n in 1..=nmax {
        let ok = t_from_u(n)
            .map(|t| t == cheb_recurrence(ChebKind::First, n))
            .unwrap_or(false);
        c.check(ok, || format!("T_{n}"));
    }
    out.push(c.done());

    let mut c = Tally::new("cheb.structure");
    let one = BigRational::one();
    for n in 0..=nmax {
        let u = cheb_closed(ChebKind::Second, n).poly;
        let t = cheb_closed(ChebKind::First, n).poly;
        c.check(u.eval(&one) == BigRational::from_integer((n + 1).into()), || {
            format!("U_{n}(1)")
        });
        c.check(t.eval(&one) == one, || format!("T_{n}(1)"));
        c.check(u.leading_coeff() == Some(&(BigInt::one() << n)), || {
            format!("lead U_{n}")
        });
        let t_lead = if n == 0 {
            BigInt::one()
        } else {
            BigInt::one() << (n - 1)
        };
        c.check(t.leading_coeff() == Some(&t_lead), || format!("lead T_{n}"));
        let sign = if n % 2 == 1 { -1 } else { 1 };
        c.check(u.reflect() == u.scale(&sign.into()), || format!("U_{n}(-x) parity"));
    }
    out.push(c.done());

    let mut c = Tally::new("cheb.float_bounds");
    let mut r = rng(cfg.seed, 600);
    let mut xs: Vec<f64> = (0..198).map(|_| r.gen_range(-1.0..1.0)).collect();
    xs.extend([-1.0, 1.0]);
    for n in 0..=20 {
        let u = cheb_closed(ChebKind::Second, n);
        let t = cheb_closed(ChebKind::First, n);
        for &x in &xs {
            let (uv, tv) = (u.eval(x), t.eval(x));
            c.check(uv.abs() <= (n + 1) as f64 + 1e-12, || format!("|U_{n}({x})| = {uv}"));
            c.check(tv.abs() <= 1.0 + 1e-12, || format!("|T_{n}({x})| = {tv}"));
        }
    }
    out.push(c.done());

    let mut c = Tally::new("cheb.definition_consistency");
    for n in 0..=20 {
        let u = cheb_closed(ChebKind::Second, n);
        for i in 1..100 {
            let x = -1.0 + 2.0 * i as f64 / 100.0;
            let lhs = u.eval(x) * (1.0 - x * x).sqrt();
            let rhs = ((n + 1) as f64 * x.acos()).sin();
            c.check((lhs - rhs).abs() <= 1e-12, || format!("n={n} x={x}: {lhs} vs {rhs}"));
        }
    }
    out.push(c.done());

    out.push(sin_n_arcsin_check());
    out
}

fn sin_n_arcsin_check() -> CheckResult {
    let mut c = Tally::new("cheb.sin_n_arcsin");
    for n in 0..=15 {
        for i in 0..=100 {
            let x = -1.0 + 2.0 * i as f64 / 100.0;
            let direct = (n as f64 * x.asin()).sin();
            match sin_n_arcsin(n, x) {
                Ok(v) => c.check((v - direct).abs() <= 1e-12, || format!("n={n} x={x}: {v} vs {direct}")),
                Err(e) => c.check(false, || e.to_string()),
            }
        }
    }
    c.done()
}

// ---------------------------------------------------------------- signum

/// The 41×41 grid over `[-2, 2]^2` with step 0.1, hitting 0 and ±1 exactly.
pub fn signum_grid() -> Vec<Complex<f64>> {
    let coord = |a: i32| (a - 20) as f64 / 10.0;
    (0..41)
        .flat_map(|a| (0..41).map(move |b| Complex::new(coord(a), coord(b))))
        .collect()
}

pub fn signum_checks(cfg: &Config) -> Vec<CheckResult> {
    let grid = signum_grid();
    let zero = Complex::new(0.0, 0.0);
    let mut out = Vec::new();

    let mut c = Tally::new("signum.table_vs_sqrt_formula");
    for &z in grid.iter().filter(|&&z| z != zero) {
        let oracle = sg_complex_via_sqrt(z);
        let want = sg_complex(z).value() as f64;
        c.check((oracle - Complex::new(want, 0.0)).norm() < 1e-14, || {
            format!("{z}: {oracle}")
        });
    }
    out.push(c.done());

    let mut c = Tally::new("signum.sqrt_identities");
    for &z in &grid {
        let s: f64 = sg_complex(z).as_real();
        let root = principal_sqrt(z * z);
        let tol = 1e-14 * z.norm().max(1.0);
        c.check((root * s - z).norm() <= tol, || format!("sg·sqrt(x²) at {z}"));
        c.check((z * s - root).norm() <= tol, || format!("sg·x at {z}"));
        c.check(sg_complex(principal_sqrt(z)) == Sg::Plus, || {
            format!("sg(sqrt x) at {z}")
        });
    }
    out.push(c.done());

    let mut c = Tally::new("signum.symmetries");
    for &z in &grid {
        let s = sg_complex(z);
        c.check(s * s == Sg::Plus, || format!("1/sg = sg at {z}"));
        if z != zero {
            c.check(sg_complex(-z) == s.negate(), || format!("sg(-x) at {z}"));
        }
        if z.im == 0.0 {
            let ix = Complex::new(0.0, z.re);
            c.check(sg_complex(ix) == sg_real(z.re), || {
                format!("sg(ix) = sg(x) at {}", z.re)
            });
        }
    }
    out.push(c.done());

    let mut c = Tally::new("signum.arctan_arccot_identity");
    let mut r = rng(cfg.seed, 700);
    let mut reals: Vec<f64> = (0..100).map(|_| r.gen_range(-5.0..5.0)).collect();
    reals.extend([0.0, 1.0, -1.0, -3.0, 0.5]);
    for &x in &reals {
        let res = arctan_arccot_residual_real(x);
        c.check(res < 1e-12, || format!("real {x}: residual {res:.2e}"));
    }
    for &z in &grid {
        if z == Complex::new(0.0, 1.0) || z == Complex::new(0.0, -1.0) {
            continue;
        }
        match arctan_arccot_identity_residual(z) {
            Ok(res) => c.check(res < 1e-12, || format!("{z}: residual {res:.2e}")),
            Err(e) => c.check(false, || format!("{z}: {e}")),
        }
    }
    out.push(c.done());

    let mut c = Tally::new("signum.arctanh_arccoth_identity");
    for &z in &grid {
        if z.im == 0.0 && (z.re == 0.0 || z.re.abs() == 1.0) {
            continue;
        }
        match arctanh_arccoth_identity_residual(z) {
            Ok(res) => c.check(res < 1e-12, || format!("{z}: residual {res:.2e}")),
            Err(e) => c.check(false, || format!("{z}: {e}")),
        }
    }
    out.push(c.done());

    out
}
