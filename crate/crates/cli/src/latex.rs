//! LaTeX rendering in ascending powers, matching the worked-example layout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use tanderiv::{ArcDerivForm, CoeffTriangle, Func, TanDerivExpansion};

use crate::records::Formula;

/// `\tan`, `\arccoth`, ... (the last three need a user macro in the preamble).
pub fn macro_name(func: Func) -> String {
    format!("\\{}", func.name())
}

/// `D_x \tan(x)`, `D_x^6 \tan(x)`, or `\tan(x)` for order zero.
pub fn lhs(func: Func, n: usize) -> String {
    match n {
        0 => format!("{}(x)", macro_name(func)),
        1 => format!("D_x {}(x)", macro_name(func)),
        _ => format!("D_x^{n} {}(x)", macro_name(func)),
    }
}

/// Joins signed terms as `a + b - c`, with a bare leading minus.
fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in terms {
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Coefficient magnitude followed by `var`, dropping a unit coefficient.
fn scaled(mag: &BigInt, var: &str) -> String {
    if var.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        var.to_owned()
    } else {
        format!("{mag}{var}")
    }
}

fn power_of(var: &str, p: usize) -> String {
    match p {
        0 => String::new(),
        1 => var.to_owned(),
        _ => format!("{var}^{p}"),
    }
}

/// `272\tan(x) + 1232\tan^3(x) + ...`
pub fn tan_rhs(e: &TanDerivExpansion) -> String {
    let m = macro_name(e.func.into());
    join_signed(e.terms.iter().map(|(&p, c)| {
        let var = match p {
            0 => String::new(),
            1 => format!("{m}(x)"),
            _ => format!("{m}^{p}(x)"),
        };
        (c.is_negative(), scaled(&c.abs(), &var))
    }))
}

/// Polynomial in `x`, ascending powers: `1 - 10x^2 + 5x^4`.
pub fn poly_in_x(coeffs: &[BigInt]) -> String {
    join_signed(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| (c.is_negative(), scaled(&c.abs(), &power_of("x", p)))),
    )
}

/// `\frac{24(1 - 10x^2 + 5x^4)}{(1+x^2)^5}`, `\frac{-2x}{(1+x^2)^2}`.
pub fn arc_rhs(a: &ArcDerivForm) -> String {
    let f = a.factored();
    let body_is_one = f.body.coeffs() == [BigInt::one()];
    let xs = power_of("x", f.x_power);
    let mut num = if f.coefficient.abs().is_one() && (!xs.is_empty() || !body_is_one) {
        if f.coefficient.is_negative() {
            "-".to_owned()
        } else {
            String::new()
        }
    } else {
        f.coefficient.to_string()
    };
    num.push_str(&xs);
    if !body_is_one {
        num.push_str(&format!("({})", poly_in_x(f.body.coeffs())));
    }
    let base = if a.base_sign > 0 { "1+x^2" } else { "1-x^2" };
    let den = match a.denom_power {
        1 => base.to_owned(),
        p => format!("({base})^{p}"),
    };
    format!("\\frac{{{num}}}{{{den}}}")
}

pub fn rhs(f: &Formula) -> String {
    match f {
        Formula::Tan(e) => tan_rhs(e),
        Formula::Arc(a) => arc_rhs(a),
    }
}

/// `lhs = rhs` for one formula.
pub fn formula(f: &Formula) -> String {
    format!("{} = {}", lhs(f.func(), f.order()), rhs(f))
}

/// The formula inside an `equation` environment, one line each.
pub fn equation(f: &Formula) -> String {
    format!("\\begin{{equation}}\n {}\n\\end{{equation}}\n", formula(f))
}

/// `\frac{p}{q}`, or the integer itself.
pub fn rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
    }
}

/// Triangle rows as an `array`, columns `k = 0..=nmax+1`.
pub fn triangle(t: &CoeffTriangle, nmax: usize) -> String {
    let cols = nmax + 2;
    let mut out = format!("\\begin{{array}}{{r|{}}}\n", "r".repeat(cols));
    let header: Vec<String> = (0..cols).map(|k| k.to_string()).collect();
    out.push_str(&format!("n \\backslash k & {} \\\\\n\\hline\n", header.join(" & ")));
    for n in 0..=nmax {
        let row: Vec<String> = (0..cols).map(|k| t.get(n, k as i64).to_string()).collect();
        out.push_str(&format!("{n} & {} \\\\\n", row.join(" & ")));
    }
    out.push_str("\\end{array}\n");
    out
}
