//! Reader for hand-typeset derivative formulas, independent of the crate's
//! own LaTeX writer.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use tanderiv::{Func, IntPoly};
use tanderiv_cli::records::Formula;

pub const WORKED_EXAMPLES: &str = include_str!("../fixtures/worked_examples.tex");
pub const GOLDEN_TEX: &str = include_str!("../../golden/report.tex");
pub const GOLDEN_JSON: &str = include_str!("../../golden/report.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    /// Coefficient by power of the function itself.
    Tan(BTreeMap<usize, BigInt>),
    /// Expanded numerator over `(1 + base_sign x^2)^power`.
    Arc {
        numerator: IntPoly,
        base_sign: i8,
        power: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Typeset {
    pub func: Func,
    pub n: usize,
    pub body: Body,
}

/// Formula lines inside `equation` environments.
pub fn equation_lines(tex: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut inside = false;
    for line in tex.lines() {
        let t = line.trim();
        if t == "\\begin{equation}" {
            inside = true;
        } else if t == "\\end{equation}" {
            inside = false;
        } else if inside && !t.is_empty() {
            out.push(t);
        }
    }
    out
}

pub fn parse(line: &str) -> Result<Typeset, String> {
    let (lhs, rhs) = line.split_once('=').ok_or("no `=`")?;
    let lhs: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
    let rhs: String = rhs.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = lhs.strip_prefix("D_x").ok_or("lhs must start with D_x")?;
    let (n, rest) = match rest.strip_prefix('^') {
        Some(r) => {
            let digits: String = r.chars().take_while(char::is_ascii_digit).collect();
            (digits.parse::<usize>().map_err(|e| e.to_string())?, &r[digits.len()..])
        }
        None => (1, rest),
    };
    let name = rest
        .strip_prefix('\\')
        .and_then(|r| r.strip_suffix("(x)"))
        .ok_or("bad function on lhs")?;
    let func: Func = name.parse().map_err(|_| format!("unknown function {name}"))?;
    let body = if let Some(frac) = rhs.strip_prefix("\\frac") {
        parse_frac(frac)?
    } else {
        Body::Tan(parse_tan_sum(&rhs, name)?)
    };
    Ok(Typeset { func, n, body })
}

/// Splits `a+b-c` into signed pieces at depth zero.
fn signed_pieces(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    for c in s.chars() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (c == '+' || c == '-') && !cur.is_empty() {
            out.push((negative, std::mem::take(&mut cur)));
            negative = c == '-';
        } else if depth == 0 && c == '-' && cur.is_empty() {
            negative = !negative;
        } else if !(depth == 0 && c == '+' && cur.is_empty()) {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push((negative, cur));
    }
    out
}

fn leading_int(s: &str) -> (Option<BigInt>, &str) {
    let digits: String = s.chars().take_while(char::is_ascii_digit).collect();
    if digits.is_empty() {
        (None, s)
    } else {
        (Some(digits.parse().unwrap()), &s[digits.len()..])
    }
}

fn exponent(s: &str) -> Result<(usize, &str), String> {
    match s.strip_prefix('^') {
        Some(r) => {
            let (e, r) = leading_int(r);
            let e = e.ok_or("missing exponent")?;
            Ok((e.try_into().map_err(|_| "huge exponent")?, r))
        }
        None => Ok((1, s)),
    }
}

fn parse_tan_sum(s: &str, name: &str) -> Result<BTreeMap<usize, BigInt>, String> {
    let mut terms = BTreeMap::new();
    let var = format!("\\{name}");
    for (negative, piece) in signed_pieces(s) {
        let (c, rest) = leading_int(&piece);
        let power = if rest.is_empty() {
            0
        } else {
            let r = rest.strip_prefix(var.as_str()).ok_or(format!("bad term {piece}"))?;
            let (p, r) = exponent(r)?;
            if r != "(x)" {
                return Err(format!("bad term {piece}"));
            }
            p
        };
        let c = c.unwrap_or_else(BigInt::one);
        terms.insert(power, if negative { -c } else { c });
    }
    Ok(terms)
}

fn parse_poly(s: &str) -> Result<IntPoly, String> {
    let mut acc = IntPoly::zero();
    for (negative, piece) in signed_pieces(s) {
        let (c, rest) = leading_int(&piece);
        let c = c.unwrap_or_else(BigInt::one);
        let p = if rest.is_empty() {
            0
        } else {
            let r = rest.strip_prefix('x').ok_or(format!("bad monomial {piece}"))?;
            let (p, r) = exponent(r)?;
            if !r.is_empty() {
                return Err(format!("bad monomial {piece}"));
            }
            p
        };
        acc = &acc + &IntPoly::monomial(if negative { -c } else { c }, p);
    }
    Ok(acc)
}

fn braced(s: &str) -> Result<(&str, &str), String> {
    let s = s.strip_prefix('{').ok_or("expected `{`")?;
    let mut depth = 1;
    for (i, c) in s.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&s[..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    Err("unbalanced braces".into())
}

/// `c x^k (poly)` with every part optional, as a single polynomial.
fn parse_numerator(s: &str) -> Result<IntPoly, String> {
    let (negative, s) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (c, mut rest) = leading_int(s);
    let mut c = c.unwrap_or_else(BigInt::one);
    if negative {
        c = -c;
    }
    let mut xp = 0;
    if let Some(r) = rest.strip_prefix('x') {
        let (p, r) = exponent(r)?;
        xp = p;
        rest = r;
    }
    let body = if rest.is_empty() {
        IntPoly::one()
    } else {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or(format!("bad numerator {s}"))?;
        parse_poly(inner)?
    };
    Ok(&IntPoly::monomial(c, xp) * &body)
}

fn parse_frac(s: &str) -> Result<Body, String> {
    let (num, rest) = braced(s)?;
    let (den, rest) = braced(rest)?;
    if !rest.is_empty() {
        return Err(format!("trailing `{rest}`"));
    }
    let (base, power) = match den.strip_prefix('(') {
        Some(r) => {
            let (base, r) = r.split_once(')').ok_or("bad denominator")?;
            let (p, r) = exponent(r)?;
            if !r.is_empty() {
                return Err("bad denominator".into());
            }
            (base, p)
        }
        None => (den, 1),
    };
    let base_sign = match base {
        "1+x^2" => 1,
        "1-x^2" => -1,
        _ => return Err(format!("unexpected base {base}")),
    };
    Ok(Body::Arc {
        numerator: parse_numerator(num)?,
        base_sign,
        power,
    })
}

/// Structural comparison of a typeset formula with a generated one.
pub fn matches(t: &Typeset, f: &Formula) -> bool {
    if t.func != f.func() || t.n != f.order() {
        return false;
    }
    match (&t.body, f) {
        (Body::Tan(terms), Formula::Tan(e)) => terms == &e.terms,
        (
            Body::Arc {
                numerator,
                base_sign,
                power,
            },
            Formula::Arc(a),
        ) => numerator == &a.full_numerator() && *base_sign == a.base_sign && *power == a.denom_power,
        _ => false,
    }
}
