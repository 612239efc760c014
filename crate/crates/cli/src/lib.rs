//! Command-line front end for `tanderiv`: coefficient tables, derivative
//! formulas, point evaluations, the worked-example report and the
//! verification suites, as JSON, CSV or LaTeX.

use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use tanderiv::verify::{self, Suite};
use tanderiv::{CoeffTriangle, Func};

pub mod latex;
pub mod records;

use records::{EvalRecord, Formula, FormulaRecord, TriangleRecord};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Math(#[from] tanderiv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "tanderiv",
    version,
    about = "Closed-form higher derivatives of tan, arctan and relatives"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rows 0..=nmax of the T(n,k) coefficient triangle.
    Triangle {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed form of the n-th derivative of one function.
    Deriv {
        func: Func,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Value of the n-th derivative at x; "p/q" or integer x is exact.
    Eval {
        func: Func,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Runs an invariant suite: triangle, arc, cheb, signum or all.
    Verify {
        #[arg(default_value = "all")]
        suite: Suite,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Only json changes the plain-text report.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Adds 2 to the leading entry of this triangle row before checking.
        #[arg(long, hide = true)]
        corrupt_row: Option<usize>,
    },
    /// All worked example formulas: D^1..D^6 of the eight functions.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Latex)]
        format: Format,
    },
}

/// Text to print and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, status: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Triangle { nmax, format } => cmd_triangle(*nmax, *format).map(Outcome::ok),
        Command::Deriv { func, n, format } => cmd_deriv(*func, *n, *format).map(Outcome::ok),
        Command::Eval { func, n, x, format } => cmd_eval(*func, *n, x, *format).map(Outcome::ok),
        Command::Verify {
            suite,
            nmax,
            seed,
            format,
            corrupt_row,
        } => cmd_verify(*suite, *nmax, *seed, *format, *corrupt_row),
        Command::Report { format } => cmd_report(*format).map(Outcome::ok),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records always serialize");
    s.push('\n');
    s
}

pub fn cmd_triangle(nmax: usize, format: Format) -> Result<String, CliError> {
    let t = CoeffTriangle::new(nmax);
    Ok(match format {
        Format::Json => to_json(&TriangleRecord::new(&t, nmax)),
        Format::Csv => {
            let mut out = String::from("n");
            for k in 0..nmax + 2 {
                out.push_str(&format!(",k{k}"));
            }
            out.push('\n');
            for n in 0..=nmax {
                let row: Vec<String> = (0..nmax + 2).map(|k| t.get(n, k as i64).to_string()).collect();
                out.push_str(&format!("{n},{}\n", row.join(",")));
            }
            out
        }
        Format::Latex => latex::triangle(&t, nmax),
    })
}

pub fn cmd_deriv(func: Func, n: usize, format: Format) -> Result<String, CliError> {
    let f = Formula::build(func, n)?;
    Ok(match format {
        Format::Json => to_json(&FormulaRecord::from(&f)),
        Format::Latex => latex::formula(&f) + "\n",
        Format::Csv => match &f {
            Formula::Tan(e) => {
                let mut out = String::from("func,n,power,coeff\n");
                for (p, c) in &e.terms {
                    out.push_str(&format!("{func},{n},{p},{c}\n"));
                }
                out
            }
            Formula::Arc(a) => {
                let mut out = String::from("func,n,scalar,base_sign,denom_power,power,coeff\n");
                for (p, c) in a.numerator.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    out.push_str(&format!(
                        "{func},{n},{},{},{},{p},{c}\n",
                        a.scalar, a.base_sign, a.denom_power
                    ));
                }
                out
            }
        },
    })
}

/// A point given on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    Exact(BigRational),
    Float(f64),
}

impl FromStr for Point {
    type Err = CliError;

    /// `p/q` and plain integers are exact; anything else must be a finite
    /// decimal.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        let bad = || CliError::Parse(format!("cannot read `{s}` as a number"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(CliError::Parse(format!("zero denominator in `{s}`")));
            }
            return Ok(Point::Exact(BigRational::new(p, q)));
        }
        if let Ok(i) = s.parse::<BigInt>() {
            return Ok(Point::Exact(BigRational::from_integer(i)));
        }
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Point::Float(v)),
            _ => Err(bad()),
        }
    }
}

enum Value {
    Exact(BigRational),
    Float(f64),
}

fn eval_value(func: Func, n: usize, x: &Point) -> Result<Value, CliError> {
    let f = Formula::build(func, n)?;
    let value = match (&f, x) {
        (Formula::Arc(a), Point::Exact(q)) => Value::Exact(tanderiv::arc_deriv_eval(a.func, n, q)?),
        (Formula::Arc(a), Point::Float(v)) => Value::Float(tanderiv::arc_deriv_eval(a.func, n, v)?),
        // tan and tanh are irrational at every nonzero rational point
        (Formula::Tan(e), Point::Exact(q)) if q.is_zero() => match e.func {
            tanderiv::TanFunc::Tan | tanderiv::TanFunc::Tanh => {
                Value::Exact(BigRational::from_integer(e.terms.get(&0).cloned().unwrap_or_default()))
            }
            _ => return Err(tanderiv::Error::Pole(format!("{func} has a pole at 0")).into()),
        },
        (Formula::Tan(e), Point::Exact(q)) => {
            let v = q
                .to_f64()
                .ok_or_else(|| CliError::Parse(format!("{q} is out of float range")))?;
            Value::Float(e.eval(v)?)
        }
        (Formula::Tan(e), Point::Float(v)) => Value::Float(e.eval(*v)?),
    };
    if let Value::Float(v) = value {
        if !v.is_finite() {
            return Err(tanderiv::Error::Pole(format!("D^{n} {func} is not finite here")).into());
        }
    }
    Ok(value)
}

pub fn cmd_eval(func: Func, n: usize, x: &str, format: Format) -> Result<String, CliError> {
    let point: Point = x.parse()?;
    let value = eval_value(func, n, &point)?;
    let x_text = match &point {
        Point::Exact(q) => q.to_string(),
        Point::Float(v) => v.to_string(),
    };
    let (json_value, text) = match &value {
        Value::Exact(q) => (serde_json::Value::String(q.to_string()), q.to_string()),
        Value::Float(v) => (serde_json::json!(v), v.to_string()),
    };
    Ok(match format {
        Format::Json => to_json(&EvalRecord {
            func: func.name().to_owned(),
            n,
            x: x_text,
            value: json_value,
            method: "closed_form".to_owned(),
        }),
        Format::Csv => format!("func,n,x,value,method\n{func},{n},{x_text},{text},closed_form\n"),
        Format::Latex => {
            let (xl, vl) = match (&point, &value) {
                (Point::Exact(q), Value::Exact(v)) => (latex::rational(q), latex::rational(v)),
                (Point::Exact(q), Value::Float(v)) => (latex::rational(q), v.to_string()),
                (_, _) => (x_text, text),
            };
            format!("{} \\Big|_{{x={xl}}} = {vl}\n", latex::lhs(func, n))
        }
    })
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    passed: usize,
    total: usize,
    ok: bool,
    failure: Option<&'a str>,
}

pub fn cmd_verify(
    suite: Suite,
    nmax: Option<usize>,
    seed: u64,
    format: Option<Format>,
    corrupt_row: Option<usize>,
) -> Result<Outcome, CliError> {
    let mut cfg = verify::Config {
        nmax,
        seed,
        triangle: None,
    };
    if let Some(r) = corrupt_row {
        let size = nmax.unwrap_or(60).max(25);
        if r > size {
            return Err(CliError::Usage(format!(
                "corrupt row {r} is beyond the triangle (nmax {size})"
            )));
        }
        let mut rows = CoeffTriangle::new(size).rows().to_vec();
        rows[r][r + 1] += 2;
        cfg.triangle = Some(CoeffTriangle::from_rows(rows));
    }
    let report = verify::run(suite, &cfg);
    let status = if report.all_passed() { 0 } else { 1 };
    let output = match format {
        None => format!("{report}\n"),
        Some(Format::Json) => {
            let checks: Vec<CheckJson> = report
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name,
                    passed: c.passed,
                    total: c.total,
                    ok: c.ok(),
                    failure: c.failure.as_deref(),
                })
                .collect();
            to_json(&serde_json::json!({ "passed": status == 0, "checks": checks }))
        }
        Some(f) => return Err(CliError::Usage(format!("verify prints text or json, not {f:?}"))),
    };
    Ok(Outcome { output, status })
}

/// Orders 1..=6 of tan, cot, tanh, coth, arctan, arccot, arctanh, arccoth.
pub fn report_formulas() -> Vec<Formula> {
    const ORDER: [Func; 8] = [
        Func::Tan,
        Func::Cot,
        Func::Tanh,
        Func::Coth,
        Func::Arctan,
        Func::Arccot,
        Func::Arctanh,
        Func::Arccoth,
    ];
    ORDER
        .iter()
        .flat_map(|&f| (1..=6).map(move |n| Formula::build(f, n).expect("orders 1..=6 are valid")))
        .collect()
}

pub fn cmd_report(format: Format) -> Result<String, CliError> {
    let formulas = report_formulas();
    match format {
        Format::Latex => Ok(formulas.iter().map(latex::equation).collect()),
        Format::Json => {
            let records: Vec<FormulaRecord> = formulas.iter().map(FormulaRecord::from).collect();
            Ok(to_json(&records))
        }
        Format::Csv => Err(CliError::Usage("report is available as latex or json".into())),
    }
}
