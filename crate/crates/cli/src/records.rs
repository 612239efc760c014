//! Serializable formula, triangle and evaluation records.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use tanderiv::{ArcDerivForm, ArcFunc, CoeffTriangle, Func, IntPoly, TanDerivExpansion, TanFunc};

use crate::CliError;

/// Largest magnitude emitted as a JSON number; beyond it doubles lose integers.
const MAX_SAFE: i64 = 1 << 53;

/// Integer that serializes as a JSON number when a double holds it exactly,
/// and as a decimal string otherwise. Accepts either form when parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.abs() <= MAX_SAFE => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;

        impl<'de> Visitor<'de> for V {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.parse()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("bad integer `{v}`")))
            }
        }

        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub power: usize,
    pub coeff: JsonInt,
}

/// Canonical structured form of one derivative formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormulaRecord {
    TanExpansion {
        func: String,
        n: usize,
        terms: Vec<Term>,
    },
    ArcRational {
        func: String,
        n: usize,
        scalar: String,
        base_sign: i8,
        /// Dense, constant term first.
        numerator: Vec<JsonInt>,
        denom_power: usize,
    },
}

/// A derivative formula from either family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Tan(TanDerivExpansion),
    Arc(ArcDerivForm),
}

impl Formula {
    pub fn build(func: Func, n: usize) -> Result<Formula, CliError> {
        match (func.as_tan(), func.as_arc()) {
            (Some(t), _) => Ok(Formula::Tan(tanderiv::tan_family_deriv(t, n))),
            (_, Some(a)) => Ok(Formula::Arc(tanderiv::arc_deriv(a, n)?)),
            _ => unreachable!("every Func is in one family"),
        }
    }

    pub fn func(&self) -> Func {
        match self {
            Formula::Tan(e) => e.func.into(),
            Formula::Arc(f) => f.func.into(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Formula::Tan(e) => e.order,
            Formula::Arc(f) => f.order,
        }
    }
}

impl From<&Formula> for FormulaRecord {
    fn from(f: &Formula) -> Self {
        match f {
            Formula::Tan(e) => FormulaRecord::TanExpansion {
                func: e.func.name().to_owned(),
                n: e.order,
                terms: e
                    .terms
                    .iter()
                    .map(|(&power, c)| Term {
                        power,
                        coeff: JsonInt(c.clone()),
                    })
                    .collect(),
            },
            Formula::Arc(a) => FormulaRecord::ArcRational {
                func: a.func.name().to_owned(),
                n: a.order,
                scalar: a.scalar.to_string(),
                base_sign: a.base_sign,
                numerator: a.numerator.coeffs().iter().cloned().map(JsonInt).collect(),
                denom_power: a.denom_power,
            },
        }
    }
}

impl TryFrom<&FormulaRecord> for Formula {
    type Error = CliError;

    fn try_from(r: &FormulaRecord) -> Result<Self, CliError> {
        match r {
            FormulaRecord::TanExpansion { func, n, terms } => {
                let func: TanFunc = func_of(func)?
                    .as_tan()
                    .ok_or_else(|| CliError::Parse(format!("`{func}` is not a tan-family function")))?;
                let mut map = BTreeMap::new();
                for t in terms {
                    if map.insert(t.power, t.coeff.0.clone()).is_some() {
                        return Err(CliError::Parse(format!("power {} listed twice", t.power)));
                    }
                }
                Ok(Formula::Tan(TanDerivExpansion {
                    func,
                    order: *n,
                    terms: map,
                }))
            }
            FormulaRecord::ArcRational {
                func,
                n,
                scalar,
                base_sign,
                numerator,
                denom_power,
            } => {
                let func: ArcFunc = func_of(func)?
                    .as_arc()
                    .ok_or_else(|| CliError::Parse(format!("`{func}` is not an arc-family function")))?;
                let scalar = scalar
                    .parse()
                    .map_err(|_| CliError::Parse(format!("bad scalar `{scalar}`")))?;
                Ok(Formula::Arc(ArcDerivForm {
                    func,
                    order: *n,
                    scalar,
                    base_sign: *base_sign,
                    numerator: IntPoly::new(numerator.iter().map(|c| c.0.clone()).collect()),
                    denom_power: *denom_power,
                }))
            }
        }
    }
}

fn func_of(name: &str) -> Result<Func, CliError> {
    name.parse()
        .map_err(|_| CliError::Parse(format!("unknown function `{name}`")))
}

/// Rows `0..=nmax`, each padded to the `nmax + 2` columns `k = 0..=nmax+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleRecord {
    pub nmax: usize,
    pub rows: Vec<Vec<JsonInt>>,
}

impl TriangleRecord {
    pub fn new(t: &CoeffTriangle, nmax: usize) -> Self {
        let rows = (0..=nmax)
            .map(|n| (0..nmax + 2).map(|k| JsonInt(t.get(n, k as i64))).collect())
            .collect();
        TriangleRecord { nmax, rows }
    }
}

/// Value of `D^n func` at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub func: String,
    pub n: usize,
    pub x: String,
    /// `"p/q"` string on the exact path, a number on the float path.
    pub value: serde_json::Value,
    pub method: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_int_switches_to_strings_past_2_53() {
        let small = serde_json::to_string(&JsonInt(BigInt::from(MAX_SAFE))).unwrap();
        assert_eq!(small, "9007199254740992");
        let big = serde_json::to_string(&JsonInt(BigInt::from(MAX_SAFE) + 1)).unwrap();
        assert_eq!(big, "\"9007199254740993\"");
        let back: JsonInt = serde_json::from_str(&big).unwrap();
        assert_eq!(back.0, BigInt::from(MAX_SAFE) + 1);
        assert!(serde_json::from_str::<JsonInt>("\"12x\"").is_err());
    }

    #[test]
    fn arc_record_shape() {
        let f = Formula::build(Func::Arctanh, 5).unwrap();
        let v = serde_json::to_value(FormulaRecord::from(&f)).unwrap();
        assert_eq!(v["kind"], "arc_rational");
        assert_eq!(v["scalar"], "24");
        assert_eq!(v["numerator"], serde_json::json!([1, 0, 10, 0, 5]));
        assert_eq!(v["denom_power"], 5);
        assert_eq!(v["base_sign"], -1);

        let f = Formula::build(Func::Arccot, 1).unwrap();
        let v = serde_json::to_value(FormulaRecord::from(&f)).unwrap();
        assert_eq!(
            (v["scalar"].as_str(), &v["numerator"]),
            (Some("-1"), &serde_json::json!([1]))
        );
        assert_eq!(v["denom_power"], 1);
    }

    #[test]
    fn tan_record_shape() {
        let f = Formula::build(Func::Tan, 2).unwrap();
        let v = serde_json::to_value(FormulaRecord::from(&f)).unwrap();
        assert_eq!(v["kind"], "tan_expansion");
        assert_eq!(
            v["terms"],
            serde_json::json!([{"power": 1, "coeff": 2}, {"power": 3, "coeff": 2}])
        );
    }

    #[test]
    fn triangle_record_rows() {
        let t = CoeffTriangle::new(1);
        let v = serde_json::to_value(TriangleRecord::new(&t, 1)).unwrap();
        assert_eq!(v["rows"], serde_json::json!([[0, 1, 0], [1, 0, 1]]));
    }

    #[test]
    fn malformed_records_are_rejected() {
        let bad = FormulaRecord::TanExpansion {
            func: "arctan".into(),
            n: 1,
            terms: vec![],
        };
        assert!(Formula::try_from(&bad).is_err());
        let dup = FormulaRecord::TanExpansion {
            func: "tan".into(),
            n: 1,
            terms: vec![
                Term {
                    power: 0,
                    coeff: JsonInt(1.into()),
                },
                Term {
                    power: 0,
                    coeff: JsonInt(1.into()),
                },
            ],
        };
        assert!(Formula::try_from(&dup).is_err());
    }
}
