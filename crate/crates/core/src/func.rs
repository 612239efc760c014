use std::fmt;
use std::str::FromStr;

use crate::arc::ArcFunc;
use crate::triangle::TanFunc;
use crate::Error;

/// Any of the eight functions whose derivatives this crate produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Func {
    Tan,
    Cot,
    Tanh,
    Coth,
    Arctan,
    Arccot,
    Arctanh,
    Arccoth,
}

impl Func {
    pub const ALL: [Func; 8] = [
        Func::Tan,
        Func::Cot,
        Func::Tanh,
        Func::Coth,
        Func::Arctan,
        Func::Arccot,
        Func::Arctanh,
        Func::Arccoth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Tan => "tan",
            Func::Cot => "cot",
            Func::Tanh => "tanh",
            Func::Coth => "coth",
            Func::Arctan => "arctan",
            Func::Arccot => "arccot",
            Func::Arctanh => "arctanh",
            Func::Arccoth => "arccoth",
        }
    }

    pub fn as_tan(self) -> Option<TanFunc> {
        match self {
            Func::Tan => Some(TanFunc::Tan),
            Func::Cot => Some(TanFunc::Cot),
            Func::Tanh => Some(TanFunc::Tanh),
            Func::Coth => Some(TanFunc::Coth),
            _ => None,
        }
    }

    pub fn as_arc(self) -> Option<ArcFunc> {
        match self {
            Func::Arctan => Some(ArcFunc::Arctan),
            Func::Arccot => Some(ArcFunc::Arccot),
            Func::Arctanh => Some(ArcFunc::Arctanh),
            Func::Arccoth => Some(ArcFunc::Arccoth),
            _ => None,
        }
    }
}

impl From<TanFunc> for Func {
    fn from(f: TanFunc) -> Self {
        match f {
            TanFunc::Tan => Func::Tan,
            TanFunc::Cot => Func::Cot,
            TanFunc::Tanh => Func::Tanh,
            TanFunc::Coth => Func::Coth,
        }
    }
}

impl From<ArcFunc> for Func {
    fn from(f: ArcFunc) -> Self {
        match f {
            ArcFunc::Arctan => Func::Arctan,
            ArcFunc::Arccot => Func::Arccot,
            ArcFunc::Arctanh => Func::Arctanh,
            ArcFunc::Arccoth => Func::Arccoth,
        }
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Func {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Func::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown function `{s}`")))
    }
}
