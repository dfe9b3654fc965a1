use std::fmt;

use serde::{Deserialize, Serialize};

/// Which family of tables a table or ring belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Interpolated PSL(2,q) tables, giving the rings R_q.
    Psl2,
    /// Tables of F_q ⋊ F_q^*, giving the rings T_q.
    Etingof,
    /// Anything read from a file.
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Psl2 => "psl2",
            Family::Etingof => "etingof",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "psl2" => Ok(Family::Psl2),
            "etingof" => Ok(Family::Etingof),
            "custom" => Ok(Family::Custom),
            _ => Err(format!("unknown family `{s}` (expected psl2 or etingof)")),
        }
    }
}

/// Block of the table a row comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowFamily {
    Trivial,
    /// x_{(q−1)/2,c} or x_{(q+1)/2,c}, c ∈ {1, 2}.
    Half,
    /// x_{q−1,c}.
    Minus,
    /// x_{q,1}.
    Steinberg,
    /// x_{q+1,c}.
    Plus,
    /// x_{1,c} of the affine family, c = 0..q−2.
    Linear,
    /// x_{q−1,1} of the affine family.
    Big,
    Other,
}

/// Name of a basis element: x_{degree,charparam}.
///
/// At q = 2 the trivial row and x_{q−1,1} share (degree, charparam) = (1, 1),
/// so `family` is part of the identity of a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RowLabel {
    pub degree: u64,
    pub charparam: u64,
    pub family: RowFamily,
}

impl RowLabel {
    pub fn new(degree: u64, charparam: u64, family: RowFamily) -> Self {
        RowLabel { degree, charparam, family }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{{{},{}}}", self.degree, self.charparam)
    }
}
