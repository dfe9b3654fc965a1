use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Schur,
    Ostrik,
    Drinfeld,
    Cyclotomic,
    Isaacs,
    Frobenius,
    ZeroSpectrum,
    OneSpectrum,
    ModularDivisibility,
}

impl Criterion {
    pub const ALL: [Criterion; 9] = [
        Criterion::Schur,
        Criterion::Ostrik,
        Criterion::Drinfeld,
        Criterion::Cyclotomic,
        Criterion::Isaacs,
        Criterion::Frobenius,
        Criterion::ZeroSpectrum,
        Criterion::OneSpectrum,
        Criterion::ModularDivisibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Schur => "schur",
            Criterion::Ostrik => "ostrik",
            Criterion::Drinfeld => "drinfeld",
            Criterion::Cyclotomic => "cyclotomic",
            Criterion::Isaacs => "isaacs",
            Criterion::Frobenius => "frobenius",
            Criterion::ZeroSpectrum => "zero_spectrum",
            Criterion::OneSpectrum => "one_spectrum",
            Criterion::ModularDivisibility => "modular_divisibility",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Criterion {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown criterion `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    FastPathLemma,
    ExhaustiveSearch,
}

/// Exact data backing a verdict. `indices` are 0-based basis or column
/// indices; `values` are exact numbers in text form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub values: Vec<String>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, values: Vec<String>) -> Self {
        Witness { indices, values }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub verdict: Verdict,
    pub method: Method,
    pub witness: Option<Witness>,
    /// What the witness means, or why the verdict holds.
    pub note: String,
}

impl CriterionReport {
    pub fn pass(criterion: Criterion, method: Method, note: impl Into<String>) -> Self {
        CriterionReport { criterion, verdict: Verdict::Pass, method, witness: None, note: note.into() }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn fail(criterion: Criterion, method: Method, w: Witness, note: impl Into<String>) -> Self {
        CriterionReport { criterion, verdict: Verdict::Fail, method, witness: Some(w), note: note.into() }
    }

    pub fn undecided(criterion: Criterion, w: Witness, note: impl Into<String>) -> Self {
        CriterionReport { criterion, verdict: Verdict::Undecided, method: Method::Exact, witness: Some(w), note: note.into() }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
