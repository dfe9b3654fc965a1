//! JSON term lists and GAP-style `c*E(N)^k` text for cyclotomic numbers.

use serde::{Deserialize, Serialize};

use crate::{CyclotomicNumber, ExactError, Rational};

/// One `coeff·ζ_order^exp` summand as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub order: u64,
    pub exp: u64,
    pub num: String,
    pub den: String,
}

impl CyclotomicNumber {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(k, c)| TermJson {
                order: self.order(),
                exp: k,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<Self, ExactError> {
        let mut acc = CyclotomicNumber::zero();
        for t in terms {
            let c = Rational::from_bigs(
                t.num.parse().map_err(|_| ExactError::Parse(format!("bad numerator `{}`", t.num)))?,
                t.den.parse().map_err(|_| ExactError::Parse(format!("bad denominator `{}`", t.den)))?,
            )?;
            acc = acc + CyclotomicNumber::from_terms(t.order, [(t.exp as i64, c)])?;
        }
        Ok(acc)
    }

    /// Parses sums such as `-1/2 + 3*E(8)^3 - E(4)`.
    pub fn parse_gap(s: &str) -> Result<Self, ExactError> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(ExactError::Parse("empty expression".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            let c = bytes[i];
            let prev = bytes[i - 1];
            if (c == b'+' || c == b'-') && prev != b'^' && prev != b'(' && prev != b'*' && prev != b'+' && prev != b'-' {
                pieces.push(&text[start..i]);
                start = i;
            }
        }
        pieces.push(&text[start..]);
        let mut acc = CyclotomicNumber::zero();
        for p in pieces {
            acc = acc + parse_gap_term(p)?;
        }
        Ok(acc)
    }
}

fn parse_gap_term(p: &str) -> Result<CyclotomicNumber, ExactError> {
    let bad = || ExactError::Parse(format!("bad term `{p}`"));
    let (sign, body) = match p.as_bytes().first() {
        Some(b'+') => (1, &p[1..]),
        Some(b'-') => (-1, &p[1..]),
        _ => (1, p),
    };
    let Some(epos) = body.find("E(") else {
        let r: Rational = body.parse()?;
        return Ok(CyclotomicNumber::from_rational(&r * &Rational::from_integer(sign)));
    };
    let coeff = match body[..epos].trim_end_matches('*') {
        "" => Rational::one(),
        c => c.parse()?,
    };
    let rest = &body[epos + 2..];
    let close = rest.find(')').ok_or_else(bad)?;
    let order: u64 = rest[..close].parse().map_err(|_| bad())?;
    let after = &rest[close + 1..];
    let exp: i64 = match after.strip_prefix('^') {
        Some(e) => e.trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| bad())?,
        None if after.is_empty() => 1,
        None => return Err(bad()),
    };
    CyclotomicNumber::from_terms(order, [(exp, &coeff * &Rational::from_integer(sign))])
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Terms(Vec<TermJson>),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Terms(t) => CyclotomicNumber::from_json_terms(&t),
            Repr::Text(s) => CyclotomicNumber::parse_gap(&s),
        }
        .map_err(serde::de::Error::custom)
    }
}
