//! Closed-form values of ⟨x_a x_b, x_c⟩ for the interpolated families,
//! checked directly against the table.

use chartables::{build_psl2_table, ChartError, Eigentable, RowFamily};
use rayon::prelude::*;
use serde::Serialize;

use crate::structure_constant;

use RowFamily::{Half as H, Minus as A, Plus as B, Steinberg as S};

type Formula = fn(u64, [u64; 3]) -> i64;

struct Lemma {
    name: &'static str,
    shape: [RowFamily; 3],
    value: Formula,
}

fn d(a: u64, b: u64) -> i64 {
    i64::from(a == b)
}

/// c_1 + c_2 + c_3 equals `target` or twice the largest parameter.
fn special(c: [u64; 3], target: u64) -> bool {
    let s: u64 = c.iter().sum();
    s == target || s == 2 * c.iter().max().unwrap()
}

const EVEN: &[Lemma] = &[
    Lemma { name: "AA,A", shape: [A, A, A], value: |q, c| if special(c, q + 1) { 0 } else { 1 } },
    Lemma { name: "AA,S", shape: [A, A, S], value: |_, c| 1 - d(c[0], c[1]) },
    Lemma { name: "AA,B", shape: [A, A, B], value: |_, _| 1 },
    Lemma { name: "SS,A", shape: [S, S, A], value: |_, _| 1 },
    Lemma { name: "SS,S", shape: [S, S, S], value: |_, _| 1 },
    Lemma { name: "SS,B", shape: [S, S, B], value: |_, _| 1 },
    Lemma { name: "BB,A", shape: [B, B, A], value: |_, _| 1 },
    Lemma { name: "BB,S", shape: [B, B, S], value: |_, c| 1 + d(c[0], c[1]) },
    Lemma { name: "BB,B", shape: [B, B, B], value: |q, c| if special(c, q - 1) { 2 } else { 1 } },
    Lemma { name: "AS,B", shape: [A, S, B], value: |_, _| 1 },
];

const THREE_MOD_FOUR: &[Lemma] = &[
    Lemma { name: "HH,H", shape: [H, H, H], value: |_, c| d(c[0], c[1]) * (1 - d(c[0], c[2])) },
    Lemma { name: "HH,A", shape: [H, H, A], value: |_, c| d(c[0], c[1]) },
    Lemma { name: "HH,S", shape: [H, H, S], value: |_, _| 0 },
    Lemma { name: "HH,B", shape: [H, H, B], value: |_, c| 1 - d(c[0], c[1]) },
    Lemma { name: "HA,A", shape: [H, A, A], value: |q, c| 1 - d(c[1] + c[2], (q + 1) / 4) },
    Lemma { name: "HA,S", shape: [H, A, S], value: |_, _| 1 },
    Lemma { name: "HA,B", shape: [H, A, B], value: |_, _| 1 },
    Lemma { name: "HS,S", shape: [H, S, S], value: |_, _| 1 },
    Lemma { name: "HS,B", shape: [H, S, B], value: |_, _| 1 },
    Lemma { name: "HB,B", shape: [H, B, B], value: |_, _| 1 },
    Lemma { name: "AA,A", shape: [A, A, A], value: |q, c| if special(c, (q + 1) / 2) { 1 } else { 2 } },
    Lemma { name: "AA,S", shape: [A, A, S], value: |_, c| 2 - d(c[0], c[1]) },
    Lemma { name: "AA,B", shape: [A, A, B], value: |_, _| 2 },
    Lemma { name: "AS,S", shape: [A, S, S], value: |_, _| 2 },
    Lemma { name: "AS,B", shape: [A, S, B], value: |_, _| 2 },
    Lemma { name: "AB,B", shape: [A, B, B], value: |_, _| 2 },
    Lemma { name: "SS,S", shape: [S, S, S], value: |_, _| 2 },
    Lemma { name: "SS,B", shape: [S, S, B], value: |_, _| 2 },
    Lemma { name: "SB,B", shape: [S, B, B], value: |_, c| 2 + d(c[1], c[2]) },
    Lemma { name: "BB,B", shape: [B, B, B], value: |q, c| if special(c, (q - 1) / 2) { 3 } else { 2 } },
];

const ONE_MOD_FOUR: &[Lemma] = &[
    Lemma { name: "HH,H", shape: [H, H, H], value: |_, c| d(c[0], c[1]) * d(c[0], c[2]) },
    Lemma { name: "HH,A", shape: [H, H, A], value: |_, c| 1 - d(c[0], c[1]) },
    Lemma { name: "HH,S", shape: [H, H, S], value: |_, _| 1 },
    Lemma { name: "HH,B", shape: [H, H, B], value: |_, c| d(c[0], c[1]) },
    Lemma { name: "HA,A", shape: [H, A, A], value: |_, _| 1 },
    Lemma { name: "HA,S", shape: [H, A, S], value: |_, _| 1 },
    Lemma { name: "HA,B", shape: [H, A, B], value: |_, _| 1 },
    Lemma { name: "HS,S", shape: [H, S, S], value: |_, _| 1 },
    Lemma { name: "HS,B", shape: [H, S, B], value: |_, _| 1 },
    Lemma { name: "HB,B", shape: [H, B, B], value: |q, c| 1 + d(c[1] + c[2], (q - 1) / 4) },
    Lemma { name: "AA,A", shape: [A, A, A], value: |q, c| if special(c, (q + 1) / 2) { 1 } else { 2 } },
    Lemma { name: "AA,S", shape: [A, A, S], value: |_, c| 2 - d(c[0], c[1]) },
    Lemma { name: "AA,B", shape: [A, A, B], value: |_, _| 2 },
    Lemma { name: "AS,S", shape: [A, S, S], value: |_, _| 2 },
    Lemma { name: "AS,B", shape: [A, S, B], value: |_, _| 2 },
    Lemma { name: "AB,B", shape: [A, B, B], value: |_, _| 2 },
    Lemma { name: "SS,S", shape: [S, S, S], value: |_, _| 2 },
    Lemma { name: "SS,B", shape: [S, S, B], value: |_, _| 2 },
    Lemma { name: "SB,B", shape: [S, B, B], value: |_, c| 2 + d(c[1], c[2]) },
    Lemma { name: "BB,B", shape: [B, B, B], value: |q, c| if special(c, (q - 1) / 2) { 3 } else { 2 } },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaMismatch {
    pub lemma: &'static str,
    /// Character parameters of the three basis elements (1 for x_{q,1}).
    pub params: [u64; 3],
    pub expected: i64,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub q: u64,
    pub lemmas: usize,
    /// Lemmas with at least one admissible parameter tuple at this q.
    pub lemmas_exercised: usize,
    pub tuples: usize,
    pub mismatches: Vec<LemmaMismatch>,
}

impl LemmaReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn rows_of(t: &Eigentable, fam: RowFamily) -> Vec<(usize, u64)> {
    t.row_labels.iter().enumerate().filter(|(_, l)| l.family == fam).map(|(i, l)| (i, l.charparam)).collect()
}

/// Evaluates every closed-form lemma of the branch of q on all admissible
/// parameter tuples.
pub fn oracle_lemma_suite(q: u64) -> Result<LemmaReport, ChartError> {
    let t = build_psl2_table(q)?;
    let lemmas = if q % 2 == 0 {
        EVEN
    } else if q % 4 == 3 {
        THREE_MOD_FOUR
    } else {
        ONE_MOD_FOUR
    };
    let mut jobs = Vec::new();
    for lemma in lemmas {
        let [fa, fb, fc] = lemma.shape.map(|f| rows_of(&t, f));
        for &(a, ca) in &fa {
            for &(b, cb) in &fb {
                for &(c, cc) in &fc {
                    jobs.push((lemma, [a, b, c], [ca, cb, cc]));
                }
            }
        }
    }
    let exercised = lemmas.iter().filter(|l| jobs.iter().any(|j| std::ptr::eq(j.0, *l))).count();
    let mut mismatches: Vec<LemmaMismatch> = jobs
        .par_iter()
        .filter_map(|&(lemma, [a, b, c], params)| {
            let got = structure_constant(&t, a, b, c);
            let want = (lemma.value)(q, params);
            (got.as_rational() != Some(want.into())).then(|| LemmaMismatch {
                lemma: lemma.name,
                params,
                expected: want,
                actual: got.to_string(),
            })
        })
        .collect();
    mismatches.sort_by(|x, y| (x.lemma, x.params).cmp(&(y.lemma, y.params)));
    Ok(LemmaReport { q, lemmas: lemmas.len(), lemmas_exercised: exercised, tuples: jobs.len(), mismatches })
}
