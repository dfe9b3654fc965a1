//! Criteria that read only the eigentable.

use std::cmp::Ordering;

use chartables::Eigentable;
use exactnum::{sign_real, CyclotomicNumber, ExactError, GroupedSum, Rational};
use rayon::prelude::*;

use crate::{Criterion, CriterionReport, Method, Witness};

/// One evaluated Schur sum.
#[derive(Clone, Debug)]
pub struct SchurValue {
    pub triple: [usize; 3],
    pub value: CyclotomicNumber,
    /// Every per-field partial sum was rational before merging.
    pub groups_rational: bool,
}

/// Σ_i λ_{i,a}·λ_{i,b}·λ_{i,c} / λ_{i,1}.
pub fn schur_value(t: &Eigentable, [a, b, c]: [usize; 3]) -> CyclotomicNumber {
    schur_sum(t, [a, b, c]).value
}

fn schur_sum(t: &Eigentable, [a, b, c]: [usize; 3]) -> exactnum::SumResult {
    let mut s = GroupedSum::new();
    for row in &t.entries {
        let d = row[0].as_rational().expect("degree column is rational");
        s.add_product(&[&row[a], &row[b], &row[c]], &d.recip());
    }
    s.finish()
}

/// Schur sums for every triple a ≤ b ≤ c, in lexicographic order.
pub fn schur_values(t: &Eigentable) -> Vec<SchurValue> {
    let r = t.rank;
    let triples: Vec<[usize; 3]> = (0..r)
        .flat_map(|a| (a..r).flat_map(move |b| (b..r).map(move |c| [a, b, c])))
        .collect();
    triples
        .into_par_iter()
        .map(|triple| {
            let s = schur_sum(t, triple);
            SchurValue { triple, value: s.value, groups_rational: s.groups_rational }
        })
        .collect()
}

fn degrees_positive(t: &Eigentable) -> Option<usize> {
    t.entries.iter().position(|row| !row[0].as_rational().is_some_and(|d| d.is_positive()))
}

pub fn schur_product(t: &Eigentable) -> CriterionReport {
    let c = Criterion::Schur;
    if let Some(i) = degrees_positive(t) {
        return CriterionReport::fail(
            c,
            Method::Exact,
            Witness::new(vec![i], vec![t.entries[i][0].to_string()]),
            "first column entry is not a positive rational",
        );
    }
    let values = schur_values(t);
    let all_rational = values.iter().all(|v| v.value.as_rational().is_some());
    for v in &values {
        let w = || Witness::new(v.triple.to_vec(), vec![v.value.to_string()]);
        if !v.value.is_real() {
            return CriterionReport::fail(c, Method::Exact, w(), "Schur sum is not real");
        }
        match sign_real(&v.value) {
            Ok(Ordering::Less) => {
                return CriterionReport::fail(c, Method::Exact, w(), "Schur sum is negative");
            }
            Ok(_) => {}
            Err(ExactError::Undecidable { bits }) => {
                return CriterionReport::undecided(c, w(), format!("sign not decided at {bits} bits"));
            }
            Err(e) => return CriterionReport::undecided(c, w(), e.to_string()),
        }
    }
    let note = format!(
        "{} triples nonnegative; {}",
        values.len(),
        if all_rational { "every sum rational" } else { "some sums irrational" }
    );
    CriterionReport::pass(c, Method::Exact, note)
}

/// Σ_j 1/c_j².
pub fn inverse_square_codegree_sum(t: &Eigentable) -> Rational {
    t.codegrees.iter().map(|c| c.recip().pow(2)).sum()
}

pub fn ostrik(t: &Eigentable) -> CriterionReport {
    let lhs = &Rational::from_integer(2) * &inverse_square_codegree_sum(t);
    let rhs = &Rational::one() + &t.fpdim_total.recip();
    let w = Witness::new(vec![], vec![lhs.to_string(), rhs.to_string()]);
    if lhs <= rhs {
        CriterionReport::pass(Criterion::Ostrik, Method::Exact, "2·Σ1/c_j² ≤ 1 + 1/c_1").with_witness(w)
    } else {
        CriterionReport::fail(Criterion::Ostrik, Method::Exact, w, "2·Σ1/c_j² exceeds 1 + 1/c_1")
    }
}

pub fn drinfeld_center(t: &Eigentable) -> CriterionReport {
    for (j, cj) in t.codegrees.iter().enumerate() {
        let ratio = &t.fpdim_total / cj;
        if !ratio.is_integer() {
            return CriterionReport::fail(
                Criterion::Drinfeld,
                Method::Exact,
                Witness::new(vec![j], vec![ratio.to_string()]),
                "c_1/c_j is not an integer",
            );
        }
    }
    CriterionReport::pass(Criterion::Drinfeld, Method::Exact, "every c_1/c_j is an integer")
}

pub fn extended_cyclotomic(t: &Eigentable) -> CriterionReport {
    for (i, row) in t.entries.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_cyclotomic_integer() {
                return CriterionReport::fail(
                    Criterion::Cyclotomic,
                    Method::Exact,
                    Witness::new(vec![i, j], vec![x.to_string()]),
                    "entry is not a cyclotomic integer",
                );
            }
        }
    }
    CriterionReport::pass(Criterion::Cyclotomic, Method::Exact, "every entry is a cyclotomic integer")
}

/// λ_{i,j}·c_1/(λ_{i,1}·c_j) must be an algebraic integer. When the rational
/// factor is already an integer it suffices that λ_{i,j} is one; otherwise
/// the full product is tested in its cyclotomic field, where integrality
/// means integer coordinates in the power basis.
pub fn isaacs(t: &Eigentable) -> CriterionReport {
    let c = Criterion::Isaacs;
    if let Some(i) = degrees_positive(t) {
        return CriterionReport::fail(
            c,
            Method::Exact,
            Witness::new(vec![i], vec![t.entries[i][0].to_string()]),
            "first column entry is not a positive rational",
        );
    }
    let mut shortcut = 0usize;
    for (i, row) in t.entries.iter().enumerate() {
        let d = row[0].as_rational().unwrap();
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let factor = &t.fpdim_total / &(&d * &t.codegrees[j]);
            if factor.is_integer() && x.is_cyclotomic_integer() {
                shortcut += 1;
                continue;
            }
            let v = x.scale(&factor);
            if !v.is_cyclotomic_integer() {
                return CriterionReport::fail(
                    c,
                    Method::Exact,
                    Witness::new(vec![i, j], vec![v.to_string()]),
                    "λ_{i,j}·c_1/(λ_{i,1}·c_j) is not an algebraic integer",
                );
            }
        }
    }
    CriterionReport::pass(c, Method::Exact, format!("all values integral ({shortcut} by integer factor)"))
}

/// c_1/λ_{i,1} is an integer for every i.
pub fn frobenius(t: &Eigentable) -> CriterionReport {
    for (i, row) in t.entries.iter().enumerate() {
        let ratio = row[0].as_rational().map(|d| &t.fpdim_total / &d);
        if !ratio.as_ref().is_some_and(|x| x.is_integer()) {
            let v = ratio.map(|x| x.to_string()).unwrap_or_else(|| row[0].to_string());
            return CriterionReport::fail(
                Criterion::Frobenius,
                Method::Exact,
                Witness::new(vec![i], vec![v]),
                "FPdim(R)/λ_{i,1} is not an integer",
            );
        }
    }
    CriterionReport::pass(Criterion::Frobenius, Method::Exact, "every FPdim(R)/d_i is an integer")
}
