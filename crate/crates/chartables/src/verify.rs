//! Exact checks of orthogonality, the reconstruction hypotheses and the
//! Egyptian-fraction identity Σ 1/c_j = 1.

use exactnum::{ComplexInterval, CyclotomicNumber, Embedder, GroupedSum, Rational};
use rayon::prelude::*;
use serde::Serialize;

use crate::Eigentable;

/// A failed orthogonality relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityFailure {
    /// "column" for Σ_i λ_{i,j}·conj(λ_{i,j′}), "row" for the weighted row sums.
    pub relation: &'static str,
    pub a: usize,
    pub b: usize,
    pub value: String,
}

fn column_pair(t: &Eigentable, j: usize, k: usize) -> CyclotomicNumber {
    let mut s = GroupedSum::new();
    for row in &t.entries {
        s.add_product(&[&row[j], &row[k].conjugate()], &Rational::one());
    }
    s.finish().value
}

/// All violations of both orthogonality relations.
pub fn orthogonality_failures(t: &Eigentable) -> Vec<OrthogonalityFailure> {
    let r = t.rank;
    let mut out: Vec<OrthogonalityFailure> = (0..r)
        .into_par_iter()
        .flat_map_iter(|j| {
            (j..r).filter_map(move |k| {
                let v = column_pair(t, j, k);
                let want = if j == k { t.codegrees[j].clone() } else { Rational::zero() };
                (v.as_rational() != Some(want)).then(|| OrthogonalityFailure {
                    relation: "column",
                    a: j,
                    b: k,
                    value: v.to_string(),
                })
            })
        })
        .collect();
    out.extend(
        (0..r)
            .into_par_iter()
            .flat_map_iter(|i| {
                (i..r).filter_map(move |k| {
                    let v = t.inner_product(&t.entries[i], &t.entries[k]);
                    let want = if i == k { Rational::one() } else { Rational::zero() };
                    (v.as_rational() != Some(want)).then(|| OrthogonalityFailure {
                        relation: "row",
                        a: i,
                        b: k,
                        value: v.to_string(),
                    })
                })
            })
            .collect::<Vec<_>>(),
    );
    out
}

pub fn verify_schur_orthogonality(t: &Eigentable) -> bool {
    orthogonality_failures(t).is_empty()
}

/// Which reconstruction hypotheses hold. Integrality of the structure
/// constants is checked by the reconstruction itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    /// Rows are orthonormal for ⟨f,g⟩ = Σ_s (1/c_s) f(s) conj(g(s)).
    pub rows_orthonormal: bool,
    /// Every row has exactly one conjugate row.
    pub duals_unique: bool,
    /// Row 0 is identically 1.
    pub unit_row: bool,
    /// The involution i ↦ i*, when `duals_unique` holds.
    pub dual: Option<Vec<usize>>,
}

impl ReconstructionReport {
    pub fn all_hold(&self) -> bool {
        self.rows_orthonormal && self.duals_unique && self.unit_row
    }
}

fn overlaps(a: &ComplexInterval, b: &ComplexInterval) -> bool {
    // certified rejection: disjoint enclosures mean distinct values
    let sep = |x: &exactnum::RealInterval, y: &exactnum::RealInterval| x.certainly_lt(y) || y.certainly_lt(x);
    !(sep(&a.re, &b.re) || sep(&a.im, &b.im))
}

/// Finds, for every row i, the rows whose entries are the conjugates of row i.
pub fn conjugate_rows(t: &Eigentable) -> Vec<Vec<usize>> {
    let mut emb = Embedder::new(64);
    let enc: Vec<Vec<ComplexInterval>> =
        t.entries.iter().map(|row| row.iter().map(|x| emb.embed(x)).collect()).collect();
    let conj = |c: &ComplexInterval| ComplexInterval { re: c.re.clone(), im: c.im.neg() };
    (0..t.rank)
        .into_par_iter()
        .map(|i| {
            (0..t.rank)
                .filter(|&k| {
                    (0..t.rank).all(|s| overlaps(&enc[k][s], &conj(&enc[i][s])))
                        && (0..t.rank).all(|s| t.entries[k][s] == t.entries[i][s].conjugate())
                })
                .collect()
        })
        .collect()
}

pub fn verify_reconstruction_assumptions(t: &Eigentable) -> ReconstructionReport {
    let rows_orthonormal = orthogonality_failures(t).iter().all(|f| f.relation != "row");
    let candidates = conjugate_rows(t);
    let duals_unique = candidates.iter().all(|c| c.len() == 1);
    let dual = duals_unique.then(|| candidates.iter().map(|c| c[0]).collect());
    let unit_row = t.rank > 0 && t.entries[0].iter().all(|x| x.as_rational() == Some(Rational::one()));
    ReconstructionReport { rows_orthonormal, duals_unique, unit_row, dual }
}

pub fn egyptian_sum(t: &Eigentable) -> Rational {
    t.codegrees.iter().map(Rational::recip).sum()
}

pub fn verify_egyptian(t: &Eigentable) -> bool {
    egyptian_sum(t) == Rational::one()
}
