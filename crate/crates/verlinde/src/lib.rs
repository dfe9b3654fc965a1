//! Structure constants N_{i,j}^k = Σ_s (1/c_s)·λ_{i,s}·λ_{j,s}·conj(λ_{k,s})
//! computed exactly from an eigentable.

mod lemmas;

use chartables::{verify_reconstruction_assumptions, Eigentable};
use exactnum::{CyclotomicNumber, GroupedSum, Rational};
use fusionring::{FusionRing, RingError};
use rayon::prelude::*;

pub use lemmas::{oracle_lemma_suite, LemmaMismatch, LemmaReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerlindeError {
    #[error("reconstruction hypothesis fails: {0}")]
    Assumption(String),
    #[error("N_{{{i},{j}}}^{k} = {value} is not a nonnegative integer")]
    NotNatural { i: usize, j: usize, k: usize, value: String },
    #[error("character property fails at ({i},{j}) on column {s}")]
    Character { i: usize, j: usize, s: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// ⟨f, g⟩ = Σ_s (1/c_s)·f(s)·conj(g(s)).
pub fn inner_product(t: &Eigentable, f: &[CyclotomicNumber], g: &[CyclotomicNumber]) -> CyclotomicNumber {
    t.inner_product(f, g)
}

/// ⟨λ_a·λ_b, λ_c⟩, the raw Verlinde value before any integrality check.
pub fn structure_constant(t: &Eigentable, a: usize, b: usize, c: usize) -> CyclotomicNumber {
    let mut s = GroupedSum::new();
    for col in 0..t.rank {
        let cc = t.entries[c][col].conjugate();
        s.add_product(&[&t.entries[a][col], &t.entries[b][col], &cc], &t.codegrees[col].recip());
    }
    s.finish().value
}

type Row = Vec<(usize, u32)>;

/// Row (i, j) of the tensor: the nonzero N_{i,j}^k, or the first bad k.
fn fusion_row(t: &Eigentable, conj: &[Vec<CyclotomicNumber>], i: usize, j: usize) -> Result<Row, VerlindeError> {
    let r = t.rank;
    let weighted: Vec<CyclotomicNumber> =
        (0..r).map(|s| (&t.entries[i][s] * &t.entries[j][s]).scale(&t.codegrees[s].recip())).collect();
    let mut out = Vec::new();
    let mut acc = GroupedSum::new();
    for (k, ck) in conj.iter().enumerate() {
        acc.clear();
        for s in 0..r {
            acc.add_product(&[&weighted[s], &ck[s]], &Rational::one());
        }
        let v = acc.finish().value;
        let n = v
            .as_rational()
            .filter(|x| x.is_integer() && !x.is_negative())
            .and_then(|x| x.to_i64())
            .and_then(|x| u32::try_from(x).ok())
            .ok_or_else(|| VerlindeError::NotNatural { i, j, k, value: v.to_string() })?;
        if n > 0 {
            out.push((k, n));
        }
    }
    Ok(out)
}

/// Σ_k N_{i,j}^k λ_{k,s} = λ_{i,s} λ_{j,s} for every s.
fn character_holds(t: &Eigentable, row: &Row, i: usize, j: usize) -> Option<usize> {
    (0..t.rank).find(|&s| {
        let mut acc = GroupedSum::new();
        for &(k, n) in row {
            acc.add_product(&[&t.entries[k][s]], &Rational::from(n as u64));
        }
        acc.add_product(&[&t.entries[i][s], &t.entries[j][s]], &Rational::from_integer(-1));
        !acc.finish().value.is_zero()
    })
}

/// Reconstructs the fusion ring of a table. The formula is symmetric in
/// (i, j), so only i ≤ j is evaluated and the rest is mirrored.
pub fn reconstruct(t: &Eigentable) -> Result<FusionRing, VerlindeError> {
    let rep = verify_reconstruction_assumptions(t);
    if !rep.rows_orthonormal {
        return Err(VerlindeError::Assumption("rows are not orthonormal".into()));
    }
    if !rep.unit_row {
        return Err(VerlindeError::Assumption("first row is not identically 1".into()));
    }
    let dual = rep.dual.ok_or_else(|| VerlindeError::Assumption("rows lack unique conjugates".into()))?;
    reconstruct_with_dual(t, dual)
}

fn reconstruct_with_dual(t: &Eigentable, dual: Vec<usize>) -> Result<FusionRing, VerlindeError> {
    let r = t.rank;
    let conj: Vec<Vec<CyclotomicNumber>> =
        t.entries.iter().map(|row| row.iter().map(CyclotomicNumber::conjugate).collect()).collect();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
    let rows: Vec<Result<Row, VerlindeError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let row = fusion_row(t, &conj, i, j)?;
            match character_holds(t, &row, i, j) {
                Some(s) => Err(VerlindeError::Character { i, j, s }),
                None => Ok(row),
            }
        })
        .collect();
    let mut ring = FusionRing::zeros(t.family, t.q, t.row_labels.clone(), dual)?;
    // pairs are in lexicographic order, so the first error is the smallest witness
    for (&(i, j), row) in pairs.iter().zip(rows) {
        for (k, n) in row? {
            ring.set(i, j, k, n);
            ring.set(j, i, k, n);
        }
    }
    Ok(ring)
}

/// Reconstruction that skips the hypothesis checks; used on deliberately
/// perturbed tables whose conjugate rows may be missing.
pub fn reconstruct_unchecked(t: &Eigentable) -> Result<FusionRing, VerlindeError> {
    reconstruct_with_dual(t, (0..t.rank).collect())
}
