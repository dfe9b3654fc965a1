use exactnum::{CyclotomicNumber, GroupedSum, Rational};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{ChartError, Family, RowLabel};

/// Simultaneous eigenvalues λ_{i,j} of the fusion matrices of a commutative
/// fusion ring. Row i is a basis element, column j a "class".
#[derive(Clone, Debug)]
pub struct Eigentable {
    pub family: Family,
    pub q: u64,
    pub rank: usize,
    pub row_labels: Vec<RowLabel>,
    /// c_1 / c_j.
    pub class_sizes: Vec<Rational>,
    /// Formal codegrees c_j = Σ_i |λ_{i,j}|².
    pub codegrees: Vec<Rational>,
    /// c_1.
    pub fpdim_total: Rational,
    pub entries: Vec<Vec<CyclotomicNumber>>,
}

/// Formal codegree of column j, computed from the entries.
pub fn column_norm(entries: &[Vec<CyclotomicNumber>], j: usize) -> CyclotomicNumber {
    let mut s = GroupedSum::new();
    for row in entries {
        let x = &row[j];
        s.add_product(&[x, &x.conjugate()], &Rational::one());
    }
    s.finish().value
}

impl Eigentable {
    /// Builds a table, computing codegrees from the entries and enforcing
    /// every table invariant.
    pub fn new(
        family: Family,
        q: u64,
        row_labels: Vec<RowLabel>,
        class_sizes: Vec<Rational>,
        entries: Vec<Vec<CyclotomicNumber>>,
    ) -> Result<Self, ChartError> {
        let rank = row_labels.len();
        if class_sizes.len() != rank || entries.len() != rank || entries.iter().any(|r| r.len() != rank) {
            return Err(ChartError::Shape(format!("expected a square table of rank {rank}")));
        }
        let codegrees = (0..rank)
            .into_par_iter()
            .map(|j| {
                column_norm(&entries, j)
                    .as_rational()
                    .ok_or_else(|| ChartError::Inconsistent(format!("codegree of column {j} is not rational")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let fpdim_total = codegrees.first().cloned().unwrap_or_else(Rational::one);
        let t = Eigentable { family, q, rank, row_labels, class_sizes, codegrees, fpdim_total, entries };
        let problems = t.violations(false);
        if !problems.is_empty() {
            return Err(ChartError::Inconsistent(problems.join("; ")));
        }
        Ok(t)
    }

    /// Assembles a table without any checks; for synthetic test inputs.
    pub fn from_raw(
        family: Family,
        q: u64,
        row_labels: Vec<RowLabel>,
        class_sizes: Vec<Rational>,
        codegrees: Vec<Rational>,
        entries: Vec<Vec<CyclotomicNumber>>,
    ) -> Self {
        let fpdim_total = codegrees.first().cloned().unwrap_or_else(Rational::one);
        Eigentable { family, q, rank: row_labels.len(), row_labels, class_sizes, codegrees, fpdim_total, entries }
    }

    /// Every violated table invariant, as readable messages.
    pub fn invariant_violations(&self) -> Vec<String> {
        self.violations(true)
    }

    fn violations(&self, recheck_norms: bool) -> Vec<String> {
        let mut out = Vec::new();
        let r = self.rank;
        if r == 0 {
            out.push("empty table".into());
            return out;
        }
        for (i, lab) in self.row_labels.iter().enumerate() {
            match self.entries[i][0].as_rational() {
                Some(d) if d == Rational::from(lab.degree) && d.is_positive() => {}
                _ => out.push(format!("row {i}: first column is not the degree {}", lab.degree)),
            }
        }
        for j in 0..r {
            if self.entries[0][j].as_rational() != Some(Rational::one()) {
                out.push(format!("row 0 is not identically 1 (column {j})"));
            }
        }
        let total: Rational = self.class_sizes.iter().sum();
        if total != self.fpdim_total {
            out.push(format!("class sizes sum to {total}, not {}", self.fpdim_total));
        }
        for j in 0..r {
            if &self.codegrees[j] * &self.class_sizes[j] != self.fpdim_total {
                out.push(format!("column {j}: codegree·class size ≠ {}", self.fpdim_total));
            }
            if recheck_norms && column_norm(&self.entries, j).as_rational().as_ref() != Some(&self.codegrees[j]) {
                out.push(format!("column {j}: codegree differs from Σ|λ|²"));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for lab in &self.row_labels {
            if !seen.insert(*lab) {
                out.push(format!("duplicate row label {lab}"));
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.row_labels.iter().map(|l| l.degree).collect()
    }

    /// ⟨f, g⟩ = Σ_s (1/c_s)·f(s)·conj(g(s)).
    pub fn inner_product(&self, f: &[CyclotomicNumber], g: &[CyclotomicNumber]) -> CyclotomicNumber {
        assert_eq!(f.len(), self.rank);
        assert_eq!(g.len(), self.rank);
        let mut s = GroupedSum::new();
        for j in 0..self.rank {
            s.add_product(&[&f[j], &g[j].conjugate()], &self.codegrees[j].recip());
        }
        s.finish().value
    }

    pub fn row(&self, i: usize) -> &[CyclotomicNumber] {
        &self.entries[i]
    }

    /// Index of the row with the given label.
    pub fn index_of(&self, label: &RowLabel) -> Option<usize> {
        self.row_labels.iter().position(|l| l == label)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            family: self.family,
            q: self.q,
            rank: self.rank,
            row_labels: self.row_labels.clone(),
            class_sizes: self.class_sizes.iter().map(|c| c.to_string()).collect(),
            codegrees: self.codegrees.iter().map(|c| c.to_string()).collect(),
            entries: self.entries.clone(),
        }
    }

    /// Reads a table and re-derives its codegrees, checking them against the file.
    pub fn from_json(j: TableJson) -> Result<Self, ChartError> {
        let parse = |v: &[String]| -> Result<Vec<Rational>, ChartError> {
            v.iter().map(|s| s.parse().map_err(ChartError::Exact)).collect()
        };
        let sizes = parse(&j.class_sizes)?;
        let declared = parse(&j.codegrees)?;
        let t = Eigentable::new(j.family, j.q, j.row_labels, sizes, j.entries)?;
        if t.codegrees != declared {
            return Err(ChartError::Inconsistent("declared codegrees differ from Σ|λ|²".into()));
        }
        Ok(t)
    }
}

/// On-disk table format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableJson {
    pub family: Family,
    pub q: u64,
    pub rank: usize,
    pub row_labels: Vec<RowLabel>,
    pub class_sizes: Vec<String>,
    pub codegrees: Vec<String>,
    pub entries: Vec<Vec<CyclotomicNumber>>,
}
