use rayon::prelude::*;
use serde::Serialize;

use crate::FusionRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Neutral,
    Dual,
    Associativity,
    FrobeniusReciprocity,
}

/// One violated identity. `indices` are 0-based; `lhs`/`rhs` are the two
/// sides that should agree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
    pub commutative: bool,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

fn delta(a: usize, b: usize) -> u64 {
    u64::from(a == b)
}

fn neutral_and_dual(r: &FusionRing, out: &mut Vec<Violation>) {
    let n = r.rank;
    for i in 0..n {
        for k in 0..n {
            for (a, b) in [(0, i), (i, 0)] {
                let v = u64::from(r.get(a, b, k));
                if v != delta(i, k) {
                    out.push(Violation { axiom: Axiom::Neutral, indices: vec![a, b, k], lhs: v, rhs: delta(i, k) });
                }
            }
            for (a, b) in [(i, k), (k, i)] {
                let v = u64::from(r.get(a, b, 0));
                let want = delta(r.dual[i], k);
                if v != want {
                    out.push(Violation { axiom: Axiom::Dual, indices: vec![a, b, 0], lhs: v, rhs: want });
                }
            }
        }
        if r.dual[r.dual[i]] != i {
            out.push(Violation { axiom: Axiom::Dual, indices: vec![i], lhs: r.dual[r.dual[i]] as u64, rhs: i as u64 });
        }
    }
}

/// Checks M_j·M_i = Σ_m N_{i,j}^m M_m, the matrix form of
/// (x_i x_j) x_k = x_i (x_j x_k); a failure at row k, column l is reported
/// as the tuple (i, j, k, l).
fn associativity(r: &FusionRing) -> Vec<Violation> {
    let n = r.rank;
    (0..n * n)
        .into_par_iter()
        .flat_map_iter(|ij| {
            let (i, j) = (ij / n, ij % n);
            let mut lhs = vec![0u64; n * n];
            for m in 0..n {
                let c = u64::from(r.get(i, j, m));
                if c == 0 {
                    continue;
                }
                for k in 0..n {
                    for (l, &v) in r.product(m, k).iter().enumerate() {
                        lhs[k * n + l] += c * u64::from(v);
                    }
                }
            }
            let mut out = Vec::new();
            for k in 0..n {
                let mut rhs = vec![0u64; n];
                for (m, &a) in r.product(j, k).iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (l, &b) in r.product(i, m).iter().enumerate() {
                        rhs[l] += u64::from(a) * u64::from(b);
                    }
                }
                for l in 0..n {
                    if lhs[k * n + l] != rhs[l] {
                        out.push(Violation {
                            axiom: Axiom::Associativity,
                            indices: vec![i, j, k, l],
                            lhs: lhs[k * n + l],
                            rhs: rhs[l],
                        });
                    }
                }
            }
            out
        })
        .collect()
}

fn frobenius(r: &FusionRing) -> Vec<Violation> {
    let n = r.rank;
    let d = &r.dual;
    (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    let v = u64::from(r.get(i, j, k));
                    for w in [r.get(d[i], k, j), r.get(k, d[j], i)] {
                        if u64::from(w) != v {
                            out.push(Violation {
                                axiom: Axiom::FrobeniusReciprocity,
                                indices: vec![i, j, k],
                                lhs: v,
                                rhs: u64::from(w),
                            });
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// Checks the neutral, dual, associativity and Frobenius reciprocity axioms.
/// Violations come back sorted.
pub fn verify_axioms(r: &FusionRing) -> AxiomReport {
    let mut violations = Vec::new();
    if r.dual.iter().all(|&d| d < r.rank) {
        neutral_and_dual(r, &mut violations);
        violations.extend(associativity(r));
        violations.extend(frobenius(r));
    } else {
        violations.push(Violation { axiom: Axiom::Dual, indices: vec![], lhs: 0, rhs: 0 });
    }
    violations.sort();
    violations.dedup();
    AxiomReport { violations, commutative: r.is_commutative() }
}
