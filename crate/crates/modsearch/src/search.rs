use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::egyptian::enumerate_unit_sum_of_inverse_squares;

/// n = p^a for a prime p and a ≥ 1.
pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ModularTypeCandidate {
    pub rank: usize,
    pub c: u64,
    /// Nondecreasing, with Σ 1/s_i² = c.
    pub s: Vec<u64>,
    /// c·s_max², as a string.
    pub fpdim: String,
    /// d_i = s_max/s_i, nonincreasing.
    pub dims: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub max_rank: usize,
    /// Require exactly one invertible object.
    pub unique_unit: bool,
    /// Reject nontrivial dimensions that are prime powers.
    pub non_prime_power: bool,
}

impl SearchOptions {
    pub fn new(max_rank: usize) -> Self {
        SearchOptions { max_rank, unique_unit: true, non_prime_power: true }
    }
}

/// How many multisets each filter removed, in the order applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterCounts {
    pub enumerated: u64,
    pub non_divisible: u64,
    pub pointed: u64,
    pub several_invertibles: u64,
    pub prime_power_dimension: u64,
    pub duplicate_type: u64,
    pub survivors: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub options: SearchOptions,
    pub c_range: (u64, u64),
    /// DFS nodes per c.
    pub nodes_by_c: Vec<u64>,
    pub nodes: u64,
    pub filters: FilterCounts,
    /// The enumeration ran to the end for every c.
    pub complete: bool,
    pub note: String,
}

/// Enumerates Σ 1/s_i² = c for c = 1..max_rank and filters. Survivors are
/// numerical types not excluded by these constraints; they are not claimed
/// to be categories.
pub fn search_with(opts: SearchOptions) -> (Vec<ModularTypeCandidate>, Certificate) {
    assert!((1..=11).contains(&opts.max_rank), "max_rank must be in 1..=11");
    let cs: Vec<u64> = (1..=opts.max_rank as u64).collect();
    let runs: Vec<_> = cs.par_iter().map(|&c| (c, enumerate_unit_sum_of_inverse_squares(opts.max_rank, c))).collect();
    let mut f = FilterCounts::default();
    let mut found: BTreeMap<Vec<u64>, ModularTypeCandidate> = BTreeMap::new();
    for (c, run) in &runs {
        for s in &run.solutions {
            f.enumerated += 1;
            let smax = *s.last().unwrap();
            if s.iter().any(|&x| smax % x != 0) {
                f.non_divisible += 1;
                continue;
            }
            let dims: Vec<u64> = s.iter().map(|&x| smax / x).collect();
            let units = dims.iter().filter(|&&d| d == 1).count();
            if units == dims.len() {
                f.pointed += 1;
                continue;
            }
            if opts.unique_unit && units != 1 {
                f.several_invertibles += 1;
                continue;
            }
            if opts.non_prime_power && dims.iter().any(|&d| is_prime_power(d)) {
                f.prime_power_dimension += 1;
                continue;
            }
            let fpdim = *c as u128 * smax as u128 * smax as u128;
            let cand = ModularTypeCandidate { rank: s.len(), c: *c, s: s.clone(), fpdim: fpdim.to_string(), dims: dims.clone() };
            if found.contains_key(&dims) {
                f.duplicate_type += 1;
            } else {
                found.insert(dims, cand);
            }
        }
    }
    let mut out: Vec<ModularTypeCandidate> = found.into_values().collect();
    out.sort();
    f.survivors = out.len() as u64;
    let nodes_by_c: Vec<u64> = runs.iter().map(|(_, r)| r.nodes).collect();
    let note = if out.is_empty() {
        "no candidate survives".to_string()
    } else {
        format!("{} candidate types not excluded by these numerical constraints", out.len())
    };
    let cert = Certificate {
        options: opts,
        c_range: (1, opts.max_rank as u64),
        nodes: nodes_by_c.iter().sum(),
        nodes_by_c,
        filters: f,
        complete: true,
        note,
    };
    (out, cert)
}

pub fn search_nonpointed_simple_modular_types(max_rank: usize) -> (Vec<ModularTypeCandidate>, Certificate) {
    search_with(SearchOptions::new(max_rank))
}
