//! Multisets (s_1 ≤ … ≤ s_r) with Σ 1/s_i² = c.

use exactnum::Rational;
use num_bigint::BigInt;
use rayon::prelude::*;

/// A solution, nondecreasing.
pub type Multiset = Vec<u64>;

/// Enumeration result with the number of DFS nodes visited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Enumeration {
    pub solutions: Vec<Multiset>,
    pub nodes: u64,
}

fn to_u64(b: &BigInt) -> u64 {
    u64::try_from(b).expect("denominator bound exceeds 64 bits")
}

/// Smallest s with 1/s² ≤ ρ, i.e. s² ≥ den/num.
fn lower(rho: &Rational) -> u64 {
    let (n, d) = (rho.numer(), rho.denom());
    let mut s = (&d / &n).sqrt();
    while &s * &s * &n < d {
        s += 1;
    }
    to_u64(&s).max(1)
}

/// Largest s with t/s² ≥ ρ, i.e. s² ≤ t·den/num.
fn upper(rho: &Rational, t: u64) -> u64 {
    to_u64(&((rho.denom() * t) / rho.numer()).sqrt())
}

fn dfs(rho: &Rational, t: u64, min: u64, prefix: &mut Multiset, out: &mut Enumeration) {
    out.nodes += 1;
    if rho.is_zero() {
        out.solutions.push(prefix.clone());
        return;
    }
    if t == 0 {
        return;
    }
    let lo = lower(rho).max(min);
    let hi = upper(rho, t);
    for s in lo..=hi {
        let next = rho - &Rational::from_integer(s as i64).pow(2).recip();
        prefix.push(s);
        dfs(&next, t - 1, s, prefix, out);
        prefix.pop();
    }
}

/// All nondecreasing multisets of at most `max_terms` positive integers
/// with Σ 1/s² = c, in lexicographic order. The first value is fixed per
/// parallel subtree. Every solution is re-verified exactly.
pub fn enumerate_unit_sum_of_inverse_squares(max_terms: usize, c: u64) -> Enumeration {
    let rho = Rational::from_integer(c as i64);
    if max_terms == 0 || c == 0 {
        return Enumeration { solutions: vec![], nodes: 1 };
    }
    let t = max_terms as u64;
    let firsts: Vec<u64> = (lower(&rho)..=upper(&rho, t)).collect();
    let parts: Vec<Enumeration> = firsts
        .into_par_iter()
        .map(|s| {
            let mut out = Enumeration::default();
            let next = &rho - &Rational::from_integer(s as i64).pow(2).recip();
            dfs(&next, t - 1, s, &mut vec![s], &mut out);
            out
        })
        .collect();
    let mut all = Enumeration { solutions: vec![], nodes: 1 };
    for p in parts {
        all.nodes += p.nodes;
        all.solutions.extend(p.solutions);
    }
    for s in &all.solutions {
        assert_eq!(inverse_square_sum(s), rho, "bad solution {s:?}");
    }
    all
}

pub fn inverse_square_sum(s: &[u64]) -> Rational {
    s.iter().map(|&x| Rational::from_integer(x as i64).pow(2).recip()).sum()
}
