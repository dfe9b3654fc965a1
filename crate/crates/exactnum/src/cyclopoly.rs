//! Cyclotomic polynomials and power-basis reduction in Q(ζ_N).
//!
//! The canonical basis of Q(ζ_N) used throughout the crate is the power basis
//! 1, ζ, …, ζ^{φ(N)−1}: an element is canonical when its exponents are all
//! below φ(N). This basis is also a Z-basis of Z[ζ_N], which is what makes the
//! integrality test a coefficient check.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::Rational;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut v: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    v.sort_unstable();
    v
}

/// Dense integer coefficients of Φ_n, lowest degree first.
///
/// Computed by dividing x^n − 1 by Φ_d for every proper divisor d. Every
/// intermediate quotient is itself a product of cyclotomic polynomials, so
/// the `i128` coefficients stay small for any order this crate meets.
pub fn cyclotomic_poly(n: u64) -> Vec<i128> {
    assert!(n >= 1);
    let mut memo: Vec<(u64, Vec<i128>)> = Vec::new();
    for d in divisors(n) {
        let mut p = vec![0i128; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for (e, phi_e) in &memo {
            if d % e == 0 {
                p = exact_div(&p, phi_e);
            }
        }
        memo.push((d, p));
    }
    memo.pop().unwrap().1
}

fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i128; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &b) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(b).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Reduction context for a fixed order N.
#[derive(Clone, Debug)]
pub struct CycloField {
    pub order: u64,
    pub degree: usize,
    /// Nonzero coefficients of Φ_N below the leading term, as (exponent, coeff).
    tail: Vec<(usize, Rational)>,
}

impl CycloField {
    pub fn new(order: u64) -> Self {
        let phi = cyclotomic_poly(order);
        let degree = phi.len() - 1;
        let tail = phi[..degree]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, Rational::from_integer(i64::try_from(c).expect("coefficient range"))))
            .collect();
        CycloField { order, degree, tail }
    }

    /// A process-wide shared context for `order`, built on first use.
    pub fn shared(order: u64) -> Arc<CycloField> {
        static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CycloField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.read().expect("cache lock").get(&order) {
            return f.clone();
        }
        let f = Arc::new(CycloField::new(order));
        cache.write().expect("cache lock").entry(order).or_insert(f).clone()
    }

    /// Reduces a dense coefficient vector of length `order` in place so that
    /// only indices below φ(N) remain nonzero.
    pub fn reduce_dense(&self, v: &mut [Rational]) {
        debug_assert_eq!(v.len() as u64, self.order);
        for top in (self.degree..v.len()).rev() {
            if v[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[top]);
            let shift = top - self.degree;
            // ζ^top = −Σ tail_j ζ^{shift + j}
            for (j, a) in &self.tail {
                let neg = -&c;
                v[shift + j].add_mul(&neg, a);
            }
        }
    }
}
