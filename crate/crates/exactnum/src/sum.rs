//! Exact sums of many cyclotomic products, accumulated per field order.
//!
//! Each product is added into a dense accumulator for its own order, so a
//! sum over one column family stays inside one small cyclotomic field. At
//! the end every partial sum is reduced; if they are all rational they are
//! added as rationals, otherwise everything is lifted to the lcm order.

use std::collections::BTreeMap;

use crate::cyclopoly::{lcm, CycloField};
use crate::{CyclotomicNumber, Rational};

#[derive(Default)]
pub struct GroupedSum {
    groups: BTreeMap<u64, Vec<Rational>>,
}

/// Outcome of [`GroupedSum::finish`].
#[derive(Clone, Debug)]
pub struct SumResult {
    pub value: CyclotomicNumber,
    /// True when every per-order partial sum was already rational.
    pub groups_rational: bool,
}

impl GroupedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        self.groups.clear();
    }

    /// Adds `scale · Π factors`. A zero factor contributes nothing.
    pub fn add_product(&mut self, factors: &[&CyclotomicNumber], scale: &Rational) {
        if scale.is_zero() || factors.iter().any(|f| f.num_terms() == 0) {
            return;
        }
        let n = factors.iter().fold(1, |a, f| lcm(a, f.order()));
        let acc = self.groups.entry(n).or_insert_with(|| vec![Rational::zero(); n as usize]);
        let mut stack: Vec<(usize, u64, Rational)> = vec![(0, 0, scale.clone())];
        while let Some((depth, e, c)) = stack.pop() {
            if depth == factors.len() {
                acc[e as usize] += &c;
                continue;
            }
            let f = factors[depth];
            let m = n / f.order();
            for (k, v) in f.terms() {
                stack.push((depth + 1, (e + k * m) % n, &c * v));
            }
        }
    }

    pub fn add(&mut self, x: &CyclotomicNumber) {
        self.add_product(&[x], &Rational::one());
    }

    pub fn finish(&self) -> SumResult {
        let mut rational = Rational::zero();
        let mut irrational = Vec::new();
        for (&n, dense) in &self.groups {
            let mut v = dense.clone();
            CycloField::shared(n).reduce_dense(&mut v);
            let part = CyclotomicNumber::from_canonical_dense(n, v);
            match part.as_rational() {
                Some(r) => rational += &r,
                None => irrational.push(part),
            }
        }
        if irrational.is_empty() {
            return SumResult { value: CyclotomicNumber::from_rational(rational), groups_rational: true };
        }
        let total = irrational
            .iter()
            .fold(CyclotomicNumber::from_rational(rational), |a, b| &a + b);
        SumResult { value: total.canonicalize(), groups_rational: false }
    }
}
