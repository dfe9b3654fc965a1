//! Zero- and one-spectrum criteria.
//!
//! The predicates are evaluated directly on the tensor, so they apply to any
//! array of structure constants. The exhaustive search binds indices in the
//! order i4, i7, i9, i1, i6, i5, i2, i8, i3 (i0 last for the one spectrum),
//! drawing each new index from the support of a product that must be
//! nonzero, and tests the triple sum as soon as its six indices are known.
//! Witnesses are reported as the lexicographically least tuple, written
//! (i1, …, i9) or (i0, i1, …, i9).

use fusionring::FusionRing;
use rayon::prelude::*;

use crate::{Criterion, CriterionReport, Method, Witness};

pub type ZeroTuple = [usize; 9];
pub type OneTuple = [usize; 10];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMode {
    Fast,
    Exhaustive,
}

/// Result of a search: the least witness, how many witnesses exist, and how
/// many partial assignments were visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub least: Option<T>,
    pub count: u64,
    pub nodes: u64,
}

impl<T: Ord + Copy> SearchOutcome<T> {
    fn empty() -> Self {
        SearchOutcome { least: None, count: 0, nodes: 0 }
    }

    fn record(&mut self, t: T) {
        self.count += 1;
        if self.least.is_none_or(|l| t < l) {
            self.least = Some(t);
        }
    }

    fn merge(mut self, o: Self) -> Self {
        self.count += o.count;
        self.nodes += o.nodes;
        if let Some(t) = o.least {
            if self.least.is_none_or(|l| t < l) {
                self.least = Some(t);
            }
        }
        self
    }
}

/// Dense copy of the tensor with support bitmasks of every product.
pub struct SpectrumData {
    r: usize,
    n: Vec<u32>,
    dual: Vec<usize>,
    mask: Vec<u128>,
    /// {a : N_{a,b}^k ≠ 0} at b·r + k.
    left: Vec<u128>,
    support: Vec<Vec<usize>>,
}

impl SpectrumData {
    /// Panics if the rank exceeds 128, the width of a support mask.
    pub fn new(ring: &FusionRing) -> Self {
        let r = ring.rank;
        assert!(r <= 128, "spectrum search supports rank ≤ 128");
        let n = ring.tensor().to_vec();
        let mut mask = vec![0u128; r * r];
        let mut left = vec![0u128; r * r];
        let mut support = vec![Vec::new(); r * r];
        for a in 0..r {
            for b in 0..r {
                for k in 0..r {
                    if n[(a * r + b) * r + k] != 0 {
                        mask[a * r + b] |= 1 << k;
                        left[b * r + k] |= 1 << a;
                        support[a * r + b].push(k);
                    }
                }
            }
        }
        SpectrumData { r, n, dual: ring.dual.clone(), mask, left, support }
    }

    #[inline]
    fn n(&self, a: usize, b: usize, k: usize) -> u32 {
        self.n[(a * self.r + b) * self.r + k]
    }

    #[inline]
    fn mask(&self, a: usize, b: usize) -> u128 {
        self.mask[a * self.r + b]
    }

    #[inline]
    fn supp(&self, a: usize, b: usize) -> &[usize] {
        &self.support[a * self.r + b]
    }

    #[inline]
    fn d(&self, a: usize) -> usize {
        self.dual[a]
    }

    /// Σ_k N_{a,b}^k N_{c,d}^k.
    fn dot(&self, a: usize, b: usize, c: usize, d: usize) -> u64 {
        let mut m = self.mask(a, b) & self.mask(c, d);
        let mut s = 0u64;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            s += self.n(a, b, k) as u64 * self.n(c, d, k) as u64;
        }
        s
    }

    /// Σ_k N_{a,b}^k N_{c,d}^k N_{e,f}^k.
    fn triple(&self, p: [usize; 6]) -> u64 {
        let [a, b, c, d, e, f] = p;
        let mut m = self.mask(a, b) & self.mask(c, d) & self.mask(e, f);
        let mut s = 0u64;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            s += self.n(a, b, k) as u64 * self.n(c, d, k) as u64 * self.n(e, f, k) as u64;
        }
        s
    }

    fn line_one(&self, t: &ZeroTuple) -> bool {
        let [i1, i2, i3, i4, i5, i6, i7, i8, i9] = *t;
        self.n(i4, i1, i6) != 0
            && self.n(i5, i4, i2) != 0
            && self.n(i5, i6, i3) != 0
            && self.n(i7, i9, i1) != 0
            && self.n(i2, i7, i8) != 0
            && self.n(i8, i9, i3) != 0
    }

    fn triple_sum(&self, t: &ZeroTuple) -> u64 {
        let [_, _, _, i4, i5, i6, i7, i8, i9] = *t;
        self.triple([i4, i7, self.d(i5), i8, i6, self.d(i9)])
    }

    /// Conditions (3)–(5) of the zero spectrum criterion.
    fn zero_tail(&self, t: &ZeroTuple) -> bool {
        let [i1, i2, i3, i4, i5, i6, i7, i8, i9] = *t;
        let d = |x| self.d(x);
        self.n(i2, i1, i3) == 1
            && (self.dot(i5, i4, i3, d(i1)) == 1
                || self.dot(i2, d(i4), i3, d(i6)) == 1
                || self.dot(d(i5), i2, i6, d(i1)) == 1)
            && (self.dot(i2, i7, i3, d(i9)) == 1
                || self.dot(i8, d(i7), i3, d(i1)) == 1
                || self.dot(d(i2), i8, i1, d(i9)) == 1)
    }

    /// Conditions (3)–(7) of the one spectrum criterion, after the triple sum.
    fn one_tail(&self, t: &OneTuple) -> bool {
        let [i0, i1, i2, i3, i4, i5, i6, i7, i8, i9] = *t;
        let d = |x| self.d(x);
        self.n(i4, i7, i0) == 1
            && self.n(d(i5), i8, i0) == 1
            && self.n(i6, d(i9), i0) == 1
            && self.n(i2, i1, i3) == 0
            && (self.dot(i5, i4, i8, d(i7)) == 1
                || self.dot(i2, d(i4), i8, d(i0)) == 1
                || self.dot(d(i5), i2, i0, d(i7)) == 1)
            && (self.dot(i5, i0, i3, d(i9)) == 1
                || self.dot(i8, d(i0), i3, d(i6)) == 1
                || self.dot(d(i5), i8, i6, d(i9)) == 1)
            && (self.dot(i4, i7, i6, d(i9)) == 1
                || self.dot(i0, d(i7), i6, d(i1)) == 1
                || self.dot(d(i4), i0, i1, d(i9)) == 1)
    }

    /// Every zero spectrum condition holds at `t` = (i1, …, i9).
    pub fn zero_holds(&self, t: &ZeroTuple) -> bool {
        self.line_one(t) && self.triple_sum(t) == 0 && self.zero_tail(t)
    }

    /// Every one spectrum condition holds at `t` = (i0, i1, …, i9).
    pub fn one_holds(&self, t: &OneTuple) -> bool {
        let z: ZeroTuple = t[1..].try_into().unwrap();
        self.line_one(&z) && self.triple_sum(&z) == 1 && self.one_tail(t)
    }

    /// Completes a partial tuple (i1, i4, i6, i7, i9) whose conditions
    /// N_{i4,i1}^{i6}, N_{i7,i9}^{i1} ≠ 0 hold. Binds (i5, i8), either the
    /// given pair or all pairs from `lo`, tests the triple sum, then takes
    /// i2 and i3 from intersections of support masks.
    #[inline]
    fn close<T, F>(&self, want_sum: u64, p: [usize; 5], only: Option<(usize, usize)>, lo: usize, hit: &F, out: &mut SearchOutcome<T>)
    where
        F: Fn(&ZeroTuple, u128, &mut SearchOutcome<T>),
    {
        let [i1, i4, i6, i7, i9] = p;
        let m = self.mask(i4, i7) & self.mask(i6, self.d(i9));
        if want_sum == 1 && m == 0 {
            return;
        }
        let r = self.r;
        let mut each = |i5: usize, i8: usize| {
            out.nodes += 1;
            let mm = m & self.mask(self.d(i5), i8);
            let ok = if want_sum == 0 {
                mm == 0
            } else {
                mm.count_ones() == 1 && {
                    let k = mm.trailing_zeros() as usize;
                    self.n(i4, i7, k) as u64 * self.n(self.d(i5), i8, k) as u64 * self.n(i6, self.d(i9), k) as u64
                        == 1
                }
            };
            if !ok {
                return;
            }
            let m2 = self.mask(i5, i4) & self.left[i7 * r + i8];
            let m3 = self.mask(i5, i6) & self.mask(i8, i9);
            if m2 == 0 || m3 == 0 {
                return;
            }
            for i2 in bits(m2) {
                for i3 in bits(m3) {
                    hit(&[i1, i2, i3, i4, i5, i6, i7, i8, i9], mm, out);
                }
            }
        };
        match only {
            Some((i5, i8)) => each(i5, i8),
            None => {
                for i5 in lo..r {
                    for i8 in lo..r {
                        each(i5, i8);
                    }
                }
            }
        }
    }

    /// Visits every tuple satisfying the support conditions and the triple
    /// sum, calling `hit` on each.
    fn search<T, F>(&self, want_sum: u64, restrict: Option<&[bool]>, hit: F) -> SearchOutcome<T>
    where
        T: Ord + Copy + Send,
        F: Fn(&ZeroTuple, u128, &mut SearchOutcome<T>) + Sync,
    {
        if let Some(b) = restrict {
            return self.restricted(want_sum, b, hit);
        }
        let r = self.r;
        let heads: Vec<(usize, usize)> = (0..r).flat_map(|i4| (0..r).map(move |i7| (i4, i7))).collect();
        heads
            .into_par_iter()
            .map(|(i4, i7)| {
                let mut out = SearchOutcome::empty();
                for i9 in 0..r {
                    for &i1 in self.supp(i7, i9) {
                        for &i6 in self.supp(i4, i1) {
                            self.close(want_sum, [i1, i4, i6, i7, i9], None, 0, &hit, &mut out);
                        }
                    }
                }
                out
            })
            .reduce(SearchOutcome::empty, SearchOutcome::merge)
    }

    /// Tuples with i4, …, i9 non-unit where at least one of the pairs
    /// (i4, i7), (i6, i9*), (i5*, i8) lies in `b`. Each case binds its pair
    /// first; later cases exclude the earlier ones so no tuple is seen twice.
    fn restricted<T, F>(&self, want_sum: u64, b: &[bool], hit: F) -> SearchOutcome<T>
    where
        T: Ord + Copy + Send,
        F: Fn(&ZeroTuple, u128, &mut SearchOutcome<T>) + Sync,
    {
        let r = self.r;
        let in_b = |x: usize, y: usize| b[x * r + y];
        let pairs: Vec<(usize, usize)> =
            (1..r).flat_map(|x| (1..r).map(move |y| (x, y))).filter(|&(x, y)| in_b(x, y)).collect();
        let jobs: Vec<(u8, usize, usize, usize)> = (0..3u8)
            .flat_map(|case| {
                let pairs = &pairs;
                (1..r).flat_map(move |i4| pairs.iter().map(move |&(x, y)| (case, x, y, i4)))
            })
            .filter(|&(case, x, _, i4)| case != 0 || x == i4)
            .collect();
        jobs.into_par_iter()
            .map(|(case, x, y, i4)| {
                let mut out = SearchOutcome::empty();
                let mut close = |p, only| self.close(want_sum, p, only, 1, &hit, &mut out);
                match case {
                    // (i4, i7) uncovered
                    0 => {
                        let i7 = y;
                        for i9 in 1..r {
                            for &i1 in self.supp(i7, i9) {
                                for &i6 in self.supp(i4, i1) {
                                    if i6 != 0 {
                                        close([i1, i4, i6, i7, i9], None);
                                    }
                                }
                            }
                        }
                    }
                    // (i6, i9*) uncovered, (i4, i7) covered
                    1 => {
                        let (i6, i9) = (x, self.d(y));
                        for i1 in 0..r {
                            if self.n(i4, i1, i6) == 0 {
                                continue;
                            }
                            for i7 in 1..r {
                                if !in_b(i4, i7) && self.n(i7, i9, i1) != 0 {
                                    close([i1, i4, i6, i7, i9], None);
                                }
                            }
                        }
                    }
                    // (i5*, i8) uncovered, the other two covered
                    _ => {
                        let (i5, i8) = (self.d(x), y);
                        for i7 in 1..r {
                            if in_b(i4, i7) {
                                continue;
                            }
                            for i9 in 1..r {
                                for &i1 in self.supp(i7, i9) {
                                    for &i6 in self.supp(i4, i1) {
                                        if i6 != 0 && !in_b(i6, self.d(i9)) {
                                            close([i1, i4, i6, i7, i9], Some((i5, i8)));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                out
            })
            .reduce(SearchOutcome::empty, SearchOutcome::merge)
    }

    pub fn search_zero(&self, restrict: Option<&[bool]>) -> SearchOutcome<ZeroTuple> {
        self.search(0, restrict, |t, _, out| {
            if self.zero_tail(t) {
                out.record(*t);
            }
        })
    }

    pub fn search_one(&self, restrict: Option<&[bool]>) -> SearchOutcome<OneTuple> {
        self.search(1, restrict, |t, mm, out| {
            let i0 = mm.trailing_zeros() as usize;
            let mut u = [0; 10];
            u[0] = i0;
            u[1..].copy_from_slice(t);
            if self.one_tail(&u) {
                out.record(u);
            }
        })
    }

    /// Pairs (i, j) of non-unit elements with N_{i,j}^k = 0 for some k in `ks`.
    fn uncovered(&self, ks: &[usize]) -> Vec<bool> {
        let r = self.r;
        let mut b = vec![false; r * r];
        for i in 1..r {
            for j in 1..r {
                b[i * r + j] = ks.iter().any(|&k| self.n(i, j, k) == 0);
            }
        }
        b
    }

    /// The element k0 (resp. pair k0 < k1) lying in the fewest uncovered
    /// products, with the resulting uncovered set.
    fn best_cover(&self, size: usize) -> (Vec<usize>, Vec<bool>) {
        let r = self.r;
        let choices: Vec<Vec<usize>> = if size == 1 {
            (0..r).map(|k| vec![k]).collect()
        } else {
            (0..r).flat_map(|a| (a + 1..r).map(move |b| vec![a, b])).collect()
        };
        choices
            .into_iter()
            .map(|ks| {
                let b = self.uncovered(&ks);
                (b.iter().filter(|&&x| x).count(), ks, b)
            })
            .min_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)))
            .map(|(_, ks, b)| (ks, b))
            .unwrap_or_default()
    }

    /// Naive enumeration of all r⁹ tuples; for cross-checking at small rank.
    pub fn naive_zero(&self) -> SearchOutcome<ZeroTuple> {
        let r = self.r;
        (0..r)
            .into_par_iter()
            .map(|i1| {
                let mut out = SearchOutcome::empty();
                let mut t = [i1, 0, 0, 0, 0, 0, 0, 0, 0];
                for_each_tail(&mut t, 1, r, &mut |t| {
                    out.nodes += 1;
                    if self.zero_holds(t) {
                        out.record(*t);
                    }
                });
                out
            })
            .reduce(SearchOutcome::empty, SearchOutcome::merge)
    }

    /// Naive enumeration of all r¹⁰ tuples.
    pub fn naive_one(&self) -> SearchOutcome<OneTuple> {
        let r = self.r;
        (0..r * r)
            .into_par_iter()
            .map(|h| {
                let mut out = SearchOutcome::empty();
                let mut t = [h / r, h % r, 0, 0, 0, 0, 0, 0, 0, 0];
                for_each_tail(&mut t, 2, r, &mut |t| {
                    out.nodes += 1;
                    if self.one_holds(t) {
                        out.record(*t);
                    }
                });
                out
            })
            .reduce(SearchOutcome::empty, SearchOutcome::merge)
    }
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            k
        })
    })
}

fn for_each_tail<const L: usize>(t: &mut [usize; L], pos: usize, r: usize, f: &mut impl FnMut(&[usize; L])) {
    if pos == L {
        f(t);
        return;
    }
    for v in 0..r {
        t[pos] = v;
        for_each_tail(t, pos + 1, r, f);
    }
}

/// An element k0 with N_{i,j}^{k0} ≠ 0 for all non-unit i, j.
pub fn zero_cover(ring: &FusionRing) -> Option<usize> {
    let s = SpectrumData::new(ring);
    let (ks, b) = s.best_cover(1);
    (!b.contains(&true)).then(|| ks[0])
}

/// Two elements k0 < k1 that both occur in every product of non-unit elements.
pub fn one_cover(ring: &FusionRing) -> Option<(usize, usize)> {
    let s = SpectrumData::new(ring);
    let (ks, b) = s.best_cover(2);
    (ks.len() == 2 && !b.contains(&true)).then(|| (ks[0], ks[1]))
}

fn report<T: Into<Vec<usize>> + Copy>(
    c: Criterion,
    method: Method,
    out: &SearchOutcome<T>,
    note: String,
) -> CriterionReport {
    match out.least {
        Some(t) => CriterionReport::fail(
            c,
            method,
            Witness::new(t.into(), vec![out.count.to_string()]),
            format!("witness tuple found ({} in total); {note}", out.count),
        ),
        None => CriterionReport::pass(c, method, note),
    }
}

/// Fast mode first looks for an element (two elements, for the one
/// spectrum) present in every product of non-unit elements. Lemmas valid in
/// any fusion ring then rule out a witness. When no such element exists the
/// best candidate still shows that any witness has a triple-sum pair among
/// the products that miss it, and the search is restricted to those tuples
/// with i4, …, i9 non-unit.
fn run_spectrum(ring: &FusionRing, mode: SpectrumMode, one: bool) -> CriterionReport {
    let c = if one { Criterion::OneSpectrum } else { Criterion::ZeroSpectrum };
    let s = SpectrumData::new(ring);
    let search = |restrict: Option<&[bool]>, method, note: String| {
        if one {
            let o = s.search_one(restrict);
            report(c, method, &o, format!("{note}; {} nodes", o.nodes))
        } else {
            let o = s.search_zero(restrict);
            report(c, method, &o, format!("{note}; {} nodes", o.nodes))
        }
    };
    match mode {
        SpectrumMode::Exhaustive => search(None, Method::ExhaustiveSearch, "exhaustive search".into()),
        SpectrumMode::Fast => {
            let (ks, b) = s.best_cover(if one { 2 } else { 1 });
            let missing = b.iter().filter(|&&x| x).count();
            let w = Witness::new(ks.clone(), vec![]);
            if missing == 0 && !ks.is_empty() {
                CriterionReport::pass(c, Method::FastPathLemma, "elements present in every non-unit product")
                    .with_witness(w)
            } else if ks.is_empty() {
                search(None, Method::ExhaustiveSearch, "no cover candidate".into())
            } else {
                let mut rep = search(
                    Some(&b),
                    Method::FastPathLemma,
                    format!("search restricted to {missing} products missing {ks:?}"),
                );
                if rep.witness.is_none() {
                    rep.witness = Some(w);
                }
                rep
            }
        }
    }
}

pub fn zero_spectrum(ring: &FusionRing, mode: SpectrumMode) -> CriterionReport {
    run_spectrum(ring, mode, false)
}

pub fn one_spectrum(ring: &FusionRing, mode: SpectrumMode) -> CriterionReport {
    run_spectrum(ring, mode, true)
}
