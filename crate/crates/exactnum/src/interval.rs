//! Certified complex embeddings by outward-rounded dyadic interval arithmetic.
//!
//! Every interval endpoint is an integer scaled by 2^{-prec}. Lower ends are
//! rounded toward −∞ and upper ends toward +∞, so each operation returns an
//! enclosure of the exact result. π comes from Machin's formula and the
//! trigonometric values from Taylor series with a Lagrange remainder term.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{CyclotomicNumber, ExactError, Rational};

/// Default cap for precision refinement in sign decisions.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;
/// Environment variable overriding [`DEFAULT_PRECISION_CAP`].
pub const PRECISION_ENV: &str = "FUSIONFORGE_PRECISION_BITS";

const GUARD_BITS: u32 = 32;

/// The precision cap in effect, honoring `FUSIONFORGE_PRECISION_BITS`.
pub fn precision_cap() -> u32 {
    std::env::var(PRECISION_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&b| b >= 32)
        .unwrap_or(DEFAULT_PRECISION_CAP)
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn dyadic_to_f64(m: &BigInt, prec: u32) -> f64 {
    let shift = prec.saturating_sub(96);
    let m = m >> shift;
    m.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-((prec - shift) as i32))
}

/// Closed real interval `[lo, hi]·2^{-prec}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

impl RealInterval {
    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let scaled = r.numer() << prec;
        let d = r.denom();
        RealInterval { lo: floor_div(&scaled, &d), hi: ceil_div(&scaled, &d), prec }
    }

    pub fn zero(prec: u32) -> Self {
        RealInterval { lo: BigInt::zero(), hi: BigInt::zero(), prec }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        RealInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        RealInterval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        let prods = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = prods.iter().min().unwrap();
        let max = prods.iter().max().unwrap();
        let one = BigInt::from(1) << self.prec;
        RealInterval { lo: floor_div(min, &one), hi: ceil_div(max, &one), prec: self.prec }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        let (n, d) = (r.numer(), r.denom());
        let (a, b) = (&self.lo * &n, &self.hi * &n);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        RealInterval { lo: floor_div(&a, &d), hi: ceil_div(&b, &d), prec: self.prec }
    }

    /// Widens both ends by `ulps` units of 2^{-prec}.
    pub fn widen(&self, ulps: &BigInt) -> Self {
        RealInterval { lo: &self.lo - ulps, hi: &self.hi + ulps, prec: self.prec }
    }

    /// Largest absolute value in the interval, in ulps (rounded up).
    fn mag_ulps(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        let x = RealInterval::from_rational(r, self.prec);
        self.lo <= x.lo && x.hi <= self.hi
    }

    /// Sign of every point of the interval, if uniform and nonzero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// True when every point of `self` is < every point of `o`.
    pub fn certainly_lt(&self, o: &Self) -> bool {
        debug_assert_eq!(self.prec, o.prec);
        self.hi < o.lo
    }

    /// True when every point of `self` is ≤ every point of `o`.
    pub fn certainly_le(&self, o: &Self) -> bool {
        debug_assert_eq!(self.prec, o.prec);
        self.hi <= o.lo
    }

    pub fn lower_f64(&self) -> f64 {
        dyadic_to_f64(&self.lo, self.prec)
    }

    pub fn upper_f64(&self) -> f64 {
        dyadic_to_f64(&self.hi, self.prec)
    }

    pub fn mid_f64(&self) -> f64 {
        dyadic_to_f64(&(&self.lo + &self.hi), self.prec + 1)
    }

    pub fn width_f64(&self) -> f64 {
        dyadic_to_f64(&(&self.hi - &self.lo), self.prec)
    }
}

/// Axis-aligned rectangle in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexInterval {
    /// Enclosure of |z|².
    pub fn norm_sqr(&self) -> RealInterval {
        let r = self.re.mul(&self.re);
        let i = self.im.mul(&self.im);
        // squares are nonnegative; tighten the lower ends accordingly
        let clamp = |x: RealInterval| RealInterval { lo: x.lo.max(BigInt::zero()), ..x };
        clamp(r).add(&clamp(i))
    }
}

/// Batch embedder that caches π and the images of roots of unity.
pub struct Embedder {
    work: u32,
    pi: RealInterval,
    roots: HashMap<(u64, u64), (RealInterval, RealInterval)>,
}

impl Embedder {
    pub fn new(precision_bits: u32) -> Self {
        let work = precision_bits.max(32) + GUARD_BITS;
        Embedder { work, pi: pi_interval(work), roots: HashMap::new() }
    }

    pub fn pi(&self) -> &RealInterval {
        &self.pi
    }

    /// Enclosure of (cos, sin)(2πk/n).
    pub fn root(&mut self, n: u64, k: u64) -> (RealInterval, RealInterval) {
        let g = crate::cyclopoly::gcd(n, k);
        let key = (n / g, k / g);
        if let Some(v) = self.roots.get(&key) {
            return v.clone();
        }
        let (n, k) = key;
        let k = k % n;
        let v = if k == 0 {
            (RealInterval::from_rational(&Rational::one(), self.work), RealInterval::zero(self.work))
        } else {
            // angle in (−π, π]
            let signed = if 2 * k <= n { k as i64 } else { k as i64 - n as i64 };
            let theta = self.pi.mul_rational(&Rational::new(2 * signed, n as i64));
            (cos_interval(&theta), sin_interval(&theta))
        };
        self.roots.insert(key, v.clone());
        v
    }

    pub fn embed(&mut self, x: &CyclotomicNumber) -> ComplexInterval {
        let mut re = RealInterval::zero(self.work);
        let mut im = RealInterval::zero(self.work);
        let n = x.order();
        for (k, c) in x.terms() {
            let (cr, ci) = self.root(n, k);
            re = re.add(&cr.mul_rational(c));
            im = im.add(&ci.mul_rational(c));
        }
        ComplexInterval { re, im }
    }
}

/// Certified enclosure of x under ζ_N ↦ e^{2πi/N}.
pub fn embed(x: &CyclotomicNumber, precision_bits: u32) -> ComplexInterval {
    Embedder::new(precision_bits).embed(x)
}

fn atan_inv(m: u64, prec: u32) -> RealInterval {
    // Σ (−1)^n / ((2n+1)·m^{2n+1}); alternating with decreasing terms
    let one = BigInt::from(1) << prec;
    let m2 = BigInt::from(m * m);
    let mut pow = BigInt::from(m);
    let mut sum = RealInterval::zero(prec);
    let mut n = 0u64;
    loop {
        let den = &pow * BigInt::from(2 * n + 1);
        let term = RealInterval { lo: floor_div(&one, &den), hi: ceil_div(&one, &den), prec };
        sum = if n % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        if term.hi <= BigInt::from(1) {
            // remaining tail is below the last term
            return sum.widen(&BigInt::from(1));
        }
        pow *= &m2;
        n += 1;
    }
}

fn pi_interval(prec: u32) -> RealInterval {
    let a = atan_inv(5, prec).mul_rational(&Rational::from_integer(16));
    let b = atan_inv(239, prec).mul_rational(&Rational::from_integer(4));
    a.sub(&b)
}

// Σ_{n≥0} (−1)^n t_n with t_0 = first and t_{n+1} = t_n·θ²/((a+2n)(a+2n+1)).
fn taylor(theta: &RealInterval, first: RealInterval, a: u64) -> RealInterval {
    let prec = theta.prec;
    let sq = theta.mul(theta);
    let sq = RealInterval { lo: sq.lo.max(BigInt::zero()), ..sq };
    let bound = theta.mag_ulps();
    let mut term = first;
    let mut sum = RealInterval::zero(prec);
    let mut n = 0u64;
    loop {
        let idx = a + 2 * n;
        // once (idx)(idx+1) exceeds θ² the terms decrease, and the Lagrange
        // remainder is bounded by the magnitude of the first omitted term
        let decreasing = (BigInt::from(idx * (idx + 1)) << (2 * prec)) > &bound * &bound;
        if decreasing && term.mag_ulps() <= BigInt::from(1) {
            return sum.widen(&(term.mag_ulps() + 1));
        }
        sum = if n % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        term = term.mul(&sq).mul_rational(&Rational::new(1, (idx * (idx + 1)) as i64));
        n += 1;
    }
}

fn sin_interval(theta: &RealInterval) -> RealInterval {
    taylor(theta, theta.clone(), 2)
}

fn cos_interval(theta: &RealInterval) -> RealInterval {
    taylor(theta, RealInterval::from_rational(&Rational::one(), theta.prec), 1)
}

/// Sign of a real cyclotomic number.
///
/// Rationals are decided exactly. Otherwise the embedding precision doubles
/// from 64 bits up to [`precision_cap`]; if zero is still not excluded the
/// result is [`ExactError::Undecidable`], never a guess.
pub fn sign_real(x: &CyclotomicNumber) -> Result<Ordering, ExactError> {
    sign_real_with_cap(x, precision_cap())
}

pub fn sign_real_with_cap(x: &CyclotomicNumber, cap: u32) -> Result<Ordering, ExactError> {
    if let Some(r) = x.as_rational() {
        return Ok(r.signum());
    }
    if !x.is_real() {
        return Err(ExactError::NotReal);
    }
    let mut bits = 64u32.min(cap);
    loop {
        if let Some(s) = embed(x, bits).re.sign() {
            return Ok(s);
        }
        if bits >= cap {
            return Err(ExactError::Undecidable { bits: cap });
        }
        bits = (bits * 2).min(cap);
    }
}
