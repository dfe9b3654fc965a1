//! Elements of cyclotomic fields as sparse rational combinations of ζ_N^k.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cyclopoly::{euler_phi, gcd, lcm, CycloField};
use crate::{ExactError, Rational};

/// `Σ terms[k]·ζ_order^k`. Zero coefficients are never stored.
///
/// Arithmetic is lazy: sums and products are not reduced modulo Φ_N until
/// an equality, rationality or integrality question is asked.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u64,
    terms: BTreeMap<u64, Rational>,
    canonical: bool,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        CyclotomicNumber { order: 1, terms: BTreeMap::new(), canonical: true }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r);
        }
        CyclotomicNumber { order: 1, terms, canonical: true }
    }

    /// ζ_order^exponent, with the exponent reduced mod `order`.
    pub fn root_of_unity(order: u64, exponent: i64) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidOrder);
        }
        let k = exponent.rem_euclid(order as i64) as u64;
        let mut terms = BTreeMap::new();
        terms.insert(k, Rational::one());
        Ok(CyclotomicNumber { order, terms, canonical: false }.marked())
    }

    /// Builds from raw (exponent, coefficient) pairs; exponents may be any
    /// integers and repeated exponents are summed.
    pub fn from_terms<I>(order: u64, terms: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        if order == 0 {
            return Err(ExactError::InvalidOrder);
        }
        let mut out = CyclotomicNumber { order, terms: BTreeMap::new(), canonical: false };
        for (k, c) in terms {
            out.add_term(k.rem_euclid(order as i64) as u64, &c);
        }
        Ok(out.marked())
    }

    // A value whose exponents already lie below φ(N) is canonical as stored.
    fn marked(mut self) -> Self {
        let phi = euler_phi(self.order);
        self.canonical = self.terms.keys().next_back().map_or(true, |&k| k < phi);
        self
    }

    fn add_term(&mut self, k: u64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Reinterprets the value in Q(ζ_M) for a multiple M of the current order.
    pub fn lift(&self, new_order: u64) -> Self {
        assert!(new_order % self.order == 0, "lift target must be a multiple of the order");
        if new_order == self.order {
            return self.clone();
        }
        let f = new_order / self.order;
        let terms = self.terms.iter().map(|(k, v)| (k * f, v.clone())).collect();
        CyclotomicNumber { order: new_order, terms, canonical: false }.marked()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * r)).collect();
        CyclotomicNumber { order: self.order, terms, canonical: self.canonical }
    }

    /// Applies ζ_N ↦ ζ_N^{−1}, which is complex conjugation in every embedding.
    pub fn conjugate(&self) -> Self {
        let n = self.order;
        let terms = self.terms.iter().map(|(k, v)| ((n - k) % n, v.clone())).collect();
        CyclotomicNumber { order: n, terms, canonical: false }.marked()
    }

    /// Applies the Galois automorphism ζ_N ↦ ζ_N^a for a unit a mod N.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.order as i64;
        let a = a.rem_euclid(n);
        assert!(gcd(a as u64, n as u64) == 1, "Galois exponent must be a unit");
        let mut out = CyclotomicNumber { order: self.order, terms: BTreeMap::new(), canonical: false };
        for (k, v) in &self.terms {
            out.add_term(((*k as i64 * a) % n) as u64, v);
        }
        out.marked()
    }

    /// Power-basis normal form in Q(ζ_order).
    pub fn canonicalize(&self) -> Self {
        if self.canonical {
            return self.clone();
        }
        self.canonicalize_in(&CycloField::shared(self.order))
    }

    /// Same as [`canonicalize`](Self::canonicalize) with a prebuilt field context.
    pub fn canonicalize_in(&self, field: &CycloField) -> Self {
        assert_eq!(field.order, self.order);
        if self.canonical {
            return self.clone();
        }
        let mut dense = vec![Rational::zero(); self.order as usize];
        for (k, v) in &self.terms {
            dense[*k as usize] = v.clone();
        }
        field.reduce_dense(&mut dense);
        Self::from_canonical_dense(self.order, dense)
    }

    /// Wraps a dense vector already reduced below φ(order).
    pub fn from_canonical_dense(order: u64, dense: Vec<Rational>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k as u64, v))
            .collect();
        CyclotomicNumber { order, terms, canonical: true }
    }

    /// Shrinks the order by the gcd of all exponents with N, then canonicalizes.
    pub fn shrink_order(&self) -> Self {
        let c = self.canonicalize();
        if c.terms.is_empty() {
            return Self::zero();
        }
        let g = c.terms.keys().fold(c.order, |g, &k| gcd(g, k));
        if g <= 1 {
            return c;
        }
        let terms = c.terms.into_iter().map(|(k, v)| (k / g, v)).collect();
        CyclotomicNumber { order: c.order / g, terms, canonical: false }.marked().canonicalize()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.canonicalize().terms.is_empty()
    }

    /// The rational value, if the canonical form is supported on exponent 0.
    pub fn as_rational(&self) -> Option<Rational> {
        let c = self.canonicalize();
        match c.terms.len() {
            0 => Some(Rational::zero()),
            1 => c.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Membership in Z[ζ_N]: all power-basis coordinates are integers.
    pub fn is_cyclotomic_integer(&self) -> bool {
        self.canonicalize().terms.values().all(Rational::is_integer)
    }

    pub fn is_real(&self) -> bool {
        (self - &self.conjugate()).is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn combine(&self, o: &Self, sign: &Rational) -> Self {
        let n = lcm(self.order, o.order);
        let (fa, fb) = (n / self.order, n / o.order);
        let mut out = CyclotomicNumber { order: n, terms: BTreeMap::new(), canonical: false };
        for (k, v) in &self.terms {
            out.add_term(k * fa, v);
        }
        for (k, v) in &o.terms {
            out.add_term(k * fb, &(v * sign));
        }
        out.marked()
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self.combine(o, &Rational::one())
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self.combine(o, &Rational::from_integer(-1))
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        let n = lcm(self.order, o.order);
        let (fa, fb) = (n / self.order, n / o.order);
        let mut out = CyclotomicNumber { order: n, terms: BTreeMap::new(), canonical: false };
        for (k, v) in &self.terms {
            for (l, w) in &o.terms {
                out.add_term((k * fa + l * fb) % n, &(v * w));
            }
        }
        out.marked()
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.scale(&Rational::from_integer(-1))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, o: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, o: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, o: &Self) -> bool {
        (self - o).is_zero()
    }
}

impl Eq for CyclotomicNumber {}

impl From<Rational> for CyclotomicNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Default for CyclotomicNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for CyclotomicNumber {
    /// GAP-style `c*E(N)^k` sums; rationals print bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *k == 0 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}*E({})^{k}", self.order)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Free-function form of [`CyclotomicNumber::root_of_unity`].
pub fn root_of_unity(order: u64, exponent: i64) -> Result<CyclotomicNumber, ExactError> {
    CyclotomicNumber::root_of_unity(order, exponent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> CyclotomicNumber {
        root_of_unity(n, k).unwrap()
    }

    #[test]
    fn spec_style_examples() {
        assert_eq!(z(1, 0), CyclotomicNumber::one());
        assert_eq!(z(4, 2), CyclotomicNumber::from_integer(-1));
        assert_eq!(z(5, 7), z(5, 2));
        assert!((z(4, 1) + z(4, 3)).is_zero());
        assert_eq!(z(3, 1) * z(3, 2), CyclotomicNumber::one());
        let orbit = (0..7).fold(CyclotomicNumber::zero(), |a, k| a + z(7, k));
        assert!(orbit.is_zero());
        assert!(root_of_unity(0, 1).is_err());
    }

    #[test]
    fn zeta6_canonical_form() {
        let c = z(6, 1).canonicalize();
        assert_eq!(&c * &c, z(3, 1).canonicalize());
        // under the power basis of Q(ζ_6): ζ_6 is already reduced (φ(6) = 2)
        assert!(c.is_canonical());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let x = z(12, 7) + z(12, 11).scale(&Rational::new(3, 2));
        let c = x.canonicalize();
        assert_eq!(c.canonicalize().terms().collect::<Vec<_>>(), c.terms().collect::<Vec<_>>());
    }

    #[test]
    fn shrink_order_keeps_value() {
        let x = z(12, 4) + z(12, 8);
        let s = x.shrink_order();
        assert_eq!(s.order(), 1);
        assert_eq!(s, x);
        assert_eq!(s.as_rational(), Some(Rational::from_integer(-1)));
    }

    #[test]
    fn galois_action() {
        let x = z(5, 1);
        assert_eq!(x.galois(-1), x.conjugate());
        assert_eq!(x.galois(2), z(5, 2));
    }
}
