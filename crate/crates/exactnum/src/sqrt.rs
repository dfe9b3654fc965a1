//! Square roots of positive integers via quadratic Gauss sums.

use crate::{CyclotomicNumber, ExactError, Rational};

fn legendre(t: u64, p: u64) -> i64 {
    let mut base = t % p;
    let mut e = (p - 1) / 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    match acc {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Σ_t (t|p)·ζ_p^t for an odd prime p; equals √p or i√p.
pub fn gauss_sum(p: u64) -> CyclotomicNumber {
    let terms = (1..p).map(|t| (t as i64, Rational::from_integer(legendre(t, p))));
    CyclotomicNumber::from_terms(p, terms).expect("p > 0")
}

fn sqrt_prime(p: u64) -> CyclotomicNumber {
    if p == 2 {
        let z8 = CyclotomicNumber::root_of_unity(8, 1).unwrap();
        return &z8 + &z8.conjugate();
    }
    let g = gauss_sum(p);
    if p % 4 == 1 {
        g
    } else {
        // g = i√p, so √p = −i·g = ζ_4^3·g
        &CyclotomicNumber::root_of_unity(4, 3).unwrap() * &g
    }
}

/// Splits n into (m, s) with n = m²·s and s squarefree.
fn square_split(mut n: u64) -> (u64, Vec<u64>) {
    let mut m = 1;
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            primes.push(p);
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    (m, primes)
}

/// Exact +√n, positive under ζ_N ↦ e^{2πi/N}.
pub fn sqrt_integer(n: u64) -> Result<CyclotomicNumber, ExactError> {
    if n == 0 {
        return Err(ExactError::InvalidArgument("sqrt_integer needs n ≥ 1".into()));
    }
    let (m, primes) = square_split(n);
    let mut acc = CyclotomicNumber::from_integer(m as i64);
    for p in primes {
        acc = &acc * &sqrt_prime(p);
    }
    Ok(acc.shrink_order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_back() {
        for n in [1u64, 2, 3, 4, 5, 6, 7, 12, 15, 21, 35, 39, 42] {
            let s = sqrt_integer(n).unwrap();
            assert_eq!((&s * &s).as_rational(), Some(Rational::from_integer(n as i64)), "n = {n}");
        }
        assert_eq!(sqrt_integer(4).unwrap().as_rational(), Some(Rational::from_integer(2)));
        assert!(sqrt_integer(0).is_err());
    }

    #[test]
    fn gauss_sum_squares_to_signed_prime() {
        for p in [3u64, 5, 7, 11, 13] {
            let g = gauss_sum(p);
            let sign = if p % 4 == 1 { 1 } else { -1 };
            assert_eq!((&g * &g).as_rational(), Some(Rational::from_integer(sign * p as i64)));
        }
    }
}
