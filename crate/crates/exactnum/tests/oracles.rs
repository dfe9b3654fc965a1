//! Independent oracles for exactnum: a characteristic-polynomial integrality
//! test, floating-point references for embeddings, and randomized identities.

use exactnum::{embed, root_of_unity, sqrt_integer, CyclotomicNumber, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn br(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Φ_n from the Möbius product Π_{d|n} (x^d − 1)^{μ(n/d)}, as rationals.
fn phi_mobius(n: usize) -> Vec<BigRational> {
    fn mobius(mut n: usize) -> i32 {
        let mut m = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                m = -m;
            }
            p += 1;
        }
        if n > 1 {
            m = -m;
        }
        m
    }
    let mut num = vec![br(1)];
    let mut den = vec![br(1)];
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mut f = vec![br(0); d + 1];
        f[0] = br(-1);
        f[d] = br(1);
        match mobius(n / d) {
            1 => num = poly_mul(&num, &f),
            -1 => den = poly_mul(&den, &f),
            _ => {}
        }
    }
    poly_div_exact(&num, &den)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![br(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![br(0); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &b[db];
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &c * y;
        }
        q[i] = c;
    }
    assert!(r.iter().all(|x| x.is_zero()));
    q
}

type Mat = Vec<Vec<BigRational>>;

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![br(0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Characteristic polynomial of multiplication by Σ c_k ζ^k on Q[x]/Φ_n,
/// i.e. Res_y(Φ_n(y), t − A(y)), via Faddeev–LeVerrier.
fn char_poly(n: usize, coeffs: &[(usize, BigRational)]) -> Vec<BigRational> {
    let phi = phi_mobius(n);
    let d = phi.len() - 1;
    // companion matrix of Φ_n
    let mut comp = vec![vec![br(0); d]; d];
    for i in 1..d {
        comp[i][i - 1] = br(1);
    }
    for i in 0..d {
        comp[i][d - 1] = -phi[i].clone();
    }
    let mut a = vec![vec![br(0); d]; d];
    let mut power: Mat = (0..d).map(|i| (0..d).map(|j| if i == j { br(1) } else { br(0) }).collect()).collect();
    let mut k_done = 0;
    for (k, c) in coeffs {
        while k_done < *k {
            power = mat_mul(&power, &comp);
            k_done += 1;
        }
        for i in 0..d {
            for j in 0..d {
                a[i][j] += c * &power[i][j];
            }
        }
    }
    // Faddeev–LeVerrier: p(t) = Σ c_i t^i, c_d = 1
    let mut cs = vec![br(0); d + 1];
    cs[d] = br(1);
    let mut m: Mat = vec![vec![br(0); d]; d];
    for k in 1..=d {
        let mut next = mat_mul(&a, &m);
        for i in 0..d {
            next[i][i] += &cs[d - k + 1];
        }
        m = next;
        let am = mat_mul(&a, &m);
        let tr: BigRational = (0..d).map(|i| am[i][i].clone()).fold(br(0), |x, y| x + y);
        cs[d - k] = -tr / br(k as i64);
    }
    cs
}

fn random_element(rng: &mut ChaCha8Rng, n: u64, den_max: i64) -> (CyclotomicNumber, Vec<(usize, BigRational)>) {
    let nterms = rng.gen_range(1..=4);
    let mut terms = Vec::new();
    let mut raw = Vec::new();
    for _ in 0..nterms {
        let k = rng.gen_range(0..n as i64);
        let num = rng.gen_range(-6..=6);
        let den = rng.gen_range(1..=den_max);
        terms.push((k, Rational::new(num, den)));
        raw.push((k as usize, BigRational::new(BigInt::from(num), BigInt::from(den))));
    }
    raw.sort_by_key(|t| t.0);
    (CyclotomicNumber::from_terms(n, terms).unwrap(), raw)
}

#[test]
fn integrality_agrees_with_char_poly_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let orders: Vec<u64> = (1..=30).filter(|&n| exactnum::cyclopoly::euler_phi(n) <= 8).collect();
    let mut integral_seen = 0;
    for trial in 0..100 {
        let n = orders[rng.gen_range(0..orders.len())];
        // bias toward integral inputs so both outcomes occur
        let den_max = if trial % 2 == 0 { 1 } else { 3 };
        let (x, raw) = random_element(&mut rng, n, den_max);
        let cp = char_poly(n as usize, &raw);
        let oracle = cp.iter().all(|c| c.is_integer());
        assert_eq!(x.is_cyclotomic_integer(), oracle, "n = {n}, x = {x}");
        if oracle {
            integral_seen += 1;
        }
    }
    assert!(integral_seen > 20 && integral_seen < 100);
}

#[test]
fn char_poly_oracle_sanity() {
    // (−1 + i√7)/2 is a root of x² + x + 2; as an element of Q(ζ_7) it is
    // ζ + ζ² + ζ⁴, whose char poly over the degree-6 field is (x² + x + 2)³.
    let raw = vec![(1, br(1)), (2, br(1)), (4, br(1))];
    let cp = char_poly(7, &raw);
    assert_eq!(cp[0], br(8));
    assert!(cp[6].is_one());
}

fn to_complex_f64(x: &CyclotomicNumber) -> (f64, f64) {
    let n = x.order() as f64;
    x.terms().fold((0.0, 0.0), |(re, im), (k, c)| {
        let t = 2.0 * std::f64::consts::PI * k as f64 / n;
        (re + c.to_f64() * t.cos(), im + c.to_f64() * t.sin())
    })
}

#[test]
fn sqrt_squares_and_embeds_positive() {
    for n in 1..=200u64 {
        let s = sqrt_integer(n).unwrap();
        assert_eq!((&s * &s).as_rational(), Some(Rational::from_integer(n as i64)), "n = {n}");
        let e = embed(&s, 64);
        assert!(e.re.lower_f64() > 0.0 && e.im.contains_zero(), "n = {n}");
        assert!((e.re.mid_f64() - (n as f64).sqrt()).abs() < 1e-9, "n = {n}");
    }
}

#[test]
fn embedding_references() {
    let s6 = embed(&sqrt_integer(6).unwrap(), 64);
    assert!(s6.re.lower_f64() <= 2.4494897 + 1e-6 && 2.4494897 - 1e-6 <= s6.re.upper_f64());
    let s21 = embed(&sqrt_integer(21).unwrap(), 128);
    assert!(s21.re.lower_f64() <= 4.58257569495584 && 4.58257569495584 <= s21.re.upper_f64() + 1e-14);
    assert!((s21.re.mid_f64() - 21f64.sqrt()).abs() < 1e-12);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.gen_range(1..60u64);
        let (x, _) = random_element(&mut rng, n, 5);
        let (re, im) = to_complex_f64(&x);
        let e = embed(&x, 80);
        assert!((e.re.mid_f64() - re).abs() < 1e-9 && (e.im.mid_f64() - im).abs() < 1e-9, "{x}");
        assert!(e.re.width_f64() < 1e-15);
    }
}

#[test]
fn full_orbits_vanish() {
    for n in 2..=100u64 {
        let s = (0..n as i64).fold(CyclotomicNumber::zero(), |a, k| a + root_of_unity(n, k).unwrap());
        assert!(s.is_zero(), "n = {n}");
    }
}

#[test]
fn norms_are_nonnegative() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1000 {
        let n = rng.gen_range(1..40u64);
        let (x, _) = random_element(&mut rng, n, 4);
        let nx = &x * &x.conjugate();
        let e = embed(&nx, 64);
        assert!(e.re.upper_f64() >= 0.0 && e.im.contains_zero());
        assert!(e.re.lower_f64() > -1e-15);
    }
}

#[test]
fn randomized_field_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 10_000 {
        let n1 = rng.gen_range(1..25u64);
        let n2 = rng.gen_range(1..25u64);
        let (x, _) = random_element(&mut rng, n1, 4);
        let (y, _) = random_element(&mut rng, n2, 4);
        let s = &x + &y;
        let cs = s.canonicalize();
        assert_eq!(cs.terms().collect::<Vec<_>>(), (&x.canonicalize() + &y.canonicalize()).canonicalize().terms().collect::<Vec<_>>());
        let p = &x * &y;
        assert_eq!(p.canonicalize().terms().collect::<Vec<_>>(), (&x.canonicalize() * &y.canonicalize()).canonicalize().terms().collect::<Vec<_>>());
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(p.conjugate(), &x.conjugate() * &y.conjugate());
        assert_eq!(&s - &y, x);
        checked += 5;
    }
}

#[test]
fn paper_style_examples() {
    let z8 = root_of_unity(8, 1).unwrap();
    let r2 = &z8 + &root_of_unity(8, 7).unwrap();
    assert_eq!((&r2 * &r2).as_rational(), Some(Rational::from_integer(2)));
    assert_eq!(root_of_unity(5, 1).unwrap().as_rational(), None);
    let eb7 = (root_of_unity(4, 1).unwrap() * sqrt_integer(7).unwrap() - CyclotomicNumber::one()).scale(&Rational::new(1, 2));
    assert!(eb7.is_cyclotomic_integer());
    assert!(!CyclotomicNumber::from_rational(Rational::new(1, 2)).is_cyclotomic_integer());
    assert!(root_of_unity(12, 5).unwrap().is_cyclotomic_integer());
    // x² + x + 2 = 0
    let v = &(&eb7 * &eb7) + &eb7;
    assert_eq!(v.as_rational(), Some(Rational::from_integer(-2)));
}

#[test]
fn sign_decisions() {
    use std::cmp::Ordering;
    let s = sqrt_integer(2).unwrap() - CyclotomicNumber::from_rational(Rational::new(141, 100));
    assert_eq!(exactnum::sign_real(&s), Ok(Ordering::Greater));
    let t = CyclotomicNumber::from_rational(Rational::new(1414213562373095, 1_000_000_000_000_000)) - sqrt_integer(2).unwrap();
    assert_eq!(exactnum::sign_real(&t), Ok(Ordering::Less));
    assert_eq!(exactnum::sign_real(&root_of_unity(4, 1).unwrap()), Err(exactnum::ExactError::NotReal));
    // a Pell convergent 2^-204 below √2 needs more than 64 bits to separate
    let close = sqrt_integer(2).unwrap()
        - CyclotomicNumber::from_rational("5055923762956339922096065927393/3575077977948634627394046618865".parse().unwrap());
    assert_eq!(exactnum::interval::sign_real_with_cap(&close, 64), Err(exactnum::ExactError::Undecidable { bits: 64 }));
    assert_eq!(exactnum::interval::sign_real_with_cap(&close, 512), Ok(Ordering::Greater));
}
