use exactnum::Rational;
use modsearch::*;

fn sols(max_terms: usize, c: u64) -> Vec<Multiset> {
    enumerate_unit_sum_of_inverse_squares(max_terms, c).solutions
}

#[test]
fn small_examples() {
    assert_eq!(sols(4, 1), vec![vec![1], vec![2, 2, 2, 2]]);
    assert_eq!(sols(3, 2), vec![vec![1, 1]]);
    assert_eq!(sols(2, 1), vec![vec![1]]);
    assert_eq!(sols(1, 2), Vec::<Multiset>::new());
}

/// Fixes the first r − 1 values inside a box and solves for the last one
/// exactly, so it shares nothing with the pruned DFS.
fn brute_force(max_terms: usize, c: u64, bound: u64) -> Vec<Multiset> {
    fn rec(prefix: &mut Vec<u64>, len: usize, bound: u64, c: u64, out: &mut Vec<Multiset>) {
        if prefix.len() == len - 1 {
            let rho = &Rational::from_integer(c as i64) - &inverse_square_sum(prefix);
            if !rho.is_positive() || !rho.numer().eq(&1.into()) {
                return;
            }
            let den = rho.denom();
            let s = den.sqrt();
            if &s * &s == den {
                let s = u64::try_from(&s).unwrap();
                if prefix.last().is_none_or(|&p| s >= p) {
                    let mut v = prefix.clone();
                    v.push(s);
                    out.push(v);
                }
            }
            return;
        }
        let start = prefix.last().copied().unwrap_or(1);
        for s in start..=bound {
            prefix.push(s);
            rec(prefix, len, bound, c, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for len in 1..=max_terms {
        rec(&mut Vec::new(), len, bound, c, &mut out);
    }
    out.sort();
    out
}

#[test]
fn dfs_matches_brute_force() {
    let bound = 24;
    for max_terms in 1..=6 {
        for c in 1..=6 {
            let dfs = sols(max_terms, c);
            for s in &dfs {
                assert_eq!(inverse_square_sum(s), Rational::from_integer(c as i64));
                assert!(s.windows(2).all(|w| w[0] <= w[1]));
            }
            let boxed: Vec<Multiset> =
                dfs.iter().filter(|s| s[..s.len() - 1].iter().all(|&x| x <= bound)).cloned().collect();
            assert_eq!(boxed, brute_force(max_terms, c, bound), "max_terms {max_terms}, c {c}");
        }
    }
}

#[test]
fn dfs_prefixes_fit_the_box() {
    // Every solution with at most six terms has its first five values ≤ 24,
    // so the boxed comparison above is a complete comparison.
    for c in 1..=6 {
        for s in sols(6, c) {
            assert!(s[..s.len() - 1].iter().all(|&x| x <= 24), "{s:?}");
        }
    }
}

#[test]
fn prime_powers() {
    let n = 1_000_000usize;
    let mut spf = vec![0usize; n + 1];
    for p in 2..=n {
        if spf[p] == 0 {
            let mut m = p;
            while m <= n {
                if spf[m] == 0 {
                    spf[m] = p;
                }
                m += p;
            }
        }
    }
    for m in 1..=n {
        let expected = m > 1 && {
            let p = spf[m];
            let mut x = m;
            while x % p == 0 {
                x /= p;
            }
            x == 1
        };
        assert_eq!(is_prime_power(m as u64), expected, "{m}");
    }
}

#[test]
fn rank_four_is_empty() {
    let (c, cert) = search_nonpointed_simple_modular_types(4);
    assert!(c.is_empty());
    assert!(cert.complete);
}

/// With the prime-power filter off, the rank ≤ 5 survivors with s_max ≤ 50
/// must equal a direct enumeration over dimension vectors. With a unique
/// unit nothing survives; allowing several invertibles gives real cases.
#[test]
fn unfiltered_low_rank_matches_dimension_enumeration() {
    for unique_unit in [true, false] {
        let opts = SearchOptions { max_rank: 11, unique_unit, non_prime_power: false };
        let (cands, _) = search_with(opts);
        let mut got: Vec<Vec<u64>> = cands
            .iter()
            .filter(|x| x.rank <= 5 && *x.s.last().unwrap() <= 50)
            .map(|x| x.dims.clone())
            .collect();
        got.sort();

        fn rec(d: &mut Vec<u64>, lo: u64, want: &mut Vec<Vec<u64>>) {
            if d.iter().any(|&x| x > 1) {
                let total: u64 = d.iter().map(|x| x * x).sum();
                let hit = (1..=11u64).any(|c| {
                    if total % c != 0 {
                        return false;
                    }
                    let m = ((total / c) as f64).sqrt().round() as u64;
                    m * m * c == total && m <= 50 && d.iter().all(|&x| m % x == 0)
                });
                if hit {
                    let mut v = d.clone();
                    v.sort_by(|a, b| b.cmp(a));
                    want.push(v);
                }
            }
            if d.len() == 5 {
                return;
            }
            let start = d.last().copied().unwrap_or(1).max(lo);
            for x in start..=50 {
                d.push(x);
                rec(d, lo, want);
                d.pop();
            }
        }
        let mut want = Vec::new();
        rec(&mut vec![1], if unique_unit { 2 } else { 1 }, &mut want);
        want.sort();
        want.dedup();
        assert_eq!(got, want, "unique_unit = {unique_unit}");
        assert_eq!(want.is_empty(), unique_unit);
    }
}

#[test]
fn rank_eleven_certificate() {
    let (a, cert) = search_nonpointed_simple_modular_types(11);
    let (b, cert2) = search_nonpointed_simple_modular_types(11);
    assert_eq!(a, b);
    assert_eq!(cert, cert2);
    assert!(cert.complete);
    assert_eq!(cert.nodes, 497_326);
    assert_eq!(cert.c_range, (1, 11));
    let f = &cert.filters;
    assert_eq!(
        f.enumerated,
        f.non_divisible + f.pointed + f.several_invertibles + f.prime_power_dimension + f.duplicate_type + f.survivors
    );
    for x in &a {
        let total: u128 = x.dims.iter().map(|&d| d as u128 * d as u128).sum();
        assert_eq!(x.fpdim, total.to_string());
        assert_eq!(x.dims.iter().filter(|&&d| d == 1).count(), 1);
        assert!(x.dims.iter().all(|&d| d == 1 || !is_prime_power(d)));
        assert!(x.dims.iter().all(|&d| total % (d as u128 * d as u128) == 0));
    }
}
