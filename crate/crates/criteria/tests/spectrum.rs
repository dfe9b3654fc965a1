use chartables::{build_table, Family, RowFamily, RowLabel};
use criteria::*;
use fusionring::FusionRing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring(f: Family, q: u64) -> FusionRing {
    verlinde::reconstruct(&build_table(f, q).unwrap()).unwrap()
}

fn labels(n: usize) -> Vec<RowLabel> {
    (0..n).map(|i| RowLabel::new(1, i as u64, RowFamily::Other)).collect()
}

fn blank(n: usize) -> FusionRing {
    FusionRing::zeros(Family::Custom, 0, labels(n), (0..n).collect()).unwrap()
}

#[test]
fn exhaustive_passes_on_small_rings() {
    let mut cases: Vec<(Family, u64)> = (2..=11).map(|q| (Family::Psl2, q)).collect();
    cases.extend((2..=13).map(|q| (Family::Etingof, q)));
    for (f, q) in cases {
        let r = ring(f, q);
        for rep in [zero_spectrum(&r, SpectrumMode::Exhaustive), one_spectrum(&r, SpectrumMode::Exhaustive)] {
            assert_eq!(rep.verdict, Verdict::Pass, "{f} q={q}: {rep:?}");
            assert_eq!(rep.method, Method::ExhaustiveSearch);
        }
    }
}

#[test]
fn one_spectrum_exhaustive_on_etingof_up_to_20() {
    for q in 14..=20 {
        let rep = one_spectrum(&ring(Family::Etingof, q), SpectrumMode::Exhaustive);
        assert_eq!(rep.verdict, Verdict::Pass, "q={q}");
    }
}

#[test]
fn search_agrees_with_naive_enumeration_on_small_rings() {
    let mut rings: Vec<FusionRing> = Vec::new();
    for q in 2..=20 {
        for f in [Family::Psl2, Family::Etingof] {
            let r = ring(f, q);
            if r.rank <= 6 {
                rings.push(r);
            }
        }
    }
    assert!(rings.len() >= 8);
    for r in &rings {
        let s = SpectrumData::new(r);
        let (a, b) = (s.search_zero(None), s.naive_zero());
        assert_eq!((a.least, a.count), (b.least, b.count), "{} q={}", r.family, r.q);
        let (a, b) = (s.search_one(None), s.naive_one());
        assert_eq!((a.least, a.count), (b.least, b.count), "{} q={}", r.family, r.q);
    }
}

/// Random sparse tensors are not fusion rings, but both searches evaluate
/// the same predicate, so they must find the same witnesses.
#[test]
fn search_agrees_with_naive_enumeration_on_random_tensors() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut hits = (0, 0);
    for trial in 0..40 {
        let n = 4 + trial % 2;
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut r = FusionRing::zeros(Family::Custom, 0, labels(n), perm).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if rng.gen_bool(0.35) {
                        r.set(i, j, k, rng.gen_range(1..=2));
                    }
                }
            }
        }
        let s = SpectrumData::new(&r);
        let (a, b) = (s.search_zero(None), s.naive_zero());
        assert_eq!((a.least, a.count), (b.least, b.count), "trial {trial}");
        let (c, d) = (s.search_one(None), s.naive_one());
        assert_eq!((c.least, c.count), (d.least, d.count), "trial {trial}");
        hits.0 += a.count;
        hits.1 += c.count;
        if let Some(t) = a.least {
            assert!(s.zero_holds(&t));
        }
        if let Some(t) = c.least {
            assert!(s.one_holds(&t));
        }
    }
    assert!(hits.0 > 0 && hits.1 > 0, "random tensors produced no witnesses: {hits:?}");
}

#[test]
fn planted_zero_spectrum_witness() {
    // i1..i9 = 1..9 with identity duals
    let mut r = blank(10);
    for (a, b, c) in [(4, 1, 6), (5, 4, 2), (5, 6, 3), (7, 9, 1), (2, 7, 8), (8, 9, 3), (2, 1, 3), (3, 1, 2), (3, 9, 8)] {
        r.set(a, b, c, 1);
    }
    let s = SpectrumData::new(&r);
    let planted = [1, 2, 3, 4, 5, 6, 7, 8, 9];
    assert!(s.zero_holds(&planted));
    let rep = zero_spectrum(&r, SpectrumMode::Exhaustive);
    assert_eq!(rep.verdict, Verdict::Fail);
    assert_eq!(rep.witness.as_ref().unwrap().indices, planted.to_vec());
    assert_eq!(s.search_zero(None).count, 1);
}

#[test]
fn planted_one_spectrum_witness() {
    // i0 = 10, i1..i9 = 1..9 with identity duals
    let mut r = blank(11);
    for (a, b, c) in [
        (4, 1, 6),
        (5, 4, 2),
        (5, 6, 3),
        (7, 9, 1),
        (2, 7, 8),
        (8, 9, 3),
        (4, 7, 10),
        (5, 8, 10),
        (6, 9, 10),
        (8, 7, 2),
    ] {
        r.set(a, b, c, 1);
    }
    let s = SpectrumData::new(&r);
    let planted = [10, 1, 2, 3, 4, 5, 6, 7, 8, 9];
    assert!(s.one_holds(&planted));
    let rep = one_spectrum(&r, SpectrumMode::Exhaustive);
    assert_eq!(rep.verdict, Verdict::Fail);
    assert_eq!(rep.witness.as_ref().unwrap().indices, planted.to_vec());
    let o = s.search_one(None);
    assert_eq!(o.least, Some(planted));
}

#[test]
fn fast_path_hypotheses() {
    for q in (4..=50).step_by(2) {
        let r = ring(Family::Psl2, q);
        let k0 = r.index_of(&RowLabel::new(q + 1, 1, RowFamily::Plus)).unwrap();
        assert_eq!(zero_cover(&r).map(|k| r.labels[k].degree), Some(q + 1), "q={q}");
        let covering: Vec<usize> = (0..r.rank).filter(|&k| (1..r.rank).all(|i| (1..r.rank).all(|j| r.get(i, j, k) != 0))).collect();
        assert!(covering.contains(&k0), "q={q}");
        if q >= 6 {
            let k1 = r.index_of(&RowLabel::new(q + 1, 2, RowFamily::Plus)).unwrap();
            assert!(covering.contains(&k1), "q={q}");
            assert!(one_cover(&r).is_some());
            let rep = one_spectrum(&r, SpectrumMode::Fast);
            assert_eq!((rep.verdict, rep.method), (Verdict::Pass, Method::FastPathLemma));
            assert!(rep.note.contains("every non-unit product"));
        }
        let rep = zero_spectrum(&r, SpectrumMode::Fast);
        assert!(rep.note.contains("every non-unit product"), "q={q}");
    }
    for q in (5..=49).step_by(4) {
        let r = ring(Family::Psl2, q);
        let k0 = r.index_of(&RowLabel::new(q, 1, RowFamily::Steinberg)).unwrap();
        assert!((1..r.rank).all(|i| (1..r.rank).all(|j| r.get(i, j, k0) != 0)), "q={q}");
        let rep = zero_spectrum(&r, SpectrumMode::Fast);
        assert_eq!((rep.verdict, rep.method), (Verdict::Pass, Method::FastPathLemma));
        assert!(rep.note.contains("every non-unit product"), "q={q}");
    }
}

#[test]
fn lemma_restricted_search_on_three_mod_four() {
    for q in [7u64, 11, 15, 19, 23] {
        let r = ring(Family::Psl2, q);
        assert!(zero_cover(&r).is_none(), "q={q}");
        for rep in [zero_spectrum(&r, SpectrumMode::Fast), one_spectrum(&r, SpectrumMode::Fast)] {
            assert_eq!((rep.verdict, rep.method), (Verdict::Pass, Method::FastPathLemma), "q={q}");
            assert!(rep.note.contains("restricted"), "q={q}");
        }
    }
}
