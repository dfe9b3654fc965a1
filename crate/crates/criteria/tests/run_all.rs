use chartables::{build_table, Family, RowFamily, RowLabel};
use criteria::*;
use fusionring::FusionRing;

#[test]
fn run_all_examples() {
    for (q, f) in [(6, Family::Psl2), (30, Family::Etingof), (15, Family::Psl2)] {
        let reps = run_all(q, f).unwrap();
        let names: Vec<Criterion> = reps.iter().map(|r| r.criterion).collect();
        assert_eq!(names, CATEGORIFICATION_CRITERIA.to_vec());
        for r in &reps {
            assert_eq!(r.verdict, Verdict::Pass, "{f} q={q}: {r:?}");
        }
    }
}

#[test]
fn run_selected_sorts_and_dedups() {
    let reps = run_selected(
        8,
        Family::Psl2,
        &[Criterion::OneSpectrum, Criterion::Schur, Criterion::Schur],
        SpectrumMode::Exhaustive,
    )
    .unwrap();
    assert_eq!(reps.len(), 2);
    assert_eq!(reps[0].criterion, Criterion::Schur);
    assert_eq!(reps[1].method, Method::ExhaustiveSearch);
    assert!(run_all(1, Family::Psl2).is_err());
}

#[test]
fn modular_divisibility_obstruction() {
    for q in 4..=50 {
        let r = verlinde::reconstruct(&build_table(Family::Psl2, q).unwrap()).unwrap();
        let rep = modular_divisibility(&r);
        assert_eq!(rep.verdict, Verdict::Fail, "q={q}");
        let w = rep.witness.unwrap();
        let total = (q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 }).to_string();
        assert_eq!(w.values[0], total, "q={q}");
        // the Steinberg element x_{q,1} always fails: q² ∤ FPdim
        let st = r.index_of(&RowLabel::new(q, 1, RowFamily::Steinberg)).unwrap();
        assert!(w.indices.contains(&st), "q={q}");
    }
    let r6 = verlinde::reconstruct(&build_table(Family::Psl2, 6).unwrap()).unwrap();
    let w = modular_divisibility(&r6).witness.unwrap();
    assert_eq!(w.values[0], "210");
    assert!(w.values[1..].contains(&"6".to_string()));
    let r21 = verlinde::reconstruct(&build_table(Family::Psl2, 21).unwrap()).unwrap();
    assert!(modular_divisibility(&r21).witness.unwrap().values[1..].contains(&"21".to_string()));
    assert_eq!(divisibility_failures(&[1, 1, 1, 1, 1]), Vec::<usize>::new());
}

#[test]
fn pointed_ring_has_no_obstruction() {
    let n = 5;
    let labels = (0..n).map(|i| RowLabel::new(1, i as u64, RowFamily::Other)).collect();
    let mut r = FusionRing::zeros(Family::Custom, 0, labels, (0..n).map(|i| (n - i) % n).collect()).unwrap();
    for i in 0..n {
        for j in 0..n {
            r.set(i, j, (i + j) % n, 1);
        }
    }
    assert!(modular_divisibility(&r).passed());
    assert!(zero_spectrum(&r, SpectrumMode::Exhaustive).passed());
}
