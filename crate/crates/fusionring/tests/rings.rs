use chartables::{Family, RowFamily, RowLabel};
use fusionring::*;

fn labels(n: usize) -> Vec<RowLabel> {
    (0..n).map(|i| RowLabel::new(1, i as u64, RowFamily::Other)).collect()
}

/// Group ring of Z/n.
fn cyclic(n: usize) -> FusionRing {
    let dual = (0..n).map(|i| (n - i) % n).collect();
    let mut r = FusionRing::zeros(Family::Custom, 0, labels(n), dual).unwrap();
    for i in 0..n {
        for j in 0..n {
            r.set(i, j, (i + j) % n, 1);
        }
    }
    r
}

/// Rep(S_3): 1, sign s, standard x with x² = 1 + s + x.
fn rep_s3() -> FusionRing {
    let mut l = labels(3);
    l[2].degree = 2;
    let mut r = FusionRing::zeros(Family::Custom, 0, l, vec![0, 1, 2]).unwrap();
    let rules: &[(usize, usize, &[u32])] =
        &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (0, 2, &[0, 0, 1]), (1, 1, &[1, 0, 0]), (1, 2, &[0, 0, 1]), (2, 2, &[1, 1, 1])];
    for &(i, j, v) in rules {
        for (k, &c) in v.iter().enumerate() {
            r.set(i, j, k, c);
            r.set(j, i, k, c);
        }
    }
    r
}

#[test]
fn trivial_ring() {
    let r = FusionRing::trivial();
    let rep = verify_axioms(&r);
    assert!(rep.ok() && rep.commutative);
    assert_eq!(fpdims(&r, None).unwrap(), vec![1]);
    assert_eq!(multiplicity(&r), 1);
}

#[test]
fn small_rings_satisfy_axioms() {
    for n in 1..8 {
        let r = cyclic(n);
        assert!(verify_axioms(&r).ok(), "Z/{n}");
        assert_eq!(fpdims(&r, None).unwrap(), vec![1; n]);
        assert_eq!(is_simple(&r), n == 1 || [2, 3, 5, 7].contains(&n), "Z/{n}");
    }
    let s3 = rep_s3();
    assert!(verify_axioms(&s3).ok());
    assert_eq!(fpdims(&s3, None).unwrap(), vec![1, 1, 2]);
    assert_eq!(FusionType::from_dims(&[1, 1, 2]).to_string(), "[[1,2],[2,1]]");
    assert!(!is_simple(&s3));
    assert_eq!(self_dual_count(&s3), 3);
    assert_eq!(self_dual_count(&cyclic(5)), 1);
    assert!(is_frobenius_type(&s3).unwrap());
}

#[test]
fn corrupted_tensor_reports_associativity() {
    let mut r = cyclic(5);
    r.set(2, 3, 4, r.get(2, 3, 4) + 1);
    let rep = verify_axioms(&r);
    let v = rep.first(Axiom::Associativity).expect("associativity witness");
    assert_eq!(v.indices.len(), 4);
    let [i, j, k, l] = [v.indices[0], v.indices[1], v.indices[2], v.indices[3]];
    // recompute both bracketings at the reported tuple
    let n = r.rank;
    let lhs: u64 = (0..n).map(|m| (r.get(i, j, m) * r.get(m, k, l)) as u64).sum();
    let rhs: u64 = (0..n).map(|m| (r.get(j, k, m) * r.get(i, m, l)) as u64).sum();
    assert_ne!(lhs, rhs);
    assert!(!rep.commutative);
    let mut sorted = rep.violations.clone();
    sorted.sort();
    assert_eq!(sorted, rep.violations);
}

#[test]
fn neutral_and_dual_violations() {
    let mut r = cyclic(3);
    r.set(0, 1, 1, 0);
    assert!(verify_axioms(&r).first(Axiom::Neutral).is_some());
    let mut r = cyclic(3);
    r.dual = vec![0, 1, 2];
    assert!(verify_axioms(&r).first(Axiom::Dual).is_some());
}

#[test]
fn frobenius_type_synthetic() {
    let t = FusionType { pairs: vec![(1, 1), (2, 1)] };
    assert_eq!(t.total(), 5);
    assert!(!t.is_frobenius());
    let t = FusionType::from_dims(&[1, 5, 5, 5, 6, 7, 7]);
    assert_eq!(t.total(), 210);
    assert!(t.is_frobenius());
    assert_eq!(t.rank(), 7);
}

#[test]
fn json_round_trip() {
    let r = rep_s3();
    let s = r.to_json_string();
    assert!(s.contains("\"version\":1") && s.contains("\"N\""));
    let back = FusionRing::from_json_str(&s).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.to_json_string(), s);
    assert!(FusionRing::from_json_str("{\"version\":2}").is_err());
}

#[test]
fn non_integral_perron() {
    // Fibonacci: τ² = 1 + τ has d = golden ratio
    let mut r = FusionRing::zeros(Family::Custom, 0, labels(2), vec![0, 1]).unwrap();
    r.set(0, 0, 0, 1);
    r.set(0, 1, 1, 1);
    r.set(1, 0, 1, 1);
    r.set(1, 1, 0, 1);
    r.set(1, 1, 1, 1);
    assert!(verify_axioms(&r).ok());
    assert!(matches!(fpdims(&r, None), Err(RingError::NonIntegral(_))));
    assert!(is_frobenius_type(&r).is_err());
}
