//! Fusion tensors written straight from the closed-form multiplication
//! rules, independent of any character table.

pub mod predicates;

use chartables::{build_etingof_table, build_psl2_table, Family, RowFamily, RowLabel};
use fusionring::{FusionRing, RingError};

use predicates::{delta, sum_is_special};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RulesError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("table: {0}")]
    Table(String),
    #[error("reconstruction: {0}")]
    Reconstruction(String),
}

/// Basis bookkeeping for the psl2 layout: 1, H_c, A_c, S, B_c in block order.
struct Layout {
    h: Vec<usize>,
    a: Vec<usize>,
    s: usize,
    b: Vec<usize>,
    labels: Vec<RowLabel>,
}

impl Layout {
    fn new(q: u64, half: Option<u64>, na: u64, nb: u64) -> Self {
        let mut labels = vec![RowLabel::new(1, 1, RowFamily::Trivial)];
        let mut block = |degree: u64, fam: RowFamily, count: u64| -> Vec<usize> {
            (1..=count)
                .map(|c| {
                    labels.push(RowLabel::new(degree, c, fam));
                    labels.len() - 1
                })
                .collect()
        };
        let h = half.map_or_else(Vec::new, |d| block(d, RowFamily::Half, 2));
        let a = block(q - 1, RowFamily::Minus, na);
        let s = block(q, RowFamily::Steinberg, 1)[0];
        let b = block(q + 1, RowFamily::Plus, nb);
        Layout { h, a, s, b, labels }
    }
}

/// Accumulates x_i·x_j for i, j in both orders.
struct Tensor {
    ring: FusionRing,
}

impl Tensor {
    fn new(family: Family, q: u64, labels: Vec<RowLabel>, dual: Vec<usize>) -> Result<Self, RulesError> {
        let mut ring = FusionRing::zeros(family, q, labels, dual)?;
        for i in 0..ring.rank {
            ring.set(0, i, i, 1);
            ring.set(i, 0, i, 1);
        }
        Ok(Tensor { ring })
    }

    fn put(&mut self, i: usize, j: usize, k: usize, v: i64) {
        let v = u32::try_from(v).expect("fusion rules give nonnegative coefficients");
        self.ring.set(i, j, k, v);
        self.ring.set(j, i, k, v);
    }

    /// Adds Σ_{k ∈ ks} coeff(k)·x_k to x_i·x_j.
    fn sum(&mut self, i: usize, j: usize, ks: &[usize], coeff: impl Fn(u64) -> i64) {
        for (c, &k) in ks.iter().enumerate() {
            self.put(i, j, k, coeff(c as u64 + 1));
        }
    }
}

fn enumerate(v: &[usize]) -> impl Iterator<Item = (u64, usize)> + '_ {
    v.iter().enumerate().map(|(c, &i)| (c as u64 + 1, i))
}

/// R_q for even q.
pub fn rules_even(q: u64) -> Result<FusionRing, RulesError> {
    if q < 2 || q % 2 != 0 {
        return Err(RulesError::InvalidArgument(format!("rules_even needs an even q ≥ 2, got {q}")));
    }
    let l = Layout::new(q, None, q / 2, (q - 2) / 2);
    let dual = (0..l.labels.len()).collect();
    let mut t = Tensor::new(Family::Psl2, q, l.labels.clone(), dual)?;
    let (s, one) = (l.s, 0);
    for (c1, a1) in enumerate(&l.a) {
        for (c2, a2) in enumerate(&l.a) {
            t.put(a1, a2, one, delta(c1, c2));
            t.sum(a1, a2, &l.a, |c3| i64::from(!sum_is_special(c1, c2, c3, q + 1)));
            t.put(a1, a2, s, 1 - delta(c1, c2));
            t.sum(a1, a2, &l.b, |_| 1);
        }
        t.sum(a1, s, &l.a, |c2| 1 - delta(c1, c2));
        t.put(a1, s, s, 1);
        t.sum(a1, s, &l.b, |_| 1);
        for &b2 in &l.b {
            t.sum(a1, b2, &l.a, |_| 1);
            t.put(a1, b2, s, 1);
            t.sum(a1, b2, &l.b, |_| 1);
        }
    }
    t.put(s, s, one, 1);
    t.sum(s, s, &l.a, |_| 1);
    t.put(s, s, s, 1);
    t.sum(s, s, &l.b, |_| 1);
    for (c1, b1) in enumerate(&l.b) {
        t.sum(s, b1, &l.a, |_| 1);
        t.put(s, b1, s, 1);
        t.sum(s, b1, &l.b, |c2| 1 + delta(c1, c2));
        for (c2, b2) in enumerate(&l.b) {
            t.put(b1, b2, one, delta(c1, c2));
            t.sum(b1, b2, &l.a, |_| 1);
            t.put(b1, b2, s, 1 + delta(c1, c2));
            t.sum(b1, b2, &l.b, |c3| if sum_is_special(c1, c2, c3, q - 1) { 2 } else { 1 });
        }
    }
    Ok(t.ring)
}

/// R_q for q ≡ 3 mod 4.
pub fn rules_3mod4(q: u64) -> Result<FusionRing, RulesError> {
    if q % 4 != 3 {
        return Err(RulesError::InvalidArgument(format!("rules_3mod4 needs q ≡ 3 mod 4, got {q}")));
    }
    let m = (q - 3) / 4;
    let l = Layout::new(q, Some((q - 1) / 2), m, m);
    let mut dual: Vec<usize> = (0..l.labels.len()).collect();
    dual.swap(l.h[0], l.h[1]);
    let mut t = Tensor::new(Family::Psl2, q, l.labels.clone(), dual)?;
    let (s, one, k0) = (l.s, 0, (q + 1) / 4);
    for (c1, h1) in enumerate(&l.h) {
        for (c2, h2) in enumerate(&l.h) {
            let e = delta(c1, c2);
            t.put(h1, h2, one, 1 - e);
            t.sum(h1, h2, &l.h, |c3| e * (1 - delta(c1, c3)));
            t.sum(h1, h2, &l.a, |_| e);
            t.sum(h1, h2, &l.b, |_| 1 - e);
        }
        for (c2, a2) in enumerate(&l.a) {
            t.sum(h1, a2, &l.h, |c3| 1 - delta(c1, c3));
            t.sum(h1, a2, &l.a, |c3| 1 - delta(c2 + c3, k0));
            t.put(h1, a2, s, 1);
            t.sum(h1, a2, &l.b, |_| 1);
        }
        t.sum(h1, s, &l.a, |_| 1);
        t.put(h1, s, s, 1);
        t.sum(h1, s, &l.b, |_| 1);
        for &b2 in &l.b {
            t.sum(h1, b2, &l.h, |c3| delta(c1, c3));
            t.sum(h1, b2, &l.a, |_| 1);
            t.put(h1, b2, s, 1);
            t.sum(h1, b2, &l.b, |_| 1);
        }
    }
    odd_tail(&mut t, &l, q, |c1, c2| 1 - delta(c1 + c2, k0), |_, _| 1);
    Ok(t.ring)
}

/// R_q for q ≡ 1 mod 4.
pub fn rules_1mod4(q: u64) -> Result<FusionRing, RulesError> {
    if q % 4 != 1 || q < 5 {
        return Err(RulesError::InvalidArgument(format!("rules_1mod4 needs q ≡ 1 mod 4, q ≥ 5, got {q}")));
    }
    let l = Layout::new(q, Some((q + 1) / 2), (q - 1) / 4, (q - 5) / 4);
    let dual = (0..l.labels.len()).collect();
    let mut t = Tensor::new(Family::Psl2, q, l.labels.clone(), dual)?;
    let (s, one, k0) = (l.s, 0, (q - 1) / 4);
    for (c1, h1) in enumerate(&l.h) {
        for (c2, h2) in enumerate(&l.h) {
            let e = delta(c1, c2);
            t.put(h1, h2, one, e);
            t.sum(h1, h2, &l.h, |c3| e * delta(c1, c3));
            t.sum(h1, h2, &l.a, |_| 1 - e);
            t.put(h1, h2, s, 1);
            t.sum(h1, h2, &l.b, |_| e);
        }
        for &a2 in &l.a {
            t.sum(h1, a2, &l.h, |c3| 1 - delta(c1, c3));
            t.sum(h1, a2, &l.a, |_| 1);
            t.put(h1, a2, s, 1);
            t.sum(h1, a2, &l.b, |_| 1);
        }
        t.sum(h1, s, &l.h, |_| 1);
        t.sum(h1, s, &l.a, |_| 1);
        t.put(h1, s, s, 1);
        t.sum(h1, s, &l.b, |_| 1);
        for (c2, b2) in enumerate(&l.b) {
            t.sum(h1, b2, &l.h, |c3| delta(c1, c3));
            t.sum(h1, b2, &l.a, |_| 1);
            t.put(h1, b2, s, 1);
            t.sum(h1, b2, &l.b, |c3| 1 + delta(c2 + c3, k0));
        }
    }
    odd_tail(&mut t, &l, q, |_, _| 1, |c1, c2| 1 + delta(c1 + c2, k0));
    Ok(t.ring)
}

/// Products among x_{q−1,·}, x_{q,1}, x_{q+1,·}; these rules agree in both
/// odd branches except for the coefficient of Σ_c H_c in A·A and B·B.
fn odd_tail(t: &mut Tensor, l: &Layout, q: u64, h_in_aa: impl Fn(u64, u64) -> i64, h_in_bb: impl Fn(u64, u64) -> i64) {
    let (s, one) = (l.s, 0);
    for (c1, a1) in enumerate(&l.a) {
        for (c2, a2) in enumerate(&l.a) {
            t.put(a1, a2, one, delta(c1, c2));
            t.sum(a1, a2, &l.h, |_| h_in_aa(c1, c2));
            t.sum(a1, a2, &l.a, |c3| if sum_is_special(c1, c2, c3, (q + 1) / 2) { 1 } else { 2 });
            t.put(a1, a2, s, 2 - delta(c1, c2));
            t.sum(a1, a2, &l.b, |_| 2);
        }
        t.sum(a1, s, &l.h, |_| 1);
        t.sum(a1, s, &l.a, |c2| 2 - delta(c1, c2));
        t.put(a1, s, s, 2);
        t.sum(a1, s, &l.b, |_| 2);
        for &b2 in &l.b {
            t.sum(a1, b2, &l.h, |_| 1);
            t.sum(a1, b2, &l.a, |_| 2);
            t.put(a1, b2, s, 2);
            t.sum(a1, b2, &l.b, |_| 2);
        }
    }
    t.put(s, s, one, 1);
    t.sum(s, s, &l.h, |_| 1);
    t.sum(s, s, &l.a, |_| 2);
    t.put(s, s, s, 2);
    t.sum(s, s, &l.b, |_| 2);
    for (c1, b1) in enumerate(&l.b) {
        t.sum(s, b1, &l.h, |_| 1);
        t.sum(s, b1, &l.a, |_| 2);
        t.put(s, b1, s, 2);
        t.sum(s, b1, &l.b, |c2| 2 + delta(c1, c2));
        for (c2, b2) in enumerate(&l.b) {
            t.put(b1, b2, one, delta(c1, c2));
            t.sum(b1, b2, &l.h, |_| h_in_bb(c1, c2));
            t.sum(b1, b2, &l.a, |_| 2);
            t.put(b1, b2, s, 2 + delta(c1, c2));
            t.sum(b1, b2, &l.b, |c3| if sum_is_special(c1, c2, c3, (q - 1) / 2) { 3 } else { 2 });
        }
    }
}

/// R_q for any q ≥ 2, dispatching on the congruence class.
pub fn rules_psl2(q: u64) -> Result<FusionRing, RulesError> {
    if q < 2 {
        return Err(RulesError::InvalidArgument(format!("q must be at least 2, got {q}")));
    }
    match q % 4 {
        0 | 2 => rules_even(q),
        3 => rules_3mod4(q),
        _ => rules_1mod4(q),
    }
}

/// T_q: the group ring of C_{q−1} plus one element X with x_{1,c}X = X and
/// X² = Σ_c x_{1,c} + (q−2)X.
pub fn rules_etingof(q: u64) -> Result<FusionRing, RulesError> {
    if q < 2 {
        return Err(RulesError::InvalidArgument(format!("q must be at least 2, got {q}")));
    }
    let n = (q - 1) as usize;
    let mut labels: Vec<RowLabel> = (0..q - 1).map(|c| RowLabel::new(1, c, RowFamily::Linear)).collect();
    labels.push(RowLabel::new(q - 1, 1, RowFamily::Big));
    let mut dual: Vec<usize> = (0..n).map(|c| (n - c) % n).collect();
    dual.push(n);
    let mut ring = FusionRing::zeros(Family::Etingof, q, labels, dual)?;
    for a in 0..n {
        for b in 0..n {
            ring.set(a, b, (a + b) % n, 1);
        }
        ring.set(a, n, n, 1);
        ring.set(n, a, n, 1);
        ring.set(n, n, a, 1);
    }
    ring.set(n, n, n, (q - 2) as u32);
    Ok(ring)
}

pub fn rules(q: u64, family: Family) -> Result<FusionRing, RulesError> {
    match family {
        Family::Psl2 => rules_psl2(q),
        Family::Etingof => rules_etingof(q),
        Family::Custom => Err(RulesError::InvalidArgument("no closed-form rules for custom rings".into())),
    }
}

/// The closed-form tensor equals the reconstructed one, entry for entry,
/// with the same basis labels and duals.
pub fn crosscheck(q: u64, family: Family) -> Result<bool, RulesError> {
    let closed = rules(q, family)?;
    let table = match family {
        Family::Psl2 => build_psl2_table(q),
        _ => build_etingof_table(q),
    }
    .map_err(|e| RulesError::Table(e.to_string()))?;
    let rec = verlinde::reconstruct(&table).map_err(|e| RulesError::Reconstruction(e.to_string()))?;
    Ok(closed == rec)
}
