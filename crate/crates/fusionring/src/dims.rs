use chartables::Eigentable;
use serde::{Deserialize, Serialize};

use crate::{FusionRing, RingError};

/// The Frobenius-Perron type [[d_1,m_1],…,[d_s,m_s]] with d strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionType {
    pub pairs: Vec<(u64, usize)>,
}

impl FusionType {
    pub fn from_dims(dims: &[u64]) -> Self {
        let mut sorted = dims.to_vec();
        sorted.sort_unstable();
        let mut pairs: Vec<(u64, usize)> = Vec::new();
        for d in sorted {
            match pairs.last_mut() {
                Some((e, m)) if *e == d => *m += 1,
                _ => pairs.push((d, 1)),
            }
        }
        FusionType { pairs }
    }

    pub fn rank(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// Σ m·d², the FPdim of the ring.
    pub fn total(&self) -> u128 {
        self.pairs.iter().map(|&(d, m)| m as u128 * (d as u128) * (d as u128)).sum()
    }

    /// Every d divides the total.
    pub fn is_frobenius(&self) -> bool {
        let t = self.total();
        self.pairs.iter().all(|&(d, _)| t % d as u128 == 0)
    }
}

impl std::fmt::Display for FusionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(d, m)| format!("[{d},{m}]")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_character(r: &FusionRing, d: &[u64]) -> Option<(usize, usize)> {
    for i in 0..r.rank {
        for j in 0..r.rank {
            let lhs: u128 = r.product(i, j).iter().zip(d).map(|(&n, &dk)| n as u128 * dk as u128).sum();
            if lhs != d[i] as u128 * d[j] as u128 {
                return Some((i, j));
            }
        }
    }
    None
}

/// Frobenius-Perron dimensions. With a table they are read off the first
/// column; without one they come from power iteration on Σ_i M_i (a
/// positive matrix whose Perron vector is d), rounded and then checked
/// exactly against Σ_k N_{i,j}^k d_k = d_i d_j.
pub fn fpdims(r: &FusionRing, t: Option<&Eigentable>) -> Result<Vec<u64>, RingError> {
    let d = match t {
        Some(t) => {
            if t.rank != r.rank {
                return Err(RingError::Shape(format!("table rank {} ≠ ring rank {}", t.rank, r.rank)));
            }
            t.entries
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row[0]
                        .as_rational()
                        .filter(|x| x.is_integer() && x.is_positive())
                        .and_then(|x| x.to_i64())
                        .map(|x| x as u64)
                        .ok_or_else(|| RingError::NonIntegral(format!("λ_{{{i},1}} = {}", row[0])))
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        None => perron(r)?,
    };
    if let Some((i, j)) = check_character(r, &d) {
        return Err(RingError::Inconsistent(format!(
            "Σ_k N_{{{i},{j}}}^k d_k ≠ d_{i}·d_{j} for d = {d:?}"
        )));
    }
    Ok(d)
}

fn perron(r: &FusionRing) -> Result<Vec<u64>, RingError> {
    let n = r.rank;
    let mut a = vec![0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, &v) in r.product(i, j).iter().enumerate() {
                a[j * n + k] += v as f64;
            }
        }
    }
    let mut v = vec![1f64; n];
    for _ in 0..100_000 {
        let mut w: Vec<f64> = (0..n).map(|j| (0..n).map(|k| a[j * n + k] * v[k]).sum()).collect();
        let s = w[0];
        if !(s.is_finite() && s > 0.0) {
            return Err(RingError::NonIntegral("Perron iteration degenerated".into()));
        }
        w.iter_mut().for_each(|x| *x /= s);
        let delta = w.iter().zip(&v).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        v = w;
        if delta < 1e-13 {
            break;
        }
    }
    v.iter()
        .enumerate()
        .map(|(i, &x)| {
            let k = x.round();
            if (x - k).abs() > 1e-6 || k < 1.0 {
                Err(RingError::NonIntegral(format!("d_{i} ≈ {x}")))
            } else {
                Ok(k as u64)
            }
        })
        .collect()
}

/// Every nontrivial basis element generates the whole ring.
pub fn is_simple(r: &FusionRing) -> bool {
    (1..r.rank).all(|b| closure(r, b).iter().all(|&x| x))
}

/// The smallest based subring containing x_b.
fn closure(r: &FusionRing, b: usize) -> Vec<bool> {
    let mut inside = vec![false; r.rank];
    let mut members = Vec::new();
    let mut queue = vec![0, b];
    while let Some(x) = queue.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        members.push(x);
        queue.push(r.dual[x]);
        for &y in &members {
            for (p, s) in [(x, y), (y, x)] {
                for (k, &v) in r.product(p, s).iter().enumerate() {
                    if v > 0 && !inside[k] {
                        queue.push(k);
                    }
                }
            }
        }
    }
    inside
}

/// The largest fusion coefficient.
pub fn multiplicity(r: &FusionRing) -> u32 {
    r.tensor().iter().copied().max().unwrap_or(0)
}

pub fn self_dual_count(r: &FusionRing) -> usize {
    r.dual.iter().enumerate().filter(|(i, &d)| *i == d).count()
}

/// FPdim(R) is divisible by every d_i. Requires an integral ring.
pub fn is_frobenius_type(r: &FusionRing) -> Result<bool, RingError> {
    let d = fpdims(r, None)?;
    Ok(FusionType::from_dims(&d).is_frobenius())
}
