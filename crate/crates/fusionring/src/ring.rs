use chartables::{Family, RowFamily, RowLabel};
use serde::{Deserialize, Serialize};

use crate::RingError;

/// A based ring with basis x_0 = 1, x_1, …, x_{r−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub family: Family,
    pub q: u64,
    pub rank: usize,
    pub labels: Vec<RowLabel>,
    /// i ↦ i*.
    pub dual: Vec<usize>,
    /// N_{i,j}^k at (i·r + j)·r + k.
    n: Vec<u32>,
}

impl FusionRing {
    /// The zero tensor of rank r; callers fill it with `set`.
    pub fn zeros(family: Family, q: u64, labels: Vec<RowLabel>, dual: Vec<usize>) -> Result<Self, RingError> {
        let rank = labels.len();
        if rank == 0 {
            return Err(RingError::Shape("rank must be positive".into()));
        }
        if dual.len() != rank || dual.iter().any(|&d| d >= rank) {
            return Err(RingError::Shape("dual is not a map on the basis".into()));
        }
        Ok(FusionRing { family, q, rank, labels, dual, n: vec![0; rank * rank * rank] })
    }

    pub fn from_tensor(
        family: Family,
        q: u64,
        labels: Vec<RowLabel>,
        dual: Vec<usize>,
        n: Vec<u32>,
    ) -> Result<Self, RingError> {
        let mut r = Self::zeros(family, q, labels, dual)?;
        if n.len() != r.n.len() {
            return Err(RingError::Shape(format!("tensor has {} entries, expected {}", n.len(), r.n.len())));
        }
        r.n = n;
        Ok(r)
    }

    /// The rank-1 ring Z.
    pub fn trivial() -> Self {
        FusionRing {
            family: Family::Custom,
            q: 0,
            rank: 1,
            labels: vec![RowLabel::new(1, 1, RowFamily::Trivial)],
            dual: vec![0],
            n: vec![1],
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.rank + j) * self.rank + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.n[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: u32) {
        let x = self.idx(i, j, k);
        self.n[x] = v;
    }

    pub fn tensor(&self) -> &[u32] {
        &self.n
    }

    /// The coefficients of x_i·x_j.
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        let s = self.idx(i, j, 0);
        &self.n[s..s + self.rank]
    }

    /// The fusion matrix of x_i: row j, column k holds N_{i,j}^k.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|j| self.product(i, j).to_vec()).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| (i + 1..self.rank).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn index_of(&self, label: &RowLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn to_json(&self) -> RingJson {
        RingJson {
            version: 1,
            family: self.family,
            q: self.q,
            rank: self.rank,
            labels: self.labels.clone(),
            dual: self.dual.clone(),
            n: (0..self.rank).map(|i| self.matrix(i)).collect(),
        }
    }

    pub fn from_json(j: RingJson) -> Result<Self, RingError> {
        if j.version != 1 {
            return Err(RingError::Json(format!("unsupported version {}", j.version)));
        }
        if j.rank != j.labels.len() {
            return Err(RingError::Shape("rank differs from the number of labels".into()));
        }
        let r = j.rank;
        if j.n.len() != r || j.n.iter().any(|m| m.len() != r || m.iter().any(|row| row.len() != r)) {
            return Err(RingError::Shape(format!("N must be {r}×{r}×{r}")));
        }
        let flat = j.n.into_iter().flatten().flatten().collect();
        Self::from_tensor(j.family, j.q, j.labels, j.dual, flat)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data")
    }

    pub fn from_json_str(s: &str) -> Result<Self, RingError> {
        let j: RingJson = serde_json::from_str(s).map_err(|e| RingError::Json(e.to_string()))?;
        Self::from_json(j)
    }
}

/// On-disk ring format; `n[i][j][k]` is N_{i,j}^k.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingJson {
    pub version: u32,
    pub family: Family,
    pub q: u64,
    pub rank: usize,
    pub labels: Vec<RowLabel>,
    pub dual: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<u32>>>,
}
