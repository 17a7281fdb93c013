//! Block models and random graph sampling.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::RngSeed;

/// Stochastic block model parameters. Block ids are `0..k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockModelSpec {
    labels: Vec<usize>,
    k: usize,
    /// Row-major `k x k`.
    q: Vec<f64>,
}

impl BlockModelSpec {
    pub fn new(labels: Vec<usize>, q: Vec<Vec<f64>>) -> Result<Self> {
        let k = q.len();
        if k == 0 {
            return Err(Error::param("block matrix must be non-empty"));
        }
        let mut flat = Vec::with_capacity(k * k);
        for (a, row) in q.iter().enumerate() {
            if row.len() != k {
                return Err(Error::param(format!("row {a} of the block matrix has length {}", row.len())));
            }
            flat.extend_from_slice(row);
        }
        for a in 0..k {
            for b in 0..k {
                let v = flat[a * k + b];
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::param(format!("Q[{}][{}] = {v} is not a probability", a + 1, b + 1)));
                }
                if v != flat[b * k + a] {
                    return Err(Error::param(format!("Q is not symmetric at ({}, {})", a + 1, b + 1)));
                }
            }
        }
        let mut seen = vec![false; k];
        for &g in &labels {
            if g >= k {
                return Err(Error::param(format!("label {g} out of range for {k} blocks")));
            }
            seen[g] = true;
        }
        if let Some(a) = seen.iter().position(|s| !s) {
            return Err(Error::param(format!("block {a} has no members")));
        }
        Ok(Self { labels, k, q: flat })
    }

    /// Contiguous blocks of the given sizes.
    pub fn from_sizes(sizes: &[usize], q: Vec<Vec<f64>>) -> Result<Self> {
        let labels = sizes
            .iter()
            .enumerate()
            .flat_map(|(a, &s)| std::iter::repeat_n(a, s))
            .collect();
        Self::new(labels, q)
    }

    pub fn erdos_renyi(n: usize, p: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("n must be at least 1"));
        }
        Self::new(vec![0; n], vec![vec![p]])
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn q(&self, a: usize, b: usize) -> f64 {
        self.q[a * self.k + b]
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k];
        for &g in &self.labels {
            s[g] += 1;
        }
        s
    }

    pub fn prob(&self, i: usize, j: usize) -> f64 {
        self.q(self.labels[i], self.labels[j])
    }

    /// `(1/(n(n-1))) * sum_{i != j} P_ij`.
    pub fn expected_density(&self) -> f64 {
        let s = self.sizes();
        let n = self.n() as f64;
        let mut total = 0.0;
        for a in 0..self.k {
            for b in 0..self.k {
                let pairs = if a == b {
                    s[a] as f64 * (s[a] as f64 - 1.0)
                } else {
                    s[a] as f64 * s[b] as f64
                };
                total += pairs * self.q(a, b);
            }
        }
        total / (n * (n - 1.0))
    }
}

/// Parameterized two- and three-block families indexed by a signal level δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QFamily {
    Balanced,
    Unbalanced,
    EqualDegree,
    ThreeBlock,
}

impl QFamily {
    pub const ALL: [QFamily; 4] = [Self::Balanced, Self::Unbalanced, Self::EqualDegree, Self::ThreeBlock];

    pub fn key(self) -> &'static str {
        match self {
            Self::Balanced => "balanced",
            Self::Unbalanced => "unbalanced",
            Self::EqualDegree => "equal_degree",
            Self::ThreeBlock => "three_block",
        }
    }
}

impl fmt::Display for QFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for QFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.key() == s.replace('-', "_"))
            .ok_or_else(|| Error::param(format!("unknown model family {s:?}")))
    }
}

/// Block model of the given family at signal level `delta`.
///
/// All families share `Q12 = p0 (1 - delta)`. The two-block families keep the
/// average density at `p0` for every `delta`; the three-block family adds a
/// third block with within-probability `p0` and `0.3 p0` to both others.
pub fn build_q_delta(
    kind: QFamily,
    n1: usize,
    n2: usize,
    n3: Option<usize>,
    p0: f64,
    delta: f64,
) -> Result<BlockModelSpec> {
    if !(0.0..=1.0).contains(&p0) {
        return Err(Error::param(format!("p0 = {p0} is not a probability")));
    }
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::param(format!("delta = {delta} must lie in [0, 1)")));
    }
    if n1 < 2 || n2 < 2 {
        return Err(Error::param("block sizes must be at least 2"));
    }
    if (kind == QFamily::ThreeBlock) != n3.is_some() {
        return Err(Error::param("n3 must be given exactly for the three_block family"));
    }
    let (f1, f2) = (n1 as f64, n2 as f64);
    let q12 = p0 * (1.0 - delta);
    let balanced = p0 * (1.0 + 2.0 * f1 * f2 / (f1 * (f1 - 1.0) + f2 * (f2 - 1.0)) * delta);
    let (q11, q22) = match kind {
        QFamily::Balanced | QFamily::ThreeBlock => (balanced, balanced),
        QFamily::Unbalanced => (p0, p0 * (1.0 + 2.0 * f1 / (f2 - 1.0) * delta)),
        QFamily::EqualDegree => (
            p0 * (1.0 + f2 / (f1 - 1.0) * delta),
            p0 * (1.0 + f1 / (f2 - 1.0) * delta),
        ),
    };
    let (sizes, q) = match n3 {
        None => (vec![n1, n2], vec![vec![q11, q12], vec![q12, q22]]),
        Some(n3) => {
            let c = 0.3 * p0;
            (
                vec![n1, n2, n3],
                vec![vec![q11, q12, c], vec![q12, q22, c], vec![c, c, p0]],
            )
        }
    };
    for (a, row) in q.iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::param(format!(
                    "{kind} family gives Q[{}][{}] = {v} outside [0, 1]",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    BlockModelSpec::from_sizes(&sizes, q)
}

pub fn sample_er(n: usize, p: f64, seed: RngSeed) -> Result<Graph> {
    sample_sbm(&BlockModelSpec::erdos_renyi(n, p)?, seed)
}

/// Sample each unordered pair independently. Uses geometric skipping within
/// every block pair, so the cost is proportional to `n + m`.
pub fn sample_sbm(spec: &BlockModelSpec, seed: RngSeed) -> Result<Graph> {
    let k = spec.k();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &g) in spec.labels().iter().enumerate() {
        members[g].push(i);
    }
    let mut rng = seed.stream();
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a..k {
            let p = spec.q(a, b);
            if p <= 0.0 {
                continue;
            }
            let (ma, mb) = (&members[a], &members[b]);
            let total = if a == b {
                (ma.len() * ma.len().saturating_sub(1) / 2) as u64
            } else {
                (ma.len() * mb.len()) as u64
            };
            let mut push = |idx: u64| {
                if a == b {
                    let (r, c) = triangle_index(idx);
                    edges.push((ma[c as usize], ma[r as usize]));
                } else {
                    let nb = mb.len() as u64;
                    edges.push((ma[(idx / nb) as usize], mb[(idx % nb) as usize]));
                }
            };
            if p >= 1.0 {
                (0..total).for_each(&mut push);
                continue;
            }
            let log_q = (-p).ln_1p();
            let mut idx: u64 = 0;
            loop {
                let u: f64 = rng.random();
                let skip = ((1.0 - u).ln() / log_q).floor();
                if !(skip < (total - idx) as f64) {
                    break;
                }
                idx += skip as u64;
                push(idx);
                idx += 1;
                if idx >= total {
                    break;
                }
            }
        }
    }
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_canonical(spec.n(), &edges))
}

/// Map a linear index over the strict lower triangle (row-major) to `(row, col)`.
fn triangle_index(idx: u64) -> (u64, u64) {
    let mut r = ((((8 * idx + 1) as f64).sqrt() + 1.0) / 2.0) as u64;
    while r * (r - 1) / 2 > idx {
        r -= 1;
    }
    while (r + 1) * r / 2 <= idx {
        r += 1;
    }
    (r, idx - r * (r - 1) / 2)
}
