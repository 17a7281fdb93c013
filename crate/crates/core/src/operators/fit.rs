use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::BlockModelSpec;

/// A fitted null model: a constant density or a block-constant P̂.
///
/// Raw estimates are kept as computed. [`ModelEstimate::p_hat`] and
/// [`ModelEstimate::q_hat`] clamp into `[1/(n(n-1)), 1 - 1/(n(n-1))]` and are
/// meant for denominators and logarithms; centering uses the raw values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelEstimate {
    n: usize,
    k: usize,
    labels: Option<Vec<usize>>,
    q: Vec<f64>,
    density: f64,
    empty_pairs: Vec<(usize, usize)>,
}

impl ModelEstimate {
    pub fn constant(n: usize, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::param("a model estimate needs at least two nodes"));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param(format!("p = {p} is not a probability")));
        }
        Ok(Self {
            n,
            k: 1,
            labels: None,
            q: vec![p],
            density: p,
            empty_pairs: Vec::new(),
        })
    }

    /// Block-constant estimate. `q` is row-major `k x k`; `density` is the
    /// overall edge density of the graph. `empty_pairs` lists block pairs with
    /// no node pairs at all.
    pub fn blocks(
        labels: Vec<usize>,
        k: usize,
        q: Vec<f64>,
        density: f64,
        empty_pairs: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::param("a model estimate needs at least two nodes"));
        }
        if q.len() != k * k || labels.iter().any(|&g| g >= k) {
            return Err(Error::param("labels and block matrix disagree on the number of blocks"));
        }
        if k == 1 {
            return Self::constant(n, q[0]);
        }
        Ok(Self {
            n,
            k,
            labels: Some(labels),
            q,
            density,
            empty_pairs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels.as_ref().map_or(0, |l| l[i])
    }

    pub fn empty_pairs(&self) -> &[(usize, usize)] {
        &self.empty_pairs
    }

    pub fn clamp_bounds(&self) -> (f64, f64) {
        let eps = 1.0 / (self.n as f64 * (self.n as f64 - 1.0));
        (eps, 1.0 - eps)
    }

    fn clamp(&self, p: f64) -> f64 {
        let (lo, hi) = self.clamp_bounds();
        p.max(lo).min(hi)
    }

    /// Unclamped overall density.
    pub fn density(&self) -> f64 {
        self.density
    }

    /// Clamped overall density p̂.
    pub fn p_hat_scalar(&self) -> f64 {
        self.clamp(self.density)
    }

    /// α̂ = (n - 1) p̂ + 1.
    pub fn alpha_hat(&self) -> f64 {
        (self.n as f64 - 1.0) * self.density + 1.0
    }

    pub fn q_raw(&self, a: usize, b: usize) -> f64 {
        self.q[a * self.k + b]
    }

    pub fn q_hat(&self, a: usize, b: usize) -> f64 {
        self.clamp(self.q_raw(a, b))
    }

    pub fn p_raw(&self, i: usize, j: usize) -> f64 {
        self.q_raw(self.label(i), self.label(j))
    }

    pub fn p_hat(&self, i: usize, j: usize) -> f64 {
        self.q_hat(self.label(i), self.label(j))
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k];
        for i in 0..self.n {
            s[self.label(i)] += 1;
        }
        s
    }

    /// Generative model with P = P̂ (raw values).
    pub fn to_spec(&self) -> Result<BlockModelSpec> {
        let labels = self.labels.clone().unwrap_or_else(|| vec![0; self.n]);
        let q = (0..self.k)
            .map(|a| (0..self.k).map(|b| self.q_raw(a, b)).collect())
            .collect();
        BlockModelSpec::new(labels, q)
    }
}
