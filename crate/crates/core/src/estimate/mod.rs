mod closed_form;
mod kmeans;
mod select;

use serde::{Deserialize, Serialize};

pub use closed_form::{block_matrix_eigs, closed_form_q, expectation_eigs_closed_form, BlockEigs, ExpectationEigs};
pub use kmeans::{kmeans, KMEANS_MAX_ITER, KMEANS_RESTARTS};
pub use select::{
    estimate_k_recursive, estimate_k_sequential, Dendrogram, NullSource, RecursiveConfig, SequentialConfig,
    SequentialResult, DEFAULT_MIN_SIZE,
};

use crate::eig::{eig_dense, eig_extreme_sym, eig_leading, is_real, leading_halfvector, EigOptions, Extreme};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::operators::{centered_nb_operator, nb_operator, ModelEstimate};
use crate::rng::RngSeed;

/// Block assignment with ids in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    ids: Vec<usize>,
    k: usize,
}

impl Labels {
    pub fn new(ids: Vec<usize>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("a labeling needs at least one block"));
        }
        if let Some(&bad) = ids.iter().find(|&&g| g >= k) {
            return Err(Error::param(format!("block id {bad} out of range for K = {k}")));
        }
        Ok(Self { ids, k })
    }

    pub fn constant(n: usize) -> Self {
        Self { ids: vec![0; n], k: 1 }
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.k];
        for &g in &self.ids {
            s[g] += 1;
        }
        s
    }

    /// Some declared block has no members.
    pub fn is_degenerate(&self) -> bool {
        self.sizes().contains(&0)
    }

    pub fn members(&self, block: usize) -> Vec<usize> {
        (0..self.ids.len()).filter(|&i| self.ids[i] == block).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Embedding {
    /// Rows of the top-K eigenvectors of A.
    AdjacencyTopK,
    /// First half of the leading eigenvector of the centered NB operator; K = 2 only.
    CenteredNbHalf,
}

impl std::fmt::Display for Embedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Embedding::AdjacencyTopK => "adjacency",
            Embedding::CenteredNbHalf => "cnb",
        })
    }
}

impl std::str::FromStr for Embedding {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" | "adjacency_topk" => Ok(Embedding::AdjacencyTopK),
            "cnb" | "centered_nb_half" => Ok(Embedding::CenteredNbHalf),
            _ => Err(Error::param(format!("unknown embedding '{s}' (expected adjacency or cnb)"))),
        }
    }
}

/// Edge density `2m / (n(n-1))`.
pub fn estimate_p(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n < 2 {
        return Err(Error::param("estimating p needs at least two nodes"));
    }
    Ok(2.0 * g.m() as f64 / (n as f64 * (n as f64 - 1.0)))
}

/// Profile MLE `Q̂_ab = O_ab / n_ab` given the labels. Block pairs with no
/// node pairs get the clamp floor and are reported in `empty_pairs`.
pub fn estimate_blocks(g: &Graph, labels: &Labels) -> Result<ModelEstimate> {
    let n = g.n();
    if labels.n() != n {
        return Err(Error::param("labels do not cover the graph"));
    }
    let density = estimate_p(g)?;
    let k = labels.k();
    let ids = labels.ids();
    let sizes = labels.sizes();
    let mut obs = vec![0.0f64; k * k];
    for (u, v) in g.edges() {
        obs[ids[u] * k + ids[v]] += 1.0;
        obs[ids[v] * k + ids[u]] += 1.0;
    }
    let floor = 1.0 / (n as f64 * (n as f64 - 1.0));
    let mut q = vec![0.0; k * k];
    let mut empty = Vec::new();
    for a in 0..k {
        for b in 0..k {
            let (na, nb) = (sizes[a] as f64, sizes[b] as f64);
            let pairs = if a == b { na * (na - 1.0) } else { na * nb };
            if pairs > 0.0 {
                q[a * k + b] = obs[a * k + b] / pairs;
            } else {
                q[a * k + b] = floor;
                if a <= b {
                    empty.push((a, b));
                }
            }
        }
    }
    ModelEstimate::blocks(ids.to_vec(), k, q, density, empty)
}

/// The fitted null used at test time: `p̂` for `k0 = 1`, otherwise spectral
/// labels on the adjacency followed by the block MLE.
pub fn fit_null_model(g: &Graph, k0: usize) -> Result<ModelEstimate> {
    match k0 {
        0 => Err(Error::param("K0 must be at least 1")),
        1 => ModelEstimate::constant(g.n(), estimate_p(g)?),
        _ => estimate_blocks(g, &spectral_labels(g, k0, Embedding::AdjacencyTopK)?),
    }
}

const SPECTRAL_SEED: u64 = 0x5eed_c1a5;
/// A single-start Krylov run can miss copies of a repeated eigenvalue
/// (disconnected graphs), so moderate sizes embed densely.
const SPECTRAL_DENSE_MAX: usize = 600;

/// k-means on a spectral embedding. Deterministic: k-means uses fixed
/// sub-seeds.
pub fn spectral_labels(g: &Graph, k: usize, embedding: Embedding) -> Result<Labels> {
    let n = g.n();
    if k == 0 || k > n {
        return Err(Error::param(format!("cannot split {n} nodes into {k} blocks")));
    }
    if k == 1 {
        return Ok(Labels::constant(n));
    }
    let seed = RngSeed::new(SPECTRAL_SEED);
    let ids = match embedding {
        Embedding::AdjacencyTopK => {
            let opts = EigOptions::leading(k).with_vectors(true).with_dense_threshold(SPECTRAL_DENSE_MAX);
            let spec = eig_extreme_sym(g, Extreme::Largest, &opts)?;
            let vecs = spec.vectors.expect("vectors requested");
            let mut pts = vec![0.0; n * k];
            for (c, v) in vecs.iter().enumerate() {
                for i in 0..n {
                    pts[i * k + c] = v[i];
                }
            }
            kmeans(&pts, k, k, seed)?
        }
        Embedding::CenteredNbHalf => {
            if k != 2 {
                return Err(Error::param("the centered NB embedding splits into exactly two blocks"));
            }
            let est = ModelEstimate::constant(n, estimate_p(g)?)?;
            let op = centered_nb_operator(g, &est)?;
            let spec = eig_leading(&op, &EigOptions::leading(1).with_vectors(true))?;
            kmeans(&leading_halfvector(&spec, 0)?, 1, 2, seed)?
        }
    };
    Labels::new(ids, k)
}

/// `|corr|` between the ±1 encodings of two binary labelings; 0 when either
/// is constant.
pub fn label_correlation(labels: &Labels, truth: &Labels) -> Result<f64> {
    if labels.k() > 2 || truth.k() > 2 {
        return Err(Error::param("label correlation needs binary labelings"));
    }
    if labels.n() != truth.n() {
        return Err(Error::param("labelings have different lengths"));
    }
    let enc = |l: &Labels| -> Vec<f64> { l.ids().iter().map(|&g| if g == 0 { 1.0 } else { -1.0 }).collect() };
    pearson_abs(&enc(labels), &enc(truth), labels.n() as f64)
}

/// `|corr|` between a real vector and the ±1 encoding of a binary labeling.
pub fn vector_label_correlation(x: &[f64], truth: &Labels) -> Result<f64> {
    if truth.k() > 2 {
        return Err(Error::param("label correlation needs a binary labeling"));
    }
    if x.len() != truth.n() {
        return Err(Error::param("vector and labeling have different lengths"));
    }
    let n = x.len() as f64;
    let y: Vec<f64> = truth.ids().iter().map(|&g| if g == 0 { 1.0 } else { -1.0 }).collect();
    pearson_abs(x, &y, n)
}

fn pearson_abs(x: &[f64], y: &[f64], n: f64) -> Result<f64> {
    let (mx, my) = (x.iter().sum::<f64>() / n, y.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    let scale = |v: &[f64]| 1e-20 * v.iter().map(|t| t * t).sum::<f64>();
    if sxx <= scale(x) || syy <= scale(y) {
        return Ok(0.0);
    }
    Ok((sxy / (sxx * syy).sqrt()).abs().min(1.0))
}

/// Largest `2n` for which the NB count uses a full dense eigensolve.
pub const NB_COUNT_DENSE_MAX: usize = 2500;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NbCount {
    pub k_hat: usize,
    pub mu1: f64,
    /// Bulk radius `sqrt(mu1)`.
    pub radius: f64,
    /// Real eigenvalues past the leading one that lie outside the bulk.
    pub outliers: Vec<f64>,
}

/// `1 +` the number of real eigenvalues of H, after the leading one, that
/// exceed `sqrt(mu1)`.
pub fn count_nb_informative(g: &Graph) -> Result<NbCount> {
    let n = g.n();
    if n == 0 {
        return Ok(NbCount { k_hat: 1, mu1: 0.0, radius: 0.0, outliers: Vec::new() });
    }
    let op = nb_operator(g);
    let values = if 2 * n <= NB_COUNT_DENSE_MAX {
        eig_dense(&crate::operators::LinearOperator::to_dense(&op), false)?.values
    } else {
        let mut k = 16usize;
        loop {
            let k_eff = k.min(2 * n - 2);
            let opts = EigOptions::leading(k_eff)
                .with_vectors(false)
                .with_subspace((2 * k_eff + 8).max(crate::stats::NB_SUBSPACE));
            let vals = eig_leading(&op, &opts)?.values;
            let radius = vals[0].re.max(0.0).sqrt();
            if vals.last().is_none_or(|v| v.re <= radius) || k_eff == 2 * n - 2 {
                break vals;
            }
            k *= 2;
        }
    };
    let mu1 = values[0].re;
    let radius = mu1.max(0.0).sqrt();
    let outliers: Vec<f64> = values[1..].iter().filter(|v| is_real(**v) && v.re > radius).map(|v| v.re).collect();
    Ok(NbCount { k_hat: 1 + outliers.len(), mu1, radius, outliers })
}
