//! Matrices and matrix-free operators built from a graph.

mod block;
mod edge;
mod fit;

pub use block::{centered_nb_operator, nb_operator, rescaled_split, BlockOperator, BlockRole};
pub use edge::{centered_edge_matrix, edge_nb_matrix, EdgeKind, EdgeOperator, CENTERED_EDGE_MAX_N};
pub use fit::ModelEstimate;

use faer::Mat;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A real square linear map applied to dense vectors.
pub trait LinearOperator: Sync {
    fn dim(&self) -> usize;

    /// `y = Op x`; `y` is fully overwritten.
    fn apply(&self, x: &[f64], y: &mut [f64]);

    /// Explicit matrix, built column by column from `apply`.
    fn to_dense(&self) -> Mat<f64> {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        let mut e = vec![0.0; n];
        let mut col = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            self.apply(&e, &mut col);
            for i in 0..n {
                m[(i, j)] = col[i];
            }
            e[j] = 0.0;
        }
        m
    }
}

impl LinearOperator for Mat<f64> {
    fn dim(&self) -> usize {
        self.nrows()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = (0..self.ncols()).map(|j| self[(i, j)] * x[j]).sum();
        }
    }

    fn to_dense(&self) -> Mat<f64> {
        self.clone()
    }
}

impl LinearOperator for Graph {
    fn dim(&self) -> usize {
        self.n()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.adj_matvec(x, y)
    }
}

/// `a * Op + b * I`.
pub struct Affine<'a, O: ?Sized> {
    pub op: &'a O,
    pub a: f64,
    pub b: f64,
}

impl<O: LinearOperator + ?Sized> LinearOperator for Affine<'_, O> {
    fn dim(&self) -> usize {
        self.op.dim()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.op.apply(x, y);
        for (yi, xi) in y.iter_mut().zip(x) {
            *yi = self.a * *yi + self.b * xi;
        }
    }
}

/// Block-constant expectation shared by the centered and normalized
/// adjacency operators.
#[derive(Debug, Clone)]
struct BlockExpectation {
    k: usize,
    labels: Option<Vec<usize>>,
    q: Vec<f64>,
}

impl BlockExpectation {
    fn new(est: &ModelEstimate) -> Self {
        let k = est.k();
        let q = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).map(|(a, b)| est.q_raw(a, b)).collect();
        Self {
            k,
            labels: est.labels().map(|l| l.to_vec()),
            q,
        }
    }

    fn label(&self, i: usize) -> usize {
        self.labels.as_ref().map_or(0, |l| l[i])
    }

    fn block_sums(&self, x: &[f64]) -> Vec<f64> {
        let mut s = vec![0.0; self.k];
        for (i, xi) in x.iter().enumerate() {
            s[self.label(i)] += xi;
        }
        s
    }

    /// `y_i -= sum_{j != i} w_ab Q_ab x_j` with `w` a block-constant weight
    /// (all ones when absent).
    fn subtract(&self, x: &[f64], y: &mut [f64], w: Option<&[f64]>) {
        let s = self.block_sums(x);
        let wq: Vec<f64> = match w {
            Some(w) => self.q.iter().zip(w).map(|(q, w)| q * w).collect(),
            None => self.q.clone(),
        };
        let proj: Vec<f64> = (0..self.k)
            .map(|a| (0..self.k).map(|b| wq[a * self.k + b] * s[b]).sum())
            .collect();
        for (i, yi) in y.iter_mut().enumerate() {
            let a = self.label(i);
            *yi -= proj[a] - wq[a * self.k + a] * x[i];
        }
    }
}

fn check_size(g: &Graph, est: &ModelEstimate) -> Result<()> {
    if g.n() != est.n() {
        return Err(Error::param(format!(
            "estimate covers {} nodes but the graph has {}",
            est.n(),
            g.n()
        )));
    }
    Ok(())
}

/// `A - P̂` with zero diagonal, never formed explicitly.
#[derive(Debug, Clone)]
pub struct CenteredAdjacency<'g> {
    graph: &'g Graph,
    expect: BlockExpectation,
    row_sums: Vec<f64>,
}

impl<'g> CenteredAdjacency<'g> {
    pub fn new(g: &'g Graph, est: &ModelEstimate) -> Result<Self> {
        check_size(g, est)?;
        let expect = BlockExpectation::new(est);
        let sizes = est.block_sizes();
        let k = expect.k;
        let row_sums = (0..g.n())
            .map(|i| {
                let a = expect.label(i);
                let expected: f64 = (0..k).map(|b| expect.q[a * k + b] * sizes[b] as f64).sum::<f64>()
                    - expect.q[a * k + a];
                g.degree(i) as f64 - expected
            })
            .collect();
        Ok(Self {
            graph: g,
            expect,
            row_sums,
        })
    }

    /// Row sum `d̲_i` of the centered adjacency.
    pub fn row_sum(&self, i: usize) -> f64 {
        self.row_sums[i]
    }

    pub fn row_sums(&self) -> &[f64] {
        &self.row_sums
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }
}

impl LinearOperator for CenteredAdjacency<'_> {
    fn dim(&self) -> usize {
        self.graph.n()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.graph.adj_matvec(x, y);
        self.expect.subtract(x, y, None);
    }
}

pub fn centered_adjacency<'g>(g: &'g Graph, est: &ModelEstimate) -> Result<CenteredAdjacency<'g>> {
    CenteredAdjacency::new(g, est)
}

/// `(A - P̂) / sqrt((n-1) P̂ (1 - P̂))` entrywise with zero diagonal. The
/// denominator uses the clamped estimate.
#[derive(Debug, Clone)]
pub struct NormalizedAdjacency<'g> {
    graph: &'g Graph,
    expect: BlockExpectation,
    weights: Vec<f64>,
}

impl<'g> NormalizedAdjacency<'g> {
    pub fn new(g: &'g Graph, est: &ModelEstimate) -> Result<Self> {
        check_size(g, est)?;
        let expect = BlockExpectation::new(est);
        let k = expect.k;
        let nm1 = g.n() as f64 - 1.0;
        let weights = (0..k * k)
            .map(|ab| {
                let p = est.q_hat(ab / k, ab % k);
                1.0 / (nm1 * p * (1.0 - p)).sqrt()
            })
            .collect();
        Ok(Self {
            graph: g,
            expect,
            weights,
        })
    }
}

impl LinearOperator for NormalizedAdjacency<'_> {
    fn dim(&self) -> usize {
        self.graph.n()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        let k = self.expect.k;
        for (i, yi) in y.iter_mut().enumerate() {
            let a = self.expect.label(i);
            *yi = self
                .graph
                .neighbors(i)
                .iter()
                .map(|&j| self.weights[a * k + self.expect.label(j)] * x[j])
                .sum();
        }
        self.expect.subtract(x, y, Some(&self.weights));
    }
}

pub fn normalized_adjacency<'g>(g: &'g Graph, est: &ModelEstimate) -> Result<NormalizedAdjacency<'g>> {
    NormalizedAdjacency::new(g, est)
}

/// Bethe–Hessian `H(r) = (r² - 1) I - r A + D`.
#[derive(Debug, Clone)]
pub struct BetheHessian<'g> {
    graph: &'g Graph,
    r: f64,
}

impl BetheHessian<'_> {
    pub fn r(&self) -> f64 {
        self.r
    }
}

pub fn bethe_hessian(g: &Graph, r: f64) -> BetheHessian<'_> {
    BetheHessian { graph: g, r }
}

impl LinearOperator for BetheHessian<'_> {
    fn dim(&self) -> usize {
        self.graph.n()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.graph.adj_matvec(x, y);
        let c = self.r * self.r - 1.0;
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = (c + self.graph.degree(i) as f64) * x[i] - self.r * *yi;
        }
    }
}

/// `r_a = sqrt(mean degree)`.
pub fn r_a(g: &Graph) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    (2.0 * g.m() as f64 / g.n() as f64).sqrt()
}

/// `r_m = sqrt(sum d² / sum d - 1)`.
pub fn r_m(g: &Graph) -> f64 {
    let (s1, s2) = (0..g.n()).fold((0.0, 0.0), |(a, b), i| {
        let d = g.degree(i) as f64;
        (a + d, b + d * d)
    });
    if s1 == 0.0 {
        return 0.0;
    }
    (s2 / s1 - 1.0).max(0.0).sqrt()
}

#[cfg(test)]
mod tests;
