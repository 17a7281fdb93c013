use faer::Mat;

use super::{CenteredAdjacency, LinearOperator, ModelEstimate};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node cap for [`centered_edge_matrix`]; the matrix has
/// `n(n-1)` rows and is dense.
pub const CENTERED_EDGE_MAX_N: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// Non-backtracking matrix over the 2m directed edges.
    Plain,
    /// Centered version over all n(n-1) ordered pairs.
    Centered,
}

/// Explicit matrix indexed by directed edges, stored in CSR form.
#[derive(Debug, Clone)]
pub struct EdgeOperator {
    kind: EdgeKind,
    arcs: Vec<(usize, usize)>,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl EdgeOperator {
    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    /// Directed edge `(from, to)` for each row/column index.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Nonzero entries of row `r` as `(column, value)`.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        self.cols[span.clone()].iter().copied().zip(self.vals[span].iter().copied())
    }
}

impl LinearOperator for EdgeOperator {
    fn dim(&self) -> usize {
        self.arcs.len()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (r, yr) in y.iter_mut().enumerate() {
            *yr = self.row(r).map(|(c, v)| v * x[c]).sum();
        }
    }

    fn to_dense(&self) -> Mat<f64> {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for r in 0..n {
            for (c, v) in self.row(r) {
                m[(r, c)] += v;
            }
        }
        m
    }
}

/// `B_{i→j, k→l} = 1` iff `j = k` and `i ≠ l`. Arcs are numbered in CSR order
/// (by source, then target).
pub fn edge_nb_matrix(g: &Graph) -> EdgeOperator {
    let mut arcs = Vec::with_capacity(2 * g.m());
    let mut first = Vec::with_capacity(g.n() + 1);
    for u in 0..g.n() {
        first.push(arcs.len());
        arcs.extend(g.neighbors(u).iter().map(|&v| (u, v)));
    }
    first.push(arcs.len());
    let mut row_ptr = vec![0];
    let mut cols = Vec::new();
    for &(i, j) in &arcs {
        for (pos, &l) in g.neighbors(j).iter().enumerate() {
            if l != i {
                cols.push(first[j] + pos);
            }
        }
        row_ptr.push(cols.len());
    }
    let vals = vec![1.0; cols.len()];
    EdgeOperator {
        kind: EdgeKind::Plain,
        arcs,
        row_ptr,
        cols,
        vals,
    }
}

/// Centered edge matrix over all ordered pairs of distinct nodes:
/// `B̲_{v→u, u→z} = A̲_uz - [z = v]`, zero unless the arcs chain.
///
/// Refuses graphs with more than [`CENTERED_EDGE_MAX_N`] nodes unless
/// `allow_large` is set.
pub fn centered_edge_matrix(g: &Graph, est: &ModelEstimate, allow_large: bool) -> Result<EdgeOperator> {
    let n = g.n();
    if n > CENTERED_EDGE_MAX_N && !allow_large {
        return Err(Error::Resource(format!(
            "centered edge matrix for n = {n} has {} rows; the cap is n = {CENTERED_EDGE_MAX_N}",
            n * n.saturating_sub(1)
        )));
    }
    // Explicit A̲ from the operator so the two never disagree.
    let abar = CenteredAdjacency::new(g, est)?.to_dense();
    let index = |a: usize, b: usize| a * (n - 1) + if b > a { b - 1 } else { b };
    let mut arcs = Vec::with_capacity(n * n.saturating_sub(1));
    for a in 0..n {
        for b in 0..n {
            if a != b {
                arcs.push((a, b));
            }
        }
    }
    let mut row_ptr = vec![0];
    let mut cols = Vec::new();
    let mut vals = Vec::new();
    for &(v, u) in &arcs {
        for z in (0..n).filter(|&z| z != u) {
            let w = abar[(u, z)] - if z == v { 1.0 } else { 0.0 };
            if w != 0.0 {
                cols.push(index(u, z));
                vals.push(w);
            }
        }
        row_ptr.push(cols.len());
    }
    Ok(EdgeOperator {
        kind: EdgeKind::Centered,
        arcs,
        row_ptr,
        cols,
        vals,
    })
}
