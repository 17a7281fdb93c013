use faer::Mat;
use serde::Serialize;

use crate::eig::eig_dense_sym;
use crate::error::{Error, Result};

/// The two nontrivial eigenvalues of `E[A]` and of `E[A] - p0 11ᵀ` for the
/// two-block model with `n1 = p n`, self-loops included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpectationEigs {
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda1_centered: f64,
    pub lambda2_centered: f64,
}

fn mixing_x(p: f64, k: f64) -> f64 {
    let q = 1.0 - p;
    2.0 * p * q / (p * p + k * q * q)
}

fn check(p: f64, k: f64, delta: f64) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::param(format!("p = {p} must lie in (0, 1)")));
    }
    if !(k >= 0.0 && k.is_finite()) {
        return Err(Error::param(format!("k = {k} must be finite and nonnegative")));
    }
    if !(0.0..1.0).contains(&delta) {
        return Err(Error::param(format!("delta = {delta} must lie in [0, 1)")));
    }
    Ok(())
}

/// Block probabilities `[[p0(1+xδ), p0(1-δ)], [p0(1-δ), p0(1+kxδ)]]`, which
/// keep the average expected degree at `p0`.
pub fn closed_form_q(p: f64, k: f64, delta: f64, p0: f64) -> Result<[[f64; 2]; 2]> {
    check(p, k, delta)?;
    let x = mixing_x(p, k);
    Ok([
        [p0 * (1.0 + x * delta), p0 * (1.0 - delta)],
        [p0 * (1.0 - delta), p0 * (1.0 + k * x * delta)],
    ])
}

pub fn expectation_eigs_closed_form(p: f64, k: f64, delta: f64, n: usize, p0: f64) -> Result<ExpectationEigs> {
    check(p, k, delta)?;
    let q = 1.0 - p;
    let x = mixing_x(p, k);
    let np0 = n as f64 * p0;
    let mid = 1.0 + delta * x * (p + k * q);
    let disc = ((p - q + (p - k * q) * x * delta).powi(2) + 4.0 * p * q * (1.0 - delta).powi(2)).sqrt();
    let mid_c = x * (p + k * q);
    let disc_c = (((p - k * q) * x).powi(2) + 4.0 * p * q).sqrt();
    Ok(ExpectationEigs {
        lambda1: 0.5 * np0 * (mid + disc),
        lambda2: 0.5 * np0 * (mid - disc),
        lambda1_centered: 0.5 * np0 * delta * (mid_c + disc_c),
        lambda2_centered: 0.5 * np0 * delta * (mid_c - disc_c),
    })
}

/// Spectrum of the block matrix whose `(i, j)` block is `B_ij J` off the
/// diagonal and `B_ii (J - ℓ_i I)` on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockEigs {
    /// Eigenvalues of the reduced K x K matrix, descending.
    pub reduced: Vec<f64>,
    /// `(-ℓ_i B_ii, n_i - 1)` per block.
    pub repeated: Vec<(f64, usize)>,
}

impl BlockEigs {
    /// All eigenvalues with multiplicity, descending.
    pub fn all(&self) -> Vec<f64> {
        let mut v = self.reduced.clone();
        for &(val, mult) in &self.repeated {
            v.extend(std::iter::repeat_n(val, mult));
        }
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }
}

pub fn block_matrix_eigs(b: &[Vec<f64>], sizes: &[usize], ell: &[f64]) -> Result<BlockEigs> {
    let k = sizes.len();
    if k == 0 || b.len() != k || ell.len() != k || b.iter().any(|r| r.len() != k) {
        return Err(Error::param("block values, sizes and shifts must agree on K"));
    }
    if sizes.contains(&0) {
        return Err(Error::param("every block needs at least one node"));
    }
    let reduced = Mat::from_fn(k, k, |i, j| {
        if i == j {
            b[i][i] * (sizes[i] as f64 - ell[i])
        } else {
            (sizes[i] as f64 * sizes[j] as f64).sqrt() * b[i][j]
        }
    });
    Ok(BlockEigs {
        reduced: eig_dense_sym(&reduced)?.values,
        repeated: (0..k).map(|i| (-ell[i] * b[i][i], sizes[i] - 1)).collect(),
    })
}
