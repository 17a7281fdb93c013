use serde::Serialize;

use crate::eig::{eig_extreme_sym, eig_leading, EigOptions, Extreme};
use crate::error::Result;
use crate::graph::Graph;
use crate::operators::{centered_adjacency, centered_nb_operator, rescaled_split, LinearOperator, ModelEstimate};

/// Quadratic forms of the degree matrices in the top eigenvector `v̲₁` of A̲.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VdvDiagnostic {
    /// `λ₁(A̲)`
    pub lambda1: f64,
    /// `v̲₁ᵀ D v̲₁`
    pub v_d_v: f64,
    /// `v̲₁ᵀ D̲ v̲₁`
    pub v_dbar_v: f64,
    pub max_degree: usize,
}

pub fn v1_d_v1(g: &Graph, est: &ModelEstimate) -> Result<VdvDiagnostic> {
    let abar = centered_adjacency(g, est)?;
    let spec = eig_extreme_sym(&abar, Extreme::Largest, &EigOptions::leading(1))?;
    let v = &spec.vectors.as_ref().expect("vectors requested")[0];
    let (mut vdv, mut vdbv) = (0.0, 0.0);
    for (i, x) in v.iter().enumerate() {
        vdv += g.degree(i) as f64 * x * x;
        vdbv += abar.row_sum(i) * x * x;
    }
    Ok(VdvDiagnostic {
        lambda1: spec.values[0],
        v_d_v: vdv,
        v_dbar_v: vdbv,
        max_degree: g.max_degree(),
    })
}

/// The leading eigenvalue of `H̃` and its first-order approximations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproxGap {
    /// `Re μ₁(H̃)`
    pub mu1: f64,
    /// `λ̲ + λ̲⁻¹ (1 - α⁻¹ v̲ᵀ D v̲)`
    pub yhx_degree_form: f64,
    /// `λ̲ + α⁻¹ λ̲⁻¹ (1 - v̲ᵀ D̲ v̲)`
    pub yhx_centered_form: f64,
    /// `y₁ᵀ H̃ x₁` by applying the operator.
    pub yhx_explicit: f64,
    /// `λ̲ = λ₁(A̲ / √α)`
    pub lambda1: f64,
}

/// Computed with `α = α̂` from `est`.
pub fn y1hx1_gap(g: &Graph, est: &ModelEstimate) -> Result<ApproxGap> {
    let n = g.n();
    let alpha = est.alpha_hat();
    let abar = centered_adjacency(g, est)?;
    let spec = eig_extreme_sym(&abar, Extreme::Largest, &EigOptions::leading(1))?;
    let v = &spec.vectors.as_ref().expect("vectors requested")[0];
    let lam = spec.values[0] / alpha.sqrt();

    let (mut vdv_form, mut vdbv_form) = (0.0, 0.0);
    for (i, x) in v.iter().enumerate() {
        vdv_form += g.degree(i) as f64 * x * x;
        vdbv_form += abar.row_sum(i) * x * x;
    }

    let op = centered_nb_operator(g, est)?;
    let (full, _, _) = rescaled_split(&op, alpha)?;
    let mut x = Vec::with_capacity(2 * n);
    x.extend_from_slice(v);
    x.extend(v.iter().map(|t| t / lam));
    let mut hx = vec![0.0; 2 * n];
    full.apply(&x, &mut hx);
    let explicit = v.iter().zip(&hx[..n]).map(|(a, b)| a * b).sum();

    let mu1 = eig_leading(&full, &EigOptions::leading(1).with_vectors(false))?.values[0].re;
    Ok(ApproxGap {
        mu1,
        yhx_degree_form: lam + (1.0 - vdv_form / alpha) / lam,
        yhx_centered_form: lam + (1.0 - vdbv_form) / (alpha * lam),
        yhx_explicit: explicit,
        lambda1: lam,
    })
}
