//! Test statistics, reference null distributions and diagnostics.
//!
//! Every statistic is oriented so that large values are evidence against
//! the null model.

mod diagnostics;
mod null;
mod tw;
mod tw1_table;

pub use diagnostics::{v1_d_v1, y1hx1_gap, ApproxGap, VdvDiagnostic};
pub use null::{
    bootstrap_null, gof_test, simulate_null, simulate_null_model, NullDistribution, NullKind, TestOutcome,
    DEFAULT_NULL_REPS, LOW_REPS,
};
pub use tw::{tw1_cdf, tw1_quantile};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eig::{eig_extreme_sym, eig_leading, EigOptions, Extreme};
use crate::error::{Error, Result};
use crate::estimate::{spectral_labels, Embedding, Labels};
use crate::graph::Graph;
use crate::operators::{
    bethe_hessian, centered_nb_operator, nb_operator, normalized_adjacency, r_a, r_m, ModelEstimate,
};

/// Scale parameter of the Bethe–Hessian statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BheScale {
    /// `r_a = sqrt(mean degree)`
    Mean,
    /// `r_m = sqrt(sum d² / sum d - 1)`
    Moment,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum StatKind {
    /// `Re μ₁(Ĥ̲) / sqrt((n-1) p̂ (1-p̂))`
    CenteredNb,
    /// `λ₁(Ã̂)`
    NormalizedAdj,
    /// `Re μ_{K0+1}(H) / sqrt(μ₁(H))`
    NbPlain,
    /// `-λ_{n-K0}(H(r))`
    BetheHessian(BheScale),
    LikelihoodRatio,
    Triangle,
}

impl StatKind {
    /// Statistics compared in power experiments.
    pub const POWER_SET: [StatKind; 7] = [
        StatKind::CenteredNb,
        StatKind::NormalizedAdj,
        StatKind::NbPlain,
        StatKind::BetheHessian(BheScale::Mean),
        StatKind::BetheHessian(BheScale::Moment),
        StatKind::LikelihoodRatio,
        StatKind::Triangle,
    ];

    pub fn key(&self) -> String {
        match self {
            Self::CenteredNb => "cnb".into(),
            Self::NormalizedAdj => "nadj".into(),
            Self::NbPlain => "nb".into(),
            Self::BetheHessian(BheScale::Mean) => "bh:ra".into(),
            Self::BetheHessian(BheScale::Moment) => "bh:rm".into(),
            Self::BetheHessian(BheScale::Fixed(r)) => format!("bh:r={r}"),
            Self::LikelihoodRatio => "lr".into(),
            Self::Triangle => "tri".into(),
        }
    }

    /// Whether the statistic has a Tracy–Widom limit under an ER null.
    pub fn supports_tw(&self) -> bool {
        matches!(self, Self::CenteredNb | Self::NormalizedAdj)
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FromStr for StatKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cnb" => Self::CenteredNb,
            "nadj" => Self::NormalizedAdj,
            "nb" => Self::NbPlain,
            "bh:ra" => Self::BetheHessian(BheScale::Mean),
            "bh:rm" => Self::BetheHessian(BheScale::Moment),
            "lr" => Self::LikelihoodRatio,
            "tri" => Self::Triangle,
            _ => {
                let r = s
                    .strip_prefix("bh:r=")
                    .and_then(|v| v.parse::<f64>().ok())
                    .filter(|r| r.is_finite())
                    .ok_or_else(|| {
                        Error::param(format!(
                            "unknown statistic {s:?} (expected cnb, nadj, nb, bh:ra, bh:rm, bh:r=<value>, lr, tri)"
                        ))
                    })?;
                Self::BetheHessian(BheScale::Fixed(r))
            }
        })
    }
}

impl From<StatKind> for String {
    fn from(k: StatKind) -> String {
        k.key()
    }
}

impl TryFrom<String> for StatKind {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parse a comma-separated list of statistic keys.
pub fn parse_stat_list(s: &str) -> Result<Vec<StatKind>> {
    s.split(',').map(|t| t.trim().parse()).collect()
}

fn stat_options(k: usize) -> EigOptions {
    EigOptions::leading(k).with_vectors(false)
}

/// Krylov subspace for the plain non-backtracking statistic, whose target
/// eigenvalue sits on the rim of the bulk. The default `2k + 8` can lock
/// onto a neighbouring bulk eigenvalue there.
pub const NB_SUBSPACE: usize = 60;

pub fn compute_statistic(g: &Graph, est: &ModelEstimate, kind: StatKind, k0: usize) -> Result<f64> {
    if k0 == 0 {
        return Err(Error::param("K0 must be at least 1"));
    }
    if est.k() != k0 {
        return Err(Error::param(format!(
            "estimate has {} blocks but the statistic was requested for K0 = {k0}",
            est.k()
        )));
    }
    if est.n() != g.n() {
        return Err(Error::param("estimate and graph have different node counts"));
    }
    let ctx = |e: Error| e.with_context(format!("statistic {kind}, K0 = {k0}"));
    match kind {
        StatKind::CenteredNb => centered_nb_statistic(g, est).map_err(ctx),
        StatKind::NormalizedAdj => {
            let op = normalized_adjacency(g, est)?;
            Ok(eig_extreme_sym(&op, Extreme::Largest, &stat_options(1)).map_err(ctx)?.values[0])
        }
        StatKind::NbPlain => nb_plain_statistic(g, k0).map_err(ctx),
        StatKind::BetheHessian(scale) => {
            let r = match scale {
                BheScale::Mean => r_a(g),
                BheScale::Moment => r_m(g),
                BheScale::Fixed(r) => r,
            };
            bethe_hessian_statistic(g, r, k0).map_err(ctx)
        }
        StatKind::LikelihoodRatio => {
            let labels0 = match est.labels() {
                Some(l) => Labels::new(l.to_vec(), k0)?,
                None => Labels::constant(g.n()),
            };
            let labels1 = spectral_labels(g, k0 + 1, Embedding::AdjacencyTopK).map_err(ctx)?;
            Ok(likelihood_ratio(g, &labels0, &labels1)?.value)
        }
        StatKind::Triangle => triangle_statistic(g),
    }
}

fn centered_nb_statistic(g: &Graph, est: &ModelEstimate) -> Result<f64> {
    let op = centered_nb_operator(g, est)?;
    let mu = eig_leading(&op, &stat_options(1))?.values[0].re;
    let p = est.p_hat_scalar();
    Ok(mu / ((g.n() as f64 - 1.0) * p * (1.0 - p)).sqrt())
}

fn nb_plain_statistic(g: &Graph, k0: usize) -> Result<f64> {
    if k0 + 1 > 2 * g.n() {
        return Err(Error::param("K0 + 1 exceeds the operator dimension"));
    }
    let op = nb_operator(g);
    let opts = stat_options(k0 + 1).with_subspace(NB_SUBSPACE.max(2 * (k0 + 1) + 8));
    let spec = eig_leading(&op, &opts)?;
    let radius = spec.values[0].re.max(f64::MIN_POSITIVE).sqrt();
    Ok(spec.values[k0].re / radius)
}

fn bethe_hessian_statistic(g: &Graph, r: f64, k0: usize) -> Result<f64> {
    if k0 + 1 > g.n() {
        return Err(Error::param("K0 + 1 exceeds the node count"));
    }
    let op = bethe_hessian(g, r);
    let spec = eig_extreme_sym(&op, Extreme::Smallest, &stat_options(k0 + 1))?;
    Ok(-spec.values[k0])
}

/// `sqrt(T̂) - sqrt(p̂³)` with `T̂ = tr(A³) / (6 C(n,3))`.
pub fn triangle_statistic(g: &Graph) -> Result<f64> {
    let n = g.n();
    if n < 3 {
        return Err(Error::param("the triangle statistic needs at least three nodes"));
    }
    let nf = n as f64;
    let triples = nf * (nf - 1.0) * (nf - 2.0) / 6.0;
    let t = g.triangle_count() as f64 / triples;
    let p = 2.0 * g.m() as f64 / (nf * (nf - 1.0));
    Ok(t.sqrt() - p.powf(1.5))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LikelihoodRatio {
    pub value: f64,
    /// Some block of either labeling had no members.
    pub empty_blocks: bool,
}

/// Half log-likelihood at the profile MLE, with `0 log 0 = 0`.
fn profile_loglik(g: &Graph, labels: &Labels) -> f64 {
    let k = labels.k();
    let ids = labels.ids();
    let sizes = labels.sizes();
    let mut obs = vec![0.0f64; k * k];
    for (u, v) in g.edges() {
        let (a, b) = (ids[u], ids[v]);
        obs[a * k + b] += 1.0;
        obs[b * k + a] += 1.0;
    }
    let xlogy = |x: f64, y: f64| if x == 0.0 { 0.0 } else { x * y.ln() };
    let mut ll = 0.0;
    for a in 0..k {
        for b in 0..k {
            let pairs = if a == b {
                sizes[a] as f64 * (sizes[a] as f64 - 1.0)
            } else {
                sizes[a] as f64 * sizes[b] as f64
            };
            if pairs <= 0.0 {
                continue;
            }
            let o = obs[a * k + b];
            let q = o / pairs;
            ll += xlogy(o, q) + xlogy(pairs - o, 1.0 - q);
        }
    }
    0.5 * ll
}

/// Log-likelihood ratio of `labels1` against `labels0`, each at its profile
/// MLE `Q̂_ab = O_ab / n_ab`.
pub fn likelihood_ratio(g: &Graph, labels0: &Labels, labels1: &Labels) -> Result<LikelihoodRatio> {
    if labels0.n() != g.n() || labels1.n() != g.n() {
        return Err(Error::param("labelings must cover every node"));
    }
    Ok(LikelihoodRatio {
        value: profile_loglik(g, labels1) - profile_loglik(g, labels0),
        empty_blocks: labels0.is_degenerate() || labels1.is_degenerate(),
    })
}
