use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{num, SweepConfig, Table};
use crate::eig::{eig_extreme_sym, eig_leading, leading_halfvector, EigOptions, Extreme};
use crate::error::{Error, Result};
use crate::estimate::{estimate_p, vector_label_correlation, Labels};
use crate::graph::Graph;
use crate::model::sample_sbm;
use crate::operators::{centered_adjacency, centered_nb_operator, nb_operator, ModelEstimate};
use crate::rng::RngSeed;
use crate::stats::NB_SUBSPACE;

/// The informative eigenvector compared against the truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusterEmbedding {
    /// First half of `x₁(Ĥ̲)`.
    CenteredNb,
    /// First half of `x₂(H)`.
    Nb,
    /// `v₁(Â̲)`.
    CenteredAdjacency,
}

impl ClusterEmbedding {
    pub const ALL: [ClusterEmbedding; 3] = [Self::CenteredNb, Self::Nb, Self::CenteredAdjacency];

    pub fn key(self) -> &'static str {
        match self {
            Self::CenteredNb => "cnb",
            Self::Nb => "nb",
            Self::CenteredAdjacency => "cadj",
        }
    }

    pub fn vector(self, g: &Graph) -> Result<Vec<f64>> {
        let est = ModelEstimate::constant(g.n(), estimate_p(g)?)?;
        match self {
            Self::CenteredNb => {
                let op = centered_nb_operator(g, &est)?;
                leading_halfvector(&eig_leading(&op, &EigOptions::leading(1))?, 0)
            }
            Self::Nb => {
                let opts = EigOptions::leading(2).with_subspace(NB_SUBSPACE);
                leading_halfvector(&eig_leading(&nb_operator(g), &opts)?, 1)
            }
            Self::CenteredAdjacency => {
                let op = centered_adjacency(g, &est)?;
                let spec = eig_extreme_sym(&op, Extreme::Largest, &EigOptions::leading(1))?;
                Ok(spec.vectors.expect("vectors requested").swap_remove(0))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusteringRow {
    pub embedding: ClusterEmbedding,
    pub delta: f64,
    pub mean: f64,
    pub se: f64,
}

/// Mean `|corr|` between each informative eigenvector and the planted
/// labels of the first two blocks.
pub fn run_clustering_corr(cfg: &SweepConfig) -> Result<(Vec<ClusteringRow>, Table)> {
    if cfg.deltas.is_empty() || cfg.reps == 0 {
        return Err(Error::param("the delta grid must be nonempty and reps >= 1"));
    }
    if cfg.n3.is_some() {
        return Err(Error::param("clustering correlation needs a two-block family"));
    }
    let root = RngSeed::new(cfg.seed);
    let mut rows = Vec::new();
    for (j, &delta) in cfg.deltas.iter().enumerate() {
        let spec = cfg.spec(delta)?;
        let truth = Labels::new(spec.labels().to_vec(), 2)?;
        let cell = root.derive(j as u64);
        let corr: Vec<Vec<f64>> = (0..cfg.reps as u64)
            .into_par_iter()
            .map(|i| {
                let g = sample_sbm(&spec, cell.replicate(i))?;
                ClusterEmbedding::ALL
                    .iter()
                    .map(|e| vector_label_correlation(&e.vector(&g)?, &truth))
                    .collect()
            })
            .collect::<Result<_>>()?;
        for (k, &embedding) in ClusterEmbedding::ALL.iter().enumerate() {
            let xs: Vec<f64> = corr.iter().map(|r| r[k]).collect();
            let m = xs.len() as f64;
            let mean = xs.iter().sum::<f64>() / m;
            let var = if xs.len() > 1 {
                xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (m - 1.0)
            } else {
                0.0
            };
            rows.push(ClusteringRow { embedding, delta, mean, se: (var / m).sqrt() });
        }
    }
    let mut t = Table::new(&["embedding", "delta", "mean_corr", "se"]);
    t.meta("experiment", "clustering_corr");
    cfg.describe(&mut t);
    for r in &rows {
        t.push(vec![r.embedding.key().into(), num(r.delta), num(r.mean), num(r.se)]);
    }
    Ok((rows, t))
}
