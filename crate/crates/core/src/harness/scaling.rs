use serde::{Deserialize, Serialize};

use super::{num, quantile_sorted, sorted, Table};
use crate::error::{Error, Result};
use crate::model::BlockModelSpec;
use crate::rng::RngSeed;
use crate::stats::{simulate_null_model, tw1_cdf, tw1_quantile, StatKind};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityMode {
    /// `p = d / (n - 1)`
    FixedDegree(f64),
    FixedP(f64),
}

impl DensityMode {
    pub fn p(self, n: usize) -> f64 {
        match self {
            Self::FixedDegree(d) => d / (n as f64 - 1.0),
            Self::FixedP(p) => p,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullScalingConfig {
    pub ns: Vec<usize>,
    pub density: DensityMode,
    pub stats: Vec<StatKind>,
    pub reps: usize,
    pub seed: u64,
}

pub const SCALING_QUANTILES: [f64; 7] = [0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99];

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub n: usize,
    pub p: f64,
    pub stat: StatKind,
    /// `n^{2/3} (value - 2)`, ascending.
    pub scaled: Vec<f64>,
    pub mean: f64,
    pub median: f64,
    /// `n^{2/3} / (n p)`, the finite-sample shift in scaled units.
    pub shift: f64,
    pub ks_tw: f64,
    pub ks_tw_shifted: f64,
    /// Fraction of scaled values above the TW₁ 0.95 quantile.
    pub reject_tw95: f64,
}

/// Kolmogorov–Smirnov distance between sorted data shifted by `-shift` and TW₁.
pub fn ks_distance_tw(sorted: &[f64], shift: f64) -> f64 {
    let n = sorted.len() as f64;
    sorted.iter().enumerate().fold(0.0, |d, (i, &x)| {
        let f = tw1_cdf(x - shift);
        d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n)
    })
}

/// Null draws of each statistic under `G(n, p)` for each `n`, on the edge
/// scale `n^{2/3}(value - 2)`.
pub fn run_null_scaling(cfg: &NullScalingConfig) -> Result<(Vec<ScalingRow>, Table)> {
    if cfg.ns.is_empty() || cfg.stats.is_empty() || cfg.reps == 0 {
        return Err(Error::param("null scaling needs sizes, statistics and reps >= 1"));
    }
    if let Some(s) = cfg.stats.iter().find(|s| !s.supports_tw()) {
        return Err(Error::param(format!("statistic {s} is not on the Tracy-Widom edge scale")));
    }
    let root = RngSeed::new(cfg.seed);
    let q95 = tw1_quantile(0.95)?;
    let mut rows = Vec::new();
    for (c, &n) in cfg.ns.iter().enumerate() {
        let p = cfg.density.p(n);
        let spec = BlockModelSpec::erdos_renyi(n, p)?;
        let nulls = simulate_null_model(&cfg.stats, &spec, 1, cfg.reps, root.derive(c as u64))?;
        let scale = (n as f64).powf(2.0 / 3.0);
        for (null, &stat) in nulls.iter().zip(&cfg.stats) {
            let scaled = sorted(null.values.iter().map(|v| scale * (v - 2.0)).collect());
            let shift = scale / (n as f64 * p);
            rows.push(ScalingRow {
                n,
                p,
                stat,
                mean: scaled.iter().sum::<f64>() / scaled.len() as f64,
                median: quantile_sorted(&scaled, 0.5),
                shift,
                ks_tw: ks_distance_tw(&scaled, 0.0),
                ks_tw_shifted: ks_distance_tw(&scaled, shift),
                reject_tw95: scaled.iter().filter(|&&x| x > q95).count() as f64 / scaled.len() as f64,
                scaled,
            });
        }
    }

    let mut cols = vec!["n", "p", "stat", "reps", "mean", "median", "shift", "ks_tw", "ks_tw_shifted", "reject_tw95"];
    let qnames: Vec<String> = SCALING_QUANTILES.iter().map(|q| format!("q{q}")).collect();
    cols.extend(qnames.iter().map(String::as_str));
    let mut t = Table::new(&cols);
    t.meta("experiment", "null_scaling");
    t.meta("ns", super::join_list(&cfg.ns));
    match cfg.density {
        DensityMode::FixedDegree(d) => t.meta("fixed_degree", d),
        DensityMode::FixedP(p) => t.meta("fixed_p", p),
    }
    t.meta("reps", cfg.reps);
    t.meta("seed", cfg.seed);
    for r in &rows {
        let mut row = vec![
            r.n.to_string(),
            num(r.p),
            r.stat.key(),
            r.scaled.len().to_string(),
            num(r.mean),
            num(r.median),
            num(r.shift),
            num(r.ks_tw),
            num(r.ks_tw_shifted),
            num(r.reject_tw95),
        ];
        row.extend(SCALING_QUANTILES.iter().map(|&q| num(quantile_sorted(&r.scaled, q))));
        t.push(row);
    }
    Ok((rows, t))
}
