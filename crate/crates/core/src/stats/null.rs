use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compute_statistic, tw1_quantile, StatKind};
use crate::error::{Error, Result};
use crate::estimate::fit_null_model;
use crate::graph::Graph;
use crate::model::{sample_sbm, BlockModelSpec};
use crate::operators::ModelEstimate;
use crate::rng::RngSeed;

pub const DEFAULT_NULL_REPS: usize = 2000;
/// Simulated nulls with fewer replicates than this carry a warning flag.
pub const LOW_REPS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullKind {
    Tw1,
    Empirical,
}

/// Reference distribution for a statistic under the null.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullDistribution {
    pub kind: NullKind,
    pub stat: StatKind,
    pub n: usize,
    pub p: f64,
    pub k0: usize,
    pub reps: usize,
    pub seed: u64,
    /// Sorted ascending; empty for the Tracy–Widom null.
    pub values: Vec<f64>,
    /// Tracy–Widom only: add the `(np)⁻¹` finite-sample shift.
    pub shift: bool,
    pub low_reps: bool,
}

impl NullDistribution {
    pub fn tracy_widom(stat: StatKind, n: usize, p: f64, shift: bool) -> Result<Self> {
        if !stat.supports_tw() {
            return Err(Error::param(format!("statistic {stat} has no Tracy-Widom null")));
        }
        Ok(Self {
            kind: NullKind::Tw1,
            stat,
            n,
            p,
            k0: 1,
            reps: 0,
            seed: 0,
            values: Vec::new(),
            shift,
            low_reps: false,
        })
    }

    pub fn empirical(stat: StatKind, n: usize, p: f64, k0: usize, mut values: Vec<f64>, seed: u64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::param("an empirical null needs at least one value"));
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::param("null sample contains NaN"));
        }
        values.sort_by(f64::total_cmp);
        Ok(Self {
            kind: NullKind::Empirical,
            stat,
            n,
            p,
            k0,
            reps: values.len(),
            seed,
            low_reps: values.len() < LOW_REPS,
            values,
            shift: false,
        })
    }

    /// `q`-quantile. Empirical: the order statistic at index `ceil(qN) - 1`.
    /// Tracy–Widom: `2 + n^{-2/3} TW₁⁻¹(q)`, plus `(np)⁻¹` when shifted.
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::param(format!("quantile level {q} outside [0, 1]")));
        }
        match self.kind {
            NullKind::Empirical => {
                let n = self.values.len();
                let idx = ((q * n as f64 - 1e-9).ceil() as usize).clamp(1, n) - 1;
                Ok(self.values[idx])
            }
            NullKind::Tw1 => {
                let nf = self.n as f64;
                let shift = if self.shift { 1.0 / (nf * self.p) } else { 0.0 };
                Ok(2.0 + shift + nf.powf(-2.0 / 3.0) * tw1_quantile(q)?)
            }
        }
    }

    /// CSV: a `# kind,n,p,K0,reps,seed` header, a `#` line with those
    /// values, then one sorted value per line.
    pub fn to_csv(&self) -> String {
        let kind = match self.kind {
            NullKind::Tw1 => "tw1",
            NullKind::Empirical => "empirical",
        };
        let mut out = String::new();
        out.push_str("# kind,n,p,K0,reps,seed\n");
        let _ = writeln!(out, "# {kind},{},{},{},{},{}", self.n, self.p, self.k0, self.reps, self.seed);
        let _ = writeln!(out, "# stat={}", self.stat);
        for v in &self.values {
            let _ = writeln!(out, "{v:e}");
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut header: Option<Vec<String>> = None;
        let mut stat = None;
        let mut values = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            let perr = |m: &str| Error::Parse {
                line: i + 1,
                message: m.to_string(),
            };
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if rest == "kind,n,p,K0,reps,seed" {
                    continue;
                }
                if let Some(s) = rest.strip_prefix("stat=") {
                    stat = Some(s.parse::<StatKind>().map_err(|e| perr(&e.to_string()))?);
                } else if header.is_none() {
                    let fields: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                    if fields.len() != 6 {
                        return Err(perr("expected six header fields"));
                    }
                    header = Some(fields);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            values.push(line.parse::<f64>().map_err(|_| perr("expected a number"))?);
        }
        let h = header.ok_or_else(|| Error::Parse {
            line: 0,
            message: "missing `# kind,n,p,K0,reps,seed` values line".into(),
        })?;
        let stat = stat.unwrap_or(StatKind::CenteredNb);
        let bad = |what: &str| Error::Parse {
            line: 2,
            message: format!("malformed {what}"),
        };
        let n = h[1].parse().map_err(|_| bad("n"))?;
        let p = h[2].parse().map_err(|_| bad("p"))?;
        let k0 = h[3].parse().map_err(|_| bad("K0"))?;
        let seed = h[5].parse().map_err(|_| bad("seed"))?;
        match h[0].as_str() {
            "tw1" => Self::tracy_widom(stat, n, p, false),
            "empirical" => Self::empirical(stat, n, p, k0, values, seed),
            _ => Err(bad("kind")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub statistic: f64,
    pub threshold: f64,
    pub alpha: f64,
    pub reject: bool,
    pub null_kind: NullKind,
    pub k0: usize,
}

/// Reject when `value` strictly exceeds the `(1 - alpha)` null quantile.
pub fn gof_test(value: f64, null: &NullDistribution, alpha: f64, n: usize) -> Result<TestOutcome> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::param(format!("alpha = {alpha} must lie in (0, 1)")));
    }
    let threshold = match null.kind {
        NullKind::Tw1 => NullDistribution { n, ..null.clone() }.quantile(1.0 - alpha)?,
        NullKind::Empirical => null.quantile(1.0 - alpha)?,
    };
    Ok(TestOutcome {
        statistic: value,
        threshold,
        alpha,
        reject: value > threshold,
        null_kind: null.kind,
        k0: null.k0,
    })
}

/// Simulate several statistics on the same `reps` graphs drawn from `spec`,
/// refitting a `k0`-block null model on each replicate exactly as at test
/// time. Replicate `i` uses `seed.replicate(i)`.
pub fn simulate_null_model(
    kinds: &[StatKind],
    spec: &BlockModelSpec,
    k0: usize,
    reps: usize,
    seed: RngSeed,
) -> Result<Vec<NullDistribution>> {
    if reps == 0 {
        return Err(Error::param("reps must be at least 1"));
    }
    let rows: Vec<Vec<f64>> = (0..reps as u64)
        .into_par_iter()
        .map(|i| {
            let g = sample_sbm(spec, seed.replicate(i))?;
            let est = fit_null_model(&g, k0)?;
            kinds.iter().map(|&k| compute_statistic(&g, &est, k, k0)).collect()
        })
        .collect::<Result<_>>()?;
    let p = spec.expected_density();
    kinds
        .iter()
        .enumerate()
        .map(|(j, &k)| NullDistribution::empirical(k, spec.n(), p, k0, rows.iter().map(|r| r[j]).collect(), seed.master))
        .collect()
}

/// Monte Carlo null under `G(n, p)` with `K0 = 1`.
pub fn simulate_null(kind: StatKind, n: usize, p: f64, k0: usize, reps: usize, seed: RngSeed) -> Result<NullDistribution> {
    if k0 != 1 {
        return Err(Error::param(
            "simulate_null samples Erdos-Renyi graphs and needs K0 = 1; use bootstrap_null for K0 > 1",
        ));
    }
    let spec = BlockModelSpec::erdos_renyi(n, p)?;
    Ok(simulate_null_model(&[kind], &spec, 1, reps, seed)?.remove(0))
}

/// Parametric bootstrap: resample graphs from P̂ and refit per replicate.
pub fn bootstrap_null(
    g: &Graph,
    est: &ModelEstimate,
    kind: StatKind,
    reps: usize,
    seed: RngSeed,
) -> Result<NullDistribution> {
    if est.n() != g.n() {
        return Err(Error::param("estimate and graph have different node counts"));
    }
    let spec = est.to_spec()?;
    let mut d = simulate_null_model(&[kind], &spec, est.k(), reps, seed)?.remove(0);
    d.p = est.density();
    Ok(d)
}
