use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{median, num, quantile_sorted, sorted, DensityScaling, Table};
use crate::error::{Error, Result};
use crate::estimate::fit_null_model;
use crate::model::sample_er;
use crate::rng::RngSeed;
use crate::stats::{v1_d_v1, y1hx1_gap, ApproxGap, VdvDiagnostic};

/// Erdős–Rényi graphs with `p = scale n^{-e}` over a grid of sizes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagConfig {
    pub mode: DensityScaling,
    pub scale: f64,
    pub ns: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
}

impl DiagConfig {
    fn validate(&self) -> Result<()> {
        if self.ns.is_empty() || self.reps == 0 {
            return Err(Error::param("diagnostics need sizes and reps >= 1"));
        }
        for &n in &self.ns {
            let p = self.mode.p(self.scale, n);
            if n < 3 || !(0.0..=1.0).contains(&p) {
                return Err(Error::param(format!("n = {n} gives p = {p}")));
            }
        }
        Ok(())
    }

    fn describe(&self, t: &mut Table, experiment: &str) {
        t.meta("experiment", experiment);
        t.meta("mode", self.mode);
        t.meta("scale", self.scale);
        t.meta("ns", super::join_list(&self.ns));
        t.meta("reps", self.reps);
        t.meta("seed", self.seed);
    }

    fn samples<T: Send>(&self, f: impl Fn(usize, f64, RngSeed) -> Result<T> + Sync) -> Result<Vec<(usize, f64, Vec<T>)>> {
        self.validate()?;
        let root = RngSeed::new(self.seed);
        self.ns
            .iter()
            .enumerate()
            .map(|(c, &n)| {
                let p = self.mode.p(self.scale, n);
                let cell = root.derive(c as u64);
                let v = (0..self.reps as u64)
                    .into_par_iter()
                    .map(|i| f(n, p, cell.replicate(i)))
                    .collect::<Result<Vec<T>>>()?;
                Ok((n, p, v))
            })
            .collect()
    }
}

/// `log n / log log n`
pub fn loglog_rate(n: usize) -> f64 {
    let l = (n as f64).ln();
    l / l.ln()
}

#[derive(Debug, Clone, PartialEq)]
pub struct VdvRow {
    pub n: usize,
    pub p: f64,
    pub samples: Vec<VdvDiagnostic>,
    pub median_abs_dbar: f64,
    pub q25_abs_dbar: f64,
    pub q75_abs_dbar: f64,
    pub median_vdv: f64,
    /// Median of `v̲ᵀDv̲ / (log n / log log n)`.
    pub median_ratio: f64,
    pub median_dmax: f64,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    if sxx == 0.0 {
        f64::NAN
    } else {
        sxy / sxx
    }
}

/// Quadratic forms `v̲₁ᵀDv̲₁` and `v̲₁ᵀD̲v̲₁` as `n` grows. The slope of the
/// log median of `|v̲₁ᵀD̲v̲₁|` against `log n` is recorded in the header.
pub fn run_vdv_growth(cfg: &DiagConfig) -> Result<(Vec<VdvRow>, f64, Table)> {
    let cells = cfg.samples(|n, p, seed| {
        let g = sample_er(n, p, seed)?;
        v1_d_v1(&g, &fit_null_model(&g, 1)?)
    })?;
    let rows: Vec<VdvRow> = cells
        .into_iter()
        .map(|(n, p, samples)| {
            let abs = sorted(samples.iter().map(|s| s.v_dbar_v.abs()).collect());
            let rate = loglog_rate(n);
            VdvRow {
                n,
                p,
                median_abs_dbar: quantile_sorted(&abs, 0.5),
                q25_abs_dbar: quantile_sorted(&abs, 0.25),
                q75_abs_dbar: quantile_sorted(&abs, 0.75),
                median_vdv: median(&samples.iter().map(|s| s.v_d_v).collect::<Vec<_>>()),
                median_ratio: median(&samples.iter().map(|s| s.v_d_v / rate).collect::<Vec<_>>()),
                median_dmax: median(&samples.iter().map(|s| s.max_degree as f64).collect::<Vec<_>>()),
                samples,
            }
        })
        .collect();
    let slope = if rows.len() >= 2 {
        let x: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
        let y: Vec<f64> = rows.iter().map(|r| r.median_abs_dbar).collect();
        loglog_slope(&x, &y)
    } else {
        f64::NAN
    };
    let mut t = Table::new(&[
        "n",
        "p",
        "median_abs_vdbarv",
        "q25_abs_vdbarv",
        "q75_abs_vdbarv",
        "median_vdv",
        "median_vdv_over_rate",
        "median_dmax",
    ]);
    cfg.describe(&mut t, "vdv_growth");
    t.meta("slope", slope);
    for r in &rows {
        t.push(vec![
            r.n.to_string(),
            num(r.p),
            num(r.median_abs_dbar),
            num(r.q25_abs_dbar),
            num(r.q75_abs_dbar),
            num(r.median_vdv),
            num(r.median_ratio),
            num(r.median_dmax),
        ]);
    }
    Ok((rows, slope, t))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapRow {
    pub n: usize,
    pub p: f64,
    pub samples: Vec<ApproxGap>,
    /// Median `|μ₁ - y₁ᵀH̃x₁|`
    pub mu_yhx: f64,
    /// Median `|y₁ᵀH̃x₁ - λ̲₁|`
    pub yhx_lambda: f64,
    /// Median `|μ₁ - λ̲₁|`
    pub mu_lambda: f64,
    /// Median of `(2 sqrt α)⁻¹ sqrt(log n / log log n)`.
    pub predicted_gap: f64,
    /// Every sample satisfies the triangle inequality between the three gaps.
    pub triangle_ok: bool,
}

impl GapRow {
    pub fn ratio(&self) -> f64 {
        self.mu_yhx / self.yhx_lambda
    }
}

/// Gaps between `μ₁(H̃)`, `y₁ᵀH̃x₁` and `λ̲₁` as `n` grows.
pub fn run_approx_gap(cfg: &DiagConfig) -> Result<(Vec<GapRow>, Table)> {
    let cells = cfg.samples(|n, p, seed| {
        let g = sample_er(n, p, seed)?;
        let est = fit_null_model(&g, 1)?;
        Ok((y1hx1_gap(&g, &est)?, est.alpha_hat()))
    })?;
    let rows: Vec<GapRow> = cells
        .into_iter()
        .map(|(n, p, s)| {
            let gaps: Vec<(f64, f64, f64)> = s
                .iter()
                .map(|(g, _)| {
                    (
                        (g.mu1 - g.yhx_explicit).abs(),
                        (g.yhx_explicit - g.lambda1).abs(),
                        (g.mu1 - g.lambda1).abs(),
                    )
                })
                .collect();
            let tol = |x: f64| 1e-12 * x.abs().max(1.0);
            GapRow {
                n,
                p,
                mu_yhx: median(&gaps.iter().map(|g| g.0).collect::<Vec<_>>()),
                yhx_lambda: median(&gaps.iter().map(|g| g.1).collect::<Vec<_>>()),
                mu_lambda: median(&gaps.iter().map(|g| g.2).collect::<Vec<_>>()),
                predicted_gap: median(
                    &s.iter().map(|(_, a)| loglog_rate(n).sqrt() / (2.0 * a.sqrt())).collect::<Vec<_>>(),
                ),
                triangle_ok: gaps.iter().all(|g| g.2 <= g.0 + g.1 + tol(g.2)),
                samples: s.into_iter().map(|(g, _)| g).collect(),
            }
        })
        .collect();
    let mut t = Table::new(&[
        "n",
        "p",
        "median_mu_yhx",
        "median_yhx_lambda",
        "median_mu_lambda",
        "ratio",
        "predicted_gap",
        "triangle_ok",
    ]);
    cfg.describe(&mut t, "approx_gap");
    for r in &rows {
        t.push(vec![
            r.n.to_string(),
            num(r.p),
            num(r.mu_yhx),
            num(r.yhx_lambda),
            num(r.mu_lambda),
            num(r.ratio()),
            num(r.predicted_gap),
            r.triangle_ok.to_string(),
        ]);
    }
    Ok((rows, t))
}
