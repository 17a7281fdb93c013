use rayon::prelude::*;

use super::{num, SweepConfig, Table};
use crate::error::Result;
use crate::estimate::{fit_null_model, NullSource};
use crate::model::{sample_sbm, BlockModelSpec};
use crate::rng::RngSeed;
use crate::stats::{compute_statistic, simulate_null_model, NullDistribution, StatKind};

const NULL_TAG: u64 = u64::MAX;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerRow {
    pub stat: StatKind,
    pub delta: f64,
    pub power: f64,
    pub se: f64,
}

fn thresholds(cfg: &SweepConfig, root: RngSeed) -> Result<Vec<f64>> {
    let n = cfg.n();
    let p = cfg.spec(0.0)?.expected_density();
    let level = 1.0 - cfg.alpha;
    let simulated: Vec<StatKind> = cfg
        .stats
        .iter()
        .copied()
        .filter(|s| !(matches!(cfg.null, NullSource::TracyWidom { .. }) && s.supports_tw()))
        .collect();
    let sims = if simulated.is_empty() {
        Vec::new()
    } else {
        let null = BlockModelSpec::erdos_renyi(n, p)?;
        simulate_null_model(&simulated, &null, 1, cfg.null_reps, root.derive(NULL_TAG))?
    };
    cfg.stats
        .iter()
        .map(|s| match simulated.iter().position(|x| x == s) {
            Some(j) => sims[j].quantile(level),
            None => {
                let shift = matches!(cfg.null, NullSource::TracyWidom { shift: true });
                NullDistribution::tracy_widom(*s, n, p, shift)?.quantile(level)
            }
        })
        .collect()
}

/// Rejection rate of each statistic at each δ. Thresholds are the `1 - alpha`
/// quantiles of the null at `δ = 0`, simulated once per statistic (or the
/// Tracy–Widom limit when configured and available).
pub fn run_power_sweep(cfg: &SweepConfig) -> Result<(Vec<PowerRow>, Table)> {
    cfg.validate()?;
    let root = RngSeed::new(cfg.seed);
    let thr = thresholds(cfg, root)?;
    let mut rows = Vec::new();
    for (j, &delta) in cfg.deltas.iter().enumerate() {
        let spec = cfg.spec(delta)?;
        let cell = root.derive(j as u64);
        let rejections: Vec<Vec<bool>> = (0..cfg.reps as u64)
            .into_par_iter()
            .map(|i| {
                let g = sample_sbm(&spec, cell.replicate(i))?;
                let est = fit_null_model(&g, 1)?;
                cfg.stats
                    .iter()
                    .zip(&thr)
                    .map(|(&s, &t)| Ok(compute_statistic(&g, &est, s, 1)? > t))
                    .collect()
            })
            .collect::<Result<_>>()?;
        for (k, &stat) in cfg.stats.iter().enumerate() {
            let hits = rejections.iter().filter(|r| r[k]).count();
            let power = hits as f64 / cfg.reps as f64;
            rows.push(PowerRow {
                stat,
                delta,
                power,
                se: (power * (1.0 - power) / cfg.reps as f64).sqrt(),
            });
        }
    }

    let mut t = Table::new(&["stat", "delta", "power", "se"]);
    t.meta("experiment", "power");
    cfg.describe(&mut t);
    t.meta("null", null_key(cfg.null));
    t.meta("null_reps", cfg.null_reps);
    for (s, th) in cfg.stats.iter().zip(&thr) {
        t.meta(&format!("threshold[{s}]"), th);
    }
    for r in &rows {
        t.push(vec![r.stat.key(), num(r.delta), num(r.power), num(r.se)]);
    }
    Ok((rows, t))
}

pub(crate) fn null_key(n: NullSource) -> &'static str {
    match n {
        NullSource::TracyWidom { shift: false } => "tw",
        NullSource::TracyWidom { shift: true } => "tw-shift",
        NullSource::MonteCarlo => "mc",
    }
}
