//! Batch experiments producing CSV tables.
//!
//! Every run is a pure function of its config: replicate `i` of grid cell
//! `c` draws from `RngSeed::new(seed).derive(c).replicate(i)`, work is
//! collected in index order, and numbers are printed with Rust's shortest
//! round-trip formatting. Output is byte-identical across thread counts.

mod clustering;
mod diag;
mod power;
mod scaling;

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use clustering::{run_clustering_corr, ClusterEmbedding, ClusteringRow};
pub use diag::{loglog_rate, loglog_slope, run_approx_gap, run_vdv_growth, DiagConfig, GapRow, VdvRow};
pub use power::{run_power_sweep, PowerRow};
pub use scaling::{ks_distance_tw, run_null_scaling, DensityMode, NullScalingConfig, ScalingRow, SCALING_QUANTILES};

use crate::error::{Error, Result};
use crate::estimate::NullSource;
use crate::model::{build_q_delta, BlockModelSpec, QFamily};
use crate::stats::StatKind;

/// A CSV table with a `#`-prefixed `key=value` header block.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Self {
            header: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn meta(&mut self, key: &str, value: impl fmt::Display) {
        self.header.push((key.to_string(), value.to_string()));
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.header {
            let _ = writeln!(out, "# {k}={v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for r in &self.rows {
            let _ = writeln!(out, "{}", r.join(","));
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }

    /// Values of one column, by name.
    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j].as_str()).collect())
    }
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn join_list<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

/// Linear-interpolation quantile of sorted data.
pub(crate) fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return f64::NAN;
    }
    let h = q.clamp(0.0, 1.0) * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub(crate) fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

pub(crate) fn median(v: &[f64]) -> f64 {
    quantile_sorted(&sorted(v.to_vec()), 0.5)
}

/// `δ` values `0, step, 2 step, ...` up to `max` inclusive.
pub fn delta_grid(step: f64, max: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(0.0..1.0).contains(&max) {
        return Err(Error::param("delta grid needs step > 0 and 0 <= max < 1"));
    }
    let count = (max / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| (i as f64 * step * 1e9).round() / 1e9).collect())
}

/// Shared configuration of the δ-indexed experiments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub family: QFamily,
    pub n1: usize,
    pub n2: usize,
    pub n3: Option<usize>,
    pub p0: f64,
    pub deltas: Vec<f64>,
    pub stats: Vec<StatKind>,
    pub alpha: f64,
    /// Replicates per δ.
    pub reps: usize,
    /// Replicates for simulated null thresholds.
    pub null_reps: usize,
    pub null: NullSource,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(family: QFamily, n1: usize, n2: usize, p0: f64) -> Self {
        Self {
            family,
            n1,
            n2,
            n3: None,
            p0,
            deltas: delta_grid(0.02, 0.98).expect("static grid"),
            stats: StatKind::POWER_SET.to_vec(),
            alpha: 0.05,
            reps: 1000,
            null_reps: 2000,
            null: NullSource::MonteCarlo,
            seed: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.deltas.is_empty() || self.stats.is_empty() {
            return Err(Error::param("the delta grid and statistic list must be nonempty"));
        }
        if self.reps == 0 || self.null_reps == 0 {
            return Err(Error::param("reps and null_reps must be at least 1"));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::param(format!("alpha = {} must lie in (0, 1)", self.alpha)));
        }
        for &d in &self.deltas {
            self.spec(d)?;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n1 + self.n2 + self.n3.unwrap_or(0)
    }

    pub fn spec(&self, delta: f64) -> Result<BlockModelSpec> {
        build_q_delta(self.family, self.n1, self.n2, self.n3, self.p0, delta)
    }

    fn describe(&self, t: &mut Table) {
        t.meta("family", self.family);
        t.meta("n1", self.n1);
        t.meta("n2", self.n2);
        if let Some(n3) = self.n3 {
            t.meta("n3", n3);
        }
        t.meta("p0", self.p0);
        t.meta("deltas", join_list(&self.deltas));
        t.meta("alpha", self.alpha);
        t.meta("reps", self.reps);
        t.meta("seed", self.seed);
    }
}

/// How the edge probability scales with `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityScaling {
    Constant,
    CubeRoot,
    SquareRoot,
    Inverse,
}

impl DensityScaling {
    /// `p = c n^{-e}` for the mode's exponent `e`.
    pub fn p(self, c: f64, n: usize) -> f64 {
        let nf = n as f64;
        let e = match self {
            Self::Constant => 0.0,
            Self::CubeRoot => 1.0 / 3.0,
            Self::SquareRoot => 0.5,
            Self::Inverse => 1.0,
        };
        c * nf.powf(-e)
    }

    pub fn key(self) -> &'static str {
        match self {
            Self::Constant => "constant",
            Self::CubeRoot => "cbrt",
            Self::SquareRoot => "sqrt",
            Self::Inverse => "inverse",
        }
    }
}

impl fmt::Display for DensityScaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for DensityScaling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Self::Constant, Self::CubeRoot, Self::SquareRoot, Self::Inverse]
            .into_iter()
            .find(|m| m.key() == s)
            .ok_or_else(|| Error::param(format!("unknown density scaling {s:?} (expected constant, cbrt, sqrt, inverse)")))
    }
}
