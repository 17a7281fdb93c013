use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{estimate_p, fit_null_model, spectral_labels, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::operators::ModelEstimate;
use crate::rng::RngSeed;
use crate::stats::{
    bootstrap_null, compute_statistic, gof_test, simulate_null, NullDistribution, StatKind, TestOutcome,
    DEFAULT_NULL_REPS,
};

pub const DEFAULT_MIN_SIZE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NullSource {
    /// Tracy–Widom limit for `K0 = 1`, optionally with the `(np)⁻¹` shift.
    TracyWidom { shift: bool },
    /// Simulated null graphs.
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SequentialConfig {
    pub stat: StatKind,
    pub alpha: f64,
    pub null: NullSource,
    pub kmax: usize,
    /// Replicates for simulated and bootstrap nulls.
    pub reps: usize,
    pub seed: RngSeed,
}

impl SequentialConfig {
    pub fn new(stat: StatKind, alpha: f64, seed: RngSeed) -> Self {
        Self {
            stat,
            alpha,
            null: NullSource::TracyWidom { shift: false },
            kmax: 10,
            reps: DEFAULT_NULL_REPS,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequentialResult {
    pub k_hat: usize,
    /// Every tested `K0` was rejected and the search stopped at `kmax`.
    pub truncated: bool,
    pub steps: Vec<TestOutcome>,
}

fn k1_null(stat: StatKind, null: NullSource, n: usize, p: f64, reps: usize, seed: RngSeed) -> Result<NullDistribution> {
    match null {
        NullSource::TracyWidom { shift } => NullDistribution::tracy_widom(stat, n, p, shift),
        NullSource::MonteCarlo => simulate_null(stat, n, p, 1, reps, seed),
    }
}

/// Test `K0 = 1, 2, ...` and return the first `K0` that is not rejected.
///
/// `K0 = 1` uses the configured null; larger `K0` always bootstrap from the
/// fitted block model.
pub fn estimate_k_sequential(g: &Graph, cfg: &SequentialConfig) -> Result<SequentialResult> {
    if cfg.kmax == 0 {
        return Err(Error::param("kmax must be at least 1"));
    }
    let n = g.n();
    let mut steps = Vec::new();
    for k0 in 1..cfg.kmax {
        let ctx = |e: Error| e.with_context(format!("sequential step K0 = {k0}"));
        let est = fit_null_model(g, k0).map_err(ctx)?;
        let value = compute_statistic(g, &est, cfg.stat, k0).map_err(ctx)?;
        let seed = cfg.seed.derive(k0 as u64);
        let null = if k0 == 1 {
            k1_null(cfg.stat, cfg.null, n, est.density(), cfg.reps, seed)
        } else {
            bootstrap_null(g, &est, cfg.stat, cfg.reps, seed)
        }
        .map_err(ctx)?;
        let outcome = gof_test(value, &null, cfg.alpha, n)?;
        steps.push(outcome);
        if !outcome.reject {
            return Ok(SequentialResult { k_hat: k0, truncated: false, steps });
        }
    }
    Ok(SequentialResult { k_hat: cfg.kmax, truncated: true, steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecursiveConfig {
    pub stat: StatKind,
    pub alpha: f64,
    pub min_size: usize,
    pub null: NullSource,
    pub reps: usize,
    pub embedding: Embedding,
    pub seed: RngSeed,
}

impl RecursiveConfig {
    pub fn new(stat: StatKind, alpha: f64, seed: RngSeed) -> Self {
        Self {
            stat,
            alpha,
            min_size: DEFAULT_MIN_SIZE,
            null: NullSource::MonteCarlo,
            reps: DEFAULT_NULL_REPS,
            embedding: Embedding::CenteredNbHalf,
            seed,
        }
    }
}

/// Binary tree of recursive splits. Leaves are the estimated communities.
#[derive(Debug, Clone, PartialEq)]
pub struct Dendrogram {
    /// Node ids in the original graph, ascending.
    pub members: Vec<usize>,
    /// `None` when the node was too small to test.
    pub outcome: Option<TestOutcome>,
    /// The test rejected but the split left one side empty.
    pub degenerate: bool,
    pub children: Option<Box<(Dendrogram, Dendrogram)>>,
}

impl Dendrogram {
    fn leaf(members: Vec<usize>, outcome: Option<TestOutcome>) -> Self {
        Self { members, outcome, degenerate: false, children: None }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    pub fn leaves(&self) -> Vec<&Dendrogram> {
        match &self.children {
            None => vec![self],
            Some(c) => {
                let mut v = c.0.leaves();
                v.extend(c.1.leaves());
                v
            }
        }
    }

    pub fn k_hat(&self) -> usize {
        self.leaves().len()
    }

    pub fn leaf_sizes(&self) -> Vec<usize> {
        self.leaves().iter().map(|l| l.members.len()).collect()
    }

    /// Community id per node, numbered by leaf order.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (c, leaf) in self.leaves().iter().enumerate() {
            for &i in &leaf.members {
                out[i] = c;
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut node = json!({
            "members": self.members,
            "stat": self.outcome.map(|o| o.statistic),
            "threshold": self.outcome.map(|o| o.threshold),
            "reject": self.outcome.map(|o| o.reject),
        });
        if self.degenerate {
            node["degenerate"] = json!(true);
        }
        node["children"] = match &self.children {
            None => json!([]),
            Some(c) => json!([c.0.to_json(), c.1.to_json()]),
        };
        node
    }
}

/// Recursive bi-partitioning: test `K0 = 1` on each subgraph and split on
/// rejection. Sibling subtrees run in parallel; each node's randomness is
/// keyed by its member set, so the result does not depend on scheduling.
pub fn estimate_k_recursive(g: &Graph, cfg: &RecursiveConfig) -> Result<Dendrogram> {
    if cfg.min_size < 2 {
        return Err(Error::param("min_size must be at least 2"));
    }
    if !(cfg.alpha > 0.0 && cfg.alpha < 1.0) {
        return Err(Error::param(format!("alpha = {} must lie in (0, 1)", cfg.alpha)));
    }
    recurse(g, (0..g.n()).collect(), cfg)
}

fn recurse(g: &Graph, members: Vec<usize>, cfg: &RecursiveConfig) -> Result<Dendrogram> {
    if members.len() < cfg.min_size {
        return Ok(Dendrogram::leaf(members, None));
    }
    let ctx = |e: Error| e.with_context(format!("recursive node of size {}", members.len()));
    let sub = g.induced_subgraph(&members);
    let n = sub.n();
    let p = estimate_p(&sub)?;
    let est = ModelEstimate::constant(n, p)?;
    let value = compute_statistic(&sub, &est, cfg.stat, 1).map_err(ctx)?;
    let seed = cfg.seed.derive_from_words(members.iter().map(|&i| i as u64));
    let null = k1_null(cfg.stat, cfg.null, n, p, cfg.reps, seed).map_err(ctx)?;
    let outcome = gof_test(value, &null, cfg.alpha, n)?;
    if !outcome.reject {
        return Ok(Dendrogram::leaf(members, Some(outcome)));
    }
    let labels = spectral_labels(&sub, 2, cfg.embedding).map_err(ctx)?;
    let (left, right): (Vec<usize>, Vec<usize>) = (
        labels.members(0).into_iter().map(|i| members[i]).collect(),
        labels.members(1).into_iter().map(|i| members[i]).collect(),
    );
    if left.is_empty() || right.is_empty() {
        let mut leaf = Dendrogram::leaf(members, Some(outcome));
        leaf.degenerate = true;
        return Ok(leaf);
    }
    let (a, b) = rayon::join(|| recurse(g, left, cfg), || recurse(g, right, cfg));
    Ok(Dendrogram {
        members,
        outcome: Some(outcome),
        degenerate: false,
        children: Some(Box::new((a?, b?))),
    })
}
