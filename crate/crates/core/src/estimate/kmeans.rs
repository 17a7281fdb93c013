use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::RngSeed;

pub const KMEANS_RESTARTS: usize = 20;
pub const KMEANS_MAX_ITER: usize = 100;

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Lloyd's k-means on `n` points stored row-major with `dim` columns.
///
/// k-means++ seeding, [`KMEANS_RESTARTS`] restarts with sub-seeds of `seed`,
/// at most [`KMEANS_MAX_ITER`] iterations each. An emptied cluster is
/// reseeded at the point farthest from its center. The best restart by
/// inertia wins; labels are renumbered by first appearance.
pub fn kmeans(points: &[f64], dim: usize, k: usize, seed: RngSeed) -> Result<Vec<usize>> {
    if dim == 0 || points.len() % dim != 0 {
        return Err(Error::param("point buffer does not match the dimension"));
    }
    let n = points.len() / dim;
    if k == 0 || k > n {
        return Err(Error::param(format!("cannot form {k} clusters from {n} points")));
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    for r in 0..KMEANS_RESTARTS as u64 {
        let (inertia, labels) = lloyd(points, dim, n, k, seed.derive(r));
        if best.as_ref().is_none_or(|(b, _)| inertia < *b) {
            best = Some((inertia, labels));
        }
    }
    Ok(canonical(best.unwrap().1))
}

fn canonical(labels: Vec<usize>) -> Vec<usize> {
    let mut map = vec![usize::MAX; labels.len().max(1)];
    let mut next = 0;
    labels
        .into_iter()
        .map(|l| {
            if map[l] == usize::MAX {
                map[l] = next;
                next += 1;
            }
            map[l]
        })
        .collect()
}

fn lloyd(points: &[f64], dim: usize, n: usize, k: usize, seed: RngSeed) -> (f64, Vec<usize>) {
    let mut rng = seed.stream();
    let pt = |i: usize| &points[i * dim..(i + 1) * dim];

    let mut centers: Vec<f64> = Vec::with_capacity(k * dim);
    centers.extend_from_slice(pt(rng.random_range(0..n)));
    let mut d2: Vec<f64> = (0..n).map(|i| dist2(pt(i), &centers[..dim])).collect();
    for _ in 1..k {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let mut u = rng.random::<f64>() * total;
            let mut idx = n - 1;
            for (i, &d) in d2.iter().enumerate() {
                if u < d {
                    idx = i;
                    break;
                }
                u -= d;
            }
            idx
        } else {
            rng.random_range(0..n)
        };
        let c = pt(pick).to_vec();
        for (i, d) in d2.iter_mut().enumerate() {
            *d = d.min(dist2(pt(i), &c));
        }
        centers.extend_from_slice(&c);
    }

    let mut labels = vec![usize::MAX; n];
    let mut dist = vec![0.0; n];
    for _ in 0..KMEANS_MAX_ITER {
        let mut changed = false;
        for i in 0..n {
            let (mut bl, mut bd) = (0, f64::INFINITY);
            for c in 0..k {
                let d = dist2(pt(i), &centers[c * dim..(c + 1) * dim]);
                if d < bd {
                    bd = d;
                    bl = c;
                }
            }
            if labels[i] != bl {
                changed = true;
                labels[i] = bl;
            }
            dist[i] = bd;
        }
        if !changed {
            break;
        }
        let mut sums = vec![0.0; k * dim];
        let mut counts = vec![0usize; k];
        for i in 0..n {
            counts[labels[i]] += 1;
            for (s, x) in sums[labels[i] * dim..(labels[i] + 1) * dim].iter_mut().zip(pt(i)) {
                *s += x;
            }
        }
        for c in 0..k {
            if counts[c] == 0 {
                let far = (0..n).max_by(|&a, &b| dist[a].total_cmp(&dist[b]).then(b.cmp(&a))).unwrap();
                centers[c * dim..(c + 1) * dim].copy_from_slice(pt(far));
                dist[far] = 0.0;
                counts[labels[far]] -= 1;
                labels[far] = c;
            } else {
                for d in 0..dim {
                    centers[c * dim + d] = sums[c * dim + d] / counts[c] as f64;
                }
            }
        }
    }
    let mut total = 0.0;
    for i in 0..n {
        let (mut bl, mut bd) = (0, f64::INFINITY);
        for c in 0..k {
            let d = dist2(pt(i), &centers[c * dim..(c + 1) * dim]);
            if d < bd {
                bd = d;
                bl = c;
            }
        }
        labels[i] = bl;
        total += bd;
    }
    (total, labels)
}
