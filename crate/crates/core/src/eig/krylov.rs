use faer::{Mat, Side};
use rand::Rng;

use super::{sorted_spectrum, spectral_cmp, Complex64, EigOptions, Spectrum};
use crate::error::{Error, Result};
use crate::operators::LinearOperator;
use crate::rng::RngSeed;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn random_unit(n: usize, tag: u64) -> Vec<f64> {
    let mut rng = RngSeed::new(0x6b72_796c_6f76).derive(tag).stream();
    let mut v: Vec<f64> = (0..n).map(|_| rng.random::<f64>() - 0.5).collect();
    let s = norm(&v);
    v.iter_mut().for_each(|x| *x /= s);
    v
}

/// Orthogonalize `w` against `basis` twice; returns the accumulated
/// coefficients.
fn orthogonalize(basis: &[Vec<f64>], w: &mut [f64]) -> Vec<f64> {
    let mut coef = vec![0.0; basis.len()];
    for _ in 0..2 {
        for (c, b) in coef.iter_mut().zip(basis) {
            let h = dot(b, w);
            *c += h;
            axpy(-h, b, w);
        }
    }
    coef
}

struct Ritz {
    values: Vec<Complex64>,
    /// Columns of the small eigenvector matrix, unit norm.
    vectors: Vec<Vec<Complex64>>,
    residuals: Vec<f64>,
}

fn small_eigen(h: &[f64], m: usize, symmetric: bool) -> Result<Ritz> {
    let at = |i: usize, j: usize| h[i * m + j];
    let (values, vectors): (Vec<Complex64>, Vec<Vec<Complex64>>) = if symmetric {
        let t = Mat::<f64>::from_fn(m, m, |i, j| 0.5 * (at(i, j) + at(j, i)));
        let evd = t.self_adjoint_eigen(Side::Lower).map_err(|_| small_failure())?;
        let (s, u) = (evd.S(), evd.U());
        (0..m)
            .map(|c| {
                (
                    Complex64::new(s[c], 0.0),
                    (0..m).map(|r| Complex64::new(u[(r, c)], 0.0)).collect(),
                )
            })
            .unzip()
    } else {
        let t = Mat::<f64>::from_fn(m, m, at);
        let evd = t.eigen().map_err(|_| small_failure())?;
        let (s, u) = (evd.S(), evd.U());
        (0..m)
            .map(|c| {
                let mut v: Vec<Complex64> = (0..m).map(|r| u[(r, c)]).collect();
                let nv = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                v.iter_mut().for_each(|z| *z /= nv);
                (s[c], v)
            })
            .unzip()
    };
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| spectral_cmp(&values[a], &values[b]).then(a.cmp(&b)));
    let last = &h[m * m..m * m + m];
    let residuals = order
        .iter()
        .map(|&i| {
            vectors[i]
                .iter()
                .zip(last)
                .fold(Complex64::new(0.0, 0.0), |acc, (s, b)| acc + s * b)
                .norm()
        })
        .collect();
    Ok(Ritz {
        values: order.iter().map(|&i| values[i]).collect(),
        vectors: order.iter().map(|&i| vectors[i].clone()).collect(),
        residuals,
    })
}

fn small_failure() -> Error {
    Error::Convergence {
        restarts: 0,
        residual: f64::NAN,
        context: " [projected eigenproblem]".into(),
    }
}

fn is_complex(z: Complex64) -> bool {
    z.im != 0.0
}

/// Leading `opts.k` eigenpairs by largest real part.
pub(super) fn leading<O: LinearOperator + ?Sized>(op: &O, opts: &EigOptions, symmetric: bool) -> Result<Spectrum> {
    let n = op.dim();
    let k = opts.k;
    let m = opts.subspace_size().max(k + 3).min(n - 1);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
    basis.push(random_unit(n, n as u64));
    // (m + 1) x m, row-major.
    let mut h = vec![0.0; (m + 1) * m];
    let mut kept = 0;
    let mut best = f64::INFINITY;
    let mut op_scale = 0.0f64;
    let mut w = vec![0.0; n];
    let mut fresh = 1u64;

    for restart in 0..=opts.max_restarts {
        for j in kept..m {
            op.apply(&basis[j], &mut w);
            op_scale = op_scale.max(norm(&w));
            let coef = orthogonalize(&basis[..=j], &mut w);
            for (i, c) in coef.into_iter().enumerate() {
                h[i * m + j] += c;
            }
            let beta = norm(&w);
            if beta <= 1e-13 * op_scale.max(f64::MIN_POSITIVE) {
                // Invariant subspace found: continue with a fresh direction.
                h[(j + 1) * m + j] = 0.0;
                w = random_unit(n, n as u64 ^ (fresh << 32));
                fresh += 1;
                orthogonalize(&basis[..=j], &mut w);
                let s = norm(&w);
                w.iter_mut().for_each(|x| *x /= s);
            } else {
                h[(j + 1) * m + j] = beta;
                w.iter_mut().for_each(|x| *x /= beta);
            }
            basis.push(w.clone());
        }

        let ritz = small_eigen(&h, m, symmetric)?;
        let worst = (0..k)
            .map(|i| ritz.residuals[i] / ritz.values[i].norm().max(1.0))
            .fold(0.0, f64::max);
        best = best.min(worst);

        if worst <= opts.tol {
            let (values, vectors, explicit) = ritz_pairs(op, &basis[..m], &ritz, k);
            let explicit_worst = (0..k).map(|i| explicit[i] / values[i].norm().max(1.0)).fold(0.0, f64::max);
            if explicit_worst <= opts.tol {
                let spec = sorted_spectrum(values, Some(vectors));
                return Ok(if opts.vectors {
                    spec
                } else {
                    Spectrum {
                        vectors: None,
                        ..spec
                    }
                });
            }
            best = best.min(explicit_worst);
        }
        if restart == opts.max_restarts {
            break;
        }

        // Thick restart on the leading half of the Ritz pairs.
        let mut keep = ((k + m) / 2).max(k + 1).min(m - 1);
        if is_complex(ritz.values[keep - 1]) && ritz.values[keep - 1].im > 0.0 {
            keep += 1;
        }
        let mut cols: Vec<Vec<f64>> = Vec::with_capacity(keep + 1);
        for i in 0..keep {
            let s = &ritz.vectors[i];
            let z = ritz.values[i];
            if !is_complex(z) {
                let re: Vec<f64> = s.iter().map(|c| c.re).collect();
                let im: Vec<f64> = s.iter().map(|c| c.im).collect();
                cols.push(if norm(&re) >= norm(&im) { re } else { im });
            } else if z.im > 0.0 || i == 0 || ritz.values[i - 1] != z.conj() {
                cols.push(s.iter().map(|c| c.re).collect());
                cols.push(s.iter().map(|c| c.im).collect());
            }
        }
        let q = orthonormal_columns(cols);
        let p = q.len();

        let mut new_basis = Vec::with_capacity(m + 1);
        for qc in &q {
            let mut v = vec![0.0; n];
            for (j, &c) in qc.iter().enumerate() {
                if c != 0.0 {
                    axpy(c, &basis[j], &mut v);
                }
            }
            new_basis.push(v);
        }
        new_basis.push(basis[m].clone());

        let mut hq = vec![0.0; m * p];
        for r in 0..m {
            for (c, qc) in q.iter().enumerate() {
                hq[r * p + c] = (0..m).map(|t| h[r * m + t] * qc[t]).sum();
            }
        }
        let mut new_h = vec![0.0; (m + 1) * m];
        for (a, qa) in q.iter().enumerate() {
            for c in 0..p {
                new_h[a * m + c] = (0..m).map(|r| qa[r] * hq[r * p + c]).sum();
            }
        }
        for (c, qc) in q.iter().enumerate() {
            new_h[p * m + c] = (0..m).map(|t| h[m * m + t] * qc[t]).sum();
        }
        basis = new_basis;
        h = new_h;
        kept = p;
    }
    Err(Error::Convergence {
        restarts: opts.max_restarts,
        residual: best,
        context: String::new(),
    })
}

fn orthonormal_columns(cols: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(cols.len());
    for mut c in cols {
        let before = norm(&c);
        orthogonalize(&out, &mut c);
        let after = norm(&c);
        if after > 1e-10 * before.max(f64::MIN_POSITIVE) {
            c.iter_mut().for_each(|x| *x /= after);
            out.push(c);
        }
    }
    out
}

type Pairs = (Vec<Complex64>, Vec<Vec<Complex64>>, Vec<f64>);

fn ritz_pairs<O: LinearOperator + ?Sized>(op: &O, basis: &[Vec<f64>], ritz: &Ritz, k: usize) -> Pairs {
    let n = op.dim();
    let mut values = Vec::with_capacity(k);
    let mut vectors = Vec::with_capacity(k);
    let mut residuals = Vec::with_capacity(k);
    let (mut ar, mut ai) = (vec![0.0; n], vec![0.0; n]);
    for i in 0..k {
        let (mut yr, mut yi) = (vec![0.0; n], vec![0.0; n]);
        for (j, s) in ritz.vectors[i].iter().enumerate() {
            axpy(s.re, &basis[j], &mut yr);
            axpy(s.im, &basis[j], &mut yi);
        }
        let nrm = (dot(&yr, &yr) + dot(&yi, &yi)).sqrt();
        yr.iter_mut().for_each(|x| *x /= nrm);
        yi.iter_mut().for_each(|x| *x /= nrm);
        op.apply(&yr, &mut ar);
        op.apply(&yi, &mut ai);
        let z = ritz.values[i];
        let res: f64 = (0..n)
            .map(|t| {
                let rr = ar[t] - (z.re * yr[t] - z.im * yi[t]);
                let ri = ai[t] - (z.re * yi[t] + z.im * yr[t]);
                rr * rr + ri * ri
            })
            .sum::<f64>()
            .sqrt();
        values.push(z);
        vectors.push((0..n).map(|t| Complex64::new(yr[t], yi[t])).collect());
        residuals.push(res);
    }
    (values, vectors, residuals)
}
