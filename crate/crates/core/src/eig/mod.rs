//! Eigenvalues of dense matrices and matrix-free operators.
//!
//! Dense problems go to faer. Leading eigenpairs of large operators use a
//! thick-restart Arnoldi iteration (Krylov–Schur style restarts with real
//! arithmetic, conjugate pairs kept together).

mod krylov;

use std::cmp::Ordering;

use faer::{Mat, Side};
pub use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{Affine, LinearOperator};

/// Eigenvalues sorted by descending real part, then descending |imaginary
/// part|, then positive imaginary part first.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<Complex64>,
    /// Unit-norm eigenvectors matching `values`, phase-normalized so the
    /// first non-negligible coordinate is real and positive.
    pub vectors: Option<Vec<Vec<Complex64>>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn leading(&self) -> Complex64 {
        self.values[0]
    }

    pub fn real_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().filter(|v| is_real(**v)).map(|v| v.re)
    }
}

/// Real spectrum of a symmetric problem, in the order requested.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSpectrum {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

/// Treat `mu` as real when `|Im mu| <= 1e-6 max(1, |mu|)`.
pub fn is_real(mu: Complex64) -> bool {
    mu.im.abs() <= 1e-6 * mu.norm().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigOptions {
    pub k: usize,
    /// Residual tolerance, relative to `max(1, |λ|)`.
    pub tol: f64,
    pub max_restarts: usize,
    /// Krylov subspace size; `None` means `2k + 8`.
    pub subspace: Option<usize>,
    /// Operators of at most this dimension are solved densely.
    pub dense_threshold: usize,
    pub vectors: bool,
}

impl Default for EigOptions {
    fn default() -> Self {
        Self {
            k: 1,
            tol: 1e-10,
            max_restarts: 1000,
            subspace: None,
            dense_threshold: 128,
            vectors: true,
        }
    }
}

impl EigOptions {
    pub fn leading(k: usize) -> Self {
        Self {
            k,
            ..Self::default()
        }
    }

    pub fn with_vectors(mut self, vectors: bool) -> Self {
        self.vectors = vectors;
        self
    }

    pub fn with_dense_threshold(mut self, t: usize) -> Self {
        self.dense_threshold = t;
        self
    }

    pub fn with_subspace(mut self, m: usize) -> Self {
        self.subspace = Some(m);
        self
    }

    fn validate(&self, dim: usize) -> Result<()> {
        if self.k == 0 {
            return Err(Error::param("k must be at least 1"));
        }
        if self.k > dim {
            return Err(Error::param(format!("k = {} exceeds operator dimension {dim}", self.k)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::param("tolerance must be positive"));
        }
        Ok(())
    }

    pub(crate) fn subspace_size(&self) -> usize {
        self.subspace.unwrap_or(2 * self.k + 8)
    }
}

pub(crate) fn spectral_cmp(a: &Complex64, b: &Complex64) -> Ordering {
    b.re.total_cmp(&a.re)
        .then_with(|| b.im.abs().total_cmp(&a.im.abs()))
        .then_with(|| b.im.total_cmp(&a.im))
}

pub(crate) fn normalize_vector(v: &mut [Complex64]) {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let big = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pivot = v.iter().find(|z| z.norm() > 1e-8 * big).copied().unwrap_or(Complex64::new(1.0, 0.0));
    let phase = pivot.conj() / (pivot.norm() * norm);
    v.iter_mut().for_each(|z| *z *= phase);
}

pub(crate) fn normalize_real(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let big = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let pivot = v.iter().find(|x| x.abs() > 1e-8 * big).copied().unwrap_or(1.0);
    let s = pivot.signum() / norm;
    v.iter_mut().for_each(|x| *x *= s);
}

pub(crate) fn sorted_spectrum(values: Vec<Complex64>, vectors: Option<Vec<Vec<Complex64>>>) -> Spectrum {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| spectral_cmp(&values[a], &values[b]).then(a.cmp(&b)));
    let vals = idx.iter().map(|&i| values[i]).collect();
    let vecs = vectors.map(|vs| {
        idx.iter()
            .map(|&i| {
                let mut v = vs[i].clone();
                normalize_vector(&mut v);
                v
            })
            .collect()
    });
    Spectrum {
        values: vals,
        vectors: vecs,
    }
}

fn check_square(m: &Mat<f64>) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::Contract(format!("matrix is {}x{}, not square", m.nrows(), m.ncols())));
    }
    Ok(())
}

fn evd_failure() -> Error {
    Error::Convergence {
        restarts: 0,
        residual: f64::NAN,
        context: " [dense eigendecomposition]".into(),
    }
}

/// Full spectrum of a symmetric matrix, eigenvalues descending.
pub fn eig_dense_sym(m: &Mat<f64>) -> Result<SymmetricSpectrum> {
    dense_sym(m, true)
}

pub(crate) fn dense_sym(m: &Mat<f64>, vectors: bool) -> Result<SymmetricSpectrum> {
    check_square(m)?;
    let n = m.nrows();
    let scale = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).fold(1.0f64, |s, (i, j)| s.max(m[(i, j)].abs()));
    for i in 0..n {
        for j in 0..i {
            if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 * scale {
                return Err(Error::Contract(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    if !vectors {
        let mut values = m.self_adjoint_eigenvalues(Side::Lower).map_err(|_| evd_failure())?;
        values.reverse();
        return Ok(SymmetricSpectrum { values, vectors: None });
    }
    let evd = m.self_adjoint_eigen(Side::Lower).map_err(|_| evd_failure())?;
    let (s, u) = (evd.S(), evd.U());
    let values = (0..n).rev().map(|i| s[i]).collect();
    let vecs = (0..n)
        .rev()
        .map(|c| {
            let mut v: Vec<f64> = (0..n).map(|r| u[(r, c)]).collect();
            normalize_real(&mut v);
            v
        })
        .collect();
    Ok(SymmetricSpectrum {
        values,
        vectors: Some(vecs),
    })
}

/// Full spectrum of a general real matrix.
pub fn eig_dense(m: &Mat<f64>, vectors: bool) -> Result<Spectrum> {
    check_square(m)?;
    let n = m.nrows();
    if n == 0 {
        return Ok(Spectrum {
            values: Vec::new(),
            vectors: vectors.then(Vec::new),
        });
    }
    if !vectors {
        let values = m.eigenvalues().map_err(|_| evd_failure())?;
        return Ok(sorted_spectrum(values, None));
    }
    let evd = m.eigen().map_err(|_| evd_failure())?;
    let (s, u) = (evd.S(), evd.U());
    let values = (0..n).map(|i| s[i]).collect();
    let vecs = (0..n).map(|c| (0..n).map(|r| u[(r, c)]).collect()).collect();
    Ok(sorted_spectrum(values, Some(vecs)))
}

/// The `opts.k` eigenvalues of largest real part.
pub fn eig_leading<O: LinearOperator + ?Sized>(op: &O, opts: &EigOptions) -> Result<Spectrum> {
    let dim = op.dim();
    opts.validate(dim)?;
    if dim <= opts.dense_threshold || opts.subspace_size() + 2 >= dim {
        let mut s = eig_dense(&op.to_dense(), opts.vectors)?;
        s.values.truncate(opts.k);
        if let Some(v) = s.vectors.as_mut() {
            v.truncate(opts.k);
        }
        return Ok(s);
    }
    krylov::leading(op, opts, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Largest,
    Smallest,
}

/// The `opts.k` largest (descending) or smallest (ascending) eigenvalues of
/// a symmetric operator.
pub fn eig_extreme_sym<O: LinearOperator + ?Sized>(op: &O, which: Extreme, opts: &EigOptions) -> Result<SymmetricSpectrum> {
    let dim = op.dim();
    opts.validate(dim)?;
    if dim <= opts.dense_threshold || opts.subspace_size() + 2 >= dim {
        let mut s = dense_sym(&op.to_dense(), opts.vectors)?;
        if which == Extreme::Smallest {
            s.values.reverse();
            if let Some(v) = s.vectors.as_mut() {
                v.reverse();
            }
        }
        s.values.truncate(opts.k);
        if let Some(v) = s.vectors.as_mut() {
            v.truncate(opts.k);
        }
        return Ok(s);
    }
    let spec = match which {
        Extreme::Largest => krylov::leading(op, opts, true)?,
        Extreme::Smallest => krylov::leading(&Affine { op, a: -1.0, b: 0.0 }, opts, true)?,
    };
    let sign = if which == Extreme::Largest { 1.0 } else { -1.0 };
    let values = spec.values.iter().map(|v| sign * v.re).collect();
    let vectors = spec.vectors.map(|vs| {
        vs.into_iter()
            .map(|v| {
                let mut r: Vec<f64> = v.iter().map(|z| z.re).collect();
                normalize_real(&mut r);
                r
            })
            .collect()
    });
    Ok(SymmetricSpectrum { values, vectors })
}

/// First half of eigenvector `which` of a 2n x 2n operator, as a real
/// vector (real part after phase normalization).
pub fn leading_halfvector(spec: &Spectrum, which: usize) -> Result<Vec<f64>> {
    let vecs = spec
        .vectors
        .as_ref()
        .ok_or_else(|| Error::Contract("spectrum was computed without eigenvectors".into()))?;
    let v = vecs
        .get(which)
        .ok_or_else(|| Error::param(format!("eigenvector {which} not available")))?;
    if v.len() % 2 != 0 {
        return Err(Error::Contract("operator dimension is odd".into()));
    }
    Ok(v[..v.len() / 2].iter().map(|z| z.re).collect())
}
