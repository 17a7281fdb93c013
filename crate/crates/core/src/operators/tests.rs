use super::*;
use crate::eig::{eig_dense, eig_dense_sym};
use crate::model::sample_er;
use crate::rng::RngSeed;

fn k3() -> Graph {
    Graph::complete(3)
}

fn max_abs(m: &Mat<f64>) -> f64 {
    let mut s = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            s = s.max(m[(i, j)].abs());
        }
    }
    s
}

/// Explicit `A - P̂` (raw) with zero diagonal.
fn dense_centered(g: &Graph, est: &ModelEstimate) -> Mat<f64> {
    let n = g.n();
    Mat::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else {
            f64::from(g.has_edge(i, j)) - est.p_raw(i, j)
        }
    })
}

fn block_dense(tl: &Mat<f64>, tr: &[f64], bottom: bool) -> Mat<f64> {
    let n = tl.nrows();
    Mat::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => tl[(i, j)],
        (true, false) => {
            if j - n == i {
                tr[i]
            } else {
                0.0
            }
        }
        (false, true) => f64::from(bottom && i - n == j),
        (false, false) => 0.0,
    })
}

#[test]
fn centered_adjacency_trivial_cases() {
    let g = Graph::empty(5);
    let est = ModelEstimate::constant(5, 0.0).unwrap();
    assert_eq!(max_abs(&centered_adjacency(&g, &est).unwrap().to_dense()), 0.0);

    let g = Graph::complete(4);
    let est = ModelEstimate::constant(4, 1.0).unwrap();
    assert_eq!(max_abs(&centered_adjacency(&g, &est).unwrap().to_dense()), 0.0);
}

#[test]
fn centered_k3() {
    let g = k3();
    let est = ModelEstimate::constant(3, 0.5).unwrap();
    let m = centered_adjacency(&g, &est).unwrap().to_dense();
    for i in 0..3 {
        for j in 0..3 {
            assert!((m[(i, j)] - if i == j { 0.0 } else { 0.5 }).abs() < 1e-15);
        }
    }
    let s = eig_dense_sym(&m).unwrap();
    let want = [1.0, -0.5, -0.5];
    for (a, b) in s.values.iter().zip(want) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn normalized_k3_and_row_variance() {
    let g = k3();
    let est = ModelEstimate::constant(3, 0.5).unwrap();
    let m = normalized_adjacency(&g, &est).unwrap().to_dense();
    let want = 0.5 / (2.0f64 * 0.25).sqrt();
    assert!((want - 1.0 / 2f64.sqrt()).abs() < 1e-15);
    for i in 0..3 {
        for j in 0..3 {
            assert!((m[(i, j)] - if i == j { 0.0 } else { want }).abs() < 1e-14);
        }
    }
    // With the true p, each row has total variance (n-1) p(1-p) / ((n-1) p(1-p)) = 1.
    let (n, p) = (50usize, 0.2);
    let est = ModelEstimate::constant(n, p).unwrap();
    let w = 1.0 / ((n as f64 - 1.0) * p * (1.0 - p)).sqrt();
    let var_row = (n as f64 - 1.0) * p * (1.0 - p) * w * w;
    assert!((var_row - 1.0).abs() < 1e-12);
    let op = normalized_adjacency(&Graph::empty(n), &est).unwrap().to_dense();
    assert!((op[(0, 1)] + p * w).abs() < 1e-15);
}

#[test]
fn nb_operator_k3_spectrum() {
    let g = k3();
    let s = eig_dense(&nb_operator(&g).to_dense(), false).unwrap();
    // mu^2 - lambda mu + 1 = 0 for lambda in {2, -1, -1}.
    let r3 = 3f64.sqrt() / 2.0;
    let want = [
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-0.5, r3),
        Complex64::new(-0.5, r3),
        Complex64::new(-0.5, -r3),
        Complex64::new(-0.5, -r3),
    ];
    let mut used = [false; 6];
    for w in want {
        let j = (0..6)
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (s.values[a] - w).norm().total_cmp(&(s.values[b] - w).norm()))
            .unwrap();
        assert!((s.values[j] - w).norm() < 1e-6, "{} vs {w}", s.values[j]);
        used[j] = true;
    }
}

use crate::eig::Complex64;

#[test]
fn nb_operator_empty_graph() {
    let s = eig_dense(&nb_operator(&Graph::empty(4)).to_dense(), false).unwrap();
    let ones = s.values.iter().filter(|v| (**v - 1.0).norm() < 1e-12).count();
    let minus = s.values.iter().filter(|v| (**v + 1.0).norm() < 1e-12).count();
    assert_eq!((ones, minus), (4, 4));
}

#[test]
fn centered_nb_with_exact_fit_is_swap() {
    // Use a complete graph with p̂ = 1 so that A̲ = 0 and D̲ = 0.
    let g = Graph::complete(5);
    let est = ModelEstimate::constant(5, 1.0).unwrap();
    let h = centered_nb_operator(&g, &est).unwrap().to_dense();
    let want = block_dense(&Mat::zeros(5, 5), &[1.0; 5], true);
    assert!(max_abs(&(&h - &want)) == 0.0);
}

#[test]
fn block_operators_match_dense_assembly() {
    for rep in 0..30u64 {
        let n = 5 + (rep as usize * 13) % 196;
        let g = sample_er(n, 0.08, RngSeed::new(11).replicate(rep)).unwrap();
        let p = 2.0 * g.m() as f64 / (n * (n - 1)) as f64;
        let est = if rep % 2 == 0 {
            ModelEstimate::constant(n, p).unwrap()
        } else {
            let labels: Vec<usize> = (0..n).map(|i| (i * 7 + rep as usize) % 3).collect();
            let q = vec![0.1, 0.02, 0.05, 0.02, 0.2, 0.01, 0.05, 0.01, 0.07];
            ModelEstimate::blocks(labels, 3, q, p, vec![]).unwrap()
        };
        let abar = dense_centered(&g, &est);
        let dbar: Vec<f64> = (0..n).map(|i| (0..n).map(|j| abar[(i, j)]).sum()).collect();

        let a = Mat::from_fn(n, n, |i, j| f64::from(g.has_edge(i, j)));
        let nb_want = block_dense(&a, &(0..n).map(|i| 1.0 - g.degree(i) as f64).collect::<Vec<_>>(), true);
        let cnb = centered_nb_operator(&g, &est).unwrap();
        let cnb_want = block_dense(&abar, &dbar.iter().map(|d| 1.0 - d).collect::<Vec<_>>(), true);

        let alpha = est.alpha_hat();
        let (full, h0, e) = rescaled_split(&cnb, alpha).unwrap();
        let scaled = Mat::from_fn(n, n, |i, j| abar[(i, j)] / alpha.sqrt());
        let tr: Vec<f64> = dbar.iter().map(|d| (1.0 - d) / alpha).collect();
        let full_want = block_dense(&scaled, &tr, true);
        let h0_want = block_dense(&scaled, &vec![0.0; n], true);
        let e_want = block_dense(&Mat::zeros(n, n), &tr, false);

        let nrm = normalized_adjacency(&g, &est).unwrap();
        let nrm_want = Mat::from_fn(n, n, |i, j| {
            if i == j {
                0.0
            } else {
                let ph = est.p_hat(i, j);
                abar[(i, j)] / ((n as f64 - 1.0) * ph * (1.0 - ph)).sqrt()
            }
        });
        let r = 1.0 + rep as f64 * 0.1;
        let bh_want = Mat::from_fn(n, n, |i, j| {
            let diag = if i == j { r * r - 1.0 + g.degree(i) as f64 } else { 0.0 };
            diag - r * a[(i, j)]
        });

        let nb = nb_operator(&g);
        let bh = bethe_hessian(&g, r);
        let cases: Vec<(&dyn LinearOperator, &Mat<f64>)> = vec![
            (&g, &a),
            (&nb, &nb_want),
            (&cnb, &cnb_want),
            (&full, &full_want),
            (&h0, &h0_want),
            (&e, &e_want),
            (&nrm, &nrm_want),
            (&bh, &bh_want),
        ];
        let mut rng = RngSeed::new(99).replicate(rep).stream();
        for (op, dense) in cases {
            for _ in 0..10 {
                let x: Vec<f64> = (0..op.dim()).map(|_| rand::Rng::random::<f64>(&mut rng) - 0.5).collect();
                let mut y = vec![0.0; op.dim()];
                op.apply(&x, &mut y);
                let y2 = dense.apply_vec(&x);
                let err = y.iter().zip(&y2).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
                let xn = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                assert!(err <= 1e-10 * xn, "rep {rep}: err {err}");
            }
        }
        // The centered top-right block equals I - α⁻¹D when K0 = 1.
        if rep % 2 == 0 {
            for i in 0..n {
                assert!((tr[i] - (1.0 - g.degree(i) as f64 / alpha)).abs() < 1e-12);
            }
        }
    }
}

trait ApplyVec {
    fn apply_vec(&self, x: &[f64]) -> Vec<f64>;
}

impl ApplyVec for Mat<f64> {
    fn apply_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.nrows()];
        LinearOperator::apply(self, x, &mut y);
        y
    }
}

#[test]
fn rescaled_split_similarity_and_norms() {
    let g = sample_er(60, 0.1, RngSeed::new(5)).unwrap();
    let p = 2.0 * g.m() as f64 / (60.0 * 59.0);
    let est = ModelEstimate::constant(60, p).unwrap();
    let cnb = centered_nb_operator(&g, &est).unwrap();
    let alpha = est.alpha_hat();
    let (full, h0, e) = rescaled_split(&cnb, alpha).unwrap();
    let s = eig_dense(&cnb.to_dense(), false).unwrap();
    let t = eig_dense(&full.to_dense(), false).unwrap();
    for (a, b) in s.values.iter().zip(&t.values) {
        assert!((a - b * alpha.sqrt()).norm() < 1e-9 * a.norm().max(1.0));
    }
    // Nonzero spectrum of H̃₀ is the spectrum of A̲/√α.
    let abar = centered_adjacency(&g, &est).unwrap().to_dense();
    let lam = eig_dense_sym(&Mat::from_fn(60, 60, |i, j| abar[(i, j)] / alpha.sqrt())).unwrap();
    let mut mu: Vec<f64> = eig_dense(&h0.to_dense(), false)
        .unwrap()
        .values
        .iter()
        .filter(|z| z.norm() > 1e-7)
        .map(|z| z.re)
        .collect();
    mu.sort_by(|a, b| b.total_cmp(a));
    let mut lam_nz: Vec<f64> = lam.values.into_iter().filter(|v| v.abs() > 1e-7).collect();
    lam_nz.sort_by(|a, b| b.total_cmp(a));
    assert_eq!(mu.len(), lam_nz.len());
    for (a, b) in mu.iter().zip(&lam_nz) {
        assert!((a - b).abs() < 1e-6);
    }
    // ‖E‖₂ equals the largest |α⁻¹ d_i - 1|, via the top singular value.
    let ed = e.to_dense();
    let ete = ed.transpose() * &ed;
    let sigma = eig_dense_sym(&ete).unwrap().values[0].sqrt();
    let want = (0..60).map(|i| (g.degree(i) as f64 / alpha - 1.0).abs()).fold(0.0, f64::max);
    assert!((sigma - want).abs() < 1e-10);

    assert!(rescaled_split(&cnb, 0.0).is_err());
    assert!(rescaled_split(&nb_operator(&g), 1.0).is_err());
}

#[test]
fn bethe_hessian_cases() {
    let g = k3();
    let s = eig_dense_sym(&bethe_hessian(&g, 2.0).to_dense()).unwrap();
    for (a, b) in s.values.iter().zip([7.0, 7.0, 1.0]) {
        assert!((a - b).abs() < 1e-12);
    }
    let g = sample_er(40, 0.2, RngSeed::new(3)).unwrap();
    let s = eig_dense_sym(&bethe_hessian(&g, 1.0).to_dense()).unwrap();
    assert!(s.values.last().unwrap().abs() < 1e-10);

    // Petersen graph is 3-regular.
    let pet = Graph::from_edges(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert!((r_a(&pet) - 3f64.sqrt()).abs() < 1e-15);
    assert!((r_m(&pet) - 2f64.sqrt()).abs() < 1e-15);
}

#[test]
fn edge_matrix_k3() {
    let g = k3();
    let b = edge_nb_matrix(&g);
    assert_eq!(b.dim(), 6);
    for r in 0..6 {
        assert_eq!(b.row(r).map(|(_, v)| v).sum::<f64>(), 1.0);
        let (i, j) = b.arcs()[r];
        for (c, _) in b.row(r) {
            let (k, l) = b.arcs()[c];
            assert!(j == k && i != l);
        }
    }
    let sb = eig_dense(&b.to_dense(), false).unwrap();
    let sh = eig_dense(&nb_operator(&g).to_dense(), false).unwrap();
    for mu in &sh.values {
        let d = sb.values.iter().map(|z| (z - mu).norm()).fold(f64::INFINITY, f64::min);
        assert!(d < 1e-6, "{mu}");
    }
}

#[test]
fn centered_edge_matrix_single_edge() {
    // n = 2 with p̂ = 1: A̲ = 0, so only the backtracking -1 entries remain.
    let g = Graph::from_edges(2, [(0, 1)]).unwrap();
    let est = ModelEstimate::constant(2, 1.0).unwrap();
    let b = centered_edge_matrix(&g, &est, false).unwrap();
    assert_eq!(b.arcs(), &[(0, 1), (1, 0)]);
    let d = b.to_dense();
    // Row 0→1 continues only to 1→0 (z = v = 0): A̲_10 - 1 = -1.
    assert_eq!((d[(0, 0)], d[(0, 1)], d[(1, 0)], d[(1, 1)]), (0.0, -1.0, -1.0, 0.0));

    let big = Graph::empty(41);
    let est = ModelEstimate::constant(41, 0.0).unwrap();
    assert!(matches!(centered_edge_matrix(&big, &est, false), Err(Error::Resource(_))));
    assert!(centered_edge_matrix(&big, &est, true).is_ok());
}
