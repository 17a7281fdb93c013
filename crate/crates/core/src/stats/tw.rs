//! Tracy–Widom (β = 1) quantiles from an embedded table.

use super::tw1_table::{TW1_PROB_START, TW1_PROB_STEP, TW1_QUANTILES};
use crate::error::{Error, Result};

const KNOTS: usize = TW1_QUANTILES.len();

fn prob(i: usize) -> f64 {
    TW1_PROB_START + TW1_PROB_STEP * i as f64
}

/// Fritsch–Carlson slopes of the quantile function at each knot.
fn slopes() -> &'static [f64; KNOTS] {
    use std::sync::OnceLock;
    static SLOPES: OnceLock<[f64; KNOTS]> = OnceLock::new();
    SLOPES.get_or_init(|| {
        let h = TW1_PROB_STEP;
        let x = &TW1_QUANTILES;
        let delta: Vec<f64> = x.windows(2).map(|w| (w[1] - w[0]) / h).collect();
        let mut m = [0.0; KNOTS];
        m[0] = delta[0];
        m[KNOTS - 1] = delta[KNOTS - 2];
        for i in 1..KNOTS - 1 {
            let (a, b) = (delta[i - 1], delta[i]);
            m[i] = if a * b <= 0.0 { 0.0 } else { 2.0 / (1.0 / a + 1.0 / b) };
        }
        m
    })
}

fn hermite(i: usize, t: f64) -> f64 {
    let h = TW1_PROB_STEP;
    let m = slopes();
    let (y0, y1) = (TW1_QUANTILES[i], TW1_QUANTILES[i + 1]);
    let t2 = t * t;
    let t3 = t2 * t;
    (2.0 * t3 - 3.0 * t2 + 1.0) * y0
        + (t3 - 2.0 * t2 + t) * h * m[i]
        + (-2.0 * t3 + 3.0 * t2) * y1
        + (t3 - t2) * h * m[i + 1]
}

/// Quantile of the TW₁ law for `0.001 <= q <= 0.999`.
pub fn tw1_quantile(q: f64) -> Result<f64> {
    let lo = prob(0);
    let hi = prob(KNOTS - 1);
    if !(q >= lo - 1e-12 && q <= hi + 1e-12) {
        return Err(Error::param(format!("TW1 quantile is tabulated for q in [{lo}, {hi}], got {q}")));
    }
    let s = ((q - lo) / TW1_PROB_STEP).clamp(0.0, (KNOTS - 1) as f64);
    let i = (s.floor() as usize).min(KNOTS - 2);
    Ok(hermite(i, s - i as f64))
}

/// TW₁ distribution function. Outside the tabulated range it returns 0 or
/// 1, which is within 0.001 of the true value.
pub fn tw1_cdf(x: f64) -> f64 {
    if x < TW1_QUANTILES[0] {
        return 0.0;
    }
    if x > TW1_QUANTILES[KNOTS - 1] {
        return 1.0;
    }
    let i = (TW1_QUANTILES.partition_point(|&v| v <= x) - 1).min(KNOTS - 2);
    let (mut a, mut b) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (a + b);
        if hermite(i, mid) < x {
            a = mid;
        } else {
            b = mid;
        }
    }
    prob(i) + 0.5 * (a + b) * TW1_PROB_STEP
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert!((tw1_quantile(0.95).unwrap() - 0.9793).abs() < 1e-3);
        assert!((tw1_quantile(0.5).unwrap() - (-1.2690)).abs() < 1.5e-3);
        assert!((tw1_quantile(0.99).unwrap() - 2.0234).abs() < 1e-3);
        assert!(tw1_quantile(0.0005).is_err());
        assert!(tw1_quantile(1.0).is_err());
    }

    #[test]
    fn monotone_and_inverse() {
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=9980 {
            let q = 0.001 + 0.0001 * i as f64;
            let x = tw1_quantile(q).unwrap();
            assert!(x > prev);
            prev = x;
            if i % 97 == 0 {
                assert!((tw1_cdf(x) - q).abs() < 1e-9, "q={q} x={x} cdf={}", tw1_cdf(x));
            }
        }
        assert_eq!(tw1_cdf(-20.0), 0.0);
        assert_eq!(tw1_cdf(20.0), 1.0);
    }
}
