//! Independent reference implementations shared by the integration suites.
#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

use gini_mre::{DistortionSpec, EndowmentMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Closed-form distortion, written out separately from the library.
pub fn v_oracle(spec: &DistortionSpec, t: f64) -> f64 {
    match *spec {
        DistortionSpec::Identity => t,
        DistortionSpec::Zonoid { alpha } => (t / alpha).min(1.0),
        DistortionSpec::DonaldsonWeymark { alpha } => 1.0 - (1.0 - t).powf(1.0 / alpha),
        DistortionSpec::Step { alpha } => {
            if t < alpha {
                0.0
            } else {
                1.0
            }
        }
        DistortionSpec::DualDonaldsonWeymark { alpha } => t.powf(1.0 / alpha),
        DistortionSpec::DualStep { alpha } => {
            if t <= 1.0 - alpha {
                0.0
            } else {
                1.0
            }
        }
        _ => panic!("no oracle for {spec}"),
    }
}

/// `v(i/n) - v((i-1)/n)` for `i = 1..n`.
pub fn weights_oracle(spec: &DistortionSpec, n: usize) -> Vec<f64> {
    let nf = n as f64;
    (1..=n)
        .map(|i| v_oracle(spec, i as f64 / nf) - v_oracle(spec, (i - 1) as f64 / nf))
        .collect()
}

fn sorted_dot(values: &mut [f64], w: &[f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.iter().zip(w).map(|(x, w)| x * w).sum()
}

/// `Σ x_(i) [v(i/n) - v((i-1)/n)]` over the ascending order statistics.
pub fn spectral_oracle(values: &[f64], spec: &DistortionSpec) -> f64 {
    let w = weights_oracle(spec, values.len());
    sorted_dot(&mut values.to_vec(), &w)
}

fn project(x: &EndowmentMatrix, p: &[f64]) -> Vec<f64> {
    x.rows().map(|r| r.iter().zip(p).map(|(a, b)| a * b).sum()).collect()
}

pub fn priced_oracle(x: &EndowmentMatrix, p: &[f64], spec: &DistortionSpec) -> f64 {
    spectral_oracle(&project(x, p), spec)
}

/// `S_va(p'A) - S_vb(p'B)` at angle `θ`.
pub fn margin_at(
    a: &EndowmentMatrix,
    va: &DistortionSpec,
    b: &EndowmentMatrix,
    vb: &DistortionSpec,
    theta: f64,
) -> f64 {
    let p = [theta.cos(), theta.sin()];
    priced_oracle(a, &p, va) - priced_oracle(b, &p, vb)
}

/// Minimum of the margin over `k + 1` equally spaced angles in `[lo, hi]`,
/// with the angle attaining it.
pub fn dense_min_margin(
    a: &EndowmentMatrix,
    va: &DistortionSpec,
    b: &EndowmentMatrix,
    vb: &DistortionSpec,
    lo: f64,
    hi: f64,
    k: usize,
) -> (f64, f64) {
    use rayon::prelude::*;
    let wa = weights_oracle(va, a.nrows());
    let wb = weights_oracle(vb, b.nrows());
    (0..=k)
        .into_par_iter()
        .map(|j| {
            let theta = lo + (hi - lo) * j as f64 / k as f64;
            let p = [theta.cos(), theta.sin()];
            let m = sorted_dot(&mut project(a, &p), &wa) - sorted_dot(&mut project(b, &p), &wb);
            (m, theta)
        })
        .reduce(|| (f64::INFINITY, 0.0), |x, y| if y.0 < x.0 { y } else { x })
}

pub fn full_dense_min(
    a: &EndowmentMatrix,
    b: &EndowmentMatrix,
    v: &DistortionSpec,
    k: usize,
) -> (f64, f64) {
    dense_min_margin(a, v, b, v, 0.0, FRAC_PI_2, k)
}

/// Uniform entries in `[0, scale)` with `n` drawn from `sizes`.
pub fn random_matrix(
    rng: &mut impl Rng,
    sizes: std::ops::RangeInclusive<usize>,
    d: usize,
    scale: f64,
) -> EndowmentMatrix {
    let n = rng.random_range(sizes);
    let rows = (0..n)
        .map(|_| (0..d).map(|_| scale * rng.random::<f64>()).collect())
        .collect();
    EndowmentMatrix::from_rows(rows).unwrap()
}

pub fn random_direction(rng: &mut impl Rng, d: usize) -> Vec<f64> {
    loop {
        let p: Vec<f64> = (0..d).map(|_| rng.random::<f64>()).collect();
        let norm = p.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return p.into_iter().map(|c| c / norm).collect();
        }
    }
}

/// `1e-9 · (1 + max |entry|)`.
pub fn tol(x: &EndowmentMatrix) -> f64 {
    1e-9 * (1.0 + x.max_abs())
}

/// Concave test grid used by the implication properties.
pub fn concave_grid() -> Vec<DistortionSpec> {
    let mut g = vec![DistortionSpec::Identity];
    for a in [0.2, 0.5, 0.8] {
        g.push(DistortionSpec::zonoid(a).unwrap());
        g.push(DistortionSpec::donaldson_weymark(a).unwrap());
    }
    g
}
