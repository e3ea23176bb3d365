//! Deterministic direction grids on the nonnegative unit sphere, used where
//! exact construction is out of reach (`d >= 3`).

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};
use statrs::function::gamma::gamma;

use super::matrix::{priced_spectral_with, Direction, EndowmentMatrix};
use crate::distortion::DistortionSpec;
use crate::error::{domain, Result};

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

/// `count` directions in `S₊^{d-1}`: the coordinate axes followed by Halton
/// points pushed through the normal quantile, folded into the orthant and
/// normalized. For `d = 2` the grid is equally spaced in angle.
pub fn direction_grid(d: usize, count: usize) -> Result<Vec<Direction>> {
    if d == 0 {
        return domain("dimension must be positive");
    }
    if d == 1 {
        return Ok(vec![Direction::axis(1, 0)]);
    }
    if count < d {
        return domain(format!("direction grid in d = {d} needs at least {d} directions"));
    }
    if d == 2 {
        return (0..count)
            .map(|k| {
                let theta = if k + 1 == count {
                    FRAC_PI_2
                } else {
                    FRAC_PI_2 * k as f64 / (count - 1) as f64
                };
                Direction::from_angle(theta)
            })
            .collect();
    }
    if d > PRIMES.len() {
        return domain(format!("direction grids support d <= {}", PRIMES.len()));
    }
    let normal = Normal::standard();
    let mut dirs: Vec<Direction> = (0..d).map(|j| Direction::axis(d, j)).collect();
    let mut i = 1u64;
    while dirs.len() < count {
        let p: Vec<f64> = PRIMES[..d]
            .iter()
            .map(|&b| normal.inverse_cdf(radical_inverse(i, b)).abs())
            .collect();
        i += 1;
        if let Ok(dir) = Direction::normalized(p) {
            dirs.push(dir);
        }
    }
    Ok(dirs)
}

/// Typical angular spacing of `count` quasi-uniform points on `S₊^{d-1}`:
/// `(area / count)^{1/(d-1)}`.
pub fn grid_spacing(d: usize, count: usize) -> f64 {
    if d < 2 || count == 0 {
        return 0.0;
    }
    if d == 2 {
        return FRAC_PI_2 / (count.max(2) - 1) as f64;
    }
    let half = d as f64 / 2.0;
    let sphere = 2.0 * PI.powf(half) / gamma(half);
    let orthant = sphere / 2f64.powi(d as i32);
    (orthant / count as f64).powf(1.0 / (d as f64 - 1.0))
}

/// Priced spectral values on a finite direction grid.
#[derive(Debug, Clone, Serialize)]
pub struct SupportSample {
    pub directions: Vec<Direction>,
    pub values: Vec<f64>,
    pub resolution: usize,
    pub spacing: f64,
}

/// Evaluates `S_v(p'X)` on the default grid of `resolution` directions.
/// Directions are independent, so they are evaluated in parallel.
pub fn support_sample(
    x: &EndowmentMatrix,
    v: &DistortionSpec,
    resolution: usize,
) -> Result<SupportSample> {
    let directions = direction_grid(x.ncols(), resolution)?;
    let w = v.empirical_weights(x.nrows())?;
    let values = directions
        .par_iter()
        .map(|p| priced_spectral_with(x, p.as_slice(), &w))
        .collect();
    Ok(SupportSample {
        spacing: grid_spacing(x.ncols(), directions.len()),
        resolution: directions.len(),
        directions,
        values,
    })
}
