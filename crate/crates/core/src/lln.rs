//! Sampling experiment for the consistency of empirical MREs: for growing
//! sample sizes, the windowed Hausdorff distance between the sample MRE and
//! the MRE of a ten times larger reference sample should shrink.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::distortion::DistortionSpec;
use crate::error::{domain, GiniError, Result};
use crate::mre::{hausdorff_polyline, mre_2d_sampled, EndowmentMatrix, Window};

/// Built-in bivariate population models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// Independent uniforms on `[0, 1]²`.
    UniformSquare,
    /// Standard bivariate normal with correlation `rho`, clipped to `[-3, 3]²`.
    Gaussian { rho: f64 },
    /// Every draw is the same point.
    Point([f64; 2]),
}

impl Generator {
    pub fn draw(&self, n: usize, rng: &mut impl Rng) -> Result<EndowmentMatrix> {
        let rows = (0..n)
            .map(|_| match *self {
                Self::UniformSquare => vec![rng.random::<f64>(), rng.random::<f64>()],
                Self::Gaussian { rho } => {
                    let z1: f64 = rng.sample(StandardNormal);
                    let z2: f64 = rng.sample(StandardNormal);
                    let y = rho * z1 + (1.0 - rho * rho).sqrt() * z2;
                    vec![z1.clamp(-3.0, 3.0), y.clamp(-3.0, 3.0)]
                }
                Self::Point(p) => p.to_vec(),
            })
            .collect();
        EndowmentMatrix::from_rows(rows)
    }

    pub fn default_window(&self) -> Window {
        match *self {
            Self::UniformSquare => Window { x_min: 0.0, x_max: 1.0, y_min: 0.0, y_max: 1.0 },
            Self::Gaussian { .. } => Window { x_min: -3.0, x_max: 3.0, y_min: -3.0, y_max: 3.0 },
            Self::Point(p) => Window {
                x_min: p[0] - 1.0,
                x_max: p[0] + 1.0,
                y_min: p[1] - 1.0,
                y_max: p[1] + 1.0,
            },
        }
    }
}

impl FromStr for Generator {
    type Err = GiniError;

    /// `uniform2`, `gaussian[:RHO]` or `point[:X,Y]`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        match (name.trim().to_ascii_lowercase().as_str(), arg) {
            ("uniform2" | "uniform" | "uniform-square", None) => Ok(Self::UniformSquare),
            ("gaussian" | "normal", None) => Ok(Self::Gaussian { rho: 0.5 }),
            ("gaussian" | "normal", Some(a)) => match a.trim().parse::<f64>() {
                Ok(rho) if rho.abs() < 1.0 => Ok(Self::Gaussian { rho }),
                _ => domain(format!("gaussian correlation must lie in (-1, 1), got `{a}`")),
            },
            ("point", None) => Ok(Self::Point([0.5, 0.5])),
            ("point", Some(a)) => {
                let coords: Vec<f64> = a
                    .split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|e| GiniError::Domain(format!("point generator: {e}")))?;
                match coords.as_slice() {
                    [x, y] => Ok(Self::Point([*x, *y])),
                    _ => domain("point generator needs two coordinates"),
                }
            }
            _ => domain(format!("unknown generator `{s}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LlnConfig {
    pub generator: Generator,
    /// Strictly increasing sample sizes.
    pub n_grid: Vec<usize>,
    pub repetitions: usize,
    pub seed: u64,
    pub distortion: DistortionSpec,
    /// Defaults to the generator's window.
    pub window: Option<Window>,
    /// Angle-grid size of the sampled MRE construction.
    pub directions: usize,
}

impl LlnConfig {
    pub fn new(generator: Generator, n_grid: Vec<usize>, distortion: DistortionSpec) -> Self {
        Self {
            generator,
            n_grid,
            repetitions: 20,
            seed: 1,
            distortion,
            window: None,
            directions: 512,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LlnRow {
    pub n: usize,
    pub median_distance: f64,
    pub min_distance: f64,
    pub max_distance: f64,
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn median(sorted: &[f64]) -> f64 {
    let k = sorted.len();
    if k % 2 == 1 {
        sorted[k / 2]
    } else {
        0.5 * (sorted[k / 2 - 1] + sorted[k / 2])
    }
}

/// Runs the experiment. Every repetition draws from its own ChaCha stream, so
/// results do not depend on how the repetitions are scheduled.
pub fn run_lln(cfg: &LlnConfig) -> Result<Vec<LlnRow>> {
    if cfg.n_grid.is_empty() || cfg.n_grid[0] == 0 {
        return domain("n grid must be non-empty with positive sizes");
    }
    if cfg.n_grid.windows(2).any(|w| w[1] <= w[0]) {
        return domain("n grid must be strictly increasing");
    }
    if cfg.repetitions == 0 {
        return domain("at least one repetition is required");
    }
    let window = cfg.window.unwrap_or_else(|| cfg.generator.default_window());
    let n_ref = 10 * cfg.n_grid[cfg.n_grid.len() - 1];
    let reference = cfg.generator.draw(n_ref, &mut stream_rng(cfg.seed, 0))?;
    let reference = mre_2d_sampled(&reference, &cfg.distortion, cfg.directions)?;

    let reps = cfg.repetitions;
    let jobs: Vec<(usize, usize)> = (0..cfg.n_grid.len())
        .flat_map(|k| (0..reps).map(move |r| (k, r)))
        .collect();
    let distances = jobs
        .par_iter()
        .map(|&(k, r)| {
            let mut rng = stream_rng(cfg.seed, 1 + (k * reps + r) as u64);
            let x = cfg.generator.draw(cfg.n_grid[k], &mut rng)?;
            let poly = mre_2d_sampled(&x, &cfg.distortion, cfg.directions)?;
            hausdorff_polyline(&poly, &reference, &window)
        })
        .collect::<Result<Vec<f64>>>()?;

    Ok(cfg
        .n_grid
        .iter()
        .enumerate()
        .map(|(k, &n)| {
            let mut d = distances[k * reps..(k + 1) * reps].to_vec();
            d.sort_unstable_by(f64::total_cmp);
            LlnRow {
                n,
                median_distance: median(&d),
                min_distance: d[0],
                max_distance: d[d.len() - 1],
            }
        })
        .collect())
}

pub fn lln_to_csv(rows: &[LlnRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| GiniError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
