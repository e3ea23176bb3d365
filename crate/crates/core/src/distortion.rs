//! Weight-generating (distortion) functions and their parametric families.
//!
//! A distortion `v` maps `[0, 1]` onto itself, is nondecreasing and satisfies
//! `v(0) = 0`, `v(1) = 1`. Concave distortions put more weight on the lower
//! ranks of a distribution and thereby express aversion to inequality.
//!
//! Specs are written in a compact text syntax:
//!
//! | syntax        | function                         |
//! |---------------|----------------------------------|
//! | `identity`    | `v(t) = t`                       |
//! | `step:A`      | `0` if `t < A`, else `1`         |
//! | `zonoid:A`    | `min(t / A, 1)`                  |
//! | `dw:A`        | `1 - (1 - t)^(1/A)`              |
//! | path to CSV   | piecewise linear through `(t, v)` breakpoints |
//!
//! `A` may be a decimal or a fraction such as `3/14`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{domain, GiniError, Result};

const BREAKPOINT_TOL: f64 = 1e-12;

/// A distortion function from one of the supported families.
///
/// Values are immutable; all methods are pure.
#[derive(Debug, Clone, PartialEq)]
pub enum DistortionSpec {
    /// `v(t) = t`; the spectral value is the mean.
    Identity,
    /// `s_α`: jumps from 0 to 1 at `α`; the spectral value is the `α`-quantile.
    Step { alpha: f64 },
    /// Dual of [`DistortionSpec::Step`]: `0` for `t <= 1 - α`, `1` above.
    DualStep { alpha: f64 },
    /// `r_α(t) = min(t/α, 1)`; the spectral value is the mean of the lower `α`-part.
    Zonoid { alpha: f64 },
    /// `1 - (1 - t)^β` with aversion `β = 1/α` (the S-Gini family).
    DonaldsonWeymark { alpha: f64 },
    /// Dual of [`DistortionSpec::DonaldsonWeymark`]: `t^(1/α)`.
    DualDonaldsonWeymark { alpha: f64 },
    /// Linear interpolation between `(t, v(t))` breakpoints that start at
    /// `(0, 0)` and end at `(1, 1)`.
    PiecewiseLinear(Vec<(f64, f64)>),
}

fn check_alpha(alpha: f64) -> Result<f64> {
    if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
        Ok(alpha)
    } else {
        domain(format!("parameter alpha must lie in (0, 1], got {alpha}"))
    }
}

impl DistortionSpec {
    pub fn step(alpha: f64) -> Result<Self> {
        Ok(Self::Step { alpha: check_alpha(alpha)? })
    }

    pub fn zonoid(alpha: f64) -> Result<Self> {
        Ok(Self::Zonoid { alpha: check_alpha(alpha)? })
    }

    /// Donaldson–Weymark distortion with parameter `alpha = 1/β`.
    pub fn donaldson_weymark(alpha: f64) -> Result<Self> {
        Ok(Self::DonaldsonWeymark { alpha: check_alpha(alpha)? })
    }

    /// Donaldson–Weymark distortion from the aversion exponent `β >= 1`.
    pub fn s_gini(beta: f64) -> Result<Self> {
        if !(beta.is_finite() && beta >= 1.0) {
            return domain(format!("S-Gini exponent beta must be >= 1, got {beta}"));
        }
        Self::donaldson_weymark(1.0 / beta)
    }

    /// Builds a validated piecewise-linear distortion.
    pub fn piecewise_linear(points: Vec<(f64, f64)>) -> Result<Self> {
        let invalid = |reason: &str| -> Result<Self> {
            Err(GiniError::InvalidSpec {
                spec: "piecewise-linear".into(),
                reason: reason.into(),
            })
        };
        if points.len() < 2 {
            return invalid("at least two breakpoints are required");
        }
        if points.iter().any(|&(t, v)| !t.is_finite() || !v.is_finite()) {
            return invalid("breakpoints must be finite");
        }
        let (t0, v0) = points[0];
        let (t1, v1) = points[points.len() - 1];
        if t0.abs() > BREAKPOINT_TOL || v0.abs() > BREAKPOINT_TOL {
            return invalid("first breakpoint must be (0, 0)");
        }
        if (t1 - 1.0).abs() > BREAKPOINT_TOL || (v1 - 1.0).abs() > BREAKPOINT_TOL {
            return invalid("last breakpoint must be (1, 1)");
        }
        for w in points.windows(2) {
            if w[1].0 <= w[0].0 {
                return invalid("breakpoint abscissae must be strictly increasing");
            }
            if w[1].1 < w[0].1 {
                return invalid("breakpoint values must be nondecreasing");
            }
        }
        let mut points = points;
        let last = points.len() - 1;
        points[0] = (0.0, 0.0);
        points[last] = (1.0, 1.0);
        Ok(Self::PiecewiseLinear(points))
    }

    /// Reads a two-column `t,v` breakpoint CSV (an optional header row is skipped).
    pub fn from_breakpoints_csv(path: impl AsRef<Path>) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_path(path.as_ref())?;
        let mut points = Vec::new();
        for (row, record) in reader.records().enumerate() {
            let record = record?;
            if record.len() != 2 {
                return Err(GiniError::Data(format!(
                    "breakpoint row {} has {} columns, expected 2",
                    row + 1,
                    record.len()
                )));
            }
            let parsed: std::result::Result<Vec<f64>, _> =
                record.iter().map(str::parse::<f64>).collect();
            match parsed {
                Ok(v) => points.push((v[0], v[1])),
                Err(_) if row == 0 => continue,
                Err(e) => {
                    return Err(GiniError::Data(format!("breakpoint row {}: {e}", row + 1)))
                }
            }
        }
        Self::piecewise_linear(points)
    }

    /// Parses a named spec, falling back to a breakpoint CSV path.
    pub fn parse(spec: &str) -> Result<Self> {
        match spec.parse() {
            Ok(v) => Ok(v),
            Err(err) => {
                let path = Path::new(spec.trim());
                if path.is_file() {
                    Self::from_breakpoints_csv(path)
                } else {
                    Err(err)
                }
            }
        }
    }

    /// The family parameter, when the spec belongs to a parametric family.
    pub fn alpha(&self) -> Option<f64> {
        match *self {
            Self::Step { alpha }
            | Self::DualStep { alpha }
            | Self::Zonoid { alpha }
            | Self::DonaldsonWeymark { alpha }
            | Self::DualDonaldsonWeymark { alpha } => Some(alpha),
            Self::Identity | Self::PiecewiseLinear(_) => None,
        }
    }

    /// Aversion exponent `β = 1/α` of the Donaldson–Weymark family.
    pub fn beta(&self) -> Option<f64> {
        match *self {
            Self::DonaldsonWeymark { alpha } | Self::DualDonaldsonWeymark { alpha } => {
                Some(1.0 / alpha)
            }
            _ => None,
        }
    }

    /// Evaluates `v(t)`.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&t) {
            return domain(format!("distortion argument must lie in [0, 1], got {t}"));
        }
        Ok(self.eval_unchecked(t))
    }

    pub(crate) fn eval_unchecked(&self, t: f64) -> f64 {
        match self {
            Self::Identity => t,
            Self::Step { alpha } => {
                if t < *alpha {
                    0.0
                } else {
                    1.0
                }
            }
            Self::DualStep { alpha } => {
                if t > 1.0 - alpha {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Zonoid { alpha } => (t / alpha).min(1.0),
            Self::DonaldsonWeymark { alpha } => {
                if *alpha == 1.0 {
                    t
                } else {
                    1.0 - (1.0 - t).powf(1.0 / alpha)
                }
            }
            Self::DualDonaldsonWeymark { alpha } => {
                if *alpha == 1.0 {
                    t
                } else {
                    t.powf(1.0 / alpha)
                }
            }
            Self::PiecewiseLinear(points) => interpolate(points, t),
        }
    }

    /// The dual distortion `ṽ(t) = 1 - v(1 - t)`.
    pub fn dual(&self) -> Self {
        match self {
            Self::Identity => Self::Identity,
            Self::Step { alpha } => Self::DualStep { alpha: *alpha },
            Self::DualStep { alpha } => Self::Step { alpha: *alpha },
            // ṽ(t) = max(0, (t - 1 + α) / α)
            Self::Zonoid { alpha } => {
                if *alpha == 1.0 {
                    Self::PiecewiseLinear(vec![(0.0, 0.0), (1.0, 1.0)])
                } else {
                    Self::PiecewiseLinear(vec![(0.0, 0.0), (1.0 - alpha, 0.0), (1.0, 1.0)])
                }
            }
            Self::DonaldsonWeymark { alpha } => Self::DualDonaldsonWeymark { alpha: *alpha },
            Self::DualDonaldsonWeymark { alpha } => Self::DonaldsonWeymark { alpha: *alpha },
            Self::PiecewiseLinear(points) => Self::PiecewiseLinear(
                points.iter().rev().map(|&(t, v)| (1.0 - t, 1.0 - v)).collect(),
            ),
        }
    }

    /// Whether `v` is concave on `[0, 1]`.
    pub fn is_concave(&self) -> bool {
        match self {
            Self::Identity | Self::Zonoid { .. } | Self::DonaldsonWeymark { .. } => true,
            Self::Step { .. } | Self::DualStep { .. } => false,
            Self::DualDonaldsonWeymark { alpha } => *alpha == 1.0,
            Self::PiecewiseLinear(points) => {
                let slopes = segment_slopes(points);
                slopes.windows(2).all(|w| w[1] <= w[0] + 1e-12)
            }
        }
    }

    /// Whether `v` is convex on `[0, 1]`.
    pub fn is_convex(&self) -> bool {
        match self {
            Self::Identity | Self::DualDonaldsonWeymark { .. } => true,
            Self::Step { .. } | Self::DualStep { .. } => false,
            Self::Zonoid { alpha } | Self::DonaldsonWeymark { alpha } => *alpha == 1.0,
            Self::PiecewiseLinear(points) => {
                let slopes = segment_slopes(points);
                slopes.windows(2).all(|w| w[1] + 1e-12 >= w[0])
            }
        }
    }

    /// `v(k/n)`, using the closed form with cancellation-free complements
    /// where the family allows it.
    fn at_fraction(&self, k: usize, n: usize) -> f64 {
        let t = k as f64 / n as f64;
        match self {
            Self::DonaldsonWeymark { alpha } if *alpha != 1.0 => {
                1.0 - ((n - k) as f64 / n as f64).powf(1.0 / alpha)
            }
            _ => self.eval_unchecked(t),
        }
    }

    /// Rank weights `ω_i = v(i/n) - v((i-1)/n)` for the ordered data `x_(1) <= ... <= x_(n)`.
    pub fn empirical_weights(&self, n: usize) -> Result<RankWeights> {
        if n == 0 {
            return domain("population size n must be at least 1");
        }
        let weights = match self {
            // ((n-i+1)/n)^β - ((n-i)/n)^β, no subtraction from 1
            Self::DonaldsonWeymark { alpha } if *alpha != 1.0 => {
                let beta = 1.0 / alpha;
                let nf = n as f64;
                (1..=n)
                    .map(|i| {
                        ((n - i + 1) as f64 / nf).powf(beta) - ((n - i) as f64 / nf).powf(beta)
                    })
                    .collect()
            }
            _ => (1..=n)
                .map(|i| self.at_fraction(i, n) - self.at_fraction(i - 1, n))
                .collect(),
        };
        Ok(RankWeights { weights })
    }
}

fn segment_slopes(points: &[(f64, f64)]) -> Vec<f64> {
    points
        .windows(2)
        .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
        .collect()
}

fn interpolate(points: &[(f64, f64)], t: f64) -> f64 {
    let idx = points.partition_point(|&(x, _)| x <= t);
    if idx == 0 {
        return points[0].1;
    }
    if idx >= points.len() {
        return points[points.len() - 1].1;
    }
    let (t0, v0) = points[idx - 1];
    let (t1, v1) = points[idx];
    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
}

/// Parses `0.25`, `.5` or a fraction such as `3/14`.
pub fn parse_unit_number(s: &str) -> Option<f64> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: f64 = num.trim().parse().ok()?;
        let den: f64 = den.trim().parse().ok()?;
        (den != 0.0).then(|| num / den)
    } else {
        s.parse().ok()
    }
}

impl FromStr for DistortionSpec {
    type Err = GiniError;

    fn from_str(s: &str) -> Result<Self> {
        let spec = s.trim();
        let bad = |reason: String| GiniError::InvalidSpec { spec: spec.to_string(), reason };
        if spec.eq_ignore_ascii_case("identity") || spec.eq_ignore_ascii_case("id") {
            return Ok(Self::Identity);
        }
        if let Some(body) = spec.strip_prefix("piecewise[").and_then(|r| r.strip_suffix(']')) {
            let points = body
                .split(';')
                .map(|pair| {
                    let (t, v) = pair.split_once(',')?;
                    Some((t.trim().parse().ok()?, v.trim().parse().ok()?))
                })
                .collect::<Option<Vec<(f64, f64)>>>()
                .ok_or_else(|| bad("malformed breakpoint list".into()))?;
            return Self::piecewise_linear(points).map_err(|e| bad(e.to_string()));
        }
        let (name, arg) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected identity, step:A, zonoid:A or dw:A".into()))?;
        let alpha = parse_unit_number(arg).ok_or_else(|| bad(format!("cannot parse `{arg}`")))?;
        let built = match name.trim().to_ascii_lowercase().as_str() {
            "step" | "s" => Self::step(alpha),
            "zonoid" | "r" | "zon" => Self::zonoid(alpha),
            "dw" => Self::donaldson_weymark(alpha),
            "dual-step" => check_alpha(alpha).map(|alpha| Self::DualStep { alpha }),
            "dual-dw" => check_alpha(alpha).map(|alpha| Self::DualDonaldsonWeymark { alpha }),
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        built.map_err(|e| bad(e.to_string()))
    }
}

impl fmt::Display for DistortionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Identity => write!(f, "identity"),
            Self::Step { alpha } => write!(f, "step:{alpha}"),
            Self::DualStep { alpha } => write!(f, "dual-step:{alpha}"),
            Self::Zonoid { alpha } => write!(f, "zonoid:{alpha}"),
            Self::DonaldsonWeymark { alpha } => write!(f, "dw:{alpha}"),
            Self::DualDonaldsonWeymark { alpha } => write!(f, "dual-dw:{alpha}"),
            Self::PiecewiseLinear(points) => {
                write!(f, "piecewise[")?;
                for (i, (t, v)) in points.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{t},{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Empirical rank weights `ω_1, ..., ω_n`; they sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct RankWeights {
    weights: Vec<f64>,
}

impl RankWeights {
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn is_nonincreasing(&self, tol: f64) -> bool {
        self.weights.windows(2).all(|w| w[1] <= w[0] + tol)
    }

    /// `Σ ω_i x_(i)` for already sorted values.
    pub fn dot_sorted(&self, sorted: &[f64]) -> f64 {
        debug_assert_eq!(sorted.len(), self.weights.len());
        self.weights.iter().zip(sorted).map(|(w, x)| w * x).sum()
    }
}

/// One-parameter families `{r_α}` indexed by `α ∈ (0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistortionFamily {
    /// Every member is the identity.
    Identity,
    Step,
    Zonoid,
    DonaldsonWeymark,
}

impl DistortionFamily {
    pub fn member(self, alpha: f64) -> Result<DistortionSpec> {
        match self {
            Self::Identity => check_alpha(alpha).map(|_| DistortionSpec::Identity),
            Self::Step => DistortionSpec::step(alpha),
            Self::Zonoid => DistortionSpec::zonoid(alpha),
            Self::DonaldsonWeymark => DistortionSpec::donaldson_weymark(alpha),
        }
    }

    /// The family a spec belongs to, if any.
    pub fn of(spec: &DistortionSpec) -> Option<Self> {
        match spec {
            DistortionSpec::Identity => Some(Self::Identity),
            DistortionSpec::Step { .. } => Some(Self::Step),
            DistortionSpec::Zonoid { .. } => Some(Self::Zonoid),
            DistortionSpec::DonaldsonWeymark { .. } => Some(Self::DonaldsonWeymark),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Identity => "identity",
            Self::Step => "step",
            Self::Zonoid => "zonoid",
            Self::DonaldsonWeymark => "dw",
        }
    }
}

impl FromStr for DistortionFamily {
    type Err = GiniError;

    fn from_str(s: &str) -> Result<Self> {
        let name = s.trim().split(':').next().unwrap_or("").to_ascii_lowercase();
        match name.as_str() {
            "identity" | "id" => Ok(Self::Identity),
            "step" | "s" => Ok(Self::Step),
            "zonoid" | "zon" | "r" => Ok(Self::Zonoid),
            "dw" => Ok(Self::DonaldsonWeymark),
            _ => Err(GiniError::InvalidSpec {
                spec: s.to_string(),
                reason: "unknown distortion family".into(),
            }),
        }
    }
}

/// Checks that the family is pointwise ordered in `α` on the given grids:
/// `α ↦ r_α(t)` is nonincreasing at every grid point `t`, i.e. the weight on
/// the lower ranks grows with the aversion `1/α`. Under this ordering the
/// spectral value `S_{r_α}` is nondecreasing in `α` for every distribution.
pub fn family_is_monotone_in_alpha(
    family: DistortionFamily,
    t_grid: &[f64],
    alpha_grid: &[f64],
) -> Result<bool> {
    if alpha_grid.windows(2).any(|w| w[1] <= w[0]) {
        return domain("alpha grid must be strictly increasing");
    }
    let members = alpha_grid
        .iter()
        .map(|&a| family.member(a))
        .collect::<Result<Vec<_>>>()?;
    for &t in t_grid {
        if !(0.0..=1.0).contains(&t) {
            return domain(format!("t grid point {t} outside [0, 1]"));
        }
        for pair in members.windows(2) {
            if pair[1].eval_unchecked(t) > pair[0].eval_unchecked(t) + 1e-15 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
