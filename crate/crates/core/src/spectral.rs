//! Univariate empirical distributions: quantiles, spectral values,
//! generalized Gini indices and dual stochastic dominance.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::distortion::DistortionSpec;
use crate::error::{domain, GiniError, Result};

/// An empirical distribution giving mass `1/n` to each value.
///
/// The sorted view is built once at construction; ties are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample1D {
    values: Vec<f64>,
    sorted: Vec<f64>,
}

impl Sample1D {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(GiniError::Data("sample must contain at least one value".into()));
        }
        if let Some(bad) = values.iter().find(|x| !x.is_finite()) {
            return Err(GiniError::Data(format!("sample contains non-finite value {bad}")));
        }
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { values, sorted })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Order statistics `x_(1) <= ... <= x_(n)`.
    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn mean(&self) -> f64 {
        self.sorted.iter().sum::<f64>() / self.len() as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.sorted.first().unwrap().abs().max(self.sorted.last().unwrap().abs())
    }

    pub fn quantile_function(&self) -> QuantileFunction<'_> {
        QuantileFunction { sorted: &self.sorted }
    }

    /// Left-continuous quantile `Q(t) = x_(⌈tn⌉)` for `0 < t <= 1`.
    pub fn quantile(&self, t: f64) -> Result<f64> {
        self.quantile_function().eval(t)
    }

    /// `S(X) = Σ x_(i) ω_i` with `ω` the empirical rank weights of `v`.
    pub fn spectral_value(&self, v: &DistortionSpec) -> f64 {
        let w = v
            .empirical_weights(self.len())
            .expect("sample is non-empty");
        w.dot_sorted(&self.sorted)
    }

    /// Generalized Gini index `μ - S` (absolute) or `(μ - S)/μ` (relative).
    pub fn generalized_gini(&self, v: &DistortionSpec, mode: GiniMode) -> Result<f64> {
        gini_from_parts(self.mean(), self.spectral_value(v), mode)
    }

    /// Absolute S-Gini index with aversion exponent `β >= 1`.
    pub fn s_gini(&self, beta: f64) -> Result<f64> {
        let v = DistortionSpec::s_gini(beta)?;
        self.generalized_gini(&v, GiniMode::Absolute)
    }

    /// `∫_0^t Q(s) ds`, accumulated from rectangle areas.
    pub fn lower_integral(&self, t: f64) -> f64 {
        let n = self.len();
        let nf = n as f64;
        let full = ((t * nf).floor() as usize).min(n);
        let mut acc: f64 = self.sorted[..full].iter().sum::<f64>() / nf;
        if full < n {
            let rest = t - full as f64 / nf;
            if rest > 0.0 {
                acc += rest * self.sorted[full];
            }
        }
        acc
    }
}

pub(crate) fn gini_from_parts(mean: f64, spectral: f64, mode: GiniMode) -> Result<f64> {
    let absolute = mean - spectral;
    match mode {
        GiniMode::Absolute => Ok(absolute),
        GiniMode::Relative => {
            if mean > 0.0 {
                Ok(absolute / mean)
            } else {
                domain(format!(
                    "relative index requires a positive mean, got mean {mean}"
                ))
            }
        }
    }
}

/// Piecewise-constant, left-continuous quantile function of a sample.
#[derive(Debug, Clone, Copy)]
pub struct QuantileFunction<'a> {
    sorted: &'a [f64],
}

impl QuantileFunction<'_> {
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0 && t <= 1.0) {
            return domain(format!("quantile level must lie in (0, 1], got {t}"));
        }
        let n = self.sorted.len();
        let k = ((t * n as f64).ceil() as usize).clamp(1, n);
        Ok(self.sorted[k - 1])
    }

    /// Jump points `i/n` paired with `Q(i/n) = x_(i)`.
    pub fn breakpoints(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let n = self.sorted.len() as f64;
        self.sorted
            .iter()
            .enumerate()
            .map(move |(i, &x)| ((i + 1) as f64 / n, x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GiniMode {
    Absolute,
    Relative,
}

/// Which dual stochastic dominance relation to test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SdRelation {
    FirstDegree,
    SecondConcave,
    SecondConvex,
    /// Donaldson–Weymark dominance over a finite set of exponents `β >= 1`.
    Dw(Vec<f64>),
}

impl SdRelation {
    pub fn parse(name: &str, betas: Option<Vec<f64>>) -> Result<Self> {
        match name.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "first" | "first_degree" | "fsd" => Ok(Self::FirstDegree),
            "concave" | "second_concave" | "ssd" => Ok(Self::SecondConcave),
            "convex" | "second_convex" => Ok(Self::SecondConvex),
            "dw" => match betas {
                Some(b) => Ok(Self::Dw(b)),
                None => domain("Donaldson-Weymark relation needs a beta grid"),
            },
            other => domain(format!("unknown dominance relation `{other}`")),
        }
    }
}

/// Outcome of a univariate dominance check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdVerdict {
    pub relation: SdRelation,
    pub holds: bool,
    /// Smallest slack `rhs - lhs` of the defining inequality.
    pub worst_margin: f64,
    /// Breakpoint `t` (or exponent `β` for DW) attaining the worst margin.
    pub witness: f64,
    pub tolerance: f64,
}

/// Merged jump points `{i/n} ∪ {j/m}` in increasing order, deduplicated exactly.
fn merged_breakpoints(n: usize, m: usize) -> Vec<f64> {
    let (n64, m64) = (n as u128, m as u128);
    let mut i = 1u128;
    let mut j = 1u128;
    let mut out = Vec::with_capacity(n + m);
    while i <= n64 || j <= m64 {
        // compare i/n with j/m as i*m vs j*n
        let pick = if i > n64 {
            Ordering::Greater
        } else if j > m64 {
            Ordering::Less
        } else {
            (i * m64).cmp(&(j * n64))
        };
        match pick {
            Ordering::Less => {
                out.push(i as f64 / n as f64);
                i += 1;
            }
            Ordering::Greater => {
                out.push(j as f64 / m as f64);
                j += 1;
            }
            Ordering::Equal => {
                out.push(i as f64 / n as f64);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Default decision tolerance: `1e-9 · max |value|` over both samples.
pub fn default_sd_tolerance(x: &Sample1D, y: &Sample1D) -> f64 {
    1e-9 * x.max_abs().max(y.max_abs())
}

/// Decides whether `x ⪯ y` in the requested relation, i.e. whether `y`
/// carries the weakly larger representative value for every distortion in
/// the corresponding class.
///
/// Both quantile functions are piecewise constant with jumps only at their own
/// grid points, so the checks at merged breakpoints are exact.
pub fn dual_sd_check(
    x: &Sample1D,
    y: &Sample1D,
    relation: &SdRelation,
    tolerance: Option<f64>,
) -> Result<SdVerdict> {
    let tolerance = tolerance.unwrap_or_else(|| default_sd_tolerance(x, y));
    let mut worst = (f64::INFINITY, f64::NAN);
    let mut track = |margin: f64, at: f64| {
        if margin < worst.0 {
            worst = (margin, at);
        }
    };
    match relation {
        SdRelation::FirstDegree => {
            let (qx, qy) = (x.quantile_function(), y.quantile_function());
            for t in merged_breakpoints(x.len(), y.len()) {
                track(qy.eval(t)? - qx.eval(t)?, t);
            }
        }
        SdRelation::SecondConcave => {
            for t in merged_breakpoints(x.len(), y.len()) {
                track(y.lower_integral(t) - x.lower_integral(t), t);
            }
        }
        SdRelation::SecondConvex => {
            let (mx, my) = (x.mean(), y.mean());
            track(my - mx, 0.0);
            for t in merged_breakpoints(x.len(), y.len()) {
                let ux = mx - x.lower_integral(t);
                let uy = my - y.lower_integral(t);
                track(uy - ux, t);
            }
        }
        SdRelation::Dw(betas) => {
            if betas.is_empty() {
                return domain("Donaldson-Weymark dominance needs a non-empty beta set");
            }
            for &beta in betas {
                let v = DistortionSpec::s_gini(beta)?;
                track(y.spectral_value(&v) - x.spectral_value(&v), beta);
            }
        }
    }
    let (worst_margin, witness) = worst;
    Ok(SdVerdict {
        relation: relation.clone(),
        holds: worst_margin >= -tolerance,
        worst_margin,
        witness,
        tolerance,
    })
}
