//! Uniform Gini dominance: `A` dominates `B` under `v` when
//! `S_v(p'A) >= S_v(p'B)` for every tested price direction `p`, i.e. the
//! MRE of `A` lies weakly above that of `B` and `A` is the less unequal one.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;
use serde::Serialize;

use super::directions::{direction_grid, grid_spacing};
use super::matrix::{priced_spectral_with, Direction, EndowmentMatrix};
use super::polyline::{critical_angles_2d, default_tolerance, require_concave};
use super::DEFAULT_DIRECTIONS_3D;
use crate::distortion::{DistortionFamily, DistortionSpec};
use crate::error::{domain, GiniError, Result};

/// The set `P` of price directions over which dominance is required.
#[derive(Debug, Clone, PartialEq)]
pub enum DirectionSet {
    /// The whole nonnegative unit sphere.
    All,
    /// `{(cos θ, sin θ) : lo <= θ <= hi}` in radians (2-D only).
    AngleInterval { lo: f64, hi: f64 },
    /// An explicit finite set of directions.
    Finite(Vec<Direction>),
}

impl DirectionSet {
    pub fn degrees(lo: f64, hi: f64) -> Result<Self> {
        let set = Self::AngleInterval { lo: lo.to_radians(), hi: hi.to_radians() };
        set.check()?;
        Ok(set)
    }

    fn check(&self) -> Result<()> {
        match self {
            Self::All => Ok(()),
            Self::AngleInterval { lo, hi } => {
                let slack = 1e-12;
                if !(lo.is_finite() && hi.is_finite()) || lo > hi {
                    domain("direction interval is empty")
                } else if *lo < -slack || *hi > FRAC_PI_2 + slack {
                    domain("direction interval must lie within [0°, 90°]")
                } else {
                    Ok(())
                }
            }
            Self::Finite(dirs) if dirs.is_empty() => domain("direction set is empty"),
            Self::Finite(_) => Ok(()),
        }
    }

    fn describe(&self) -> Option<String> {
        match self {
            Self::All => None,
            Self::AngleInterval { lo, hi } => {
                Some(format!("angles {}°..{}°", lo.to_degrees(), hi.to_degrees()))
            }
            Self::Finite(d) => Some(format!("{} explicit directions", d.len())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DominanceOptions {
    pub restrict: DirectionSet,
    /// Overrides the default `1e-9 · (1 + max |entry|)`.
    pub tolerance: Option<f64>,
    /// Grid size for `d >= 3`.
    pub resolution: usize,
}

impl Default for DominanceOptions {
    fn default() -> Self {
        Self { restrict: DirectionSet::All, tolerance: None, resolution: DEFAULT_DIRECTIONS_3D }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DominanceVerdict {
    pub holds: bool,
    /// `true` for the 2-D critical-angle procedure over an angle interval.
    pub exact: bool,
    /// Minimum of `S_v(p'A) - S_v(p'B)` over tested directions.
    pub worst_margin: f64,
    pub witness: Direction,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_angle_deg: Option<f64>,
    pub tolerance: f64,
    pub restricted_to: Option<String>,
    pub directions_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_spacing: Option<f64>,
}

/// Does `A` dominate `B` under the concave distortion `v`?
pub fn dominates(
    a: &EndowmentMatrix,
    b: &EndowmentMatrix,
    v: &DistortionSpec,
    opts: &DominanceOptions,
) -> Result<DominanceVerdict> {
    compare_representatives(a, v, b, v, opts)
}

/// Compares `S_{va}(p'A)` with `S_{vb}(p'B)` over the direction set; with
/// `A = B` this orders the MREs of one distribution across distortions.
///
/// In 2-D with an angle-interval restriction the check is exact: let `Θ` be
/// the critical angles of both matrices together with the interval endpoints.
/// On each arc between consecutive `Θ` angles both rankings are fixed, so each
/// spectral value is linear in `p` and `g(θ) = c₁ cos θ + c₂ sin θ`. Such a
/// sinusoid has consecutive zeros `π` apart, hence it cannot dip below zero
/// inside an arc shorter than `π` while being nonnegative at both ends. All
/// arcs here are at most `π/2` long, so testing `g` on `Θ` decides the sign on
/// the whole interval. The tolerance argument is the same with `g + τ`
/// replaced by its minimum over the arc endpoints.
pub fn compare_representatives(
    a: &EndowmentMatrix,
    va: &DistortionSpec,
    b: &EndowmentMatrix,
    vb: &DistortionSpec,
    opts: &DominanceOptions,
) -> Result<DominanceVerdict> {
    let d = a.ncols();
    if b.ncols() != d {
        return Err(GiniError::DimensionMismatch { expected: d, got: b.ncols() });
    }
    require_concave(va)?;
    require_concave(vb)?;
    opts.restrict.check()?;
    let tolerance = opts
        .tolerance
        .unwrap_or_else(|| default_tolerance(a.max_abs().max(b.max_abs())));

    let (directions, exact, spacing) = match (&opts.restrict, d) {
        (DirectionSet::Finite(dirs), _) => {
            if let Some(bad) = dirs.iter().find(|p| p.dim() != d) {
                return Err(GiniError::DimensionMismatch { expected: d, got: bad.dim() });
            }
            (dirs.clone(), false, None)
        }
        (_, 1) => (vec![Direction::axis(1, 0)], true, None),
        (DirectionSet::All, 2) => (critical_directions(a, b, 0.0, FRAC_PI_2)?, true, None),
        (DirectionSet::AngleInterval { lo, hi }, 2) => (
            critical_directions(a, b, lo.max(0.0), hi.min(FRAC_PI_2))?,
            true,
            None,
        ),
        (DirectionSet::All, _) => {
            let grid = direction_grid(d, opts.resolution)?;
            let h = grid_spacing(d, grid.len());
            (grid, false, Some(h))
        }
        (DirectionSet::AngleInterval { .. }, _) => {
            return domain("angle-interval restrictions are only available for d = 2")
        }
    };

    let wa = va.empirical_weights(a.nrows())?;
    let wb = vb.empirical_weights(b.nrows())?;
    let margins: Vec<f64> = directions
        .par_iter()
        .map(|p| {
            priced_spectral_with(a, p.as_slice(), &wa) - priced_spectral_with(b, p.as_slice(), &wb)
        })
        .collect();
    let (worst_idx, worst_margin) = margins
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (i, m)| if m < best.1 { (i, m) } else { best });
    let witness = directions[worst_idx].clone();
    Ok(DominanceVerdict {
        holds: worst_margin >= -tolerance,
        exact,
        worst_margin,
        witness_angle_deg: witness.angle().map(f64::to_degrees),
        witness,
        tolerance,
        restricted_to: opts.restrict.describe(),
        directions_tested: directions.len(),
        grid_spacing: spacing,
    })
}

fn critical_directions(
    a: &EndowmentMatrix,
    b: &EndowmentMatrix,
    lo: f64,
    hi: f64,
) -> Result<Vec<Direction>> {
    let mut angles: Vec<f64> = critical_angles_2d(a)?
        .into_iter()
        .chain(critical_angles_2d(b)?)
        .filter(|t| *t > lo && *t < hi)
        .chain([lo, hi])
        .collect();
    angles.sort_unstable_by(f64::total_cmp);
    angles.dedup();
    angles.into_iter().map(Direction::from_angle).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaVerdict {
    pub alpha: f64,
    pub distortion: String,
    pub verdict: DominanceVerdict,
}

/// Dominance that is uniform in both prices and the family parameter.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyVerdict {
    pub family: String,
    pub per_alpha: Vec<AlphaVerdict>,
    pub all_hold: bool,
    /// Grid member with the smallest margin.
    pub worst_alpha: f64,
}

/// Runs [`dominates`] for every `α` of a family grid.
pub fn dominates_family(
    a: &EndowmentMatrix,
    b: &EndowmentMatrix,
    family: DistortionFamily,
    alphas: &[f64],
    opts: &DominanceOptions,
) -> Result<FamilyVerdict> {
    if alphas.is_empty() {
        return domain("alpha grid is empty");
    }
    let per_alpha = alphas
        .iter()
        .map(|&alpha| {
            let v = family.member(alpha)?;
            Ok(AlphaVerdict { alpha, distortion: v.to_string(), verdict: dominates(a, b, &v, opts)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_hold = per_alpha.iter().all(|r| r.verdict.holds);
    let worst_alpha = per_alpha
        .iter()
        .min_by(|x, y| x.verdict.worst_margin.total_cmp(&y.verdict.worst_margin))
        .map(|r| r.alpha)
        .unwrap();
    Ok(FamilyVerdict { family: family.name().to_string(), per_alpha, all_hold, worst_alpha })
}
