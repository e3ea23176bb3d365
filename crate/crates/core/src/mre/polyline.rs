//! Exact planar representative endowments.
//!
//! For a concave distortion the rank weights are nonincreasing, so by the
//! rearrangement inequality `S_v(p'X) = min_σ p' Σ_i ω_i x_σ(i)`. The minimum
//! is attained by the ranking of the priced endowments `p'x_i`, which stays
//! constant on each cone of directions between consecutive critical angles.
//! Each cone therefore contributes one supporting point, and the lower-left
//! convex chain of those points is the MRE.

use std::f64::consts::FRAC_PI_2;

use rayon::prelude::*;

use super::matrix::{priced_spectral, Direction, EndowmentMatrix};
use crate::distortion::{DistortionSpec, RankWeights};
use crate::error::{domain, GiniError, Result};

const ANGLE_DEDUP: f64 = 1e-12;
const MERGE_REL: f64 = 1e-12;

pub(crate) fn require_2d(x: &EndowmentMatrix) -> Result<()> {
    if x.ncols() != 2 {
        Err(GiniError::UnsupportedDimension(x.ncols()))
    } else {
        Ok(())
    }
}

pub(crate) fn require_concave(v: &DistortionSpec) -> Result<()> {
    if v.is_concave() {
        Ok(())
    } else {
        domain(format!(
            "distortion {v} is not concave; representative endowments and uniform Gini \
             dominance require a concave distortion with bounded derivative"
        ))
    }
}

/// Angles in `[0, π/2]` at which the ascending order of `p_θ'x_i` can change,
/// always including both endpoints.
pub fn critical_angles_2d(x: &EndowmentMatrix) -> Result<Vec<f64>> {
    require_2d(x)?;
    let n = x.nrows();
    let mut angles = vec![0.0, FRAC_PI_2];
    for i in 0..n {
        let a = x.row(i);
        for j in i + 1..n {
            let b = x.row(j);
            let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
            // cos θ dx + sin θ dy = 0 has a root inside (0, π/2) iff the signs differ
            if (dx > 0.0 && dy < 0.0) || (dx < 0.0 && dy > 0.0) {
                angles.push(dx.abs().atan2(dy.abs()));
            }
        }
    }
    angles.sort_unstable_by(f64::total_cmp);
    angles.dedup_by(|b, a| *b - *a <= ANGLE_DEDUP);
    if *angles.last().unwrap() < FRAC_PI_2 {
        // a root within 1e-12 of π/2 may have absorbed the endpoint
        *angles.last_mut().unwrap() = FRAC_PI_2;
    }
    Ok(angles)
}

/// Lower-left boundary of a planar convex representative endowment: a convex
/// vertex chain with a vertical ray upward from the first vertex and a
/// horizontal ray rightward from the last.
#[derive(Debug, Clone, PartialEq)]
pub struct MrePolyline {
    vertices: Vec<[f64; 2]>,
    distortion: DistortionSpec,
}

impl MrePolyline {
    /// Builds a polyline, checking the chain invariants (x strictly increasing,
    /// y strictly decreasing, convex).
    pub fn new(vertices: Vec<[f64; 2]>, distortion: DistortionSpec) -> Result<Self> {
        validate_chain(&vertices)?;
        Ok(Self { vertices, distortion })
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn distortion(&self) -> &DistortionSpec {
        &self.distortion
    }

    /// `min p'z` over the polyline and its rays, for `p >= 0`.
    pub fn support(&self, p: &Direction) -> f64 {
        let p = p.as_slice();
        self.vertices
            .iter()
            .map(|z| p[0] * z[0] + p[1] * z[1])
            .fold(f64::INFINITY, f64::min)
    }

    /// Whether `z` lies in the upper set bounded by this polyline.
    pub fn encloses(&self, z: [f64; 2], tol: f64) -> bool {
        let first = self.vertices[0];
        let last = self.vertices[self.vertices.len() - 1];
        if z[0] < first[0] - tol || z[1] < last[1] - tol {
            return false;
        }
        self.vertices.windows(2).all(|e| {
            let normal = [e[0][1] - e[1][1], e[1][0] - e[0][0]];
            let len = normal[0].hypot(normal[1]);
            let lhs = normal[0] * z[0] + normal[1] * z[1];
            let rhs = normal[0] * e[0][0] + normal[1] * e[0][1];
            lhs >= rhs - tol * len
        })
    }

    /// Unit outward normals of the bounded edges, plus both axes.
    pub fn facet_directions(&self) -> Vec<Direction> {
        let mut dirs = vec![Direction::axis(2, 0), Direction::axis(2, 1)];
        for e in self.vertices.windows(2) {
            let normal = vec![e[0][1] - e[1][1], e[1][0] - e[0][0]];
            if let Ok(p) = Direction::normalized(normal) {
                dirs.push(p);
            }
        }
        dirs
    }

    /// Vertex-wise image under `z ↦ diag(scale) z + shift` (scale > 0).
    pub fn map_diagonal(&self, scale: [f64; 2], shift: [f64; 2]) -> Result<Self> {
        let vertices = self
            .vertices
            .iter()
            .map(|z| [scale[0] * z[0] + shift[0], scale[1] * z[1] + shift[1]])
            .collect();
        Self::new(vertices, self.distortion.clone())
    }
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn validate_chain(vertices: &[[f64; 2]]) -> Result<()> {
    if vertices.is_empty() {
        return Err(GiniError::Data("polyline needs at least one vertex".into()));
    }
    if vertices.iter().flatten().any(|c| !c.is_finite()) {
        return Err(GiniError::Data("polyline vertices must be finite".into()));
    }
    for (k, e) in vertices.windows(2).enumerate() {
        if !(e[1][0] > e[0][0] && e[1][1] < e[0][1]) {
            return Err(GiniError::Data(format!(
                "polyline is not Pareto-monotone at vertex {}",
                k + 1
            )));
        }
    }
    for (k, t) in vertices.windows(3).enumerate() {
        let e1 = [t[1][0] - t[0][0], t[1][1] - t[0][1]];
        let e2 = [t[2][0] - t[1][0], t[2][1] - t[1][1]];
        let c = e1[0] * e2[1] - e1[1] * e2[0];
        if c < -1e-9 * e1[0].hypot(e1[1]) * e2[0].hypot(e2[1]) {
            return Err(GiniError::Data(format!("polyline is not convex at vertex {}", k + 2)));
        }
    }
    Ok(())
}

/// Pareto-minimal convex chain of a point cloud: the lower hull from the
/// lowest of the leftmost points to the leftmost of the lowest points.
pub(crate) fn lower_left_chain(mut points: Vec<[f64; 2]>, scale: f64) -> Vec<[f64; 2]> {
    let eps = MERGE_REL * scale;
    points.sort_unstable_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    points.dedup_by(|b, a| (b[0] - a[0]).abs() <= eps && (b[1] - a[1]).abs() <= eps);

    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(points.len());
    for p in points {
        while hull.len() >= 2 {
            let k = hull.len();
            let (o, a) = (hull[k - 2], hull[k - 1]);
            let span = (a[0] - o[0]).hypot(a[1] - o[1]) * (p[0] - o[0]).hypot(p[1] - o[1]);
            // collinearity is judged relative to the edge lengths: dense
            // chains have genuine vertices with tiny absolute turns
            if cross(o, a, p) <= MERGE_REL * span {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let lowest = hull
        .iter()
        .enumerate()
        .fold(0, |best, (i, p)| if p[1] < hull[best][1] { i } else { best });
    hull.truncate(lowest + 1);

    let mut chain: Vec<[f64; 2]> = Vec::with_capacity(hull.len());
    for p in hull {
        match chain.last() {
            Some(q) if !(p[0] > q[0] + eps && p[1] < q[1] - eps) => {
                // near-vertical step at the start keeps the lower point, any
                // other near-duplicate keeps the earlier one
                if chain.len() == 1 && p[0] <= q[0] + eps && p[1] < q[1] {
                    chain[0] = p;
                }
            }
            _ => chain.push(p),
        }
    }
    chain
}

fn data_scale(x: &EndowmentMatrix) -> f64 {
    let s = x.max_abs();
    if s > 0.0 {
        s
    } else {
        1.0
    }
}

fn weighted_point(x: &EndowmentMatrix, order: &[usize], w: &RankWeights) -> [f64; 2] {
    let mut z = [0.0, 0.0];
    for (wi, &idx) in w.as_slice().iter().zip(order) {
        let r = x.row(idx);
        z[0] += wi * r[0];
        z[1] += wi * r[1];
    }
    z
}

/// Exact MRE of a 2-D empirical distribution under a concave distortion.
///
/// One candidate vertex is generated per open arc between consecutive
/// critical angles, from the ranking at the arc midpoint (ties broken by row
/// index). The ranking is carried from arc to arc by insertion sort and the
/// candidate is updated per adjacent swap.
pub fn mre_2d(x: &EndowmentMatrix, v: &DistortionSpec) -> Result<MrePolyline> {
    require_2d(x)?;
    require_concave(v)?;
    let n = x.nrows();
    let w = v.empirical_weights(n)?;
    let ws = w.as_slice();
    let angles = critical_angles_2d(x)?;

    let mut order: Vec<usize> = (0..n).collect();
    let mut keys = vec![0.0; n];
    let mut z = [0.0, 0.0];
    let mut candidates = Vec::with_capacity(angles.len());
    for (arc_idx, arc) in angles.windows(2).enumerate() {
        let mid = 0.5 * (arc[0] + arc[1]);
        let (s, c) = mid.sin_cos();
        for (k, r) in keys.iter_mut().zip(x.rows()) {
            *k = c * r[0] + s * r[1];
        }
        let before = |a: usize, b: usize| keys[a] < keys[b] || (keys[a] == keys[b] && a < b);
        let refresh = arc_idx == 0 || arc_idx % n.max(1) == 0;
        for i in 1..n {
            let mut j = i;
            while j > 0 && before(order[j], order[j - 1]) {
                if !refresh {
                    // elements at j-1 and j trade places
                    let dw = ws[j - 1] - ws[j];
                    let (lo, hi) = (x.row(order[j - 1]), x.row(order[j]));
                    z[0] += dw * (hi[0] - lo[0]);
                    z[1] += dw * (hi[1] - lo[1]);
                }
                order.swap(j, j - 1);
                j -= 1;
            }
        }
        if refresh {
            z = weighted_point(x, &order, &w);
        }
        candidates.push(z);
    }
    let chain = lower_left_chain(candidates, data_scale(x));
    MrePolyline::new(chain, v.clone())
}

/// Inner approximation of the MRE from supporting points at `k >= 2`
/// equally spaced angles in `[0, π/2]`.
///
/// Exact at the sampled directions; intended for large samples where the
/// exact chain has too many vertices.
pub fn mre_2d_sampled(x: &EndowmentMatrix, v: &DistortionSpec, k: usize) -> Result<MrePolyline> {
    require_2d(x)?;
    require_concave(v)?;
    if k < 2 {
        return domain("sampled MRE needs at least two directions");
    }
    let n = x.nrows();
    let w = v.empirical_weights(n)?;
    let candidates: Vec<[f64; 2]> = (0..k)
        .into_par_iter()
        .map(|j| {
            // primary key, secondary key, row index; the endpoints break ties
            // lexicographically so that they land on the extreme vertices
            let mut keyed: Vec<(f64, f64, usize)> = if j == 0 {
                x.rows().enumerate().map(|(i, r)| (r[0], r[1], i)).collect()
            } else if j == k - 1 {
                x.rows().enumerate().map(|(i, r)| (r[1], r[0], i)).collect()
            } else {
                let theta = FRAC_PI_2 * j as f64 / (k - 1) as f64;
                let (s, c) = theta.sin_cos();
                x.rows().enumerate().map(|(i, r)| (c * r[0] + s * r[1], 0.0, i)).collect()
            };
            keyed.sort_unstable_by(|a, b| {
                a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.2.cmp(&b.2))
            });
            let mut z = [0.0, 0.0];
            for (wi, &(_, _, idx)) in w.as_slice().iter().zip(&keyed) {
                let r = x.row(idx);
                z[0] += wi * r[0];
                z[1] += wi * r[1];
            }
            z
        })
        .collect();
    let chain = lower_left_chain(candidates, data_scale(x));
    MrePolyline::new(chain, v.clone())
}

/// Decision tolerance `1e-9 · (1 + max |entry|)`.
pub fn default_tolerance(scale: f64) -> f64 {
    1e-9 * (1.0 + scale)
}

/// Whether `z` belongs to the convex representative endowment `C⁺(X, ṽ)`,
/// i.e. `p'z >= S_v(p'X)` for every nonnegative price direction.
///
/// In 2-D the tested directions are the facet normals of the exact MRE plus
/// both axes, which decides membership in the polyhedral set exactly. For
/// `d >= 3` a quasi-uniform direction grid (`super::DEFAULT_DIRECTIONS_3D`
/// points) is used.
pub fn contains(x: &EndowmentMatrix, v: &DistortionSpec, z: &[f64]) -> Result<bool> {
    if z.len() != x.ncols() {
        return Err(GiniError::DimensionMismatch { expected: x.ncols(), got: z.len() });
    }
    require_concave(v)?;
    let zmax = z.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let tol = default_tolerance(x.max_abs().max(zmax));
    let directions = if x.ncols() == 2 {
        mre_2d(x, v)?.facet_directions()
    } else {
        super::directions::direction_grid(x.ncols(), super::DEFAULT_DIRECTIONS_3D)?
    };
    for p in &directions {
        if p.dot(z) < priced_spectral(x, p, v)? - tol {
            return Ok(false);
        }
    }
    Ok(true)
}
