//! Windowed Hausdorff distance between MRE boundaries.
//!
//! The boundaries are unbounded (two rays), so both are clipped to a common
//! axis-aligned window first.

use serde::{Deserialize, Serialize};

use super::polyline::MrePolyline;
use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Window {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        if !(x_min < x_max && y_min < y_max) {
            return domain("window must have positive width and height");
        }
        Ok(Self { x_min, x_max, y_min, y_max })
    }

    fn diameter(&self) -> f64 {
        (self.x_max - self.x_min).hypot(self.y_max - self.y_min)
    }

    /// Liang–Barsky clipping of segment `a → b`; returns the clipped piece.
    fn clip(&self, a: [f64; 2], b: [f64; 2]) -> Option<([f64; 2], [f64; 2])> {
        let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
        let mut t0 = 0.0f64;
        let mut t1 = 1.0f64;
        for (p, q) in [
            (-dx, a[0] - self.x_min),
            (dx, self.x_max - a[0]),
            (-dy, a[1] - self.y_min),
            (dy, self.y_max - a[1]),
        ] {
            if p == 0.0 {
                if q < 0.0 {
                    return None;
                }
            } else {
                let r = q / p;
                if p < 0.0 {
                    t0 = t0.max(r);
                } else {
                    t1 = t1.min(r);
                }
            }
        }
        if t0 > t1 {
            return None;
        }
        let at = |t: f64| [a[0] + t * dx, a[1] + t * dy];
        Some((at(t0), at(t1)))
    }
}

impl MrePolyline {
    /// The boundary chain (vertical ray, vertices, horizontal ray) clipped to
    /// `window`, or `None` if it misses the window entirely.
    ///
    /// The chain is monotone, so its intersection with a box is connected.
    pub fn clipped_boundary(&self, window: &Window) -> Option<Vec<[f64; 2]>> {
        let v = self.vertices();
        let first = v[0];
        let last = v[v.len() - 1];
        let mut full = Vec::with_capacity(v.len() + 2);
        full.push([first[0], window.y_max.max(first[1])]);
        full.extend_from_slice(v);
        full.push([window.x_max.max(last[0]), last[1]]);

        let mut out: Vec<[f64; 2]> = Vec::new();
        for seg in full.windows(2) {
            if let Some((p, q)) = window.clip(seg[0], seg[1]) {
                if out.last() != Some(&p) {
                    out.push(p);
                }
                if q != p {
                    out.push(q);
                }
            }
        }
        (!out.is_empty()).then_some(out)
    }
}

fn point_segment_distance(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p[0] - a[0] - t * dx).hypot(p[1] - a[1] - t * dy)
}

fn segments(chain: &[[f64; 2]]) -> Vec<([f64; 2], [f64; 2])> {
    if chain.len() == 1 {
        return vec![(chain[0], chain[0])];
    }
    chain.windows(2).map(|s| (s[0], s[1])).collect()
}

/// `sup_{a ∈ from} dist(a, to)` for two polygonal chains.
///
/// Each piece of `from` gets two upper bounds: the distance is 1-Lipschitz,
/// giving `(f₀ + f₁ + L)/2`, and the distance to any single target segment is
/// convex along the piece, giving `min_s max(d_s(a), d_s(b))`. Pieces whose
/// bound is within `eps` of the running maximum are discarded; the rest are
/// halved.
pub fn directed_hausdorff(from: &[[f64; 2]], to: &[[f64; 2]], eps: f64) -> f64 {
    let targets = segments(to);
    let eval = |a: [f64; 2], b: [f64; 2]| {
        let mut fa = f64::INFINITY;
        let mut fb = f64::INFINITY;
        let mut convex = f64::INFINITY;
        for &(s0, s1) in &targets {
            let da = point_segment_distance(a, s0, s1);
            let db = point_segment_distance(b, s0, s1);
            fa = fa.min(da);
            fb = fb.min(db);
            convex = convex.min(da.max(db));
        }
        (fa, fb, convex)
    };
    let mut best = 0.0f64;
    let mut stack: Vec<([f64; 2], [f64; 2])> = segments(from);
    while let Some((a, b)) = stack.pop() {
        let (fa, fb, convex) = eval(a, b);
        best = best.max(fa).max(fb);
        let len = (b[0] - a[0]).hypot(b[1] - a[1]);
        let bound = convex.min(0.5 * (fa + fb + len));
        if bound <= best + eps {
            continue;
        }
        let mid = [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])];
        stack.push((a, mid));
        stack.push((mid, b));
    }
    best
}

/// Symmetric Hausdorff distance between the window-clipped boundaries.
pub fn hausdorff_polyline(m1: &MrePolyline, m2: &MrePolyline, window: &Window) -> Result<f64> {
    let (Some(a), Some(b)) = (m1.clipped_boundary(window), m2.clipped_boundary(window)) else {
        return domain("window excludes at least one of the polylines");
    };
    let eps = 1e-10 * (1.0 + window.diameter());
    Ok(directed_hausdorff(&a, &b, eps).max(directed_hausdorff(&b, &a, eps)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distortion::DistortionSpec;

    fn poly(v: &[[f64; 2]]) -> MrePolyline {
        MrePolyline::new(v.to_vec(), DistortionSpec::Identity).unwrap()
    }

    #[test]
    fn self_distance_is_zero() {
        let m = poly(&[[0.0, 3.0], [1.0, 1.0], [3.0, 0.0]]);
        let w = Window::new(-1.0, 10.0, -1.0, 10.0).unwrap();
        assert_eq!(hausdorff_polyline(&m, &m, &w).unwrap(), 0.0);
    }

    #[test]
    fn shifted_quadrant_corner() {
        let delta = 0.25;
        let m = poly(&[[1.0, 1.0]]);
        let s = poly(&[[1.0 + delta, 1.0 + delta]]);
        let w = Window::new(0.0, 100.0, 0.0, 100.0).unwrap();
        let h = hausdorff_polyline(&m, &s, &w).unwrap();
        assert!((h - delta * 2f64.sqrt()).abs() < 1e-9, "{h}");
    }

    #[test]
    fn directed_distance_finds_interior_maximum() {
        // endpoints are at distance 1, the midpoint (1, 1) at √2
        let from = [[0.0, 1.0], [2.0, 1.0]];
        let to = [[0.0, 0.0], [0.0, -5.0], [2.0, -5.0], [2.0, 0.0]];
        assert!((directed_hausdorff(&from, &to, 1e-12) - 2f64.sqrt()).abs() < 1e-9);
        let point = [[0.0, 0.0]];
        assert!((directed_hausdorff(&from, &point, 1e-12) - 5f64.sqrt()).abs() < 1e-9);
        let two = [[-1.0, 0.0], [3.0, 0.0]];
        let from = [[-1.0, 0.0], [1.0, 2.0], [3.0, 0.0]];
        assert!((directed_hausdorff(&from, &two, 1e-12) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn clipping() {
        let m = poly(&[[0.0, 3.0], [1.0, 1.0], [3.0, 0.0]]);
        let w = Window::new(0.5, 2.0, 0.0, 5.0).unwrap();
        let c = m.clipped_boundary(&w).unwrap();
        assert_eq!(c.first().unwrap(), &[0.5, 2.0]);
        assert_eq!(c.last().unwrap(), &[2.0, 0.5]);
        let far = Window::new(10.0, 11.0, 10.0, 11.0).unwrap();
        assert!(m.clipped_boundary(&far).is_none());
        assert!(hausdorff_polyline(&m, &m, &far).is_err());
        assert!(Window::new(1.0, 0.0, 0.0, 1.0).is_err());
    }
}
