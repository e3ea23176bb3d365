//! Minimal SVG plots of 2-D data clouds with MRE boundaries overlaid.

use std::fmt::Write as _;

use crate::mre::{EndowmentMatrix, MrePolyline, Window};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

pub const PALETTE: [&str; 8] = [
    "#1f3b99", "#c23b22", "#2a8c3a", "#8a4fbf", "#d98c00", "#137a7f", "#7a5230", "#555555",
];

#[derive(Debug, Clone)]
struct Scatter {
    points: Vec<[f64; 2]>,
    color: String,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
struct Curve {
    polyline: MrePolyline,
    color: String,
    label: String,
}

/// An axis with its title and the factor applied to tick labels.
#[derive(Debug, Clone)]
pub struct Axis {
    pub title: String,
    pub display_scale: f64,
}

impl Axis {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), display_scale: 1.0 }
    }

    /// Tick labels in thousands; the title should say so.
    pub fn thousands(title: impl Into<String>) -> Self {
        Self { title: title.into(), display_scale: 1e-3 }
    }
}

/// Scatter plus polylines on linear axes fitted to the data with a 5% margin.
#[derive(Debug, Clone)]
pub struct SvgPlot {
    x_axis: Axis,
    y_axis: Axis,
    scatters: Vec<Scatter>,
    curves: Vec<Curve>,
}

impl SvgPlot {
    pub fn new(x_axis: Axis, y_axis: Axis) -> Self {
        Self { x_axis, y_axis, scatters: Vec::new(), curves: Vec::new() }
    }

    /// Adds the rows of a 2-column matrix as dots; row labels become tooltips.
    pub fn scatter(&mut self, x: &EndowmentMatrix, color: &str) -> &mut Self {
        self.scatters.push(Scatter {
            points: x.rows().map(|r| [r[0], r[1]]).collect(),
            color: color.to_string(),
            labels: x.labels().map(<[String]>::to_vec),
        });
        self
    }

    pub fn polyline(&mut self, p: &MrePolyline, color: &str, label: impl Into<String>) -> &mut Self {
        self.curves.push(Curve { polyline: p.clone(), color: color.to_string(), label: label.into() });
        self
    }

    /// Data window: bounding box of all dots and vertices plus 5% per side.
    pub fn window(&self) -> Window {
        let pts = self
            .scatters
            .iter()
            .flat_map(|s| s.points.iter())
            .chain(self.curves.iter().flat_map(|c| c.polyline.vertices().iter()));
        let (mut x0, mut x1, mut y0, mut y1) =
            (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in pts {
            x0 = x0.min(p[0]);
            x1 = x1.max(p[0]);
            y0 = y0.min(p[1]);
            y1 = y1.max(p[1]);
        }
        if !x0.is_finite() {
            (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
        }
        let pad = |lo: f64, hi: f64| {
            let span = hi - lo;
            let m = if span > 0.0 { 0.05 * span } else { 0.5 * lo.abs().max(1.0) };
            (lo - m, hi + m)
        };
        let (x0, x1) = pad(x0, x1);
        let (y0, y1) = pad(y0, y1);
        Window { x_min: x0, x_max: x1, y_min: y0, y_max: y1 }
    }

    pub fn render(&self) -> String {
        let w = self.window();
        let px = |x: f64| LEFT + (x - w.x_min) / (w.x_max - w.x_min) * (WIDTH - LEFT - RIGHT);
        let py = |y: f64| HEIGHT - BOTTOM - (y - w.y_min) / (w.y_max - w.y_min) * (HEIGHT - TOP - BOTTOM);

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(
            s,
            r#"<rect x="{LEFT}" y="{TOP}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            WIDTH - LEFT - RIGHT,
            HEIGHT - TOP - BOTTOM
        );

        for t in ticks(w.x_min, w.x_max) {
            let x = px(t);
            let _ = writeln!(
                s,
                r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                HEIGHT - BOTTOM,
                HEIGHT - BOTTOM + 5.0,
                HEIGHT - BOTTOM + 20.0,
                tick_label(t * self.x_axis.display_scale)
            );
        }
        for t in ticks(w.y_min, w.y_max) {
            let y = py(t);
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 5.0,
                LEFT - 8.0,
                y + 4.0,
                tick_label(t * self.y_axis.display_scale)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + 0.5 * (WIDTH - LEFT - RIGHT),
            HEIGHT - 15.0,
            escape(&self.x_axis.title)
        );
        let (yx, yy) = (20.0, TOP + 0.5 * (HEIGHT - TOP - BOTTOM));
        let _ = writeln!(
            s,
            r#"<text x="{yx}" y="{yy:.2}" text-anchor="middle" transform="rotate(-90 {yx} {yy:.2})">{}</text>"#,
            escape(&self.y_axis.title)
        );

        for sc in &self.scatters {
            let _ = writeln!(s, r#"<g class="scatter" fill="{}">"#, sc.color);
            for (i, p) in sc.points.iter().enumerate() {
                let label = sc.labels.as_ref().map(|l| escape(&l[i]));
                match label {
                    Some(l) => {
                        let _ = writeln!(
                            s,
                            r#"<circle cx="{:.2}" cy="{:.2}" r="3"><title>{l}</title></circle>"#,
                            px(p[0]),
                            py(p[1])
                        );
                    }
                    None => {
                        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="3"/>"#, px(p[0]), py(p[1]));
                    }
                }
            }
            let _ = writeln!(s, "</g>");
        }

        for (k, c) in self.curves.iter().enumerate() {
            if let Some(chain) = c.polyline.clipped_boundary(&w) {
                let pts: Vec<String> =
                    chain.iter().map(|p| format!("{:.2},{:.2}", px(p[0]), py(p[1]))).collect();
                let _ = writeln!(
                    s,
                    r#"<polyline class="mre" fill="none" stroke="{}" stroke-width="1.5" points="{}"><title>{}</title></polyline>"#,
                    c.color,
                    pts.join(" "),
                    escape(&c.label)
                );
            }
            let ly = TOP + 15.0 + 16.0 * k as f64;
            let lx = WIDTH - RIGHT - 150.0;
            let _ = writeln!(
                s,
                r#"<line x1="{lx}" y1="{:.2}" x2="{}" y2="{:.2}" stroke="{}" stroke-width="1.5"/><text x="{}" y="{ly:.2}">{}</text>"#,
                ly - 4.0,
                lx + 20.0,
                ly - 4.0,
                c.color,
                lx + 25.0,
                escape(&c.label)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let raw = (hi - lo) / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn tick_label(v: f64) -> String {
    let r = (v * 1e6).round() / 1e6;
    if r == 0.0 {
        "0".into()
    } else {
        format!("{r}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
