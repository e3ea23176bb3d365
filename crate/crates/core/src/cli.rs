//! Command-line front end: `gini`, `mre`, `dominate`, `sd` and `lln`.
//!
//! Exit codes: `0` success (or dominance holds), `3` dominance fails,
//! `2` usage errors (bad flags, specs or grids), `1` data and I/O errors.

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::distortion::{parse_unit_number, DistortionFamily, DistortionSpec};
use crate::error::{GiniError, Result};
use crate::io::{load_directions, load_sample, polyline_to_json, resolve_dataset, PolylineJson};
use crate::lln::{lln_to_csv, run_lln, Generator, LlnConfig};
use crate::mre::{
    dominates, mre_2d, support_sample, Direction, DirectionSet, DominanceOptions,
    DominanceVerdict, EndowmentMatrix, MrePolyline, Window, DEFAULT_DIRECTIONS_3D,
};
use crate::spectral::{dual_sd_check, GiniMode, Sample1D, SdRelation};
use crate::svg::{Axis, SvgPlot, PALETTE};

pub const EXIT_DOMINANCE_FAILS: u8 = 3;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DATA: u8 = 1;

#[derive(Debug, Parser)]
#[command(name = "gini-mre", version, about = "Generalized Gini indices, representative endowments and Gini dominance")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Clone, Args)]
pub struct DistortionArgs {
    /// Comma-separated distortion specs, e.g. `dw:1/2,zonoid:0.3`.
    #[arg(long, short = 'v', value_name = "SPEC[,SPEC...]")]
    pub distortion: Option<String>,
    /// Comma-separated parameters in (0, 1] of `--family`, e.g. `1/2,5/14,3/14,1/7`.
    #[arg(long, value_name = "LIST")]
    pub alpha_grid: Option<String>,
    /// Family used with `--alpha-grid`: dw, zonoid, step or identity.
    #[arg(long, default_value = "dw")]
    pub family: String,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, short = 'o', value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Absolute and relative generalized Gini indices.
    Gini {
        /// CSV dataset (or `eu2000` / `eu2015`).
        dataset: String,
        /// Price vector, e.g. `1,0`; without it every attribute is reported.
        #[arg(long, value_name = "P1,P2,...")]
        p: Option<String>,
        #[command(flatten)]
        distortion: DistortionArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Representative endowment boundaries (2-D) or support samples (any d).
    Mre {
        dataset: String,
        /// Second dataset drawn in the same SVG.
        #[arg(long, value_name = "DATASET")]
        overlay: Option<String>,
        /// Emit priced spectral values on a direction grid instead of a polyline.
        #[arg(long)]
        support_sample: bool,
        /// Direction-grid size for support samples.
        #[arg(long, default_value_t = DEFAULT_DIRECTIONS_3D)]
        directions: usize,
        #[command(flatten)]
        distortion: DistortionArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Does DATASET_A uniformly Gini-dominate DATASET_B (A less unequal)?
    Dominate {
        dataset_a: String,
        dataset_b: String,
        /// Restrict prices to the angle interval `LO:HI` in degrees (2-D).
        #[arg(long, value_name = "DEG:DEG")]
        p_interval: Option<String>,
        /// Restrict prices to the directions listed in a CSV file.
        #[arg(long, value_name = "PATH", conflicts_with = "p_interval")]
        directions_file: Option<PathBuf>,
        #[arg(long, value_name = "T")]
        tolerance: Option<f64>,
        /// Direction-grid size for d >= 3.
        #[arg(long, default_value_t = DEFAULT_DIRECTIONS_3D)]
        directions: usize,
        #[command(flatten)]
        distortion: DistortionArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Does univariate SAMPLE_A dominate SAMPLE_B in a dual stochastic order?
    Sd {
        sample_a: PathBuf,
        sample_b: PathBuf,
        /// fsd, concave (ssd), convex or dw.
        #[arg(long)]
        relation: String,
        /// Exponents `β >= 1` for the dw relation, e.g. `1,2,4`.
        #[arg(long, value_name = "LIST")]
        beta_grid: Option<String>,
        #[arg(long, value_name = "T")]
        tolerance: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hausdorff convergence experiment for empirical representative endowments.
    Lln {
        /// uniform2, gaussian[:RHO] or point[:X,Y].
        #[arg(long, default_value = "uniform2")]
        generator: String,
        /// Strictly increasing sample sizes.
        #[arg(long, default_value = "100,1000,10000")]
        n_grid: String,
        #[arg(long, default_value_t = 20)]
        repetitions: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, short = 'v', default_value = "dw:1/2")]
        distortion: String,
        /// Clipping window `XMIN:XMAX:YMIN:YMAX`; defaults to the generator's.
        #[arg(long)]
        window: Option<String>,
        /// Angle-grid size of the boundary construction.
        #[arg(long, default_value_t = 512)]
        directions: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Rendered command output plus the exit status it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub holds: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, holds: true }
    }
}

fn usage(msg: impl Into<String>) -> GiniError {
    GiniError::Domain(msg.into())
}

/// Splits on commas that are not inside `[...]`.
fn split_specs(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in list.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

fn parse_list(list: &str, what: &str) -> Result<Vec<f64>> {
    let values = list
        .split(',')
        .map(|s| parse_unit_number(s).ok_or_else(|| usage(format!("{what}: cannot parse `{s}`"))))
        .collect::<Result<Vec<f64>>>()?;
    if values.is_empty() {
        return Err(usage(format!("{what} is empty")));
    }
    Ok(values)
}

impl DistortionArgs {
    /// Specs from `--distortion` followed by the `--alpha-grid` members;
    /// `dw:1/2` when neither flag is given.
    pub fn specs(&self) -> Result<Vec<DistortionSpec>> {
        let mut specs = Vec::new();
        if let Some(list) = &self.distortion {
            for s in split_specs(list) {
                specs.push(DistortionSpec::parse(&s)?);
            }
        }
        if let Some(grid) = &self.alpha_grid {
            let family: DistortionFamily = self.family.parse()?;
            for alpha in parse_list(grid, "alpha grid")? {
                specs.push(family.member(alpha)?);
            }
        }
        if specs.is_empty() {
            specs.push(DistortionSpec::donaldson_weymark(0.5)?);
        }
        Ok(specs)
    }
}

fn no_svg(format: Format, command: &str) -> Result<()> {
    if format == Format::Svg {
        Err(usage(format!("`{command}` has no SVG output; use json or csv")))
    } else {
        Ok(())
    }
}

fn to_csv<S: Serialize>(rows: &[S]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| GiniError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn to_json<S: Serialize>(value: &S) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Debug, Serialize)]
struct GiniRow {
    target: String,
    distortion: String,
    absolute: f64,
    relative: Option<f64>,
}

fn cmd_gini(dataset: &str, p: Option<&str>, dist: &DistortionArgs, format: Format) -> Result<String> {
    no_svg(format, "gini")?;
    let x = resolve_dataset(dataset)?;
    let specs = dist.specs()?;
    let targets: Vec<(String, Vec<f64>)> = match p {
        Some(p) => {
            let p = Direction::normalized(parse_list(p, "price vector")?)?;
            if p.dim() != x.ncols() {
                return Err(GiniError::DimensionMismatch { expected: x.ncols(), got: p.dim() });
            }
            let label = format!("p=({})", p.as_slice().iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(","));
            vec![(label, x.project(p.as_slice()))]
        }
        None => (0..x.ncols()).map(|j| (x.attribute_name(j), x.column(j))).collect(),
    };
    let mut rows = Vec::new();
    for (target, values) in targets {
        let s = Sample1D::new(values)?;
        for v in &specs {
            let relative = if s.mean() > 0.0 {
                Some(s.generalized_gini(v, GiniMode::Relative)?)
            } else {
                None
            };
            rows.push(GiniRow {
                target: target.clone(),
                distortion: v.to_string(),
                absolute: s.generalized_gini(v, GiniMode::Absolute)?,
                relative,
            });
        }
    }
    match format {
        Format::Csv => to_csv(&rows),
        _ => to_json(&rows),
    }
}

fn axis_for(x: &EndowmentMatrix, j: usize) -> Axis {
    let name = x.attribute_name(j);
    let big = x.column(j).iter().any(|v| v.abs() >= 1e4);
    match (name.as_str(), big) {
        ("life_expectancy", _) => Axis::new("life expectancy (years)"),
        ("gdp_per_capita_usd", true) => Axis::thousands("per capita GDP (1000 USD)"),
        (_, true) => Axis::thousands(format!("{name} (thousands)")),
        _ => Axis::new(name),
    }
}

#[derive(Debug, Serialize)]
struct SupportJson {
    distortion: String,
    resolution: usize,
    spacing: f64,
    directions: Vec<Direction>,
    values: Vec<f64>,
}

fn cmd_mre(
    dataset: &str,
    overlay: Option<&str>,
    support: bool,
    resolution: usize,
    dist: &DistortionArgs,
    format: Format,
) -> Result<String> {
    let x = resolve_dataset(dataset)?;
    let specs = dist.specs()?;
    if overlay.is_some() && format != Format::Svg {
        return Err(usage("--overlay is only meaningful with --format svg"));
    }
    if support || x.ncols() != 2 {
        if !support {
            return Err(usage(format!(
                "boundaries are polylines only for d = 2 (got d = {}); use --support-sample \
                 with --format json or csv",
                x.ncols()
            )));
        }
        no_svg(format, "mre --support-sample")?;
        let samples = specs
            .iter()
            .map(|v| Ok((v.to_string(), support_sample(&x, v, resolution)?)))
            .collect::<Result<Vec<_>>>()?;
        return match format {
            Format::Csv => {
                let mut out = String::from("distortion");
                for j in 0..x.ncols() {
                    out.push_str(&format!(",p{}", j + 1));
                }
                out.push_str(",value\n");
                for (name, s) in &samples {
                    for (p, val) in s.directions.iter().zip(&s.values) {
                        let coords: Vec<String> = p.as_slice().iter().map(|c| c.to_string()).collect();
                        out.push_str(&format!("{name},{},{val}\n", coords.join(",")));
                    }
                }
                Ok(out)
            }
            _ => to_json(
                &samples
                    .into_iter()
                    .map(|(distortion, s)| SupportJson {
                        distortion,
                        resolution: s.resolution,
                        spacing: s.spacing,
                        directions: s.directions,
                        values: s.values,
                    })
                    .collect::<Vec<_>>(),
            ),
        };
    }

    let polys = specs.iter().map(|v| mre_2d(&x, v)).collect::<Result<Vec<MrePolyline>>>()?;
    match format {
        Format::Json if polys.len() == 1 => Ok(polyline_to_json(&polys[0])? + "\n"),
        Format::Json => to_json(&polys.iter().map(PolylineJson::from).collect::<Vec<_>>()),
        Format::Csv => {
            let mut out = String::from("distortion,x,y\n");
            for p in &polys {
                for z in p.vertices() {
                    out.push_str(&format!("{},{},{}\n", p.distortion(), z[0], z[1]));
                }
            }
            Ok(out)
        }
        Format::Svg => {
            let mut plot = SvgPlot::new(axis_for(&x, 0), axis_for(&x, 1));
            match overlay {
                None => {
                    plot.scatter(&x, "#222222");
                    for (k, p) in polys.iter().enumerate() {
                        plot.polyline(p, PALETTE[k % PALETTE.len()], p.distortion().to_string());
                    }
                }
                Some(other) => {
                    let y = resolve_dataset(other)?;
                    if y.ncols() != 2 {
                        return Err(GiniError::DimensionMismatch { expected: 2, got: y.ncols() });
                    }
                    plot.scatter(&x, "#222222");
                    plot.scatter(&y, PALETTE[0]);
                    for p in &polys {
                        plot.polyline(p, "#222222", format!("{dataset} {}", p.distortion()));
                    }
                    for v in &specs {
                        let q = mre_2d(&y, v)?;
                        plot.polyline(&q, PALETTE[0], format!("{other} {v}"));
                    }
                }
            }
            Ok(plot.render())
        }
    }
}

#[derive(Debug, Serialize)]
struct DistortionVerdict {
    distortion: String,
    #[serde(flatten)]
    verdict: DominanceVerdict,
}

#[derive(Debug, Serialize)]
struct DominanceReport {
    dominating: String,
    dominated: String,
    holds: bool,
    verdicts: Vec<DistortionVerdict>,
}

#[derive(Debug, Serialize)]
struct DominanceCsvRow {
    distortion: String,
    holds: bool,
    worst_margin: f64,
    witness: String,
    tolerance: f64,
}

fn parse_interval(s: &str) -> Result<DirectionSet> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| usage(format!("angle interval must look like LO:HI, got `{s}`")))?;
    let deg = |t: &str| t.trim().parse::<f64>().map_err(|_| usage(format!("bad angle `{t}`")));
    DirectionSet::degrees(deg(lo)?, deg(hi)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_dominate(
    a_name: &str,
    b_name: &str,
    p_interval: Option<&str>,
    directions_file: Option<&PathBuf>,
    tolerance: Option<f64>,
    resolution: usize,
    dist: &DistortionArgs,
    format: Format,
) -> Result<Outcome> {
    no_svg(format, "dominate")?;
    let a = resolve_dataset(a_name)?;
    let b = resolve_dataset(b_name)?;
    if a.ncols() != b.ncols() {
        return Err(GiniError::DimensionMismatch { expected: a.ncols(), got: b.ncols() });
    }
    let restrict = match (p_interval, directions_file) {
        (Some(s), _) => parse_interval(s)?,
        (None, Some(path)) => DirectionSet::Finite(load_directions(path)?),
        (None, None) => DirectionSet::All,
    };
    let opts = DominanceOptions { restrict, tolerance, resolution };
    let verdicts = dist
        .specs()?
        .iter()
        .map(|v| Ok(DistortionVerdict { distortion: v.to_string(), verdict: dominates(&a, &b, v, &opts)? }))
        .collect::<Result<Vec<_>>>()?;
    let holds = verdicts.iter().all(|r| r.verdict.holds);
    let text = match format {
        Format::Csv => to_csv(
            &verdicts
                .iter()
                .map(|r| DominanceCsvRow {
                    distortion: r.distortion.clone(),
                    holds: r.verdict.holds,
                    worst_margin: r.verdict.worst_margin,
                    witness: r
                        .verdict
                        .witness
                        .as_slice()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    tolerance: r.verdict.tolerance,
                })
                .collect::<Vec<_>>(),
        )?,
        _ => to_json(&DominanceReport {
            dominating: a_name.to_string(),
            dominated: b_name.to_string(),
            holds,
            verdicts,
        })?,
    };
    Ok(Outcome { text, holds })
}

fn cmd_sd(
    a: &PathBuf,
    b: &PathBuf,
    relation: &str,
    betas: Option<&str>,
    tolerance: Option<f64>,
    format: Format,
) -> Result<Outcome> {
    no_svg(format, "sd")?;
    let betas = betas.map(|s| parse_list(s, "beta grid")).transpose()?;
    let relation = SdRelation::parse(relation, betas)?;
    let xa: Sample1D = load_sample(a)?;
    let xb: Sample1D = load_sample(b)?;
    // `dual_sd_check(x, y)` asks whether y is the better distribution.
    let verdict = dual_sd_check(&xb, &xa, &relation, tolerance)?;
    let text = match format {
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                holds: bool,
                worst_margin: f64,
                witness: f64,
                tolerance: f64,
            }
            to_csv(&[Row {
                holds: verdict.holds,
                worst_margin: verdict.worst_margin,
                witness: verdict.witness,
                tolerance: verdict.tolerance,
            }])?
        }
        _ => to_json(&verdict)?,
    };
    Ok(Outcome { text, holds: verdict.holds })
}

fn parse_window(s: &str) -> Result<Window> {
    let parts: Vec<f64> = s
        .split([':', ','])
        .map(|t| t.trim().parse::<f64>().map_err(|_| usage(format!("bad window bound `{t}`"))))
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        [x0, x1, y0, y1] => Window::new(*x0, *x1, *y0, *y1),
        _ => Err(usage("window must be XMIN:XMAX:YMIN:YMAX")),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_lln(
    generator: &str,
    n_grid: &str,
    repetitions: usize,
    seed: u64,
    distortion: &str,
    window: Option<&str>,
    directions: usize,
    format: Format,
) -> Result<String> {
    no_svg(format, "lln")?;
    let n_grid = n_grid
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| usage(format!("bad sample size `{s}`"))))
        .collect::<Result<Vec<_>>>()?;
    let cfg = LlnConfig {
        generator: generator.parse::<Generator>()?,
        n_grid,
        repetitions,
        seed,
        distortion: DistortionSpec::parse(distortion)?,
        window: window.map(parse_window).transpose()?,
        directions,
    };
    let rows = run_lln(&cfg)?;
    match format {
        Format::Json => to_json(&rows),
        _ => lln_to_csv(&rows),
    }
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gini { dataset, p, distortion, output } => {
            cmd_gini(dataset, p.as_deref(), distortion, output.format.unwrap_or(Format::Json))
                .map(Outcome::ok)
        }
        Command::Mre { dataset, overlay, support_sample, directions, distortion, output } => cmd_mre(
            dataset,
            overlay.as_deref(),
            *support_sample,
            *directions,
            distortion,
            output.format.unwrap_or(Format::Json),
        )
        .map(Outcome::ok),
        Command::Dominate {
            dataset_a,
            dataset_b,
            p_interval,
            directions_file,
            tolerance,
            directions,
            distortion,
            output,
        } => cmd_dominate(
            dataset_a,
            dataset_b,
            p_interval.as_deref(),
            directions_file.as_ref(),
            *tolerance,
            *directions,
            distortion,
            output.format.unwrap_or(Format::Json),
        ),
        Command::Sd { sample_a, sample_b, relation, beta_grid, tolerance, output } => cmd_sd(
            sample_a,
            sample_b,
            relation,
            beta_grid.as_deref(),
            *tolerance,
            output.format.unwrap_or(Format::Json),
        ),
        Command::Lln {
            generator,
            n_grid,
            repetitions,
            seed,
            distortion,
            window,
            directions,
            output,
        } => cmd_lln(
            generator,
            n_grid,
            *repetitions,
            *seed,
            distortion,
            window.as_deref(),
            *directions,
            output.format.unwrap_or(Format::Csv),
        )
        .map(Outcome::ok),
    }
}

fn output_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Gini { output, .. }
        | Command::Mre { output, .. }
        | Command::Dominate { output, .. }
        | Command::Sd { output, .. }
        | Command::Lln { output, .. } => output.out.as_ref(),
    }
}

/// Exit code for a failed run.
pub fn error_code(err: &GiniError) -> u8 {
    match err {
        GiniError::Domain(_) | GiniError::InvalidSpec { .. } => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

/// Parses `args`, runs the command and writes its output.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_code(&e));
        }
    };
    let written = match output_path(&cli) {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_DATA);
    }
    if outcome.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DOMINANCE_FAILS)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("gini-mre").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn spec_lists_respect_brackets() {
        assert_eq!(
            split_specs("dw:0.5, piecewise[0,0;0.5,0.8;1,1],zonoid:1/3"),
            vec!["dw:0.5", "piecewise[0,0;0.5,0.8;1,1]", "zonoid:1/3"]
        );
    }

    #[test]
    fn distortion_args_combine_list_and_grid() {
        let args = DistortionArgs {
            distortion: Some("identity".into()),
            alpha_grid: Some("1/2,3/14".into()),
            family: "dw".into(),
        };
        let specs = args.specs().unwrap();
        assert_eq!(specs.len(), 3);
        assert_eq!(specs[2], DistortionSpec::donaldson_weymark(3.0 / 14.0).unwrap());
        let bad = DistortionArgs { distortion: None, alpha_grid: Some("0,0.5".into()), family: "dw".into() };
        assert!(bad.specs().is_err());
    }

    #[test]
    fn gini_marginals_and_priced() {
        let out = run_args(&["gini", "eu2000", "--distortion", "dw:0.5"]).unwrap();
        let rows: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(rows.as_array().unwrap().len(), 2);
        assert_eq!(rows[0]["target"], "life_expectancy");
        let priced = run_args(&["gini", "eu2000", "--p", "1,0", "--distortion", "dw:0.5"]).unwrap();
        let p: serde_json::Value = serde_json::from_str(&priced.text).unwrap();
        assert_eq!(p[0]["absolute"], rows[0]["absolute"]);
    }

    #[test]
    fn dominance_outcomes() {
        let out = run_args(&["dominate", "eu2015", "eu2000", "--distortion", "dw:0.5,dw:3/14"]).unwrap();
        assert!(out.holds);
        let rev = run_args(&["dominate", "eu2000", "eu2015", "--distortion", "dw:0.5"]).unwrap();
        assert!(!rev.holds);
        assert!(run_args(&["dominate", "eu2000", "eu2015", "--format", "svg"]).is_err());
    }

    #[test]
    fn mre_modes() {
        let svg = run_args(&["mre", "eu2015", "--alpha-grid", "1/2,5/14,3/14,1/7", "--format", "svg"]).unwrap();
        assert_eq!(svg.text.matches("<polyline").count(), 4);
        let csv = run_args(&["mre", "eu2015", "--format", "csv"]).unwrap();
        assert!(csv.text.starts_with("distortion,x,y\n"));
        let sample = run_args(&["mre", "eu2015", "--support-sample", "--directions", "16"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&sample.text).unwrap();
        assert_eq!(v[0]["values"].as_array().unwrap().len(), 16);
        assert!(run_args(&["mre", "eu2015", "--overlay", "eu2000"]).is_err());
    }

    #[test]
    fn exit_codes_for_errors() {
        assert_eq!(error_code(&usage("x")), EXIT_USAGE);
        assert_eq!(error_code(&GiniError::Data("x".into())), EXIT_DATA);
        assert!(matches!(
            run_args(&["lln", "--n-grid", "100,10"]).unwrap_err(),
            GiniError::Domain(_)
        ));
    }

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("0:1:0:2").unwrap(), Window::new(0.0, 1.0, 0.0, 2.0).unwrap());
        assert!(parse_window("0:1:0").is_err());
    }
}
