//! CSV ingestion, bundled EU-28 fixtures and polyline serialization.

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::distortion::DistortionSpec;
use crate::error::{GiniError, Result};
use crate::mre::{Direction, EndowmentMatrix, MrePolyline};
use crate::spectral::Sample1D;

/// Life expectancy (years) and GDP per capita (USD, constant prices) of the
/// 28 EU member states in 2000.
pub const EU2000_CSV: &str = include_str!("../data/eu2000.csv");
/// The same attributes in 2015.
pub const EU2015_CSV: &str = include_str!("../data/eu2015.csv");

/// Bundled EU-28 dataset for `year` (2000 or 2015).
pub fn eu_fixture(year: u32) -> Result<EndowmentMatrix> {
    match year {
        2000 => parse_dataset(EU2000_CSV.as_bytes()),
        2015 => parse_dataset(EU2015_CSV.as_bytes()),
        other => Err(GiniError::Data(format!("no bundled fixture for year {other}"))),
    }
}

fn fixture_name(spec: &str) -> Option<u32> {
    let file = Path::new(spec).file_name()?.to_str()?;
    match file.trim_end_matches(".csv") {
        "eu2000" => Some(2000),
        "eu2015" => Some(2015),
        _ => None,
    }
}

/// Loads a dataset from `spec`; when no such file exists, the names
/// `eu2000[.csv]` and `eu2015[.csv]` resolve to the bundled fixtures.
pub fn resolve_dataset(spec: &str) -> Result<EndowmentMatrix> {
    let path = Path::new(spec);
    if path.is_file() {
        return load_dataset(path);
    }
    match fixture_name(spec) {
        Some(year) => eu_fixture(year),
        None => Err(GiniError::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("dataset `{spec}` not found"),
        ))),
    }
}

pub fn load_dataset(path: impl AsRef<Path>) -> Result<EndowmentMatrix> {
    let file = std::fs::File::open(path.as_ref())?;
    parse_dataset(file)
}

/// Parses a CSV with a header row. A first column whose first cell is not
/// numeric is taken as row labels; all other cells must be finite numbers.
pub fn parse_dataset<R: Read>(input: R) -> Result<EndowmentMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let header = reader.headers()?.clone();
    let mut records = Vec::new();
    for record in reader.records() {
        records.push(record?);
    }
    let first = records
        .first()
        .ok_or_else(|| GiniError::Data("dataset has no data rows".into()))?;
    let labelled = first.get(0).is_some_and(|c| c.parse::<f64>().is_err());
    let skip = usize::from(labelled);

    let mut labels = Vec::new();
    let mut rows = Vec::with_capacity(records.len());
    for (i, rec) in records.iter().enumerate() {
        if labelled {
            labels.push(rec.get(0).unwrap_or_default().to_string());
        }
        let row = rec
            .iter()
            .skip(skip)
            .map(|cell| {
                cell.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| {
                        GiniError::Data(format!("row {}: `{cell}` is not a finite number", i + 1))
                    })
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push(row);
    }
    let mut m = EndowmentMatrix::from_rows(rows)?;
    if header.len() == m.ncols() + skip {
        m = m.with_attribute_names(header.iter().skip(skip).map(str::to_string).collect())?;
    }
    if labelled {
        m.with_labels(labels)
    } else {
        Ok(m)
    }
}

/// Loads a univariate sample: one numeric column, optional header.
pub fn load_sample(path: impl AsRef<Path>) -> Result<Sample1D> {
    let file = std::fs::File::open(path.as_ref())?;
    parse_sample(file)
}

pub fn parse_sample<R: Read>(input: R) -> Result<Sample1D> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut values = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let cell = record.get(record.len().saturating_sub(1)).unwrap_or_default();
        match cell.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if i == 0 => continue,
            Err(_) => {
                return Err(GiniError::Data(format!(
                    "row {}: `{cell}` is not a number",
                    i + 1
                )))
            }
        }
    }
    Sample1D::new(values)
}

/// Reads one direction per row; rows are normalized to unit length.
pub fn load_directions(path: impl AsRef<Path>) -> Result<Vec<Direction>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path.as_ref())?;
    let mut dirs = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse).collect();
        match parsed {
            Ok(p) => dirs.push(Direction::normalized(p)?),
            Err(_) if i == 0 => continue,
            Err(e) => return Err(GiniError::Data(format!("direction row {}: {e}", i + 1))),
        }
    }
    Ok(dirs)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rays {
    pub left_vertical: bool,
    pub right_horizontal: bool,
}

/// On-disk JSON form of an [`MrePolyline`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolylineJson {
    pub distortion: String,
    pub vertices: Vec<[f64; 2]>,
    pub rays: Rays,
}

impl From<&MrePolyline> for PolylineJson {
    fn from(p: &MrePolyline) -> Self {
        Self {
            distortion: p.distortion().to_string(),
            vertices: p.vertices().to_vec(),
            rays: Rays { left_vertical: true, right_horizontal: true },
        }
    }
}

impl TryFrom<PolylineJson> for MrePolyline {
    type Error = GiniError;

    fn try_from(j: PolylineJson) -> Result<Self> {
        let v: DistortionSpec = j.distortion.parse()?;
        MrePolyline::new(j.vertices, v)
    }
}

pub fn polyline_to_json(p: &MrePolyline) -> Result<String> {
    Ok(serde_json::to_string_pretty(&PolylineJson::from(p))?)
}

pub fn polyline_from_json(s: &str) -> Result<MrePolyline> {
    let j: PolylineJson = serde_json::from_str(s)?;
    j.try_into()
}

/// Two-column `x,y` vertex CSV.
pub fn write_polyline_csv<W: Write>(p: &MrePolyline, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y"])?;
    for z in p.vertices() {
        w.serialize((z[0], z[1]))?;
    }
    w.flush()?;
    Ok(())
}
