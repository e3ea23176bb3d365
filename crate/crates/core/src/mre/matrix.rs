use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::distortion::{DistortionSpec, RankWeights};
use crate::error::{domain, GiniError, Result};
use crate::spectral::{gini_from_parts, GiniMode};

/// `n × d` matrix of individual endowments, one row per individual.
///
/// Rows carry equal mass `1/n`; duplicated rows are meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct EndowmentMatrix {
    n: usize,
    d: usize,
    data: Vec<f64>,
    labels: Option<Vec<String>>,
    attributes: Option<Vec<String>>,
}

impl EndowmentMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GiniError::Data("endowment matrix needs at least one row".into()));
        }
        let d = rows[0].len();
        if d == 0 {
            return Err(GiniError::Data("endowment matrix needs at least one column".into()));
        }
        let mut data = Vec::with_capacity(n * d);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != d {
                return Err(GiniError::Data(format!(
                    "row {} has {} entries, expected {d}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|x| !x.is_finite()) {
                return Err(GiniError::Data(format!("row {} has non-finite entry {bad}", i + 1)));
            }
            data.extend(row);
        }
        Ok(Self { n, d, data, labels: None, attributes: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(GiniError::Data(format!(
                "{} labels for {} rows",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Names the `d` attributes (columns).
    pub fn with_attribute_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.d {
            return Err(GiniError::Data(format!(
                "{} attribute names for {} columns",
                names.len(),
                self.d
            )));
        }
        self.attributes = Some(names);
        Ok(self)
    }

    pub fn nrows(&self) -> usize {
        self.n
    }

    pub fn ncols(&self) -> usize {
        self.d
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn attribute_names(&self) -> Option<&[String]> {
        self.attributes.as_deref()
    }

    /// Name of column `j`, or `attribute j+1` when unnamed.
    pub fn attribute_name(&self, j: usize) -> String {
        match &self.attributes {
            Some(a) => a[j].clone(),
            None => format!("attribute {}", j + 1),
        }
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.d)
    }

    /// Column `j` as a vector (a one-attribute marginal).
    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows().map(|r| r[j]).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Componentwise mean `E[X]`.
    pub fn mean(&self) -> Vec<f64> {
        let mut m = vec![0.0; self.d];
        for row in self.rows() {
            for (acc, x) in m.iter_mut().zip(row) {
                *acc += x;
            }
        }
        m.iter_mut().for_each(|x| *x /= self.n as f64);
        m
    }

    /// Priced endowments `p'x_i`, one per row.
    pub fn project(&self, p: &[f64]) -> Vec<f64> {
        self.rows()
            .map(|r| r.iter().zip(p).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `X - E[X]`.
    pub fn centered(&self) -> Self {
        let m = self.mean();
        let data = self
            .rows()
            .flat_map(|r| r.iter().zip(&m).map(|(x, mu)| x - mu).collect::<Vec<_>>())
            .collect();
        Self { data, ..self.clone() }
    }

    /// Every entry multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            data: self.data.iter().map(|x| x * factor).collect(),
            ..self.clone()
        }
    }

    /// Rows of both matrices stacked (the equal-weight mixture when `n` agree).
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if other.d != self.d {
            return Err(GiniError::DimensionMismatch { expected: self.d, got: other.d });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            n: self.n + other.n,
            d: self.d,
            data,
            labels: None,
            attributes: self.attributes.clone(),
        })
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.d {
            Err(GiniError::DimensionMismatch { expected: self.d, got })
        } else {
            Ok(())
        }
    }
}

/// A price vector on the nonnegative part of the unit sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Direction(Vec<f64>);

impl Direction {
    /// Validates a unit vector with nonnegative components.
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() || p.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return domain("direction components must be finite and nonnegative");
        }
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return domain(format!("direction must have unit length, got norm {norm}"));
        }
        Ok(Self(p))
    }

    /// Rescales a nonnegative, nonzero vector to unit length.
    pub fn normalized(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() || p.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return domain("direction components must be finite and nonnegative");
        }
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return domain("direction must be nonzero");
        }
        Ok(Self(p.into_iter().map(|x| x / norm).collect()))
    }

    /// `(cos θ, sin θ)` for `θ ∈ [0, π/2]`.
    pub fn from_angle(theta: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&theta) {
            return domain(format!("angle must lie in [0, π/2], got {theta}"));
        }
        let (s, c) = theta.sin_cos();
        Ok(Self(vec![c.max(0.0), s.max(0.0)]))
    }

    /// Unit vector along coordinate axis `j` of `d`-space.
    pub fn axis(d: usize, j: usize) -> Self {
        let mut p = vec![0.0; d];
        p[j] = 1.0;
        Self(p)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Angle from the first axis (2-D only).
    pub fn angle(&self) -> Option<f64> {
        (self.0.len() == 2).then(|| self.0[1].atan2(self.0[0]))
    }

    pub fn dot(&self, z: &[f64]) -> f64 {
        self.0.iter().zip(z).map(|(a, b)| a * b).sum()
    }
}

pub(crate) fn sort_values(values: &mut [f64]) {
    values.sort_unstable_by(f64::total_cmp);
}

/// `Σ ω_i y_(i)` of the priced endowments, with precomputed weights.
pub(crate) fn priced_spectral_with(x: &EndowmentMatrix, p: &[f64], w: &RankWeights) -> f64 {
    let mut y = x.project(p);
    sort_values(&mut y);
    w.dot_sorted(&y)
}

/// Representative priced endowment `S_v(p'X)`: attributes are aggregated by
/// `p` first, then the population by the spectral value.
pub fn priced_spectral(x: &EndowmentMatrix, p: &Direction, v: &DistortionSpec) -> Result<f64> {
    x.check_dim(p.dim())?;
    let w = v.empirical_weights(x.nrows())?;
    Ok(priced_spectral_with(x, p.as_slice(), &w))
}

/// Priced generalized Gini index `μ(p'X) - S_v(p'X)`, optionally relative.
pub fn priced_gini(
    x: &EndowmentMatrix,
    p: &Direction,
    v: &DistortionSpec,
    mode: GiniMode,
) -> Result<f64> {
    let s = priced_spectral(x, p, v)?;
    let mu = p.dot(&x.mean());
    gini_from_parts(mu, s, mode)
}

/// Applies `x ↦ A x + b` to every row; `A` is `m × d` with nonnegative entries.
pub fn transform_affine(x: &EndowmentMatrix, a: &[Vec<f64>], b: &[f64]) -> Result<EndowmentMatrix> {
    let m = a.len();
    if m == 0 || b.len() != m {
        return Err(GiniError::DimensionMismatch { expected: m, got: b.len() });
    }
    for row in a {
        x.check_dim(row.len())?;
        if row.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return domain("affine map must have nonnegative entries for equivariance to hold");
        }
    }
    let rows = x
        .rows()
        .map(|r| {
            a.iter()
                .zip(b)
                .map(|(ar, bi)| ar.iter().zip(r).map(|(u, v)| u * v).sum::<f64>() + bi)
                .collect()
        })
        .collect();
    let out = EndowmentMatrix::from_rows(rows)?;
    match x.labels() {
        Some(l) => out.with_labels(l.to_vec()),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::eu_fixture;

    fn m(rows: &[&[f64]]) -> EndowmentMatrix {
        EndowmentMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn matrix_validation() {
        assert!(EndowmentMatrix::from_rows(vec![]).is_err());
        assert!(EndowmentMatrix::from_rows(vec![vec![]]).is_err());
        assert!(EndowmentMatrix::from_rows(vec![vec![1.0, 2.0], vec![1.0]]).is_err());
        assert!(EndowmentMatrix::from_rows(vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn direction_validation() {
        assert!(Direction::new(vec![0.6, 0.8]).is_ok());
        assert!(Direction::new(vec![1.0, 1.0]).is_err());
        assert!(Direction::new(vec![-0.6, 0.8]).is_err());
        assert!(Direction::normalized(vec![0.0, 0.0]).is_err());
        let p = Direction::normalized(vec![3.0, 4.0]).unwrap();
        assert!((p.as_slice()[0] - 0.6).abs() < 1e-15);
        assert!(Direction::from_angle(2.0).is_err());
    }

    #[test]
    fn priced_spectral_examples() {
        let dw2 = DistortionSpec::s_gini(2.0).unwrap();
        let single = m(&[&[3.0, 7.0]]);
        let e1 = Direction::axis(2, 0);
        for v in [DistortionSpec::Identity, dw2.clone(), DistortionSpec::zonoid(0.2).unwrap()] {
            assert_eq!(priced_spectral(&single, &e1, &v).unwrap(), 3.0);
        }
        let x = m(&[&[1.0, 0.0], &[3.0, 0.0]]);
        assert!((priced_spectral(&x, &e1, &dw2).unwrap() - 1.5).abs() < 1e-15);
        assert!(priced_spectral(&x, &Direction::axis(3, 0), &dw2).is_err());
    }

    #[test]
    fn eu2000_gdp_mean() {
        let x = eu_fixture(2000).unwrap();
        let gdp = [
            43826.0, 40204.0, 9537.0, 17707.0, 30338.0, 23370.0, 45363.0, 16719.0, 37615.0,
            37450.0, 40320.0, 27608.0, 18897.0, 46480.0, 39472.0, 12061.0, 12985.0, 89924.0,
            25525.0, 45017.0, 15712.0, 28960.0, 10961.0, 16303.0, 24583.0, 32468.0, 39169.0,
            36344.0,
        ];
        let mean = gdp.iter().sum::<f64>() / 28.0;
        let s = priced_spectral(&x, &Direction::axis(2, 1), &DistortionSpec::Identity).unwrap();
        assert!((s - mean).abs() < 1e-9 * mean);
    }

    #[test]
    fn priced_gini_examples() {
        let dw2 = DistortionSpec::s_gini(2.0).unwrap();
        let e1 = Direction::axis(2, 0);
        let c = m(&[&[2.0, 5.0], &[2.0, 5.0]]);
        let p = Direction::normalized(vec![1.0, 2.0]).unwrap();
        assert!(priced_gini(&c, &p, &dw2, GiniMode::Absolute).unwrap().abs() < 1e-12);
        let x = m(&[&[1.0, 0.0], &[3.0, 0.0]]);
        assert!((priced_gini(&x, &e1, &dw2, GiniMode::Absolute).unwrap() - 0.5).abs() < 1e-15);
        assert!((priced_gini(&x, &e1, &dw2, GiniMode::Relative).unwrap() - 0.25).abs() < 1e-15);
        let e2 = Direction::axis(2, 1);
        assert!(priced_gini(&x, &e2, &dw2, GiniMode::Relative).is_err());
    }

    #[test]
    fn affine_identity_and_negative() {
        let x = m(&[&[1.0, 2.0], &[3.0, -1.0]]);
        let id = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert_eq!(transform_affine(&x, &id, &[0.0, 0.0]).unwrap(), x);
        let neg = vec![vec![1.0, -0.5], vec![0.0, 1.0]];
        assert!(transform_affine(&x, &neg, &[0.0, 0.0]).is_err());
        let sel = transform_affine(&x, &[vec![1.0, 0.0]], &[0.0]).unwrap();
        assert_eq!(sel.ncols(), 1);
        assert_eq!(sel.column(0), vec![1.0, 3.0]);
    }
}
