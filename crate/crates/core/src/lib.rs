//! Generalized Gini indices of univariate samples, multi-dimensioned
//! representative endowments (MREs) of multi-attribute samples, and uniform
//! Gini dominance between them.
//!
//! ```
//! use gini_mre::{DistortionSpec, GiniMode, Sample1D};
//!
//! let x = Sample1D::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
//! let v = DistortionSpec::s_gini(2.0).unwrap();
//! let g = x.generalized_gini(&v, GiniMode::Relative).unwrap();
//! assert!((g - 0.25).abs() < 1e-12);
//! ```

pub mod cli;
pub mod distortion;
pub mod error;
pub mod io;
pub mod lln;
pub mod mre;
pub mod spectral;
pub mod svg;

pub use distortion::{DistortionFamily, DistortionSpec, RankWeights};
pub use error::{GiniError, Result};
pub use mre::{
    dominates, dominates_family, mre_2d, Direction, DirectionSet, DominanceOptions,
    DominanceVerdict, EndowmentMatrix, MrePolyline, Window,
};
pub use spectral::{dual_sd_check, GiniMode, Sample1D, SdRelation, SdVerdict};
