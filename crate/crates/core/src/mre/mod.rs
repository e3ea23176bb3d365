//! Multivariate machinery: priced spectral values, planar representative
//! endowments, uniform Gini dominance and the windowed Hausdorff metric.

mod directions;
mod dominance;
mod hausdorff;
mod matrix;
mod polyline;

/// Default direction-grid size for `d >= 3`.
pub const DEFAULT_DIRECTIONS_3D: usize = 2000;

pub use directions::{direction_grid, grid_spacing, support_sample, SupportSample};
pub use dominance::{
    compare_representatives, dominates, dominates_family, AlphaVerdict, DirectionSet,
    DominanceOptions, DominanceVerdict, FamilyVerdict,
};
pub use hausdorff::{directed_hausdorff, hausdorff_polyline, Window};
pub use matrix::{priced_gini, priced_spectral, transform_affine, Direction, EndowmentMatrix};
pub use polyline::{
    contains, critical_angles_2d, default_tolerance, mre_2d, mre_2d_sampled, MrePolyline,
};
