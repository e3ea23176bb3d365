//! Representative endowments move with rescaled units: converting GDP to
//! thousands and life expectancy to months maps the MRE vertex by vertex.

use gini_mre::io::eu_fixture;
use gini_mre::mre::transform_affine;
use gini_mre::{mre_2d, DistortionSpec, Result};

fn main() -> Result<()> {
    let x = eu_fixture(2015)?;
    let v = DistortionSpec::donaldson_weymark(0.5)?;
    let scale = [12.0, 1e-3];
    let shift = [0.0, 0.0];

    let a = vec![vec![scale[0], 0.0], vec![0.0, scale[1]]];
    let converted = transform_affine(&x, &a, &shift)?;
    let direct = mre_2d(&converted, &v)?;
    let mapped = mre_2d(&x, &v)?.map_diagonal(scale, shift)?;

    let worst = direct
        .vertices()
        .iter()
        .zip(mapped.vertices())
        .map(|(p, q)| (p[0] - q[0]).abs().max((p[1] - q[1]).abs()))
        .fold(0.0, f64::max);
    println!("{} vertices, largest coordinate difference {worst:.2e}", direct.vertices().len());
    for z in direct.vertices().iter().take(4) {
        println!("  {:.1} months, {:.3} thousand USD", z[0], z[1]);
    }
    Ok(())
}
