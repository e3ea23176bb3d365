//! Multivariate representative endowments of the bundled EU-28 data
//! (life expectancy, GDP per capita) for 2000 and 2015, written as an SVG.
//!
//! Usage: cargo run --example eu_representatives [OUT.svg]

use gini_mre::io::eu_fixture;
use gini_mre::svg::{Axis, SvgPlot, PALETTE};
use gini_mre::{mre_2d, DistortionSpec, Result};

fn main() -> Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "eu_representatives.svg".into());
    let mut plot = SvgPlot::new(
        Axis::new("life expectancy (years)"),
        Axis::thousands("per capita GDP (1000 USD)"),
    );
    let specs = [DistortionSpec::donaldson_weymark(0.5)?, DistortionSpec::donaldson_weymark(3.0 / 14.0)?];
    for (k, year) in [2000, 2015].into_iter().enumerate() {
        let x = eu_fixture(year)?;
        plot.scatter(&x, PALETTE[k]);
        for (j, v) in specs.iter().enumerate() {
            let poly = mre_2d(&x, v)?;
            println!("{year} {v}: {} vertices, from {:?} to {:?}", poly.vertices().len(), poly.vertices()[0], poly.vertices()[poly.vertices().len() - 1]);
            plot.polyline(&poly, PALETTE[2 + 2 * k + j], format!("{year} {v}"));
        }
    }
    std::fs::write(&out, plot.render())?;
    println!("wrote {out}");
    Ok(())
}
