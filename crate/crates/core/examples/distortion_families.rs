//! Tabulates the built-in distortion families, their duals and the rank
//! weights they induce on a small sample.

use gini_mre::{DistortionFamily, DistortionSpec, Result};

fn main() -> Result<()> {
    let grid = [0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0];
    println!("{:<28}{}", "t", grid.map(|t| format!("{t:>8.2}")).join(""));
    for family in [DistortionFamily::Zonoid, DistortionFamily::DonaldsonWeymark, DistortionFamily::Step] {
        for alpha in [0.25, 0.5, 1.0] {
            let v = family.member(alpha)?;
            for spec in [v.clone(), v.dual()] {
                let row: Vec<String> =
                    grid.iter().map(|&t| spec.evaluate(t).map(|y| format!("{y:>8.3}"))).collect::<Result<_>>()?;
                println!("{:<28}{}", spec.to_string(), row.join(""));
            }
        }
    }

    // S-Gini with aversion β = 3 is the Donaldson-Weymark member α = 1/3
    let v = DistortionSpec::s_gini(3.0)?;
    let w = v.empirical_weights(5)?;
    println!("\n{v} weights for n = 5: {:.4?} (sum {:.12})", w.as_slice(), w.sum());
    println!("concave: {}, dual concave: {}", v.is_concave(), v.dual().is_concave());
    Ok(())
}
