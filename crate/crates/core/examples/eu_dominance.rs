//! Uniform Gini dominance between the EU-28 distributions of 2015 and 2000,
//! on all price directions and on a restricted cone.

use gini_mre::io::eu_fixture;
use gini_mre::{dominates, DirectionSet, DistortionSpec, DominanceOptions, Result};

fn main() -> Result<()> {
    let (x2000, x2015) = (eu_fixture(2000)?, eu_fixture(2015)?);
    let all = DominanceOptions::default();
    let cone = DominanceOptions { restrict: DirectionSet::degrees(30.0, 60.0)?, ..Default::default() };

    for v in [DistortionSpec::donaldson_weymark(0.5)?, DistortionSpec::zonoid(0.25)?] {
        for (label, opts) in [("all prices", &all), ("30°..60°", &cone)] {
            let forward = dominates(&x2015, &x2000, &v, opts)?;
            let backward = dominates(&x2000, &x2015, &v, opts)?;
            println!(
                "{v:<12} {label:<11} 2015 ≽ 2000: {} (margin {:.3})   2000 ≽ 2015: {} (witness {:.1}°)",
                forward.holds,
                forward.worst_margin,
                backward.holds,
                backward.witness_angle_deg.unwrap_or(f64::NAN)
            );
        }
    }
    Ok(())
}
