//! Convergence of sample representative endowments: windowed Hausdorff
//! distance to a large reference sample as the sample size grows.

use gini_mre::lln::{lln_to_csv, run_lln, Generator, LlnConfig};
use gini_mre::{DistortionSpec, Result};

fn main() -> Result<()> {
    let generator: Generator = "gaussian:0.5".parse()?;
    let mut cfg = LlnConfig::new(generator, vec![50, 200, 800], DistortionSpec::donaldson_weymark(0.5)?);
    cfg.repetitions = 8;
    cfg.seed = 7;
    cfg.directions = 256;
    let rows = run_lln(&cfg)?;
    print!("{}", lln_to_csv(&rows)?);
    for pair in rows.windows(2) {
        println!(
            "n {} -> {}: median distance shrinks by {:.2}x",
            pair[0].n,
            pair[1].n,
            pair[0].median_distance / pair[1].median_distance
        );
    }
    Ok(())
}
