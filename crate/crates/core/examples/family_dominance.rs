//! Dominance across a whole distortion family and the nesting of
//! representative endowments as inequality aversion grows.

use gini_mre::io::eu_fixture;
use gini_mre::mre::compare_representatives;
use gini_mre::{dominates_family, DistortionFamily, DominanceOptions, Result};

fn main() -> Result<()> {
    let (x2000, x2015) = (eu_fixture(2000)?, eu_fixture(2015)?);
    let alphas = [0.1, 0.2, 0.3, 0.5, 0.7, 1.0];
    let opts = DominanceOptions::default();

    for family in [DistortionFamily::Zonoid, DistortionFamily::DonaldsonWeymark] {
        let verdict = dominates_family(&x2015, &x2000, family, &alphas, &opts)?;
        println!("{}: 2015 dominates 2000 for every α: {}", family.name(), verdict.all_hold);
        for row in &verdict.per_alpha {
            println!("  α = {:<4} margin {:>9.3}", row.alpha, row.verdict.worst_margin);
        }

        // lower aversion (larger α) never gives a smaller representative value
        for pair in alphas.windows(2) {
            let (lo, hi) = (family.member(pair[0])?, family.member(pair[1])?);
            let nested = compare_representatives(&x2015, &hi, &x2015, &lo, &opts)?;
            println!("  {hi} above {lo}: {}", nested.holds);
        }
    }
    Ok(())
}
