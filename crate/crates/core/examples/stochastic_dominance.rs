//! Dual stochastic dominance between two samples: first degree, concave
//! second degree and Donaldson-Weymark dominance over a grid of exponents.

use gini_mre::{dual_sd_check, Result, Sample1D, SdRelation};

fn main() -> Result<()> {
    let before = Sample1D::new(vec![8.0, 10.0, 11.0, 14.0, 20.0, 35.0, 60.0])?;
    // transfers from the top two to the bottom three, same total
    let after = Sample1D::new(vec![12.0, 13.0, 14.0, 14.0, 20.0, 30.0, 55.0])?;

    let relations = [
        SdRelation::FirstDegree,
        SdRelation::SecondConcave,
        SdRelation::Dw(vec![1.0, 2.0, 3.0, 5.0, 10.0]),
    ];
    for relation in &relations {
        let verdict = dual_sd_check(&before, &after, relation, None)?;
        println!(
            "{:<40} holds {:<5}  worst margin {:>8.4} at {:.4}",
            format!("{relation:?}"),
            verdict.holds,
            verdict.worst_margin,
            verdict.witness
        );
    }
    Ok(())
}
