//! Generalized Gini indices of one variable: the classical Gini, S-Gini
//! indices of increasing aversion and the zonoid (lower-tail) index.

use gini_mre::{DistortionSpec, GiniMode, Result, Sample1D};

fn main() -> Result<()> {
    let incomes = Sample1D::new(vec![12.0, 15.5, 18.0, 22.0, 25.0, 31.0, 40.0, 58.0, 75.0, 140.0])?;
    println!("mean income {:.2}", incomes.mean());

    // β = 2 gives the classical Gini ratio
    for beta in [1.0, 2.0, 3.0, 5.0] {
        println!("S-Gini β = {beta}: {:.4}", incomes.s_gini(beta)?);
    }

    for spec in ["dw:1/2", "zonoid:0.2", "zonoid:0.5", "step:0.5"] {
        let v = DistortionSpec::parse(spec)?;
        println!(
            "{spec:<11} representative {:>7.3}  absolute {:>7.3}  relative {:.4}",
            incomes.spectral_value(&v),
            incomes.generalized_gini(&v, GiniMode::Absolute)?,
            incomes.generalized_gini(&v, GiniMode::Relative)?,
        );
    }
    Ok(())
}
