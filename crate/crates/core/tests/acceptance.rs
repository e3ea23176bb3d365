//! Acceptance criteria; prints one PASS/FAIL line per criterion.

mod common;

use std::f64::consts::FRAC_PI_2;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use gini_mre::io::eu_fixture;
use gini_mre::lln::{run_lln, Generator, LlnConfig};
use gini_mre::mre::{
    compare_representatives, contains, dominates, mre_2d, priced_spectral, transform_affine,
};
use gini_mre::{
    Direction, DirectionSet, DistortionSpec, DominanceOptions, EndowmentMatrix, Sample1D,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eu_dominance() -> Outcome {
    let y2015 = eu_fixture(2015).map_err(|e| e.to_string())?;
    let y2000 = eu_fixture(2000).map_err(|e| e.to_string())?;
    let opts = DominanceOptions::default();
    let start = Instant::now();
    let mut margins = Vec::new();
    for spec in ["dw:0.5", "dw:0.2142857"] {
        let v = DistortionSpec::parse(spec).unwrap();
        let fwd = dominates(&y2015, &y2000, &v, &opts).unwrap();
        ensure(fwd.holds && fwd.exact, || format!("2015 over 2000 fails for {spec}: {fwd:?}"))?;
        margins.push(fwd.worst_margin);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    for spec in ["dw:0.5", "dw:0.2142857"] {
        let v = DistortionSpec::parse(spec).unwrap();
        let rev = dominates(&y2000, &y2015, &v, &opts).unwrap();
        ensure(!rev.holds, || format!("2000 over 2015 unexpectedly holds for {spec}"))?;
        let theta = rev.witness.angle().unwrap();
        let m = margin_at(&y2000, &v, &y2015, &v, theta);
        ensure(m < -tol(&y2015), || format!("witness {theta} does not violate: {m}"))?;
    }
    Ok(format!("worst margins {margins:.3?}, {elapsed:.1?}; reverse order fails with a witness"))
}

fn eu_nesting() -> Outcome {
    // 1/α = 2, 14/5, 14/3, 7
    let alphas = [0.5, 5.0 / 14.0, 3.0 / 14.0, 1.0 / 7.0];
    let mut checked = 0;
    for year in [2000, 2015] {
        let x = eu_fixture(year).unwrap();
        for i in 0..alphas.len() {
            for j in i + 1..alphas.len() {
                let lower = DistortionSpec::donaldson_weymark(alphas[i]).unwrap();
                let higher = DistortionSpec::donaldson_weymark(alphas[j]).unwrap();
                let verdict =
                    compare_representatives(&x, &lower, &x, &higher, &DominanceOptions::default())
                        .unwrap();
                ensure(verdict.holds, || {
                    format!("{year}: aversion {} not below {}: {verdict:?}", 1.0 / alphas[i], 1.0 / alphas[j])
                })?;
                let (dense, at) = dense_min_margin(&x, &lower, &x, &higher, 0.0, FRAC_PI_2, 2000);
                ensure(dense >= -tol(&x), || format!("{year}: oracle margin {dense} at {at}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} ordered pairs nested"))
}

fn classical_gini() -> Outcome {
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = r.random_range(1..=200);
        let scale = 10f64.powf(r.random_range(-2.0..4.0));
        let values: Vec<f64> = (0..n).map(|_| scale * r.random::<f64>()).collect();
        let g = Sample1D::new(values.clone()).unwrap().s_gini(2.0).unwrap();
        let mut x = values;
        x.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let nf = n as f64;
        let classical: f64 =
            x.iter().enumerate().map(|(i, xi)| xi * (2.0 * i as f64 - nf + 1.0)).sum::<f64>() / (nf * nf);
        let err = if classical == 0.0 { g.abs() / scale } else { ((g - classical) / classical).abs() };
        worst = worst.max(err);
        ensure(err <= 1e-12, || format!("n={n}: {g} vs {classical}"))?;
    }
    Ok(format!("1000 samples, worst relative error {worst:.1e}"))
}

fn support_oracle() -> Outcome {
    let mut r = rng(4);
    let mut worst = 0.0f64;
    let mut polylines = 0;
    for _ in 0..200 {
        let n = r.random_range(1..=60);
        let scale = 10f64.powf(r.random_range(-1.0..3.0));
        let x = random_matrix(&mut r, n..=n, 2, scale);
        for alpha in [0.2, 0.5, 1.0] {
            for v in [DistortionSpec::zonoid(alpha).unwrap(), DistortionSpec::donaldson_weymark(alpha).unwrap()] {
                let poly = mre_2d(&x, &v).unwrap();
                polylines += 1;
                if alpha == 1.0 {
                    let mean = x.mean();
                    let z = poly.vertices();
                    ensure(z.len() == 1, || format!("α=1 gave {} vertices", z.len()))?;
                    ensure((z[0][0] - mean[0]).abs() <= tol(&x) && (z[0][1] - mean[1]).abs() <= tol(&x), || {
                        format!("α=1 vertex {:?} is not the mean {mean:?}", z[0])
                    })?;
                }
                for _ in 0..1000 {
                    let theta = r.random_range(0.0..=FRAC_PI_2);
                    let p = Direction::from_angle(theta).unwrap();
                    let s = priced_oracle(&x, p.as_slice(), &v);
                    let err = (poly.support(&p) - s).abs() / (1.0 + s.abs());
                    worst = worst.max(err);
                    ensure(err <= 1e-9, || format!("{v} at θ={theta}: {} vs {s}", poly.support(&p)))?;
                }
            }
        }
    }
    Ok(format!("{polylines} polylines × 1000 directions, worst relative error {worst:.1e}"))
}

fn exact_vs_dense() -> Outcome {
    let mut r = rng(5);
    let grid = concave_grid();
    let (mut holds, mut fails) = (0, 0);
    for case in 0..200 {
        let n = r.random_range(2..=20);
        let b = random_matrix(&mut r, n..=n, 2, 10.0);
        let a = if case % 2 == 0 {
            // nonnegative shift of a perturbed copy: mostly holds, sometimes barely fails
            let rows = b
                .rows()
                .map(|row| row.iter().map(|c| c + r.random_range(-0.5..1.5)).collect())
                .collect();
            EndowmentMatrix::from_rows(rows).unwrap()
        } else {
            random_matrix(&mut r, 1..=20, 2, 10.0)
        };
        let v = &grid[r.random_range(0..grid.len())];
        let (lo, hi, restrict) = if case % 3 == 0 {
            let lo = r.random_range(0.0..FRAC_PI_2);
            let hi = r.random_range(lo..=FRAC_PI_2);
            (lo, hi, DirectionSet::AngleInterval { lo, hi })
        } else {
            (0.0, FRAC_PI_2, DirectionSet::All)
        };
        let opts = DominanceOptions { restrict, ..DominanceOptions::default() };
        let exact = dominates(&a, &b, v, &opts).unwrap();
        let tau = exact.tolerance;
        let (dense, at) = dense_min_margin(&a, v, &b, v, lo, hi, 100_000);
        ensure(exact.holds == (dense >= -tau), || {
            format!("case {case}: exact {} (margin {}) vs dense {dense} at {at}", exact.holds, exact.worst_margin)
        })?;
        let at_witness = margin_at(&a, v, &b, v, exact.witness.angle().unwrap());
        ensure((at_witness - exact.worst_margin).abs() <= 1e-9 * (1.0 + a.max_abs().max(b.max_abs())), || {
            format!("case {case}: reported margin {} vs oracle {at_witness}", exact.worst_margin)
        })?;
        let probe = DominanceOptions {
            restrict: DirectionSet::Finite(vec![Direction::from_angle(at).unwrap()]),
            ..DominanceOptions::default()
        };
        let lib_at_dense = dominates(&a, &b, v, &probe).unwrap().worst_margin;
        ensure((lib_at_dense - dense).abs() <= 1e-9 * (1.0 + a.max_abs().max(b.max_abs())), || {
            format!("case {case}: margins at common angle {lib_at_dense} vs {dense}")
        })?;
        if exact.holds {
            ensure(dense >= exact.worst_margin - tau, || format!("case {case}: dense below exact minimum"))?;
            holds += 1;
        } else {
            fails += 1;
        }
    }
    Ok(format!("200 pairs agree ({holds} hold, {fails} fail)"))
}

fn sort_vertices(mut v: Vec<[f64; 2]>) -> Vec<[f64; 2]> {
    v.sort_by(|a, b| a[0].partial_cmp(&b[0]).unwrap());
    v
}

fn property_suite() -> Outcome {
    const N: usize = 120;
    let mut r = rng(6);
    let grid = concave_grid();
    let mut summary = Vec::new();

    // affine equivariance with diagonal-plus-permutation maps
    for _ in 0..N {
        let x = random_matrix(&mut r, 1..=25, 2, 10.0);
        let v = &grid[r.random_range(0..grid.len())];
        let (d1, d2) = (r.random_range(0.1..5.0), r.random_range(0.1..5.0));
        let swap = r.random::<bool>();
        let a = if swap { vec![vec![0.0, d1], vec![d2, 0.0]] } else { vec![vec![d1, 0.0], vec![0.0, d2]] };
        let b = [r.random_range(-5.0..5.0), r.random_range(-5.0..5.0)];
        let image = mre_2d(&transform_affine(&x, &a, &b).unwrap(), v).unwrap();
        let mapped: Vec<[f64; 2]> = mre_2d(&x, v)
            .unwrap()
            .vertices()
            .iter()
            .map(|z| [a[0][0] * z[0] + a[0][1] * z[1] + b[0], a[1][0] * z[0] + a[1][1] * z[1] + b[1]])
            .collect();
        let (got, want) = (sort_vertices(image.vertices().to_vec()), sort_vertices(mapped));
        let t = 1e-9 * (1.0 + 5.0 * x.max_abs() + 5.0);
        ensure(
            got.len() == want.len()
                && got.iter().zip(&want).all(|(p, q)| (p[0] - q[0]).abs() <= t && (p[1] - q[1]).abs() <= t),
            || format!("affine image mismatch: {got:?} vs {want:?}"),
        )?;
    }
    summary.push("affine");

    // the mean point belongs to the representative set
    for _ in 0..N {
        let d = r.random_range(2..=3);
        let x = random_matrix(&mut r, 1..=30, d, 10.0);
        let v = &grid[r.random_range(0..grid.len())];
        ensure(contains(&x, v, &x.mean()).unwrap(), || "mean point not contained".into())?;
        let p = random_direction(&mut r, d);
        let mp: f64 = p.iter().zip(x.mean()).map(|(a, b)| a * b).sum();
        ensure(mp >= priced_oracle(&x, &p, v) - tol(&x), || "p'E[X] below S(p'X)".into())?;
    }
    summary.push("mean-point");

    // centered scaling: S(p'βX̃) = βS(p'X̃) <= S(p'X̃)
    for _ in 0..N {
        let d = r.random_range(2..=3);
        let xc = random_matrix(&mut r, 1..=30, d, 10.0).centered();
        let v = &grid[r.random_range(0..grid.len())];
        let p = Direction::new(random_direction(&mut r, d)).unwrap();
        let s1 = priced_spectral(&xc, &p, v).unwrap();
        for beta in [1.0, 2.0, 5.0] {
            let sb = priced_spectral(&xc.scaled(beta), &p, v).unwrap();
            let t = tol(&xc) * beta;
            ensure((sb - beta * s1).abs() <= t && sb <= s1 + t, || format!("β={beta}: {sb} vs {s1}"))?;
        }
    }
    summary.push("centered-scaling");

    // dominance on the plane orders every marginal the same way
    let mut premises = 0;
    while premises < N {
        let b = random_matrix(&mut r, 1..=20, 2, 10.0);
        let a = shifted(&mut r, &b, 2.0);
        let v = &grid[r.random_range(0..grid.len())];
        if !dominates(&a, &b, v, &DominanceOptions::default()).unwrap().holds {
            continue;
        }
        premises += 1;
        for j in 0..2 {
            let sa = Sample1D::new(a.column(j)).unwrap().spectral_value(v);
            let sb = Sample1D::new(b.column(j)).unwrap().spectral_value(v);
            ensure(sa >= sb - tol(&a), || format!("marginal {j}: {sa} < {sb}"))?;
        }
    }
    summary.push("projection");

    // dominance under the identity orders the means
    let mut premises = 0;
    let mut tried = 0;
    while premises < N {
        tried += 1;
        let b = random_matrix(&mut r, 1..=20, 2, 10.0);
        let a = if tried % 2 == 0 { shifted(&mut r, &b, 1.0) } else { random_matrix(&mut r, 1..=20, 2, 10.0) };
        if !dominates(&a, &b, &DistortionSpec::Identity, &DominanceOptions::default()).unwrap().holds {
            continue;
        }
        premises += 1;
        let (ma, mb) = (a.mean(), b.mean());
        ensure(ma[0] >= mb[0] - tol(&a) && ma[1] >= mb[1] - tol(&a), || format!("{ma:?} < {mb:?}"))?;
    }
    summary.push("expectation");

    // nonnegative shifts dominate
    for _ in 0..N {
        let d = r.random_range(2..=3);
        let b = random_matrix(&mut r, 1..=20, d, 10.0);
        let a = nonnegative_shift(&mut r, &b);
        for v in &grid {
            let verdict = dominates(&a, &b, v, &DominanceOptions { resolution: 400, ..Default::default() }).unwrap();
            ensure(verdict.holds, || format!("shift fails for {v}: {}", verdict.worst_margin))?;
        }
    }
    summary.push("stochastic-order");

    // mean-preserving splits are dominated
    for _ in 0..N {
        let b = random_matrix(&mut r, 1..=15, 2, 10.0);
        let rows: Vec<Vec<f64>> = b
            .rows()
            .flat_map(|row| {
                let eps: Vec<f64> = row.iter().map(|_| r.random_range(-3.0..3.0)).collect();
                let plus = row.iter().zip(&eps).map(|(c, e)| c + e).collect();
                let minus = row.iter().zip(&eps).map(|(c, e)| c - e).collect();
                [plus, minus]
            })
            .collect();
        let a = EndowmentMatrix::from_rows(rows).unwrap();
        for v in &grid {
            let verdict = dominates(&b, &a, v, &DominanceOptions::default()).unwrap();
            ensure(verdict.holds, || format!("split not dominated for {v}: {}", verdict.worst_margin))?;
        }
    }
    summary.push("dilation");

    Ok(format!("{} properties × ≥{N} instances, zero violations", summary.len()))
}

fn shifted(r: &mut impl Rng, b: &EndowmentMatrix, max: f64) -> EndowmentMatrix {
    let rows = b.rows().map(|row| row.iter().map(|c| c + r.random_range(0.0..max)).collect()).collect();
    EndowmentMatrix::from_rows(rows).unwrap()
}

fn nonnegative_shift(r: &mut impl Rng, b: &EndowmentMatrix) -> EndowmentMatrix {
    shifted(r, b, 3.0)
}

fn lln_decreasing() -> Outcome {
    let cfg = LlnConfig {
        repetitions: 20,
        seed: 2024,
        ..LlnConfig::new(
            Generator::UniformSquare,
            vec![100, 1_000, 10_000],
            DistortionSpec::s_gini(2.0).unwrap(),
        )
    };
    let start = Instant::now();
    let rows = run_lln(&cfg).unwrap();
    let elapsed = start.elapsed();
    let medians: Vec<f64> = rows.iter().map(|r| r.median_distance).collect();
    ensure(medians.windows(2).all(|w| w[1] < w[0]), || format!("medians {medians:?}"))?;
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("medians {medians:.4?} in {elapsed:.1?}"))
}

fn fixture_cells() -> Outcome {
    let cells: [(u32, &str, [f64; 2]); 8] = [
        (2000, "Austria", [78.2, 43826.0]),
        (2000, "Bulgaria", [71.6, 9537.0]),
        (2000, "Latvia", [69.5, 12061.0]),
        (2000, "Luxembourg", [78.0, 89924.0]),
        (2015, "Luxembourg", [82.4, 103760.0]),
        (2015, "Ireland", [81.5, 69134.0]),
        (2015, "Lithuania", [74.5, 28834.0]),
        (2015, "Malta", [81.9, 36157.0]),
    ];
    for (year, country, want) in cells {
        let x = eu_fixture(year).unwrap();
        ensure(x.nrows() == 28, || format!("{year}: {} rows", x.nrows()))?;
        let i = x
            .labels()
            .and_then(|l| l.iter().position(|c| c == country))
            .ok_or_else(|| format!("{country} missing from {year}"))?;
        ensure(x.row(i) == want, || format!("{year} {country}: {:?}", x.row(i)))?;
    }
    Ok("8 cells match".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 EU dominance 2015 over 2000", eu_dominance),
        ("2 EU nesting across aversion", eu_nesting),
        ("3 classical Gini equivalence", classical_gini),
        ("4 support-function oracle", support_oracle),
        ("5 exact vs dense dominance", exact_vs_dense),
        ("6 property suite", property_suite),
        ("7 LLN median decrease", lln_decreasing),
        ("8 fixture fidelity", fixture_cells),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, f) in criteria {
        if !filter.is_empty() && !filter.iter().any(|p| name.contains(p.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
