//! Runs every acceptance criterion and prints one pass/fail line for each.
//! Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use frieze_core::checks::{
    conway_coxeter, frieze_difference, search_by_quiver, structure, support_law, CheckOutcome,
};
use frieze_core::frieze_from_triangulation;
use frieze_core::mutation::{DeltaContext, RayName, RegionLabel};
use frieze_core::polygon::flip;
use frieze_core::strings::{fit_admissibility, Admissibility, ShapeReading};
use num_bigint::{BigInt, BigUint};

use common::{label, position_with_support, quiver, read, triangulation, windows};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);
/// Support, region, rays in the order the factors are written, their values and δ.
type Worked = (&'static [usize], RegionLabel, [RayName; 4], [u64; 4], i64);

fn exhaustive(
    check: fn(usize) -> Result<CheckOutcome, frieze_core::polygon::PolygonError>,
    max_n: usize,
) -> Verdict {
    let mut cases = 0;
    for n in 4..=max_n {
        let out = check(n).map_err(|e| e.to_string())?;
        if !out.passed() {
            return Err(format!(
                "{} at n={n}: {} failures, first {:?}",
                out.name,
                out.failed,
                out.failures.first()
            ));
        }
        cases += out.cases;
    }
    Ok(format!("{cases} triangulations, n <= {max_n}"))
}

fn criterion_1() -> Verdict {
    exhaustive(conway_coxeter, 10)
}

fn criterion_2() -> Verdict {
    exhaustive(frieze_difference, 10)
}

fn criterion_3() -> Verdict {
    let (_, q) = quiver("quiver_q.json");
    let found = search_by_quiver(14, &q).map_err(|e| e.to_string())?;
    let t = found
        .first()
        .ok_or("no triangulation of the 14-gon has quiver Q")?
        .triangulation
        .clone();
    if t != triangulation() {
        return Err("search result differs from the fixture".into());
    }
    let f = frieze_from_triangulation(&t).map_err(|e| e.to_string())?;
    let (grid, _) = windows("frieze_a11.txt");
    if !read("frieze_a11.txt").contains("8 . 2 . 8 . 2 . 18 . 8 . 2 . 8 . 2 . 8 . 2 . 18") {
        return Err("fixture lacks the 8 2 8 2 18 row".into());
    }
    let al = *grid
        .alignments(&f)
        .first()
        .ok_or("frieze grid does not embed")?;
    let (t2, _) = flip(&t, label(1)).map_err(|e| e.to_string())?;
    let f2 = frieze_from_triangulation(&t2).map_err(|e| e.to_string())?;
    let (black, red) = windows("frieze_flip.txt");
    let common: Vec<_> = black
        .alignments(&f)
        .into_iter()
        .filter(|&a| red.matches(&f2, a))
        .collect();
    let al2 = *common.first().ok_or("flip pairs do not embed")?;
    let changed = black
        .cells()
        .iter()
        .filter(|(k, v)| red.cells()[k] != **v)
        .count();
    let wanted = [
        (18, 19),
        (13, 12),
        (12, 16),
        (11, 11),
        (10, 13),
        (8, 12),
        (9, 11),
        (7, 9),
        (5, 6),
        (6, 5),
        (5, 4),
    ];
    for (x, y) in wanted {
        let present = black.cells().iter().any(|(k, v)| {
            *v == BigUint::from(x as u32) && red.cells()[k] == BigUint::from(y as u32)
        });
        if !present {
            return Err(format!("pair {x}->{y} missing"));
        }
    }
    Ok(format!(
        "{} matches, grid at shift {} mirrored {}, {} of {} flip cells change, shift {}",
        found.len(),
        al.shift,
        al.mirrored,
        changed,
        black.len(),
        al2.shift
    ))
}

fn criterion_4() -> Verdict {
    let t = triangulation();
    let ctx = DeltaContext::new(&t, label(1)).map_err(|e| e.to_string())?;
    use RayName::*;
    let cases: [Worked; 3] = [
        (
            &[4, 10, 1, 11, 2],
            RegionLabel::BC,
            [BSubA, B, CSupA, C],
            [3, 2, 8, 5],
            3,
        ),
        (
            &[8, 2, 3],
            RegionLabel::CD,
            [CSupA, C, DSubA, D],
            [3, 2, 4, 3],
            -2,
        ),
        (
            &[10, 1, 2, 5, 6],
            RegionLabel::CEClosure,
            [ESupA, C, CSupA, E],
            [4, 3, 5, 3],
            0,
        ),
    ];
    let mut shown = Vec::new();
    for (support, region, rays, values, delta) in cases {
        let d = position_with_support(&t, support);
        let rep = ctx.delta_in(d, region).map_err(|e| e.to_string())?;
        let ps = rep.projections.ok_or("no projections")?.ordered();
        let got: Vec<BigUint> = rays
            .iter()
            .map(|r| {
                let k = ps
                    .iter()
                    .position(|p| p.ray == *r)
                    .expect("ray among projections");
                rep.values[k].clone()
            })
            .collect();
        let want: Vec<BigUint> = values.iter().map(|&v| BigUint::from(v)).collect();
        if got != want || rep.delta != BigInt::from(delta) {
            return Err(format!("{region}: values {got:?}, δ = {}", rep.delta));
        }
        shown.push(format!("δ = {delta} with {values:?}"));
    }
    Ok(shown.join(", "))
}

fn criterion_5() -> Verdict {
    let report = fit_admissibility(10).map_err(|e| e.to_string())?;
    let fitted = report.fitted();
    if fitted.contains(&(ShapeReading::RunSteps, Admissibility::OddGaps)) {
        Ok(format!(
            "{} string patterns, fitted {fitted:?}",
            report.strings
        ))
    } else {
        Err(format!("no candidate fits; fitted {fitted:?}"))
    }
}

fn criterion_6() -> Verdict {
    exhaustive(support_law, 8)
}

fn criterion_7() -> Verdict {
    exhaustive(structure, 10)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("Conway-Coxeter cross-validation", criterion_1),
        ("frieze difference, exhaustive", criterion_2),
        ("golden 14-gon reproduction", criterion_3),
        ("worked δ examples", criterion_4),
        ("submodule formula fit", criterion_5),
        ("support-change law", criterion_6),
        ("property suite, exhaustive", criterion_7),
    ];
    let mut ok = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(msg) => println!("criterion {}: PASS {name} ({msg}; {secs:.1}s)", k + 1),
            Err(msg) => {
                ok = false;
                println!("criterion {}: FAIL {name} ({msg}; {secs:.1}s)", k + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
