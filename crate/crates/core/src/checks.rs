//! Exhaustive cross-checks over every triangulation of small polygons.
//!
//! Each check runs triangulations in parallel and reports failures in
//! enumeration order, so the outcome does not depend on scheduling.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::frieze::{frieze_from_quiddity, frieze_from_triangulation, verify};
use crate::mutation::{mutate_frieze, support_change_check, DeltaContext, RegionLabel};
use crate::polygon::{
    all_arcs, enumerate_triangulations_bounded, flip, quiddity, PolygonError, Triangulation,
};
use crate::quiver::{isomorphisms, quiver_of_triangulation};
use crate::strings::position_of;

/// Failures kept per check; the count is always exact.
const KEEP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub n: usize,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn run<F>(name: &'static str, n: usize, check: F) -> Result<CheckOutcome, PolygonError>
where
    F: Fn(&Triangulation) -> Vec<String> + Sync,
{
    let ts = enumerate_triangulations_bounded(n, n.max(4))?;
    let per: Vec<Vec<String>> = ts.par_iter().map(&check).collect();
    let failed = per.iter().map(Vec::len).sum();
    Ok(CheckOutcome {
        name,
        n,
        cases: ts.len(),
        failed,
        failures: per.into_iter().flatten().take(KEEP).collect(),
    })
}

fn show(t: &Triangulation) -> String {
    serde_json::to_string(t).expect("triangulations serialize")
}

/// Both frieze pipelines agree and pass [`verify`].
pub fn conway_coxeter(n: usize) -> Result<CheckOutcome, PolygonError> {
    run("conway_coxeter", n, |t| {
        let mut out = Vec::new();
        let a = frieze_from_triangulation(t);
        let b = frieze_from_quiddity(&quiddity(t));
        match (a, b) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    out.push(format!("{}: pipelines disagree", show(t)));
                }
                for f in [&a, &b] {
                    if let Err(v) = verify(f) {
                        out.push(format!("{}: {v:?}", show(t)));
                    }
                }
            }
            (a, b) => out.push(format!("{}: {:?} / {:?}", show(t), a.err(), b.err())),
        }
        out
    })
}

/// The δ formula equals the change of every entry under every flip; the
/// mutated frieze equals the recomputed one; both closure memberships and
/// both quadrilateral labellings give the same δ.
pub fn frieze_difference(n: usize) -> Result<CheckOutcome, PolygonError> {
    run("frieze_difference", n, |t| {
        let mut out = Vec::new();
        for &a in t.diagonals() {
            let ctx = DeltaContext::new(t, a).expect("a is in t");
            let sw = ctx.swapped();
            let (t2, _) = flip(t, a).expect("a is in t");
            let after = frieze_from_triangulation(&t2).expect("valid triangulation");
            for d in all_arcs(n) {
                let expect = BigInt::from(ctx.frieze.entry_at(d)) - BigInt::from(after.entry_at(d));
                let regions = ctx.frame.memberships(d);
                for &reg in &regions {
                    let got = ctx.delta_in(d, reg).expect("member region").delta;
                    if got != expect {
                        out.push(format!(
                            "{} a={a} d={d} {reg}: δ={got}, change={expect}",
                            show(t)
                        ));
                    }
                }
                let got = sw.delta(d).delta;
                if got != expect {
                    out.push(format!(
                        "{} a={a} d={d} swapped: δ={got}, change={expect}",
                        show(t)
                    ));
                }
                if regions.len() > 1 && regions != [RegionLabel::CEClosure, RegionLabel::BDClosure]
                {
                    out.push(format!("{} a={a} d={d}: regions {regions:?}", show(t)));
                }
            }
            match mutate_frieze(t, a) {
                Ok((f, _)) if f == after => {}
                Ok(_) => out.push(format!("{} a={a}: mutated frieze differs", show(t))),
                Err(e) => out.push(format!("{} a={a}: {e}", show(t))),
            }
        }
        out
    })
}

/// [`support_change_check`] at every diagonal.
pub fn support_law(n: usize) -> Result<CheckOutcome, PolygonError> {
    run("support_law", n, |t| {
        let mut out = Vec::new();
        for &a in t.diagonals() {
            let rep = support_change_check(t, a).expect("a is in t");
            out.extend(
                rep.violations
                    .into_iter()
                    .map(|v| format!("{} a={a} d={}: {}", show(t), v.position, v.message)),
            );
        }
        out
    })
}

/// Flip involution, quiddity sum and ears, 1-positions, quiver shape and
/// agreement of flips with matrix mutation.
pub fn structure(n: usize) -> Result<CheckOutcome, PolygonError> {
    run("structure", n, |t| {
        let mut out = Vec::new();
        let q = quiddity(t);
        if q.iter().sum::<u64>() != 3 * n as u64 - 6 {
            out.push(format!("{}: quiddity sum", show(t)));
        }
        if q.iter().filter(|&&x| x == 1).count() != t.ears() {
            out.push(format!("{}: ones in quiddity != ears", show(t)));
        }
        let f = frieze_from_triangulation(t).expect("valid triangulation");
        let mut expect: Vec<_> = t.diagonals().iter().map(|&x| position_of(n, x)).collect();
        expect.sort();
        if f.ones() != expect {
            out.push(format!("{}: 1-positions {:?}", show(t), f.ones()));
        }
        let quiver = quiver_of_triangulation(t);
        for &(x, y) in quiver.arrows() {
            if x == y || quiver.has_arrow(y, x) {
                out.push(format!("{}: loop or 2-cycle at {x},{y}", show(t)));
            }
        }
        for v in 0..quiver.len() {
            if quiver.in_degree(v) > 2 || quiver.out_degree(v) > 2 {
                out.push(format!("{}: degree at {v}", show(t)));
            }
        }
        for &(x, y, z) in quiver.relations() {
            if !(quiver.has_arrow(x, y) && quiver.has_arrow(y, z) && quiver.has_arrow(z, x)) {
                out.push(format!("{}: relation {x},{y},{z} off a 3-cycle", show(t)));
            }
        }
        let b = quiver.exchange_matrix();
        for (k, &a) in t.diagonals().iter().enumerate() {
            let (t2, a2) = flip(t, a).expect("a is in t");
            if flip(&t2, a2).map(|x| x.0).as_ref() != Ok(t) {
                out.push(format!("{} a={a}: flip is not an involution", show(t)));
            }
            let mutated = b.mutate(k).relabel(k, a2).canonical();
            if mutated != quiver_of_triangulation(&t2).exchange_matrix().canonical() {
                out.push(format!(
                    "{} a={a}: quiver of flip differs from mutation",
                    show(t)
                ));
            }
        }
        out
    })
}

/// A triangulation whose quiver matches a target, with the image of every
/// target vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverMatch {
    pub triangulation: Triangulation,
    pub maps: Vec<Vec<usize>>,
}

/// Every triangulation of the `n`-gon whose quiver is isomorphic to the
/// quiver with `arrows` on vertices `0..n-3`, in enumeration order.
pub fn search_by_quiver(
    n: usize,
    arrows: &[(usize, usize)],
) -> Result<Vec<QuiverMatch>, PolygonError> {
    let k = n.saturating_sub(3);
    let profile = |arrows: &mut dyn Iterator<Item = (usize, usize)>| {
        let mut deg = vec![(0usize, 0usize); k];
        for (x, y) in arrows {
            deg[x].1 += 1;
            deg[y].0 += 1;
        }
        deg.sort_unstable();
        deg
    };
    let target = profile(&mut arrows.iter().copied());
    let ts = enumerate_triangulations_bounded(n, n.max(4))?;
    Ok(ts
        .into_par_iter()
        .filter_map(|t| {
            let q = quiver_of_triangulation(&t);
            if q.arrows().len() != arrows.len()
                || profile(&mut q.arrows().iter().copied()) != target
            {
                return None;
            }
            let maps = isomorphisms(k, arrows, &q);
            (!maps.is_empty()).then_some(QuiverMatch {
                triangulation: t,
                maps,
            })
        })
        .collect())
}

/// Every check for every `n` in `4..=max_n`.
pub fn run_all(max_n: usize) -> Result<Vec<CheckOutcome>, PolygonError> {
    let mut all = Vec::new();
    for n in 4..=max_n {
        all.push(structure(n)?);
        all.push(conway_coxeter(n)?);
        all.push(frieze_difference(n)?);
        all.push(support_law(n)?);
    }
    Ok(all)
}
