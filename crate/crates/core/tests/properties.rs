//! Randomised invariants over triangulations of polygons up to 14 vertices.

use frieze_core::frieze::{frieze_from_quiddity, frieze_from_triangulation, verify, Frieze};
use frieze_core::mutation::{mutate_frieze, DeltaContext, RegionLabel};
use frieze_core::polygon::{all_arcs, flip, quiddity, validate, Arc, Triangulation};
use frieze_core::quiver::quiver_of_triangulation;
use frieze_core::strings::{
    position_of, quotient_count_bruteforce, shape, submodule_count_bruteforce,
    submodule_count_formula, Admissibility, Direction, StringModule,
};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Splits the polygon recursively, each choice picking the apex over the
/// current edge.
fn build(n: usize, choices: &[usize]) -> Triangulation {
    fn go(
        i: usize,
        j: usize,
        n: usize,
        choices: &mut impl Iterator<Item = usize>,
        out: &mut Vec<Arc>,
    ) {
        if j - i < 2 {
            return;
        }
        let k = i + 1 + choices.next().unwrap_or(0) % (j - i - 1);
        for (x, y) in [(i, k), (k, j)] {
            if y - x > 1 && !(x == 1 && y == n) {
                out.push(Arc::new(x, y));
            }
        }
        go(i, k, n, choices, out);
        go(k, j, n, choices, out);
    }
    let mut out = Vec::new();
    go(1, n, n, &mut choices.iter().copied(), &mut out);
    validate(n, &out).expect("recursive splitting triangulates")
}

fn triangulation() -> impl Strategy<Value = Triangulation> {
    (4usize..=14)
        .prop_flat_map(|n| prop::collection::vec(any::<usize>(), n).prop_map(move |c| build(n, &c)))
}

fn with_diagonal() -> impl Strategy<Value = (Triangulation, Arc)> {
    triangulation().prop_flat_map(|t| {
        let k = t.diagonals().len();
        (Just(t), 0..k).prop_map(|(t, i)| {
            let a = t.diagonals()[i];
            (t, a)
        })
    })
}

fn direction() -> impl Strategy<Value = Direction> {
    prop_oneof![Just(Direction::Forward), Just(Direction::Backward)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flip_is_an_involution((t, a) in with_diagonal()) {
        let (t2, a2) = flip(&t, a).unwrap();
        prop_assert!(!t2.contains(&a));
        prop_assert!(a2.crosses(&a));
        let (t3, a3) = flip(&t2, a2).unwrap();
        prop_assert_eq!(t3, t);
        prop_assert_eq!(a3, a);
    }

    #[test]
    fn quiddity_sums_to_3n_minus_6(t in triangulation()) {
        let q = quiddity(&t);
        prop_assert_eq!(q.iter().sum::<u64>(), 3 * t.n() as u64 - 6);
        prop_assert!(q.iter().filter(|&&x| x == 1).count() >= 2);
    }

    #[test]
    fn pipelines_agree_and_verify(t in triangulation()) {
        let a = frieze_from_triangulation(&t).unwrap();
        let b = frieze_from_quiddity(&quiddity(&t)).unwrap();
        prop_assert!(verify(&a).is_ok());
        prop_assert_eq!(&a, &b);
        let back: Frieze = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn interior_ones_are_rotated_diagonals(t in triangulation()) {
        let f = frieze_from_triangulation(&t).unwrap();
        let mut expect: Vec<Arc> = t.diagonals().iter().map(|&x| position_of(t.n(), x)).collect();
        expect.sort();
        prop_assert_eq!(f.ones(), expect);
    }

    #[test]
    fn quiver_flips_by_mutation((t, a) in with_diagonal()) {
        let q = quiver_of_triangulation(&t);
        for &(x, y) in q.arrows() {
            prop_assert!(x != y && !q.has_arrow(y, x));
        }
        let k = t.index_of(&a).unwrap();
        let (t2, a2) = flip(&t, a).unwrap();
        let mutated = q.exchange_matrix().mutate(k).relabel(k, a2).canonical();
        prop_assert_eq!(mutated, quiver_of_triangulation(&t2).exchange_matrix().canonical());
    }

    #[test]
    fn delta_is_the_entry_change((t, a) in with_diagonal()) {
        let ctx = DeltaContext::new(&t, a).unwrap();
        let sw = ctx.swapped();
        let (t2, _) = flip(&t, a).unwrap();
        let after = frieze_from_triangulation(&t2).unwrap();
        for d in all_arcs(t.n()) {
            let change = BigInt::from(ctx.frieze.entry_at(d)) - BigInt::from(after.entry_at(d));
            let regions = ctx.frame.memberships(d);
            if regions.len() > 1 {
                prop_assert_eq!(&regions, &vec![RegionLabel::CEClosure, RegionLabel::BDClosure]);
            }
            for reg in regions {
                prop_assert_eq!(&ctx.delta_in(d, reg).unwrap().delta, &change);
            }
            prop_assert_eq!(&sw.delta(d).delta, &change);
        }
        prop_assert_eq!(mutate_frieze(&t, a).unwrap().0, after);
    }

    #[test]
    fn submodules_and_quotients_are_equinumerous(dirs in prop::collection::vec(direction(), 0..16)) {
        let m = StringModule::from_dirs(dirs);
        let s = submodule_count_bruteforce(&m).unwrap();
        prop_assert_eq!(s, quotient_count_bruteforce(&m).unwrap());
        prop_assert_eq!(s, submodule_count_bruteforce(&m.reversed()).unwrap());
        prop_assert_eq!(submodule_count_formula(&shape(&m), Admissibility::OddGaps), s.into());
    }
}
