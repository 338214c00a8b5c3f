use std::sync::Arc;

use proptest::prelude::*;

use ctl_core::algebra::{build_end_algebra, normalize_to_module_rep};
use ctl_core::cluster::{reflection_relabeling, ClusterCategory};
use ctl_core::linalg::{q, Matrix};
use ctl_core::tilt::{enumerate_cluster_tilting, is_cluster_tilting, TiltingObject};
use ctl_core::{DynkinType, Family, OrientationPolicy, Quiver};

fn small_type() -> impl Strategy<Value = DynkinType> {
    prop_oneof![
        (2usize..=5).prop_map(|n| DynkinType::new(Family::A, n).unwrap()),
        (4usize..=6).prop_map(|n| DynkinType::new(Family::D, n).unwrap()),
        Just(DynkinType::new(Family::E, 6).unwrap()),
    ]
}

fn oriented() -> impl Strategy<Value = Quiver> {
    small_type().prop_flat_map(|d| {
        proptest::collection::vec(any::<bool>(), d.rank() - 1)
            .prop_map(move |f| Quiver::new(d, &OrientationPolicy::Explicit(f)).unwrap())
    })
}

fn category(q: &Quiver) -> Arc<ClusterCategory> {
    ClusterCategory::shared(q).unwrap()
}

fn default_of(q: &Quiver) -> Arc<ClusterCategory> {
    category(&Quiver::new(q.dynkin(), &OrientationPolicy::Default).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_do_not_depend_on_orientation(q in oriented()) {
        let cat = category(&q);
        let base = default_of(&q);
        prop_assert_eq!(cat.len(), base.len());
        let (mut a, mut b) = (cat.orbit_lengths(), base.orbit_lengths());
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(
            enumerate_cluster_tilting(&cat).unwrap().len(),
            enumerate_cluster_tilting(&base).unwrap().len()
        );
    }

    #[test]
    fn ext_is_symmetric(q in oriented()) {
        let cat = category(&q);
        for x in 0..cat.len() {
            for y in 0..cat.len() {
                prop_assert_eq!(cat.ext(x, y), cat.ext(y, x));
            }
        }
    }

    #[test]
    fn tau_preserves_hom(q in oriented(), k in -6i64..=6) {
        let cat = category(&q);
        for x in 0..cat.len() {
            prop_assert_eq!(cat.tau_pow(cat.tau_pow(x, k), -k), x);
            for y in 0..cat.len() {
                prop_assert_eq!(cat.hom(x, y), cat.hom(cat.tau_pow(x, k), cat.tau_pow(y, k)));
            }
        }
    }

    #[test]
    fn tau_maps_tilting_to_tilting(q in oriented(), pick in any::<prop::sample::Index>(), k in -4i64..=4) {
        let cat = category(&q);
        let all = enumerate_cluster_tilting(&cat).unwrap();
        let t = pick.get(&all);
        prop_assert!(is_cluster_tilting(&cat, &t.tau_pow(&cat, k).summands));
    }

    #[test]
    fn reflection_preserves_hom(q in oriented()) {
        let cat = category(&q);
        for v in q.vertices().filter(|&v| q.is_sink(v)) {
            let other = category(&q.reflected_at(v));
            let r = reflection_relabeling(&cat, &other, v).unwrap();
            for x in 0..cat.len() {
                for y in 0..cat.len() {
                    prop_assert_eq!(cat.hom(x, y), other.hom(r.apply(x), r.apply(y)));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn end_algebra_dimension_and_criterion(q in oriented(), pick in any::<prop::sample::Index>()) {
        let cat = category(&q);
        let all = enumerate_cluster_tilting(&cat).unwrap();
        let t: &TiltingObject = pick.get(&all);
        let norm = normalize_to_module_rep(&cat, t).unwrap();
        let g = build_end_algebra(&norm.category, &norm.tilting).unwrap();
        let expected: u32 = t.summands.iter().flat_map(|&x| t.summands.iter().map(move |&y| (x, y)))
            .map(|(x, y)| cat.hom(x, y))
            .sum();
        prop_assert_eq!(g.dim() as u32, expected);
        prop_assert!(g.is_associative());
        prop_assert_eq!(g.is_self_injective(), t.is_tau2_fixed(&cat));
    }
}

proptest! {
    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-3i64..=3, 36)) {
        let m = Matrix::from_fn(rows, cols, |r, c| q(seed[r * 6 + c]));
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), cols);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }
}
