//! Values recomputed by independent means and compared with the library.

use std::collections::BTreeSet;

use ctl_core::algebra::PresentationTemplate;
use ctl_core::cluster::ClusterCategory;
use ctl_core::rep::{Catalogue, Representation};
use ctl_core::tilt::enumerate_cluster_tilting;
use ctl_core::{DimVector, DynkinType, Family, Quiver};

fn all_types() -> Vec<(Family, usize)> {
    let mut v: Vec<_> = (1..=8).map(|n| (Family::A, n)).collect();
    v.extend((4..=8).map(|n| (Family::D, n)));
    v.extend((6..=8).map(|n| (Family::E, n)));
    v
}

/// Positive roots as the vectors with `q(x) = 1`, `q` the Tits form,
/// searched over coefficients `0..=6`.
fn tits_roots(d: DynkinType) -> BTreeSet<Vec<i64>> {
    let n = d.rank();
    let edges = d.edges();
    let mut out = BTreeSet::new();
    let mut x = vec![0i64; n];
    loop {
        let mut i = 0;
        while i < n && x[i] == 6 {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
        let q: i64 = x.iter().map(|v| v * v).sum::<i64>() - edges.iter().map(|&(a, b)| x[a] * x[b]).sum::<i64>();
        if q == 1 {
            out.insert(x.clone());
        }
    }
    out
}

#[test]
fn roots_match_tits_form() {
    for (f, n) in all_types() {
        let q = Quiver::build(f, n).unwrap();
        let ours: BTreeSet<Vec<i64>> = q.positive_roots().into_iter().map(|d| d.0).collect();
        assert_eq!(ours, tits_roots(q.dynkin()), "{f:?}{n}");
        assert_eq!(ours.len(), q.dynkin().root_count());
    }
}

#[test]
fn projective_and_injective_hom_vectors() {
    for (f, n) in [(Family::A, 4), (Family::D, 5), (Family::E, 6)] {
        let q = Quiver::build(f, n).unwrap();
        let c = Catalogue::build(&q).unwrap();
        for a in q.vertices() {
            for i in 0..c.len() {
                let d = c.dim_vector(i).0[a] as u32;
                assert_eq!(c.hom_dim(c.projective(a), i), d);
                assert_eq!(c.hom_dim(i, c.injective(a)), d);
            }
        }
    }
}

/// `<x, y> = Σ x_a y_a - Σ_{a -> b} x_a y_b`, straight from the arrows.
fn euler(q: &Quiver, x: &DimVector, y: &DimVector) -> i64 {
    let diag: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
    diag - q.arrows().iter().map(|&(s, t)| x.0[s] * y.0[t]).sum::<i64>()
}

#[test]
fn hom_minus_ext_is_euler_form() {
    for (f, n) in [(Family::A, 5), (Family::D, 6), (Family::E, 7)] {
        for orientation in ["default", &"b".repeat(n - 1), &"fb".repeat(n).chars().take(n - 1).collect::<String>()] {
            let q = Quiver::new(DynkinType::new(f, n).unwrap(), &orientation.parse().unwrap()).unwrap();
            let c = Catalogue::build(&q).unwrap();
            for i in 0..c.len() {
                for j in 0..c.len() {
                    let lhs = c.hom_dim(i, j) as i64 - c.ext_dim(i, j) as i64;
                    assert_eq!(lhs, euler(&q, &c.dim_vector(i), &c.dim_vector(j)), "{f:?}{n} {orientation}");
                }
            }
        }
    }
}

#[test]
fn hom_table_matches_direct_linear_algebra() {
    let q = Quiver::build(Family::D, 5).unwrap();
    let c = Catalogue::build(&q).unwrap();
    for i in 0..c.len() {
        for j in 0..c.len() {
            assert_eq!(c.rep(i).hom_dim(c.rep(j)).unwrap() as u32, c.hom_dim(i, j));
        }
    }
}

#[test]
fn ext_is_hom_into_tau_and_symmetric() {
    for (f, n) in all_types() {
        let cat = ClusterCategory::new(&Quiver::build(f, n).unwrap()).unwrap();
        for x in 0..cat.len() {
            for y in 0..cat.len() {
                assert_eq!(cat.ext(x, y), cat.hom(x, cat.tau(y)), "{f:?}{n}");
                assert_eq!(cat.ext(x, y), cat.ext(y, x), "{f:?}{n}");
            }
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn cluster_counts_are_catalan_type() {
    for n in 1..=7u64 {
        let cat = ClusterCategory::new(&Quiver::build(Family::A, n as usize).unwrap()).unwrap();
        let catalan = binom(2 * n + 2, n + 1) / (n + 2);
        assert_eq!(enumerate_cluster_tilting(&cat).unwrap().len() as u64, catalan, "A{n}");
    }
    for n in 4..=8u64 {
        let cat = ClusterCategory::new(&Quiver::build(Family::D, n as usize).unwrap()).unwrap();
        let want = (3 * n - 2) * binom(2 * n - 2, n - 1) / n;
        assert_eq!(enumerate_cluster_tilting(&cat).unwrap().len() as u64, want, "D{n}");
    }
}

/// Nonzero paths counted by hand: in `NakayamaCycle(n, l)` each vertex
/// starts `l` of them; in `BiserialD2m(m)` each `t_i` starts
/// `e, α, …, α^{m-1}, β` and each `b_i` starts `e, β', β'β`.
#[test]
fn template_dimensions_match_hand_counts() {
    for n in 2..=8 {
        for l in 1..=n {
            assert_eq!(PresentationTemplate::nakayama_cycle(n, l).dimension().unwrap(), n * l);
        }
    }
    for m in 3..=6 {
        assert_eq!(PresentationTemplate::biserial_d2m(m).dimension().unwrap(), m * (m + 1) + 3 * m);
    }
}

#[test]
fn simples_projectives_injectives_are_indecomposable() {
    let q = Quiver::build(Family::E, 6).unwrap();
    for a in q.vertices() {
        for r in [
            Representation::simple(&q, a).unwrap(),
            Representation::projective(&q, a).unwrap(),
            Representation::injective(&q, a).unwrap(),
        ] {
            assert!(r.is_indecomposable());
            assert_eq!(r.end_dim(), 1);
        }
    }
}
