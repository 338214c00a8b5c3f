//! Invariant suites run by `ctl selfcheck`.

use std::str::FromStr;
use std::sync::Arc;

use num_traits::One;
use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{build_end_algebra, normalize_to_module_rep, PresentationTemplate};
use crate::cluster::{CObject, ClusterCategory};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::quiver::{Family, Quiver};
use crate::rep::Catalogue;
use crate::tilt::{enumerate_cluster_tilting, selfinjective_candidates, TiltingObject};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scope {
    Fast,
    Full,
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Scope::Fast),
            "full" => Ok(Scope::Full),
            other => Err(Error::Unsupported(format!("selfcheck scope {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub passed: bool,
    pub detail: String,
}

/// Seed for sampled criterion checks.
pub const SAMPLE_SEED: u64 = 0x5eed_c1a5;
pub const SAMPLE_SIZE: usize = 100;

/// `End_C(T)` is self-injective exactly when `τ_c² T = T`.
pub fn criterion_agrees(cat: &Arc<ClusterCategory>, t: &TiltingObject) -> Result<bool> {
    let norm = normalize_to_module_rep(cat, t)?;
    let g = build_end_algebra(&norm.category, &norm.tilting)?;
    Ok(g.is_self_injective() == t.is_tau2_fixed(cat))
}

/// `count` tilting objects drawn uniformly without replacement, or all of
/// them when there are fewer.
pub fn sample_tilting(all: &[TiltingObject], count: usize, seed: u64) -> Vec<TiltingObject> {
    if all.len() <= count {
        return all.to_vec();
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut idx = rand::seq::index::sample(&mut rng, all.len(), count).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| all[i].clone()).collect()
}

/// Pairs where `hom_C` or `ext_C` differs from the value recomputed on the
/// opposite quiver, where `D` swaps arguments and keeps labels.
pub fn opposite_mismatches(cat: &ClusterCategory) -> Result<usize> {
    let op = ClusterCategory::new(&cat.quiver().opposite())?;
    let map: Vec<usize> = cat
        .labels()
        .iter()
        .map(|l| op.index_of(l))
        .collect::<Result<_>>()?;
    let mut bad = 0;
    for x in 0..cat.len() {
        for y in 0..cat.len() {
            if cat.hom(x, y) != op.hom(map[y], map[x]) || cat.ext(x, y) != op.ext(map[y], map[x]) {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

pub fn ext_asymmetries(cat: &ClusterCategory) -> usize {
    (0..cat.len())
        .flat_map(|x| (0..cat.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| cat.ext(x, y) != cat.ext(y, x))
        .count()
}

fn outcome(suite: String, res: Result<(bool, String)>) -> CheckOutcome {
    match res {
        Ok((passed, detail)) => CheckOutcome { suite, passed, detail },
        Err(e) => CheckOutcome {
            suite,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn type_suites(family: Family, rank: usize, exhaustive: bool) -> Vec<CheckOutcome> {
    let name = format!("{}{}", family.letter(), rank);
    let mut out = Vec::new();
    let q = match Quiver::build(family, rank) {
        Ok(q) => q,
        Err(e) => {
            out.push(outcome(format!("{name} build"), Err(e)));
            return out;
        }
    };
    let cat = match ClusterCategory::shared(&q) {
        Ok(c) => c,
        Err(e) => {
            out.push(outcome(format!("{name} category"), Err(e)));
            return out;
        }
    };
    let d = q.dynkin();
    out.push(outcome(format!("{name} roots"), {
        let roots = q.positive_roots().len();
        Catalogue::build(&q).map(|c| {
            (
                c.len() == roots && roots == d.root_count() && cat.len() == roots + rank,
                format!("{} indecomposable modules, {} positive roots", c.len(), roots),
            )
        })
    }));
    out.push(outcome(
        format!("{name} ext symmetry"),
        Ok({
            let bad = ext_asymmetries(&cat);
            (bad == 0, format!("{bad} asymmetric pairs"))
        }),
    ));
    if rank <= 6 {
        out.push(outcome(
            format!("{name} opposite-orientation oracle"),
            opposite_mismatches(&cat).map(|bad| (bad == 0, format!("{bad} mismatched pairs"))),
        ));
    }
    let all = match enumerate_cluster_tilting(&cat) {
        Ok(a) => a,
        Err(e) => {
            out.push(outcome(format!("{name} enumeration"), Err(e)));
            return out;
        }
    };
    out.push(outcome(
        format!("{name} cluster count"),
        Ok((
            all.len() as u64 == d.cluster_count(),
            format!("{} found, {} expected", all.len(), d.cluster_count()),
        )),
    ));
    out.push(outcome(format!("{name} tau closure"), {
        let set: std::collections::HashSet<&TiltingObject> = all.iter().collect();
        let open = all.iter().filter(|t| !set.contains(&t.tau_pow(&cat, 1))).count();
        Ok((open == 0, format!("{open} objects leave the set under tau_c")))
    }));
    let sample = if exhaustive {
        all.clone()
    } else {
        sample_tilting(&all, SAMPLE_SIZE, SAMPLE_SEED)
    };
    out.push(outcome(format!("{name} criterion equivalence"), {
        sample
            .par_iter()
            .map(|t| criterion_agrees(&cat, t))
            .collect::<Result<Vec<bool>>>()
            .map(|v| {
                let bad = v.iter().filter(|ok| !**ok).count();
                (
                    bad == 0,
                    format!(
                        "{bad} mismatches over {} objects ({})",
                        v.len(),
                        if exhaustive { "exhaustive" } else { "sampled" }
                    ),
                )
            })
    }));
    out
}

fn mutation_suite() -> CheckOutcome {
    let res = (|| -> Result<(bool, String)> {
        let q = Quiver::build(Family::A, 3)?;
        let cat = ClusterCategory::shared(&q)?;
        let all = enumerate_cluster_tilting(&cat)?;
        let t = selfinjective_candidates(&cat, &all)
            .into_iter()
            .next()
            .ok_or_else(|| Error::Consistency("A3 has no candidate".into()))?;
        let norm = normalize_to_module_rep(&cat, &t)?;
        let g = build_end_algebra(&norm.category, &norm.tilting)?;
        // bump the constant in e_i·x = x for the first radical element x
        let rad = g.radical_basis();
        let (a, b, k, c) = rad
            .iter()
            .find_map(|&b| {
                let a = g.idempotent(g.tag(b).target);
                g.product(a, b).first().map(|&(k, c)| (a, b, k, c))
            })
            .ok_or_else(|| Error::Consistency("no radical element".into()))?;
        let tampered = g.with_structure_constant(a, b, k, c + Q::one());
        let caught = g.is_associative() && !tampered.is_associative();
        Ok((caught, format!("tampered constant c[{a}][{b}][{k}] detected: {caught}")))
    })();
    outcome("associativity mutation".into(), res)
}

fn template_suite() -> CheckOutcome {
    let res = (|| -> Result<(bool, String)> {
        let mut ok = true;
        for n in 3..=8 {
            let t = PresentationTemplate::nakayama_cycle(n, n - 1);
            ok &= t.dimension()? == n * (n - 1) && t.algebra()?.is_self_injective();
        }
        for m in 3..=4 {
            let t = PresentationTemplate::biserial_d2m(m);
            ok &= t.dimension()? == m * m + 4 * m && t.algebra()?.is_self_injective();
        }
        Ok((ok, "template dimensions and self-injectivity".into()))
    })();
    outcome("templates".into(), res)
}

/// Runs the suites for `scope`. `fast` covers A_2..A_4 and D_4
/// exhaustively; `full` adds D_5..D_8 and E_6..E_8 (criterion sampled
/// beyond D_5).
pub fn selfcheck(scope: Scope) -> Vec<CheckOutcome> {
    let mut types = vec![
        (Family::A, 2, true),
        (Family::A, 3, true),
        (Family::A, 4, true),
        (Family::D, 4, true),
    ];
    if scope == Scope::Full {
        types.extend([
            (Family::D, 5, true),
            (Family::D, 6, false),
            (Family::D, 7, false),
            (Family::D, 8, false),
            (Family::E, 6, false),
            (Family::E, 7, false),
            (Family::E, 8, false),
        ]);
    }
    let mut out = vec![mutation_suite(), template_suite()];
    for (f, n, exhaustive) in types {
        out.extend(type_suites(f, n, exhaustive));
    }
    out
}

/// Labels parsed against a category, for callers holding strings.
pub fn parse_tilting(cat: &ClusterCategory, labels: &[String]) -> Result<TiltingObject> {
    let objs = labels
        .iter()
        .map(|s| s.parse::<CObject>())
        .collect::<Result<Vec<_>>>()?;
    TiltingObject::from_labels(cat, &objs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic() {
        let cat = ClusterCategory::shared(&Quiver::build(Family::D, 5).unwrap()).unwrap();
        let all = enumerate_cluster_tilting(&cat).unwrap();
        let a = sample_tilting(&all, 10, 7);
        assert_eq!(a, sample_tilting(&all, 10, 7));
        assert_eq!(a.len(), 10);
    }

    #[test]
    fn fast_scope_passes() {
        for o in selfcheck(Scope::Fast) {
            assert!(o.passed, "{}: {}", o.suite, o.detail);
        }
    }
}
