//! Acceptance suite. Each test prints one `PASS`/`FAIL` line and fails on
//! `FAIL`. Run with `--nocapture` to see the lines.

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, Mutex, MutexGuard};
use std::time::{Duration, Instant};

use ctl_core::algebra::{build_end_algebra, ext2_injective_projective, normalize_to_module_rep, tilted_algebra};
use ctl_core::classify::{classify, ClassificationReport};
use ctl_core::cluster::{ar_quiver_c, mod_gamma_quiver, ClusterCategory};
use ctl_core::selfcheck::{criterion_agrees, ext_asymmetries, opposite_mismatches, sample_tilting, SAMPLE_SEED};
use ctl_core::tilt::{enumerate_cluster_tilting, selfinjective_candidates};
use ctl_core::{DynkinType, Family, Quiver};

const INDECOMPOSABLE_BUDGET: Duration = Duration::from_secs(1);
const ORBIT_BUDGET: Duration = Duration::from_secs(1);
const HAMMOCK_BUDGET: Duration = Duration::from_secs(5);
const E8_ENUMERATION_BUDGET: Duration = Duration::from_secs(120);
const D8_CLASSIFY_BUDGET: Duration = Duration::from_secs(600);
const SAMPLES_PER_TYPE: usize = 100;

// Timed criteria must not share the machine with each other.
static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn report(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {id:>2} PASS {name}");
    } else {
        println!("criterion {id:>2} FAIL {name}: {}", failures.join("; "));
        panic!("criterion {id} failed: {}", failures.join("; "));
    }
}

fn quiver(f: Family, n: usize) -> Quiver {
    Quiver::build(f, n).unwrap()
}

fn shared(f: Family, n: usize) -> Arc<ClusterCategory> {
    ClusterCategory::shared(&quiver(f, n)).unwrap()
}

fn orbit_len_of(cat: &ClusterCategory, x: usize) -> usize {
    cat.orbits().iter().find(|o| o.contains(&x)).unwrap().len()
}

#[test]
fn criterion_01_indecomposable_counts() {
    let _g = serial();
    let mut bad = Vec::new();
    let expected = [
        (Family::A, 3, 9),
        (Family::D, 4, 16),
        (Family::D, 5, 25),
        (Family::D, 6, 36),
        (Family::D, 8, 64),
        (Family::E, 6, 42),
        (Family::E, 7, 70),
        (Family::E, 8, 128),
    ];
    for (f, n, want) in expected {
        let q = quiver(f, n);
        let start = Instant::now();
        let cat = ClusterCategory::new(&q).unwrap();
        let took = start.elapsed();
        // oracle: positive roots from the root closure plus one shift per vertex
        let derived = q.positive_roots().len() + n;
        if cat.len() != want || derived != want {
            bad.push(format!("{}{n}: {} objects, {derived} derived, {want} expected", f.letter(), cat.len()));
        }
        if took > INDECOMPOSABLE_BUDGET {
            bad.push(format!("{}{n}: {took:?}", f.letter()));
        }
    }
    report(1, "indecomposable counts", &bad);
}

#[test]
fn criterion_02_orbit_structure() {
    let _g = serial();
    let mut bad = Vec::new();
    let timed = |f: Family, n: usize| {
        let start = Instant::now();
        let cat = ClusterCategory::new(&quiver(f, n)).unwrap();
        (cat, start.elapsed())
    };
    let mut check = |ok: bool, what: String| {
        if !ok {
            bad.push(what);
        }
    };

    let (a3, t) = timed(Family::A, 3);
    let mut lens = a3.orbit_lengths();
    lens.sort_unstable();
    check(lens == [3, 6] && t <= ORBIT_BUDGET, format!("A3 orbits {lens:?} in {t:?}"));

    let (e7, t) = timed(Family::E, 7);
    let lens = e7.orbit_lengths();
    check(lens.iter().all(|&l| l == 10) && t <= ORBIT_BUDGET, format!("E7 orbits {lens:?} in {t:?}"));

    for n in 4..=8 {
        let (cat, t) = timed(Family::D, n);
        check(t <= ORBIT_BUDGET, format!("D{n} took {t:?}"));
        let q = cat.quiver().clone();
        let leaves = q.leaves();
        let short: Vec<usize> = leaves
            .iter()
            .copied()
            .filter(|&a| q.arm_distance(a).unwrap() == Some(2))
            .collect();
        let short_orbits: HashSet<Vec<usize>> = short
            .iter()
            .map(|&a| {
                let p = cat.projective(a);
                cat.orbits().into_iter().find(|o| o.contains(&p)).unwrap()
            })
            .collect();
        let short_lens: Vec<usize> = short.iter().map(|&a| orbit_len_of(&cat, cat.projective(a))).collect();
        if n == 4 {
            check(
                short.len() == 3 && short_orbits.len() == 3 && short_lens.iter().all(|&l| l == 4),
                format!("D4 short-arm orbits {short_lens:?}"),
            );
        } else if n % 2 == 1 {
            check(
                short_orbits.len() == 1 && short_lens.iter().all(|&l| l == 2 * n),
                format!("D{n} short-arm orbits {short_lens:?}"),
            );
        } else {
            check(
                short_orbits.len() == 2 && short_lens.iter().all(|&l| l == n),
                format!("D{n} short-arm orbits {short_lens:?}"),
            );
        }
        for &a in &leaves {
            if q.arm_distance(a).unwrap().unwrap() > 2 {
                let l = orbit_len_of(&cat, cat.projective(a));
                check(l == n, format!("D{n} long-arm orbit length {l}"));
            }
        }
    }
    report(2, "orbit structure", &bad);
}

/// Per interior vertex of `A_n`: `Hom(P(a), τ⁻¹P(a)) ≠ 0` in every
/// orientation, with a non-injective target in at least one of them. For
/// `D_n` and `E_n` everything is checked in the default orientation.
#[test]
fn criterion_03_exclusion_hom_facts() {
    let _g = serial();
    let mut bad = Vec::new();
    let start = Instant::now();
    for n in 4..=8 {
        let d = DynkinType::new(Family::A, n).unwrap();
        let mut non_injective = vec![false; n];
        for q in Quiver::all_orientations(d) {
            let cat = ClusterCategory::new(&q).unwrap();
            for a in (1..n - 1).filter(|&a| q.degree(a) > 1) {
                let h = cat.hammock(a).unwrap();
                match h.entries.iter().find(|e| e.t == 1) {
                    Some(e) if e.hom >= 1 => non_injective[a] |= !e.injective,
                    other => bad.push(format!("A{n} {} interior {}: t=1 gives {other:?}", q.orientation_code(), a + 1)),
                }
            }
        }
        for (a, &seen) in non_injective.iter().enumerate().take(n - 1).skip(1) {
            if !seen {
                bad.push(format!("A{n} interior {}: target injective in every orientation", a + 1));
            }
        }
    }
    let mut types: Vec<(Family, usize)> = (4..=8).map(|n| (Family::D, n)).collect();
    types.extend((6..=8).map(|n| (Family::E, n)));
    for (f, n) in types {
        let q = quiver(f, n);
        let cat = ClusterCategory::new(&q).unwrap();
        let name = format!("{}{n}", f.letter());
        for a in q.vertices() {
            let h = cat.hammock(a).unwrap();
            let at = |t: usize| h.entries.iter().find(|e| e.t == t).copied();
            if q.degree(a) > 1 {
                match at(1) {
                    Some(e) if e.hom >= 1 && !e.injective => {}
                    other => bad.push(format!("{name} interior {}: t=1 gives {other:?}", a + 1)),
                }
            } else {
                let p = q.arm_distance(a).unwrap().unwrap();
                if !at(p).is_some_and(|e| e.hom > 0) {
                    bad.push(format!("{name} leaf {}: zero at t=p={p}", a + 1));
                }
                if f == Family::E && p == 2 && !at(3).is_some_and(|e| e.hom > 0 && !e.injective) {
                    bad.push(format!("{name} leaf {}: zero at t=3", a + 1));
                }
            }
        }
    }
    let took = start.elapsed();
    if took > HAMMOCK_BUDGET {
        bad.push(format!("took {took:?}"));
    }
    report(3, "exclusion hom facts", &bad);
}

/// Catalan-type closed forms, computed here rather than taken from the library.
fn closed_form(f: Family, n: u64) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    match f {
        Family::A => binom(2 * n + 2, n + 1) / (n + 2),
        Family::D => (3 * n - 2) * binom(2 * n - 2, n - 1) / n,
        Family::E => [833, 4160, 25080][n as usize - 6],
    }
}

#[test]
fn criterion_04_cluster_tilting_counts() {
    let _g = serial();
    let mut bad = Vec::new();
    let expected = [
        (Family::A, 2, 5),
        (Family::A, 3, 14),
        (Family::D, 4, 50),
        (Family::D, 5, 182),
        (Family::D, 6, 672),
        (Family::E, 6, 833),
        (Family::E, 7, 4160),
        (Family::E, 8, 25080),
    ];
    for (f, n, want) in expected {
        let cat = ClusterCategory::new(&quiver(f, n)).unwrap();
        let start = Instant::now();
        let got = enumerate_cluster_tilting(&cat).unwrap().len();
        let took = start.elapsed();
        if got != want || closed_form(f, n as u64) != want as u64 {
            bad.push(format!("{}{n}: {got} found, {want} expected", f.letter()));
        }
        if f == Family::E && n == 8 && took > E8_ENUMERATION_BUDGET {
            bad.push(format!("E8 enumeration took {took:?}"));
        }
    }
    report(4, "cluster-tilting counts", &bad);
}

fn reports() -> &'static BTreeMap<String, ClassificationReport> {
    static REPORTS: once_cell::sync::Lazy<BTreeMap<String, ClassificationReport>> = once_cell::sync::Lazy::new(|| {
        let mut types = vec![(Family::A, 3)];
        types.extend((4..=8).map(|n| (Family::D, n)));
        types.extend((6..=8).map(|n| (Family::E, n)));
        types
            .into_iter()
            .map(|(f, n)| {
                let r = classify(&quiver(f, n)).unwrap();
                (r.dynkin.clone(), r)
            })
            .collect()
    });
    &REPORTS
}

#[test]
fn criterion_05_classification() {
    let _g = serial();
    let mut bad = Vec::new();
    let start = Instant::now();
    let d8 = classify(&quiver(Family::D, 8)).unwrap();
    let took = start.elapsed();
    if took > D8_CLASSIFY_BUDGET {
        bad.push(format!("D8 classification took {took:?}"));
    }
    if &d8 != reports().get("D8").unwrap() {
        bad.push("D8 classification is not deterministic".into());
    }
    for (name, r) in reports() {
        let n = r.rank;
        let serial_family = format!("NakayamaCycle({n},{})", n - 1);
        let want: Vec<String> = match (name.as_str(), n) {
            ("E6" | "E7" | "E8", _) => vec![],
            (_, 6) | (_, 8) => vec![format!("BiserialD2m({})", n / 2), serial_family.clone()],
            _ => vec![serial_family.clone()],
        };
        if r.families != want {
            bad.push(format!("{name}: families {:?}, expected {want:?}", r.families));
        }
        for f in &r.finalists {
            let relations = if f.family == serial_family { n } else { 3 * (n / 2) };
            if f.template_match.relations_verified != relations {
                bad.push(format!(
                    "{name}: {} has {} of {relations} relations verified",
                    f.family, f.template_match.relations_verified
                ));
            }
            if f.family == serial_family && f.algebra.kupisch_series != Some(vec![n - 1; n]) {
                bad.push(format!("{name}: Kupisch series {:?}", f.algebra.kupisch_series));
            }
        }
    }
    report(5, "classification", &bad);
}

#[test]
fn criterion_06_criterion_equivalence() {
    let _g = serial();
    let mut bad = Vec::new();
    let exhaustive = [(Family::A, 3), (Family::A, 4), (Family::D, 4), (Family::D, 5)];
    let sampled = [(Family::D, 6), (Family::D, 7), (Family::D, 8), (Family::E, 6)];
    for (f, n, all_of_them) in exhaustive
        .iter()
        .map(|&(f, n)| (f, n, true))
        .chain(sampled.iter().map(|&(f, n)| (f, n, false)))
    {
        let cat = shared(f, n);
        let all = enumerate_cluster_tilting(&cat).unwrap();
        let pool = if all_of_them {
            all.clone()
        } else {
            sample_tilting(&all, SAMPLES_PER_TYPE, SAMPLE_SEED)
        };
        if !all_of_them && pool.len() < SAMPLES_PER_TYPE {
            bad.push(format!("{}{n}: only {} samples", f.letter(), pool.len()));
        }
        // every candidate is checked as well, so the sample sees both sides
        let mut pool: Vec<_> = pool.into_iter().collect();
        for c in selfinjective_candidates(&cat, &all) {
            if !pool.contains(&c) {
                pool.push(c);
            }
        }
        let mismatches = pool.iter().filter(|t| !criterion_agrees(&cat, t).unwrap()).count();
        if mismatches > 0 {
            bad.push(format!("{}{n}: {mismatches} mismatches over {}", f.letter(), pool.len()));
        }
    }
    report(6, "criterion equivalence", &bad);
}

#[test]
fn criterion_07_nakayama_orbits() {
    let _g = serial();
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for r in reports().values() {
        let n = r.rank;
        for f in r.finalists.iter().filter(|f| f.family.starts_with("NakayamaCycle")) {
            seen.push(n);
            let orbits = f.algebra.nakayama_cycle_type.as_ref().map(Vec::len);
            let want = if n % 2 == 0 { 2 } else { 1 };
            if orbits != Some(want) {
                bad.push(format!("{}: ν has {orbits:?} orbits, expected {want}", r.dynkin));
            }
        }
    }
    seen.sort_unstable();
    seen.dedup();
    if seen != (3..=8).collect::<Vec<_>>() {
        bad.push(format!("serial finalists only for n in {seen:?}"));
    }
    report(7, "nakayama permutation orbits", &bad);
}

/// Dimension of `kQ/(I + J^len)` where `J^len` is spanned by the paths of
/// length at least `len`, by linear algebra over `F_p`.
fn truncated_dimension(
    vertices: usize,
    arrows: &[(usize, usize)],
    zero: &[Vec<usize>],
    commute: &[(Vec<usize>, Vec<usize>)],
    len: usize,
) -> usize {
    const P: i64 = 1_000_003;
    let mut paths: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    let mut layer = paths.clone();
    for _ in 2..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                let end = arrows[*w.last().unwrap()].1;
                (0..arrows.len()).filter(move |&a| arrows[a].0 == end).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        paths.extend(layer.iter().cloned());
    }
    let index: BTreeMap<&Vec<usize>, usize> = paths.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let relations: Vec<(&Vec<usize>, Option<&Vec<usize>>)> = zero
        .iter()
        .map(|z| (z, None))
        .chain(commute.iter().flat_map(|(p, q)| [(p, Some(q)), (q, Some(p))]))
        .collect();
    // ideal generators u·r·v from either side of each relation; words of
    // length >= len are already zero
    let mut pivots: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
    for w in &paths {
        for &(r, other) in &relations {
            for at in 0..w.len() {
                if !w[at..].starts_with(r) {
                    continue;
                }
                let mut row = BTreeMap::from([(index[w], 1i64)]);
                if let Some(q) = other {
                    let mut v = w[..at].to_vec();
                    v.extend(q);
                    v.extend(&w[at + r.len()..]);
                    if let Some(&j) = index.get(&v) {
                        *row.entry(j).or_insert(0) += P - 1;
                    }
                }
                row.retain(|_, c| *c % P != 0);
                while let Some((&lead, &c)) = row.iter().next() {
                    let Some(piv) = pivots.get(&lead) else {
                        pivots.insert(lead, row);
                        break;
                    };
                    let f = c * inverse(piv[&lead], P) % P;
                    for (&k, &pc) in piv {
                        let e = row.entry(k).or_insert(0);
                        *e = ((*e - f * pc) % P + P) % P;
                    }
                    row.retain(|_, c| *c != 0);
                }
            }
        }
    }
    vertices + paths.len() - pivots.len()
}

/// `dim kQ/I`, once the truncated dimension has stopped changing.
fn quotient_dimension(
    vertices: usize,
    arrows: &[(usize, usize)],
    zero: &[Vec<usize>],
    commute: &[(Vec<usize>, Vec<usize>)],
    from_len: usize,
) -> usize {
    let dims: Vec<usize> = (from_len..from_len + 3)
        .map(|l| truncated_dimension(vertices, arrows, zero, commute, l))
        .collect();
    assert!(dims.windows(2).all(|w| w[0] == w[1]), "truncated dimensions {dims:?} not stable");
    dims[0]
}

fn inverse(a: i64, p: i64) -> i64 {
    let (mut r, mut base, mut e) = (1i64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

fn nakayama_dimension(n: usize, loewy: usize) -> usize {
    let arrows: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let zero: Vec<Vec<usize>> = (0..n).map(|i| (0..loewy).map(|k| (i + k) % n).collect()).collect();
    quotient_dimension(n, &arrows, &zero, &[], loewy + 1)
}

/// `t_i -α-> t_{i+1}`, `t_i -β-> b_i -β-> t_{i+m-1}`; `αβ = βα = 0`,
/// `α^{m-1} = β²`.
fn biserial_dimension(m: usize) -> usize {
    let mut arrows = Vec::new();
    for i in 0..m {
        arrows.push((i, (i + 1) % m));
    }
    for i in 0..m {
        arrows.push((i, m + i));
    }
    for i in 0..m {
        arrows.push((m + i, (i + m - 1) % m));
    }
    let (al, be, be2) = (|i: usize| i % m, |i: usize| m + i % m, |i: usize| 2 * m + i % m);
    let mut zero = Vec::new();
    let mut commute = Vec::new();
    for i in 0..m {
        zero.push(vec![al(i), be(i + 1)]);
        zero.push(vec![be2(i), al(i + m - 1)]);
        commute.push(((0..m - 1).map(|k| al(i + k)).collect(), vec![be(i), be2(i)]));
    }
    quotient_dimension(2 * m, &arrows, &zero, &commute, m + 2)
}

#[test]
fn criterion_08_structural_recognition() {
    let _g = serial();
    let mut bad = Vec::new();
    for r in reports().values() {
        let n = r.rank;
        for f in &r.finalists {
            if !f.algebra.special_biserial {
                bad.push(format!("{}: {} not special biserial", r.dynkin, f.family));
            }
            let (formula, oracle) = if f.family.starts_with("NakayamaCycle") {
                (n * (n - 1), nakayama_dimension(n, n - 1))
            } else {
                let m = n / 2;
                (m * m + 4 * m, biserial_dimension(m))
            };
            if f.algebra.dimension != formula || oracle != formula || f.template_match.dimension != formula {
                bad.push(format!(
                    "{} {}: dim {}, formula {formula}, path count {oracle}",
                    r.dynkin, f.family, f.algebra.dimension
                ));
            }
        }
    }
    report(8, "structural recognition", &bad);
}

#[test]
fn criterion_09_trivial_extension() {
    let _g = serial();
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in reports().values() {
        let f: Family = r.dynkin[..1].parse().unwrap();
        let cat = shared(f, r.rank);
        let all = enumerate_cluster_tilting(&cat).unwrap();
        for t in selfinjective_candidates(&cat, &all) {
            checked += 1;
            let norm = normalize_to_module_rep(&cat, &t).unwrap();
            let gamma = build_end_algebra(&norm.category, &norm.tilting).unwrap();
            let a = tilted_algebra(&norm.category, &norm.tilting).unwrap();
            let e = ext2_injective_projective(&a);
            let total: usize = e.iter().flatten().sum();
            let (cg, ca) = (gamma.cartan(), a.cartan());
            let n = gamma.vertex_count();
            let cartan_ok = (0..n).all(|i| (0..n).all(|j| cg[i][j] == ca[i][j] + e[i][j]));
            if gamma.dim() != a.dim() + total || !cartan_ok {
                bad.push(format!("{} {:?}: {} vs {} + {total}", r.dynkin, t.label_strings(&cat), gamma.dim(), a.dim()));
            }
        }
        if r.finalists.iter().any(|f| !f.trivial_extension.holds()) {
            bad.push(format!("{}: reported check fails", r.dynkin));
        }
    }
    if checked == 0 {
        bad.push("no finalists checked".into());
    }
    report(9, "trivial-extension cross-check", &bad);
}

#[test]
fn criterion_10_oracle_equivalence() {
    let _g = serial();
    let mut bad = Vec::new();
    let mut types: Vec<(Family, usize)> = (1..=8).map(|n| (Family::A, n)).collect();
    types.extend((4..=8).map(|n| (Family::D, n)));
    types.extend((6..=8).map(|n| (Family::E, n)));
    for (f, n) in types {
        let cat = shared(f, n);
        let asym = ext_asymmetries(&cat);
        if asym > 0 {
            bad.push(format!("{}{n}: {asym} asymmetric ext pairs", f.letter()));
        }
        if n <= 6 {
            let m = opposite_mismatches(&cat).unwrap();
            if m > 0 {
                bad.push(format!("{}{n}: {m} opposite-orientation mismatches", f.letter()));
            }
        }
    }
    report(10, "oracle equivalence", &bad);
}

/// Structural slice checks: every vertex has in- and out-degree equal to
/// the degree of its row in the diagram, and every row holds `per_row`
/// vertices.
fn slice_failures(cat: &ClusterCategory, per_row: usize) -> Vec<String> {
    let name = cat.quiver().dynkin().to_string();
    let g = ar_quiver_c(cat, &[]).unwrap();
    let q = cat.quiver();
    let mut bad = Vec::new();
    if !g.mesh_holds() {
        bad.push(format!("{name}: mesh relations fail"));
    }
    for v in 0..g.vertex_count() {
        let row = g.positions[v].1;
        if g.in_degree(v) != q.degree(row) || g.out_degree(v) != q.degree(row) {
            bad.push(format!("{name}: {} has degrees ({}, {})", g.labels[v], g.in_degree(v), g.out_degree(v)));
        }
    }
    for a in q.vertices() {
        let count = g.positions.iter().filter(|p| p.1 == a).count();
        if count != per_row {
            bad.push(format!("{name}: row {} has {count} vertices", a + 1));
        }
    }
    bad
}

#[test]
fn criterion_11_figure_reproduction() {
    let _g = serial();
    let mut bad = Vec::new();

    let a3 = shared(Family::A, 3);
    let g = ar_quiver_c(&a3, &[]).unwrap();
    if (g.vertex_count(), g.arrow_count()) != (9, 12) {
        bad.push(format!("A3: {} vertices, {} arrows", g.vertex_count(), g.arrow_count()));
    }
    for t in enumerate_cluster_tilting(&a3).unwrap() {
        let marked = ar_quiver_c(&a3, &t.summands).unwrap().marked_count();
        if marked != 3 {
            bad.push(format!("A3 {:?}: {marked} marks", t.label_strings(&a3)));
        }
    }

    let d7 = shared(Family::D, 7);
    bad.extend(slice_failures(&d7, 7));
    if !d7.twisted() {
        bad.push("D7 strip is not glued with a twist".into());
    }
    let d8 = shared(Family::D, 8);
    let v8 = ar_quiver_c(&d8, &[]).unwrap().vertex_count();
    if v8 != 64 {
        bad.push(format!("D8: {v8} vertices"));
    }
    bad.extend(slice_failures(&d8, 8));
    if d8.twisted() {
        bad.push("D8 strip is glued with a twist".into());
    }

    for (f, n) in [(Family::A, 3), (Family::D, 4), (Family::D, 6), (Family::D, 7), (Family::D, 8)] {
        let cat = shared(f, n);
        let all = enumerate_cluster_tilting(&cat).unwrap();
        for t in selfinjective_candidates(&cat, &all).iter().chain(all.iter().take(5)) {
            let g = mod_gamma_quiver(&cat, &t.summands).unwrap();
            if g.vertex_count() + n != cat.len() {
                bad.push(format!("{}{n} mod-gamma: {} vertices", f.letter(), g.vertex_count()));
            }
        }
    }
    report(11, "figure reproduction", &bad);
}

/// The stated D_7 vertex count. `C(D_7)` has 42 + 7 = 49 objects, so this
/// target value cannot be met.
#[test]
#[ignore = "expected 39 vertices for D7; C(D7) has 42 positive roots + 7 shifted projectives = 49"]
fn criterion_11_d7_vertex_count() {
    let d7 = shared(Family::D, 7);
    let v = ar_quiver_c(&d7, &[]).unwrap().vertex_count();
    let bad = if v == 39 { vec![] } else { vec![format!("D7: {v} vertices, 39 expected")] };
    report(11, "figure reproduction (D7 vertex count)", &bad);
}

