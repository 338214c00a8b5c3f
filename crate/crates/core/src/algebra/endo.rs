use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num_traits::Zero;

use crate::cluster::{reflection_relabeling, ClusterCategory, Relabeling};
use crate::error::{ensure_consistent, Error, Result};
use crate::linalg::{Coordinates, Matrix, Q};
use crate::quiver::Vertex;
use crate::rep::{coxeter_minus, hom_basis_of, CoxeterTrace, Ext1Space, Morphism, Representation};
use crate::tilt::{is_cluster_tilting, TiltingObject};

use super::basic::{BasicAlgebra, BasisTag, Sparse};

/// Result of moving a cluster-tilting object to one with module summands
/// only, by an orientation change followed by a power of `τ_c`.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub category: Arc<ClusterCategory>,
    /// Sink reflections applied to the original orientation, in order.
    pub reflections: Vec<Vertex>,
    pub power: usize,
    /// Original objects to objects of `category`, before the `τ_c` power.
    pub relabel: Relabeling,
    pub tilting: TiltingObject,
}

fn module_only(cat: &ClusterCategory, t: &TiltingObject) -> bool {
    t.summands.iter().all(|&i| !cat.is_shifted(i))
}

/// Searches `τ_c^k T` for `k` over one period, first in the given
/// orientation and then breadth-first over sink reflections.
pub fn normalize_to_module_rep(cat: &Arc<ClusterCategory>, t: &TiltingObject) -> Result<Normalization> {
    if !is_cluster_tilting(cat, &t.summands) {
        return Err(Error::NotClusterTilting(t.label_strings(cat).join(" ")));
    }
    let mut seen = HashSet::new();
    seen.insert(cat.quiver().orientation_code());
    let mut queue = VecDeque::new();
    queue.push_back((Arc::clone(cat), Relabeling::identity(cat.len()), Vec::new()));
    while let Some((c, relabel, reflections)) = queue.pop_front() {
        let image = TiltingObject::new(t.summands.iter().map(|&i| relabel.apply(i)).collect());
        for k in 0..c.tau_period() {
            let moved = image.tau_pow(&c, k as i64);
            if module_only(&c, &moved) {
                return Ok(Normalization {
                    category: c,
                    reflections,
                    power: k,
                    relabel,
                    tilting: moved,
                });
            }
        }
        let q = c.quiver().clone();
        for v in q.vertices().filter(|&v| q.is_sink(v)) {
            let next_q = q.reflected_at(v);
            if !seen.insert(next_q.orientation_code()) {
                continue;
            }
            let next = ClusterCategory::shared(&next_q)?;
            let step = reflection_relabeling(&c, &next, v)?;
            let mut refl = reflections.clone();
            refl.push(v);
            queue.push_back((next, relabel.then(&step), refl));
        }
    }
    Err(Error::NormalizationFailed(t.label_strings(cat).join(" ")))
}

fn coordinates_of(basis: &[Morphism]) -> Option<Coordinates> {
    if basis.is_empty() {
        return None;
    }
    let vecs: Vec<Vec<Q>> = basis.iter().map(Morphism::to_vector).collect();
    let rows = vecs.first().map_or(0, Vec::len);
    Coordinates::new(Matrix::from_fn(rows, vecs.len(), |r, c| vecs[c][r]))
}

/// `End_C(T)` for a cluster-tilting object with module summands only.
///
/// Vertex `i` of the result is summand `t.summands[i]`. Degree 0 is
/// `Hom_H(T_i, T_j)`; degree 1 is `Ext¹_H(T_i, τ^{-1}T_j)`. Mixed products
/// are pullback along a degree-0 map on the right, and pushforward along
/// `τ^{-1}` of a degree-0 map on the left.
pub fn build_end_algebra(cat: &ClusterCategory, t: &TiltingObject) -> Result<BasicAlgebra> {
    if !module_only(cat, t) {
        return Err(Error::Unsupported(
            "endomorphism algebra needs module summands; normalize first".into(),
        ));
    }
    if !is_cluster_tilting(cat, &t.summands) {
        return Err(Error::NotClusterTilting(t.label_strings(cat).join(" ")));
    }
    let r = t.len();
    let reps: Vec<&Representation> = t.summands.iter().map(|&i| cat.catalogue().rep(i)).collect();
    let minus: Vec<(Representation, CoxeterTrace)> = reps.iter().map(|x| coxeter_minus(x)).collect();
    let injective: Vec<bool> = minus.iter().map(|(u, _)| u.is_zero()).collect();

    let mut hom: Vec<Vec<Vec<Morphism>>> = vec![vec![Vec::new(); r]; r];
    let mut hom_coords: Vec<Vec<Option<Coordinates>>> = vec![vec![None; r]; r];
    let mut ext: Vec<Vec<Option<Ext1Space>>> = vec![vec![None; r]; r];
    for i in 0..r {
        for j in 0..r {
            hom[i][j] = if i == j {
                ensure_consistent!(reps[i].end_dim() == 1, "summand {i} is not a brick");
                vec![Morphism::identity(reps[i])]
            } else {
                hom_basis_of(reps[i], reps[j])
            };
            hom_coords[i][j] = coordinates_of(&hom[i][j]);
            if !injective[j] {
                ext[i][j] = Some(reps[i].ext1_space(&minus[j].0)?);
            }
        }
    }

    let mut tags = Vec::new();
    // index of (block, degree, position) in the basis
    let mut deg0_index = vec![vec![Vec::new(); r]; r];
    let mut deg1_index = vec![vec![Vec::new(); r]; r];
    for i in 0..r {
        for j in 0..r {
            for _ in 0..hom[i][j].len() {
                deg0_index[i][j].push(tags.len());
                tags.push(BasisTag { source: i, target: j, degree: 0 });
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            let d = ext[i][j].as_ref().map_or(0, Ext1Space::dim);
            for _ in 0..d {
                deg1_index[i][j].push(tags.len());
                tags.push(BasisTag { source: i, target: j, degree: 1 });
            }
        }
    }
    let expected: u32 = t
        .summands
        .iter()
        .flat_map(|&x| t.summands.iter().map(move |&y| (x, y)))
        .map(|(x, y)| cat.hom(x, y))
        .sum();
    ensure_consistent!(
        tags.len() == expected as usize,
        "End algebra has dimension {} but the Hom table predicts {}",
        tags.len(),
        expected
    );

    // τ^{-1} on degree-0 basis maps between non-injective summands
    let tau_minus_map = |j: usize, l: usize, p: usize| -> Result<Morphism> {
        minus[j].1.apply(&hom[j][l][p], &minus[l].1)
    };

    let dim = tags.len();
    let mut products: Vec<Vec<Sparse>> = vec![vec![Vec::new(); dim]; dim];
    let to_sparse = |indices: &[usize], coords: &[Q]| -> Sparse {
        indices
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&k, &c)| (k, c))
            .collect()
    };
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                // x in block (j,l), y in block (i,j), product in block (i,l)
                for (p, &a) in deg0_index[j][l].iter().enumerate() {
                    for (q, &b) in deg0_index[i][j].iter().enumerate() {
                        let comp = hom[j][l][p].compose(&hom[i][j][q]);
                        let coords = match &hom_coords[i][l] {
                            Some(c) => c.of(&comp.to_vector()).ok_or_else(|| {
                                Error::Consistency("composite is not a morphism".into())
                            })?,
                            None => {
                                ensure_consistent!(comp.is_zero(), "nonzero composite in zero block");
                                Vec::new()
                            }
                        };
                        products[a][b] = to_sparse(&deg0_index[i][l], &coords);
                    }
                    if let (Some(src), false) = (&ext[i][j], injective[l]) {
                        let tm = tau_minus_map(j, l, p)?;
                        let tgt = ext[i][l].as_ref().expect("non-injective target");
                        for (q, &b) in deg1_index[i][j].iter().enumerate() {
                            let coords = src.pushforward(&tm, tgt, &crate::rep::unit(src.dim(), q));
                            products[a][b] = to_sparse(&deg1_index[i][l], &coords);
                        }
                    }
                }
                if let Some(src) = &ext[j][l] {
                    let tgt = ext[i][l].as_ref().expect("same target");
                    for (p, &a) in deg1_index[j][l].iter().enumerate() {
                        for (q, &b) in deg0_index[i][j].iter().enumerate() {
                            let coords = src.pullback(&hom[i][j][q], tgt, &crate::rep::unit(src.dim(), p));
                            products[a][b] = to_sparse(&deg1_index[i][l], &coords);
                        }
                    }
                }
            }
        }
    }
    let idempotents = (0..r).map(|i| deg0_index[i][i][0]).collect();
    let alg = BasicAlgebra::new(r, tags, idempotents, products)?;
    if let Some((a, b, c)) = alg.associativity_defect() {
        return Err(Error::Consistency(format!(
            "End algebra not associative on basis triple ({a}, {b}, {c})"
        )));
    }
    Ok(alg)
}

/// `End_H(T)` for a tilting module `T`: the degree-0 part.
pub fn tilted_algebra(cat: &ClusterCategory, t: &TiltingObject) -> Result<BasicAlgebra> {
    let names = || t.label_strings(cat).join(" ");
    if !module_only(cat, t) || t.len() != cat.n() {
        return Err(Error::NotTiltingModule(names()));
    }
    let c = cat.catalogue();
    for &x in &t.summands {
        for &y in &t.summands {
            if c.ext_dim(x, y) != 0 {
                return Err(Error::NotTiltingModule(names()));
            }
        }
    }
    build_end_algebra(cat, t)?.degree_zero_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Family, Quiver};

    #[test]
    fn projective_generator_gives_path_algebra() {
        let cat = ClusterCategory::new(&Quiver::build(Family::A, 2).unwrap()).unwrap();
        let t = TiltingObject::new(vec![cat.projective(0), cat.projective(1)]);
        let g = build_end_algebra(&cat, &t).unwrap();
        assert_eq!(g.dim(), 3);
        assert!(g.tags().iter().all(|b| b.degree == 0));
    }

    #[test]
    fn shifted_summand_normalizes_with_one_step() {
        let cat = ClusterCategory::shared(&Quiver::build(Family::A, 3).unwrap()).unwrap();
        let all = crate::tilt::enumerate_cluster_tilting(&cat).unwrap();
        for t in all {
            let norm = normalize_to_module_rep(&cat, &t).unwrap();
            let g = build_end_algebra(&norm.category, &norm.tilting).unwrap();
            let expect: u32 = t
                .summands
                .iter()
                .flat_map(|&x| t.summands.iter().map(move |&y| (x, y)))
                .map(|(x, y)| cat.hom(x, y))
                .sum();
            assert_eq!(g.dim() as u32, expect);
        }
    }
}
