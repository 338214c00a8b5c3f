use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_consistent, Error, Result};
use crate::linalg::{Matrix, Subspace, Q};

/// Position of a basis element: it lies in `e_target Γ e_source`, i.e. it
/// is a map from summand `source` to summand `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisTag {
    pub source: usize,
    pub target: usize,
    pub degree: u8,
}

/// Sparse vector in the algebra basis.
pub type Sparse = Vec<(usize, Q)>;

/// A finite-dimensional basic algebra given by a basis, block tags and
/// structure constants.
///
/// The product `x·y` is composition `x ∘ y`: it is nonzero only when
/// `y.target == x.source`. Every basis element other than the idempotents
/// is assumed to lie in the radical; [`BasicAlgebra::radical_layers`]
/// checks nilpotency.
#[derive(Clone, Debug, PartialEq)]
pub struct BasicAlgebra {
    vertices: usize,
    tags: Vec<BasisTag>,
    idempotents: Vec<usize>,
    products: Vec<Vec<Sparse>>,
    blocks: Vec<Vec<Vec<usize>>>,
}

/// Radical powers `R_k`, one subspace per block, in block coordinates.
#[derive(Clone, Debug)]
pub struct RadicalLayers {
    pub powers: Vec<Vec<Vec<Subspace>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GabrielQuiver {
    pub vertices: usize,
    /// `(source, target)` per arrow, sorted.
    pub arrows: Vec<(usize, usize)>,
    /// Basis element chosen to represent each arrow.
    pub representatives: Vec<usize>,
}

impl GabrielQuiver {
    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }
}

impl BasicAlgebra {
    /// Validates block compatibility of every structure constant and the
    /// idempotent axioms.
    pub fn new(
        vertices: usize,
        tags: Vec<BasisTag>,
        idempotents: Vec<usize>,
        products: Vec<Vec<Sparse>>,
    ) -> Result<Self> {
        let dim = tags.len();
        ensure_consistent!(idempotents.len() == vertices, "one idempotent per vertex");
        ensure_consistent!(
            products.len() == dim && products.iter().all(|r| r.len() == dim),
            "structure constant table has wrong shape"
        );
        let mut blocks = vec![vec![Vec::new(); vertices]; vertices];
        for (k, t) in tags.iter().enumerate() {
            ensure_consistent!(
                t.source < vertices && t.target < vertices,
                "basis element {k} has an out-of-range tag"
            );
            blocks[t.source][t.target].push(k);
        }
        for (i, &e) in idempotents.iter().enumerate() {
            ensure_consistent!(
                tags[e].source == i && tags[e].target == i && tags[e].degree == 0,
                "idempotent {i} is not in its diagonal block"
            );
        }
        for a in 0..dim {
            for b in 0..dim {
                let p = &products[a][b];
                if p.is_empty() {
                    continue;
                }
                ensure_consistent!(
                    tags[a].degree == 0 || tags[b].degree == 0,
                    "product of two degree-1 elements {a}, {b} is nonzero"
                );
                ensure_consistent!(
                    tags[b].target == tags[a].source,
                    "product {a}·{b} of non-composable elements is nonzero"
                );
                for &(k, _) in p {
                    ensure_consistent!(
                        tags[k].source == tags[b].source && tags[k].target == tags[a].target,
                        "product {a}·{b} leaves its block"
                    );
                }
            }
        }
        let alg = BasicAlgebra {
            vertices,
            tags,
            idempotents,
            products,
            blocks,
        };
        alg.check_idempotents()?;
        Ok(alg)
    }

    fn check_idempotents(&self) -> Result<()> {
        for (i, &e) in self.idempotents.iter().enumerate() {
            for x in 0..self.dim() {
                let t = self.tags[x];
                let unit = vec![(x, Q::from_integer(1))];
                let left = if t.target == i { unit.clone() } else { vec![] };
                let right = if t.source == i { unit } else { vec![] };
                ensure_consistent!(
                    self.products[e][x] == left,
                    "e_{i} does not act as a left identity on basis element {x}"
                );
                ensure_consistent!(
                    self.products[x][e] == right,
                    "e_{i} does not act as a right identity on basis element {x}"
                );
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.tags.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn tags(&self) -> &[BasisTag] {
        &self.tags
    }

    pub fn tag(&self, k: usize) -> BasisTag {
        self.tags[k]
    }

    pub fn idempotent(&self, i: usize) -> usize {
        self.idempotents[i]
    }

    pub fn is_idempotent(&self, k: usize) -> bool {
        self.idempotents.contains(&k)
    }

    /// Basis indices of `e_target Γ e_source`.
    pub fn block(&self, source: usize, target: usize) -> &[usize] {
        &self.blocks[source][target]
    }

    pub fn product(&self, a: usize, b: usize) -> &Sparse {
        &self.products[a][b]
    }

    pub fn products(&self) -> &[Vec<Sparse>] {
        &self.products
    }

    /// Copy with one structure constant replaced; for mutation tests.
    pub fn with_structure_constant(&self, a: usize, b: usize, k: usize, value: Q) -> BasicAlgebra {
        let mut alg = self.clone();
        let p = &mut alg.products[a][b];
        p.retain(|e| e.0 != k);
        if !value.is_zero() {
            p.push((k, value));
            p.sort_by_key(|e| e.0);
        }
        alg
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                for &(k, c) in &self.products[a][b] {
                    out[k] += *xa * *yb * c;
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[k] = Q::from_integer(1);
        v
    }

    fn sparse_times_basis(&self, s: &Sparse, c: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for &(k, x) in s {
            for &(m, y) in &self.products[k][c] {
                out[m] += x * y;
            }
        }
        out
    }

    fn basis_times_sparse(&self, a: usize, s: &Sparse) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for &(k, x) in s {
            for &(m, y) in &self.products[a][k] {
                out[m] += x * y;
            }
        }
        out
    }

    /// First basis triple `(a, b, c)` with `(ab)c ≠ a(bc)`, if any.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                if self.tags[b].target != self.tags[a].source {
                    continue;
                }
                for c in 0..d {
                    if self.tags[c].target != self.tags[b].source {
                        continue;
                    }
                    let left = self.sparse_times_basis(&self.products[a][b], c);
                    let right = self.basis_times_sparse(a, &self.products[b][c]);
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_defect().is_none()
    }

    /// `cartan[i][j] = dim e_j Γ e_i`, the number of basis maps `i -> j`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        (0..self.vertices)
            .map(|i| (0..self.vertices).map(|j| self.blocks[i][j].len()).collect())
            .collect()
    }

    /// Dimension of the indecomposable projective `Γe_i` (maps out of `i`).
    pub fn projective_dim(&self, i: usize) -> usize {
        (0..self.vertices).map(|j| self.blocks[i][j].len()).sum()
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| !self.is_idempotent(k)).collect()
    }

    /// The subalgebra spanned by the degree-0 basis elements.
    pub fn degree_zero_part(&self) -> Result<BasicAlgebra> {
        let keep: Vec<usize> = (0..self.dim()).filter(|&k| self.tags[k].degree == 0).collect();
        let mut new_index = vec![usize::MAX; self.dim()];
        for (i, &k) in keep.iter().enumerate() {
            new_index[k] = i;
        }
        let mut products = vec![vec![Vec::new(); keep.len()]; keep.len()];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                let mut p = Vec::new();
                for &(k, c) in &self.products[a][b] {
                    ensure_consistent!(
                        new_index[k] != usize::MAX,
                        "degree-0 product leaves the degree-0 part"
                    );
                    p.push((new_index[k], c));
                }
                products[i][j] = p;
            }
        }
        BasicAlgebra::new(
            self.vertices,
            keep.iter().map(|&k| self.tags[k]).collect(),
            self.idempotents.iter().map(|&e| new_index[e]).collect(),
            products,
        )
    }

    fn block_coords(&self, source: usize, target: usize, v: &[Q]) -> Vec<Q> {
        self.blocks[source][target].iter().map(|&k| v[k]).collect()
    }

    fn block_vector(&self, source: usize, target: usize, coords: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (&k, &c) in self.blocks[source][target].iter().zip(coords) {
            v[k] = c;
        }
        v
    }

    /// `R_0 = Γ`, `R_1 = rad`, `R_{k+1} = rad · R_k`, blockwise, until zero.
    pub fn radical_layers(&self) -> Result<RadicalLayers> {
        let nv = self.vertices;
        let full: Vec<Vec<Subspace>> = (0..nv)
            .map(|i| {
                (0..nv)
                    .map(|j| {
                        let len = self.blocks[i][j].len();
                        Subspace::spanned_by_rows(&Matrix::identity(len))
                    })
                    .collect()
            })
            .collect();
        let rad: Vec<Vec<Subspace>> = (0..nv)
            .map(|i| {
                (0..nv)
                    .map(|j| {
                        let b = &self.blocks[i][j];
                        let vecs: Vec<Vec<Q>> = b
                            .iter()
                            .enumerate()
                            .filter(|(_, &k)| !self.is_idempotent(k))
                            .map(|(p, _)| crate::rep::unit(b.len(), p))
                            .collect();
                        Subspace::spanned_by(&vecs, b.len())
                    })
                    .collect()
            })
            .collect();
        let mut powers = vec![full, rad];
        let limit = self.dim() + 2;
        while powers.last().expect("nonempty").iter().flatten().any(|s| s.dim() > 0) {
            ensure_consistent!(powers.len() <= limit, "radical is not nilpotent");
            let prev = powers.last().expect("nonempty");
            let next: Vec<Vec<Subspace>> = (0..nv)
                .map(|i| {
                    (0..nv)
                        .map(|l| {
                            let mut vecs = Vec::new();
                            for (j, prev_ij) in prev[i].iter().enumerate() {
                                let basis = prev_ij.basis();
                                for r in 0..basis.rows() {
                                    let y = self.block_vector(i, j, basis.row(r));
                                    for &a in &self.blocks[j][l] {
                                        if self.is_idempotent(a) {
                                            continue;
                                        }
                                        let x = self.unit_vector(a);
                                        let p = self.mul(&x, &y);
                                        vecs.push(self.block_coords(i, l, &p));
                                    }
                                }
                            }
                            Subspace::spanned_by(&vecs, self.blocks[i][l].len())
                        })
                        .collect()
                })
                .collect();
            powers.push(next);
        }
        Ok(RadicalLayers { powers })
    }

    /// Generalized Loewy length: the first `k` with `R_k = 0`.
    pub fn loewy_length(&self) -> Result<usize> {
        Ok(self.radical_layers()?.powers.len() - 1)
    }

    /// Arrows `i -> j` counted by `dim (rad / rad²)` in block `(i, j)`,
    /// with representatives chosen greedily among the basis elements.
    pub fn gabriel_quiver(&self) -> Result<GabrielQuiver> {
        let layers = self.radical_layers()?;
        let r1 = &layers.powers[1];
        let r2 = &layers.powers[2.min(layers.powers.len() - 1)];
        let mut arrows = Vec::new();
        let mut representatives = Vec::new();
        for i in 0..self.vertices {
            for j in 0..self.vertices {
                let count = r1[i][j].dim() - if layers.powers.len() > 2 { r2[i][j].dim() } else { 0 };
                if count == 0 {
                    continue;
                }
                let b = &self.blocks[i][j];
                let mut span = if layers.powers.len() > 2 {
                    r2[i][j].clone()
                } else {
                    Subspace::zero(b.len())
                };
                for (p, &k) in b.iter().enumerate() {
                    if self.is_idempotent(k) {
                        continue;
                    }
                    let u = crate::rep::unit(b.len(), p);
                    if !span.contains(&u) {
                        span = span.join(&Subspace::spanned_by(&[u], b.len()));
                        arrows.push((i, j));
                        representatives.push(k);
                    }
                }
                ensure_consistent!(
                    representatives.iter().filter(|&&k| self.tags[k].source == i && self.tags[k].target == j).count() == count,
                    "arrow representatives do not span rad/rad² in block ({i},{j})"
                );
            }
        }
        Ok(GabrielQuiver {
            vertices: self.vertices,
            arrows,
            representatives,
        })
    }

    /// `dim {x ∈ Γe_i : x·rad = 0}` per vertex: the multiplicity of `S_i` in
    /// the top of `DΓ`.
    pub fn dual_top_multiplicities(&self) -> Vec<usize> {
        let rad = self.radical_basis();
        (0..self.vertices)
            .map(|i| {
                let into_i: Vec<usize> = rad.iter().copied().filter(|&r| self.tags[r].target == i).collect();
                (0..self.vertices)
                    .map(|l| self.annihilated_dim(i, l, |x| into_i.iter().map(|&r| self.mul(x, &self.unit_vector(r))).collect()))
                    .sum()
            })
            .collect()
    }

    /// Dimension of `{x ∈ block(i,l) : f(x) = 0}` where `f` returns a list of
    /// algebra vectors linear in `x`.
    fn annihilated_dim(&self, i: usize, l: usize, f: impl Fn(&[Q]) -> Vec<Vec<Q>>) -> usize {
        self.annihilated_space(i, l, f).cols()
    }

    fn annihilated_space(&self, i: usize, l: usize, f: impl Fn(&[Q]) -> Vec<Vec<Q>>) -> Matrix {
        let b = &self.blocks[i][l];
        if b.is_empty() {
            return Matrix::zeros(0, 0);
        }
        let images: Vec<Vec<Q>> = (0..b.len())
            .map(|p| f(&self.unit_vector(b[p])).concat())
            .collect();
        let rows = images.first().map_or(0, Vec::len);
        let m = Matrix::from_fn(rows, b.len(), |r, c| images[c][r]);
        m.kernel()
    }

    /// `Γ` is self-injective iff the projective cover of the top of `DΓ`
    /// has dimension `dim Γ`.
    pub fn is_self_injective(&self) -> bool {
        let m = self.dual_top_multiplicities();
        let cover: usize = m
            .iter()
            .enumerate()
            .map(|(i, &t)| t * self.projective_dim(i))
            .sum();
        cover == self.dim()
    }

    /// Vertex `j` with `soc Γe_i ≅ S_j`, per `i`, if every projective has a
    /// simple socle.
    pub fn socle_targets(&self) -> Option<Vec<usize>> {
        let rad = self.radical_basis();
        let mut out = Vec::with_capacity(self.vertices);
        for i in 0..self.vertices {
            let mut found = None;
            let mut total = 0;
            for l in 0..self.vertices {
                let out_of_l: Vec<usize> = rad.iter().copied().filter(|&r| self.tags[r].source == l).collect();
                let d = self.annihilated_dim(i, l, |x| out_of_l.iter().map(|&r| self.mul(&self.unit_vector(r), x)).collect());
                if d > 0 {
                    found = Some(l);
                    total += d;
                }
            }
            if total != 1 {
                return None;
            }
            out.push(found?);
        }
        Some(out)
    }

    /// `ν` with `soc P(i) ≅ S(ν(i))`, for self-injective algebras.
    pub fn nakayama_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_self_injective() {
            return None;
        }
        let nu = self.socle_targets()?;
        let mut seen = vec![false; nu.len()];
        for &j in &nu {
            if seen[j] {
                return None;
            }
            seen[j] = true;
        }
        Some(nu)
    }

    /// Radical layer dimensions of `Γe_i` (left) or `e_iΓ` (right).
    pub fn projective_layers(&self, layers: &RadicalLayers, i: usize, left: bool) -> Vec<usize> {
        let p = &layers.powers;
        (0..p.len() - 1)
            .map(|k| {
                (0..self.vertices)
                    .map(|j| {
                        let (s, t) = if left { (i, j) } else { (j, i) };
                        p[k][s][t].dim() - p[k + 1][s][t].dim()
                    })
                    .sum::<usize>()
            })
            .filter(|&d| d > 0)
            .collect()
    }

    /// All indecomposable projective left and right modules are uniserial.
    pub fn is_nakayama(&self) -> Result<bool> {
        let layers = self.radical_layers()?;
        Ok((0..self.vertices).all(|i| {
            self.projective_layers(&layers, i, true).iter().all(|&d| d <= 1)
                && self.projective_layers(&layers, i, false).iter().all(|&d| d <= 1)
        }))
    }

    /// Loewy lengths of the projectives along the cyclic order in which the
    /// top of `rad P(i)` is `S(next(i))`, with that vertex order.
    pub fn kupisch_series(&self) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        if !self.is_nakayama()? {
            return Ok(None);
        }
        let layers = self.radical_layers()?;
        let p = &layers.powers;
        let nv = self.vertices;
        let next: Vec<Option<usize>> = (0..nv)
            .map(|i| {
                (0..nv).find(|&j| p.len() > 2 && p[1][i][j].dim() > p[2][i][j].dim()
                    || p.len() == 2 && p[1][i][j].dim() > 0)
            })
            .collect();
        let has_pred: Vec<bool> = (0..nv).map(|v| next.contains(&Some(v))).collect();
        let start = (0..nv).find(|&v| !has_pred[v]).unwrap_or(0);
        let mut order = vec![start];
        let mut cur = start;
        while let Some(j) = next[cur] {
            if j == start {
                break;
            }
            if order.contains(&j) {
                return Err(Error::Consistency("successor map of a Nakayama algebra is not a path or cycle".into()));
            }
            order.push(j);
            cur = j;
        }
        if order.len() != nv {
            return Ok(None);
        }
        let lengths = order
            .iter()
            .map(|&i| self.projective_layers(&layers, i, true).len())
            .collect();
        Ok(Some((lengths, order)))
    }

    /// At most two arrows in and out of every vertex, and for each arrow `a`
    /// at most one arrow `b` with `b·a ≠ 0` and at most one `c` with `a·c ≠ 0`.
    pub fn is_special_biserial(&self) -> Result<bool> {
        let g = self.gabriel_quiver()?;
        if (0..g.vertices).any(|v| g.in_degree(v) > 2 || g.out_degree(v) > 2) {
            return Ok(false);
        }
        let nonzero = |x: usize, y: usize| -> bool {
            self.mul(&self.unit_vector(x), &self.unit_vector(y))
                .iter()
                .any(|c| !c.is_zero())
        };
        for (k, &(s, t)) in g.arrows.iter().enumerate() {
            let a = g.representatives[k];
            let after = g
                .arrows
                .iter()
                .zip(&g.representatives)
                .filter(|(&(s2, _), &b)| s2 == t && nonzero(b, a))
                .count();
            let before = g
                .arrows
                .iter()
                .zip(&g.representatives)
                .filter(|(&(_, t2), &c)| t2 == s && nonzero(a, c))
                .count();
            if after > 1 || before > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Path algebra of an acyclic quiver with arrows `(source, target)`.
    pub fn path_algebra(vertices: usize, arrows: &[(usize, usize)]) -> Result<BasicAlgebra> {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
        while !frontier.is_empty() {
            ensure_consistent!(paths.len() < 100_000, "quiver is not acyclic");
            let mut next = Vec::new();
            for p in &frontier {
                let end = arrows[*p.last().expect("nonempty")].1;
                for (a, &(s, _)) in arrows.iter().enumerate() {
                    if s == end {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            paths.append(&mut frontier);
            frontier = next;
        }
        let index: std::collections::HashMap<&[usize], usize> =
            paths.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        super::template::algebra_from_paths(vertices, arrows, &paths, |w| index.get(w).copied())
    }

    /// `k^{vertices}` with only idempotents.
    pub fn semisimple(vertices: usize) -> BasicAlgebra {
        Self::path_algebra(vertices, &[]).expect("semisimple algebra")
    }
}
