//! Finite-dimensional right modules over a basic algebra, enough to compute
//! Ext groups by projective covers.

use num_traits::Zero;

use crate::linalg::{Matrix, Subspace, Q};
use crate::rep::{hom_dim_of, LinearRep};

use super::basic::BasicAlgebra;

/// A right module `N = ⊕ N e_v`. Radical basis element `a` in block
/// `(i, j)` acts as a map `N_j -> N_i`, which is arrow `k` when `a` is the
/// `k`-th radical basis element.
#[derive(Clone, Debug)]
pub struct RightModule {
    dims: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    acts: Vec<Matrix>,
}

impl LinearRep for RightModule {
    fn vertex_dims(&self) -> &[usize] {
        &self.dims
    }

    fn arrow_list(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    fn arrow_map(&self, k: usize) -> &Matrix {
        &self.acts[k]
    }
}

/// Per-vertex matrices of a module map.
type ModuleMap = Vec<Matrix>;

/// The algebra together with its radical basis order.
pub struct ModuleCategory<'a> {
    alg: &'a BasicAlgebra,
    radical: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    /// Basis index to position in `radical`.
    arrow_of: Vec<Option<usize>>,
}

fn coeff(s: &[(usize, Q)], k: usize) -> Q {
    s.iter().find(|e| e.0 == k).map_or(Q::zero(), |e| e.1)
}

impl<'a> ModuleCategory<'a> {
    pub fn new(alg: &'a BasicAlgebra) -> Self {
        let radical = alg.radical_basis();
        let mut arrow_of = vec![None; alg.dim()];
        let arrows = radical
            .iter()
            .enumerate()
            .map(|(k, &a)| {
                arrow_of[a] = Some(k);
                let t = alg.tag(a);
                (t.target, t.source)
            })
            .collect();
        ModuleCategory {
            alg,
            radical,
            arrows,
            arrow_of,
        }
    }

    /// `e_x A`, with `(e_x A)_v` spanned by the basis of block `(v, x)`.
    pub fn projective(&self, x: usize) -> RightModule {
        let alg = self.alg;
        let dims = (0..alg.vertex_count()).map(|v| alg.block(v, x).len()).collect();
        let acts = self
            .radical
            .iter()
            .map(|&a| {
                let t = alg.tag(a);
                let (src, tgt) = (alg.block(t.target, x), alg.block(t.source, x));
                Matrix::from_fn(tgt.len(), src.len(), |r, c| coeff(alg.product(src[c], a), tgt[r]))
            })
            .collect();
        RightModule {
            dims,
            arrows: self.arrows.clone(),
            acts,
        }
    }

    /// `D(A e_y)`, with `D(A e_y)_v` dual to block `(y, v)`.
    pub fn injective(&self, y: usize) -> RightModule {
        let alg = self.alg;
        let dims = (0..alg.vertex_count()).map(|v| alg.block(y, v).len()).collect();
        let acts = self
            .radical
            .iter()
            .map(|&a| {
                let t = alg.tag(a);
                let (src, tgt) = (alg.block(y, t.target), alg.block(y, t.source));
                // (φ a)(z) = φ(a z)
                Matrix::from_fn(tgt.len(), src.len(), |r, c| coeff(alg.product(a, tgt[r]), src[c]))
            })
            .collect();
        RightModule {
            dims,
            arrows: self.arrows.clone(),
            acts,
        }
    }

    pub fn simple(&self, x: usize) -> RightModule {
        let dims = (0..self.alg.vertex_count()).map(|v| usize::from(v == x)).collect();
        let acts = self
            .arrows
            .iter()
            .map(|&(s, t)| Matrix::zeros(usize::from(t == x), usize::from(s == x)))
            .collect();
        RightModule {
            dims,
            arrows: self.arrows.clone(),
            acts,
        }
    }

    fn direct_sum(&self, parts: &[RightModule]) -> RightModule {
        let nv = self.alg.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let acts = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let mut m = Matrix::zeros(dims[t], dims[s]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    m.set_block(r0, c0, &p.acts[k]);
                    r0 += p.dims[t];
                    c0 += p.dims[s];
                }
                m
            })
            .collect();
        RightModule {
            dims,
            arrows: self.arrows.clone(),
            acts,
        }
    }

    /// Projective cover `Q -> N`, generated by a complement of `N rad` at
    /// each vertex.
    pub fn cover(&self, n: &RightModule) -> (RightModule, ModuleMap) {
        let alg = self.alg;
        let nv = alg.vertex_count();
        let mut gens: Vec<(usize, Vec<Q>)> = Vec::new();
        for v in 0..nv {
            let images: Vec<&Matrix> = self
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, &(_, t))| t == v)
                .map(|(k, _)| &n.acts[k])
                .collect();
            let rad = Subspace::column_space(&Matrix::hstack(&images, n.dims[v]));
            for &f in rad.free() {
                let mut g = vec![Q::zero(); n.dims[v]];
                g[f] = Q::from_integer(1);
                gens.push((v, g));
            }
        }
        let parts: Vec<RightModule> = gens.iter().map(|(v, _)| self.projective(*v)).collect();
        let q = self.direct_sum(&parts);
        let map = (0..nv)
            .map(|w| {
                let mut cols: Vec<Vec<Q>> = Vec::with_capacity(q.dims[w]);
                for (v, g) in &gens {
                    for &z in alg.block(w, *v) {
                        cols.push(match self.arrow_of[z] {
                            None => g.clone(),
                            Some(k) => n.acts[k].mul_vec(g),
                        });
                    }
                }
                Matrix::from_fn(n.dims[w], cols.len(), |r, c| cols[c][r])
            })
            .collect();
        (q, map)
    }

    /// Kernel of a module map out of `q`.
    pub fn kernel(&self, q: &RightModule, f: &ModuleMap) -> RightModule {
        let bases: Vec<Matrix> = f.iter().map(Matrix::kernel).collect();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let lefts: Vec<Option<Matrix>> = bases.iter().map(Matrix::left_inverse).collect();
        let acts = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                if dims[s] == 0 || dims[t] == 0 {
                    return Matrix::zeros(dims[t], dims[s]);
                }
                let left = lefts[t].as_ref().expect("kernel basis is independent");
                left.mul(&q.acts[k].mul(&bases[s]))
            })
            .collect();
        RightModule {
            dims,
            arrows: self.arrows.clone(),
            acts,
        }
    }

    pub fn syzygy(&self, n: &RightModule) -> RightModule {
        let (q, f) = self.cover(n);
        self.kernel(&q, &f)
    }

    pub fn hom_dim(&self, x: &RightModule, y: &RightModule) -> usize {
        hom_dim_of(x, y)
    }

    /// `dim Ext¹(N, M)` from `0 -> Ω N -> Q -> N -> 0`.
    pub fn ext1_dim(&self, n: &RightModule, m: &RightModule) -> usize {
        let (q, f) = self.cover(n);
        let omega = self.kernel(&q, &f);
        self.hom_dim(&omega, m) + self.hom_dim(n, m) - self.hom_dim(&q, m)
    }

    /// `dim Ext²(N, M) = dim Ext¹(Ω N, M)`.
    pub fn ext2_dim(&self, n: &RightModule, m: &RightModule) -> usize {
        self.ext1_dim(&self.syzygy(n), m)
    }
}

impl RightModule {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Checks the right-module axiom `(n a) b = n (a b)` on basis elements.
    pub fn is_module_over(&self, alg: &BasicAlgebra) -> bool {
        let radical = alg.radical_basis();
        let pos = |k: usize| radical.iter().position(|&r| r == k);
        for (ia, &a) in radical.iter().enumerate() {
            for (ib, &b) in radical.iter().enumerate() {
                if alg.tag(b).target != alg.tag(a).source {
                    continue;
                }
                // N_{target a} -> N_{source b}
                let lhs = self.acts[ib].mul(&self.acts[ia]);
                let (s, t) = (alg.tag(a).target, alg.tag(b).source);
                let mut rhs = Matrix::zeros(self.dims[t], self.dims[s]);
                for &(k, c) in alg.product(a, b) {
                    match pos(k) {
                        Some(ik) => rhs = rhs.add(&self.acts[ik].scale(c)),
                        None => return false,
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// `E[i][j] = dim Ext²_A(D(A e_i), e_j A)`.
pub fn ext2_injective_projective(alg: &BasicAlgebra) -> Vec<Vec<usize>> {
    let cat = ModuleCategory::new(alg);
    let n = alg.vertex_count();
    let proj: Vec<RightModule> = (0..n).map(|j| cat.projective(j)).collect();
    (0..n)
        .map(|i| {
            let omega = cat.syzygy(&cat.injective(i));
            (0..n).map(|j| cat.ext1_dim(&omega, &proj[j])).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::template::{PresentationTemplate, TemplateFamily};

    fn nakayama() -> BasicAlgebra {
        PresentationTemplate::nakayama_cycle(3, 3).algebra().unwrap()
    }

    fn a3() -> BasicAlgebra {
        BasicAlgebra::path_algebra(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn standard_modules_are_modules() {
        let a = nakayama();
        let cat = ModuleCategory::new(&a);
        for x in 0..a.vertex_count() {
            assert!(cat.projective(x).is_module_over(&a));
            assert!(cat.injective(x).is_module_over(&a));
        }
    }

    #[test]
    fn hereditary_has_no_ext2() {
        let a = a3();
        let e = ext2_injective_projective(&a);
        assert!(e.iter().flatten().all(|&d| d == 0));
        let cat = ModuleCategory::new(&a);
        let ext1: usize = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| cat.ext1_dim(&cat.simple(i), &cat.simple(j)))
            .sum();
        // one arrow per Ext¹ between simples
        assert_eq!(ext1, 2);
    }

    #[test]
    fn projectives_have_trivial_ext() {
        let a = nakayama();
        let cat = ModuleCategory::new(&a);
        for x in 0..a.vertex_count() {
            for y in 0..a.vertex_count() {
                assert_eq!(cat.ext1_dim(&cat.projective(x), &cat.simple(y)), 0);
                assert_eq!(cat.ext1_dim(&cat.simple(y), &cat.injective(x)), 0);
            }
        }
    }

    #[test]
    fn quadratic_monomial_ext2() {
        // 1 -> 2 -> 3 with the composite zero: Ext²(S1, S3) = 1
        let t = PresentationTemplate {
            family: TemplateFamily::NakayamaCycle { n: 3, loewy: 2 },
            vertices: 3,
            vertex_names: vec!["1".into(), "2".into(), "3".into()],
            arrows: vec![(0, 1), (1, 2)],
            arrow_names: vec!["a".into(), "b".into()],
            zero_relations: vec![vec![0, 1]],
            commutations: Vec::new(),
        };
        let a = t.algebra().unwrap();
        let cat = ModuleCategory::new(&a);
        // right modules: the simple at a vertex has projective cover e_v A
        let total: usize = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| cat.ext2_dim(&cat.simple(i), &cat.simple(j)))
            .sum();
        assert_eq!(total, 1);
    }
}
