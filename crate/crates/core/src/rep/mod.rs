//! Explicit quiver representations over `Q`.
//!
//! This is the brute-force layer: Hom spaces are kernels of the
//! commuting-square system, Ext¹ is its cokernel, and the AR translates are
//! composites of BGP reflection functors. The cluster category, the
//! tilting enumeration and the endomorphism algebras are all checked
//! against it.

mod catalogue;
mod ext;
mod reflect;

pub use catalogue::{Catalogue, CatalogueEntry};
pub use ext::Ext1Space;
pub use reflect::{coxeter_minus, coxeter_plus, reflect_at, reflect_morphism, CoxeterTrace, Reflection};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::quiver::{DimVector, Quiver, Vertex};

/// Anything that looks like a representation of a quiver: a vector space
/// per vertex and a matrix per arrow. Lets the Hom/Ext machinery run on
/// modules over arbitrary basic algebras as well as on Dynkin quivers.
pub trait LinearRep {
    fn vertex_dims(&self) -> &[usize];
    fn arrow_list(&self) -> &[(Vertex, Vertex)];
    /// Matrix of arrow `k`, shape `dims[target] x dims[source]`.
    fn arrow_map(&self, k: usize) -> &Matrix;
}

/// Offsets of the per-vertex blocks of `Hom_k(X_v, Y_v)` in the unknown
/// vector, and of the per-arrow blocks of `Hom_k(X_s, Y_t)` in the
/// equation vector. Both blocks are row-major.
#[derive(Clone, Debug)]
pub(crate) struct HomLayout {
    pub vertex_offsets: Vec<usize>,
    pub unknowns: usize,
    pub arrow_offsets: Vec<usize>,
    pub equations: usize,
}

impl HomLayout {
    pub fn new(arrows: &[(Vertex, Vertex)], dx: &[usize], dy: &[usize]) -> Self {
        let mut vertex_offsets = Vec::with_capacity(dx.len());
        let mut unknowns = 0;
        for v in 0..dx.len() {
            vertex_offsets.push(unknowns);
            unknowns += dy[v] * dx[v];
        }
        let mut arrow_offsets = Vec::with_capacity(arrows.len());
        let mut equations = 0;
        for &(s, t) in arrows {
            arrow_offsets.push(equations);
            equations += dy[t] * dx[s];
        }
        HomLayout {
            vertex_offsets,
            unknowns,
            arrow_offsets,
            equations,
        }
    }
}

/// The coboundary `delta: (f_v) -> (Y_a f_s - f_t X_a)_a`. Its kernel is
/// `Hom(X, Y)` and its cokernel is `Ext¹(X, Y)` (standard resolution of a
/// path algebra module).
pub(crate) fn hom_system<X: LinearRep + ?Sized, Y: LinearRep + ?Sized>(x: &X, y: &Y) -> (HomLayout, Matrix) {
    let arrows = x.arrow_list();
    let dx = x.vertex_dims();
    let dy = y.vertex_dims();
    let layout = HomLayout::new(arrows, dx, dy);
    let mut m = Matrix::zeros(layout.equations, layout.unknowns);
    for (k, &(s, t)) in arrows.iter().enumerate() {
        let xa = x.arrow_map(k);
        let ya = y.arrow_map(k);
        let row0 = layout.arrow_offsets[k];
        let (ys, yt, xs, xt) = (dy[s], dy[t], dx[s], dx[t]);
        // (Y_a f_s)[r][c] = sum_j Y_a[r][j] f_s[j][c]
        for r in 0..yt {
            for j in 0..ys {
                let a = ya[(r, j)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..xs {
                    m[(row0 + r * xs + c, layout.vertex_offsets[s] + j * xs + c)] += a;
                }
            }
        }
        // -(f_t X_a)[r][c] = -sum_j f_t[r][j] X_a[j][c]
        for j in 0..xt {
            for c in 0..xs {
                let b = xa[(j, c)];
                if b.is_zero() {
                    continue;
                }
                for r in 0..yt {
                    m[(row0 + r * xs + c, layout.vertex_offsets[t] + r * xt + j)] -= b;
                }
            }
        }
    }
    (layout, m)
}

pub(crate) fn hom_dim_of<X: LinearRep + ?Sized, Y: LinearRep + ?Sized>(x: &X, y: &Y) -> usize {
    let (layout, m) = hom_system(x, y);
    if layout.unknowns == 0 {
        return 0;
    }
    layout.unknowns - m.rank()
}

pub(crate) fn hom_basis_of<X: LinearRep + ?Sized, Y: LinearRep + ?Sized>(x: &X, y: &Y) -> Vec<Morphism> {
    let (layout, m) = hom_system(x, y);
    let k = m.kernel();
    (0..k.cols())
        .map(|j| Morphism::from_vector(&layout, x.vertex_dims(), y.vertex_dims(), &k.col(j)))
        .collect()
}

/// A representation of a (Dynkin) quiver over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl LinearRep for Representation {
    fn vertex_dims(&self) -> &[usize] {
        &self.dims
    }
    fn arrow_list(&self) -> &[(Vertex, Vertex)] {
        self.quiver.arrows()
    }
    fn arrow_map(&self, k: usize) -> &Matrix {
        &self.maps[k]
    }
}

impl Representation {
    /// Checks matrix shapes against `dims`.
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.n() {
            return Err(Error::LengthMismatch {
                expected: quiver.n(),
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Consistency(format!(
                "{} arrow maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (k, &(s, t)) in quiver.arrows().iter().enumerate() {
            if maps[k].shape() != (dims[t], dims[s]) {
                return Err(Error::Consistency(format!(
                    "arrow {k} map has shape {:?}, expected {:?}",
                    maps[k].shape(),
                    (dims[t], dims[s])
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation {
            quiver: quiver.clone(),
            dims: vec![0; quiver.n()],
            maps,
        }
    }

    /// Representation with 0/1 spaces supported on `support` and identity
    /// maps along every arrow inside it (thin modules such as P(a), I(a)).
    fn thin(quiver: &Quiver, support: &DimVector) -> Self {
        let dims = support.as_usize();
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                if dims[s] == 1 && dims[t] == 1 {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(dims[t], dims[s])
                }
            })
            .collect();
        Representation {
            quiver: quiver.clone(),
            dims,
            maps,
        }
    }

    /// Indecomposable projective: spanned by the paths starting at `a`.
    pub fn projective(quiver: &Quiver, a: Vertex) -> Result<Self> {
        quiver.check_vertex(a)?;
        Ok(Self::thin(quiver, &quiver.paths_from(a)))
    }

    /// Indecomposable injective: dual of the paths ending at `a`.
    pub fn injective(quiver: &Quiver, a: Vertex) -> Result<Self> {
        quiver.check_vertex(a)?;
        Ok(Self::thin(quiver, &quiver.paths_to(a)))
    }

    pub fn simple(quiver: &Quiver, a: Vertex) -> Result<Self> {
        quiver.check_vertex(a)?;
        Ok(Self::thin(quiver, &DimVector::unit(quiver.n(), a)))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    fn same_quiver(&self, other: &Representation) -> Result<()> {
        if self.quiver == other.quiver {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    pub fn hom_basis(&self, other: &Representation) -> Result<Vec<Morphism>> {
        self.same_quiver(other)?;
        Ok(hom_basis_of(self, other))
    }

    pub fn hom_dim(&self, other: &Representation) -> Result<usize> {
        self.same_quiver(other)?;
        Ok(hom_dim_of(self, other))
    }

    /// `dim Hom(X, Y) - <dim X, dim Y>`.
    pub fn ext1_dim(&self, other: &Representation) -> Result<usize> {
        let hom = self.hom_dim(other)? as i64;
        let euler = self.quiver.euler_unchecked(&self.dim_vector(), &other.dim_vector());
        let ext = hom - euler;
        if ext < 0 {
            return Err(Error::Consistency(format!(
                "negative Ext dimension {ext} between {} and {}",
                self.dim_vector(),
                other.dim_vector()
            )));
        }
        Ok(ext as usize)
    }

    pub fn ext1_space(&self, other: &Representation) -> Result<Ext1Space> {
        self.same_quiver(other)?;
        Ok(Ext1Space::new(self, other))
    }

    pub fn end_dim(&self) -> usize {
        hom_dim_of(self, self)
    }

    /// Endomorphism dimension 1. In Dynkin type this is equivalent to
    /// indecomposability (every indecomposable is a brick, and a
    /// decomposable module has at least two independent idempotents).
    pub fn is_indecomposable(&self) -> bool {
        !self.is_zero() && self.end_dim() == 1
    }

    fn check_indecomposable(&self) -> Result<()> {
        let e = self.end_dim();
        if e == 1 {
            Ok(())
        } else {
            Err(Error::Decomposable(e))
        }
    }

    pub fn is_isomorphic(&self, other: &Representation) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Looks for an invertible morphism among the Hom basis and a few fixed
    /// integer combinations of it.
    pub fn find_isomorphism(&self, other: &Representation) -> Option<Morphism> {
        if self.quiver != other.quiver || self.dims != other.dims {
            return None;
        }
        let basis = hom_basis_of(self, other);
        let mut candidates: Vec<Morphism> = basis.clone();
        for shift in 1..=3i64 {
            let mut acc = Morphism::zero(&self.dims, &other.dims);
            for (i, b) in basis.iter().enumerate() {
                acc = acc.add(&b.scale(Q::from_integer(i as i64 * shift + 1)));
            }
            candidates.push(acc);
        }
        candidates.into_iter().find(|f| f.is_invertible())
    }

    /// `tau X` via the Coxeter functor, or `None` when `X` is projective.
    pub fn tau_plus(&self) -> Result<Option<Representation>> {
        self.check_indecomposable()?;
        let (r, _) = coxeter_plus(self);
        Ok(if r.is_zero() { None } else { Some(r) })
    }

    /// `tau^- X` via the Coxeter functor, or `None` when `X` is injective.
    pub fn tau_minus(&self) -> Result<Option<Representation>> {
        self.check_indecomposable()?;
        let (r, _) = coxeter_minus(self);
        Ok(if r.is_zero() { None } else { Some(r) })
    }

    /// Vector-space dual on the opposite quiver (transposed maps).
    pub fn dual(&self) -> Representation {
        Representation {
            quiver: self.quiver.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Top dimensions: `dim X_v - dim (sum of images of arrows into v)`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.quiver
            .vertices()
            .map(|v| {
                let into: Vec<&Matrix> = self
                    .quiver
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, &(_, t))| t == v)
                    .map(|(k, _)| &self.maps[k])
                    .collect();
                let rad = if into.is_empty() {
                    0
                } else {
                    Matrix::hstack(&into, self.dims[v]).rank()
                };
                self.dims[v] - rad
            })
            .collect()
    }
}

/// A morphism of representations: one matrix per vertex, shape
/// `target.dims[v] x source.dims[v]`. Source and target are passed
/// explicitly where they are needed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    maps: Vec<Matrix>,
}

impl Morphism {
    pub fn new(maps: Vec<Matrix>) -> Self {
        Morphism { maps }
    }

    pub fn zero(source: &[usize], target: &[usize]) -> Self {
        Morphism {
            maps: source
                .iter()
                .zip(target)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn identity(x: &Representation) -> Self {
        Morphism {
            maps: x.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub(crate) fn from_vector(layout: &HomLayout, dx: &[usize], dy: &[usize], v: &[Q]) -> Self {
        let maps = (0..dx.len())
            .map(|w| {
                let off = layout.vertex_offsets[w];
                Matrix::from_fn(dy[w], dx[w], |r, c| v[off + r * dx[w] + c])
            })
            .collect();
        Morphism { maps }
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map_at(&self, v: Vertex) -> &Matrix {
        &self.maps[v]
    }

    /// Entries of all vertex maps in order, row-major.
    pub fn to_vector(&self) -> Vec<Q> {
        self.maps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, s: Q) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.rows() == m.cols() && m.rank() == m.rows())
    }

    /// Commuting squares `Y_a f_s = f_t X_a` for every arrow.
    pub fn is_morphism(&self, x: &Representation, y: &Representation) -> bool {
        if x.quiver != y.quiver || self.maps.len() != x.dims.len() {
            return false;
        }
        for (v, m) in self.maps.iter().enumerate() {
            if m.shape() != (y.dims[v], x.dims[v]) {
                return false;
            }
        }
        x.quiver.arrows().iter().enumerate().all(|(k, &(s, t))| {
            y.maps[k].mul(&self.maps[s]) == self.maps[t].mul(&x.maps[k])
        })
    }

    pub fn is_identity(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.rows() == m.cols() && *m == Matrix::identity(m.rows()))
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}
