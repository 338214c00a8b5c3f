use crate::linalg::{Subspace, Q};

use super::{hom_system, unit, HomLayout, Morphism, Representation};

/// `Ext¹(X, Z)` as the cokernel of `Hom(P_0, Z) -> Hom(P_1, Z)` for the
/// standard projective resolution
///
/// ```text
/// 0 -> ⊕_{a: s->t} P(t) ⊗ X_s -> ⊕_v P(v) ⊗ X_v -> X -> 0
/// ```
///
/// so cochains are families `(ε_a)` with `ε_a ∈ Hom_k(X_s, Z_t)`. The basis
/// consists of unit cochains at the free positions of the coboundary image.
/// The resolution is functorial in `X`, which makes pullback and pushforward
/// plain composition on cochains.
#[derive(Clone, Debug)]
pub struct Ext1Space {
    x: Representation,
    z: Representation,
    layout: HomLayout,
    image: Subspace,
}

impl Ext1Space {
    pub(crate) fn new(x: &Representation, z: &Representation) -> Self {
        let (layout, delta) = hom_system(x, z);
        let image = Subspace::column_space(&delta);
        Ext1Space {
            x: x.clone(),
            z: z.clone(),
            layout,
            image,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.x
    }

    pub fn target(&self) -> &Representation {
        &self.z
    }

    pub fn dim(&self) -> usize {
        self.image.codim()
    }

    /// Dimension of the cochain space `⊕_a Hom_k(X_s, Z_t)`.
    pub fn cochain_dim(&self) -> usize {
        self.layout.equations
    }

    /// Cochain representing the `i`-th basis element.
    pub fn basis_cochain(&self, i: usize) -> Vec<Q> {
        unit(self.cochain_dim(), self.image.free()[i])
    }

    pub fn coords(&self, cochain: &[Q]) -> Vec<Q> {
        self.image.quotient_coords(cochain)
    }

    pub fn lift(&self, coords: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::default(); self.cochain_dim()];
        for (c, &f) in coords.iter().zip(self.image.free()) {
            v[f] = *c;
        }
        v
    }

    /// Per-arrow matrix blocks of a cochain.
    fn blocks(&self, cochain: &[Q]) -> Vec<crate::linalg::Matrix> {
        let dx = &self.x.dims;
        let dz = &self.z.dims;
        self.x
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let off = self.layout.arrow_offsets[k];
                crate::linalg::Matrix::from_fn(dz[t], dx[s], |r, c| cochain[off + r * dx[s] + c])
            })
            .collect()
    }

    fn flatten(blocks: &[crate::linalg::Matrix]) -> Vec<Q> {
        blocks.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    /// `ε ↦ ε ∘ f` for `f: X' -> X`, as a map `Ext¹(X, Z) -> Ext¹(X', Z)`
    /// on coordinates. `target` must be `Ext¹(X', Z)`.
    pub fn pullback(&self, f: &Morphism, target: &Ext1Space, coords: &[Q]) -> Vec<Q> {
        let eps = self.blocks(&self.lift(coords));
        let arrows = self.x.quiver.arrows();
        let moved: Vec<_> = arrows
            .iter()
            .enumerate()
            .map(|(k, &(s, _))| eps[k].mul(f.map_at(s)))
            .collect();
        target.coords(&Self::flatten(&moved))
    }

    /// `ε ↦ h ∘ ε` for `h: Z -> Z'`, as a map `Ext¹(X, Z) -> Ext¹(X, Z')`.
    /// `target` must be `Ext¹(X, Z')`.
    pub fn pushforward(&self, h: &Morphism, target: &Ext1Space, coords: &[Q]) -> Vec<Q> {
        let eps = self.blocks(&self.lift(coords));
        let arrows = self.x.quiver.arrows();
        let moved: Vec<_> = arrows
            .iter()
            .enumerate()
            .map(|(k, &(_, t))| h.map_at(t).mul(&eps[k]))
            .collect();
        target.coords(&Self::flatten(&moved))
    }

    /// Matrix of the pullback along `f` in the two bases (columns = images
    /// of basis vectors).
    pub fn pullback_matrix(&self, f: &Morphism, target: &Ext1Space) -> Vec<Vec<Q>> {
        (0..self.dim())
            .map(|i| self.pullback(f, target, &unit(self.dim(), i)))
            .collect()
    }

    pub fn pushforward_matrix(&self, h: &Morphism, target: &Ext1Space) -> Vec<Vec<Q>> {
        (0..self.dim())
            .map(|i| self.pushforward(h, target, &unit(self.dim(), i)))
            .collect()
    }
}
