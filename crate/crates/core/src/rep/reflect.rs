//! BGP reflection functors, on objects and on morphisms.
//!
//! Each reflection records the kernel inclusion/retraction (at a sink) or
//! the cokernel projection/section (at a source) it chose, so that the same
//! choices can be replayed on morphisms. Replaying through a whole Coxeter
//! functor gives `tau` and `tau^-` as functors, which the endomorphism
//! algebra construction needs.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::Vertex;

use super::{unit, Morphism, Representation};

/// Data of one reflection step at vertex `v`.
#[derive(Clone, Debug)]
pub enum Reflection {
    /// `v` was a sink: new space is `ker(⊕ X_u -> X_v)`.
    Sink {
        v: Vertex,
        /// Inclusion of the kernel, `Σ x k`.
        inclusion: Matrix,
        /// Left inverse of `inclusion`, `k x Σ`.
        retraction: Matrix,
        blocks: Vec<(Vertex, usize)>,
    },
    /// `v` was a source: new space is `coker(X_v -> ⊕ X_w)`.
    Source {
        v: Vertex,
        /// Quotient map, `c x Σ`.
        projection: Matrix,
        /// Right inverse of `projection`, `Σ x c`.
        section: Matrix,
        blocks: Vec<(Vertex, usize)>,
    },
}

/// Arrows incident to `v` as `(arrow index, other endpoint)`.
fn incident(x: &Representation, v: Vertex) -> Vec<(usize, Vertex)> {
    x.quiver
        .arrows()
        .iter()
        .enumerate()
        .filter_map(|(k, &(s, t))| {
            if t == v {
                Some((k, s))
            } else if s == v {
                Some((k, t))
            } else {
                None
            }
        })
        .collect()
}

/// Applies `S^+_v` (if `v` is a sink) or `S^-_v` (if `v` is a source).
pub fn reflect_at(x: &Representation, v: Vertex) -> Result<(Representation, Reflection)> {
    x.quiver.check_vertex(v)?;
    let q = &x.quiver;
    let arrows = incident(x, v);
    let new_quiver = q.reflected_at(v);
    let blocks: Vec<(Vertex, usize)> = arrows.iter().map(|&(_, u)| (u, x.dims[u])).collect();
    let sigma: usize = blocks.iter().map(|b| b.1).sum();
    let mut maps = x.maps.clone();
    let mut dims = x.dims.clone();

    if q.is_sink(v) {
        // phi = [X_a1 | X_a2 | ...] : ⊕ X_u -> X_v
        let parts: Vec<&Matrix> = arrows.iter().map(|&(k, _)| &x.maps[k]).collect();
        let phi = Matrix::hstack(&parts, x.dims[v]);
        let inclusion = phi.kernel();
        let kd = inclusion.cols();
        let retraction = inclusion
            .left_inverse()
            .expect("kernel basis has full column rank");
        dims[v] = kd;
        let mut off = 0;
        for (&(k, _), &(_, d)) in arrows.iter().zip(&blocks) {
            // new arrow v -> u
            maps[k] = inclusion.block(off, off + d, 0, kd);
            off += d;
        }
        debug_assert_eq!(off, sigma);
        let r = Representation::new(new_quiver, dims, maps)?;
        Ok((
            r,
            Reflection::Sink {
                v,
                inclusion,
                retraction,
                blocks,
            },
        ))
    } else if q.is_source(v) {
        // psi = [X_a1; X_a2; ...] : X_v -> ⊕ X_w
        let parts: Vec<&Matrix> = arrows.iter().map(|&(k, _)| &x.maps[k]).collect();
        let psi = Matrix::vstack(&parts, x.dims[v]);
        let image = Subspace::column_space(&psi);
        let c = image.codim();
        let mut projection = Matrix::zeros(c, sigma);
        for i in 0..sigma {
            let coords = image.quotient_coords(&unit(sigma, i));
            for (r, val) in coords.into_iter().enumerate() {
                projection[(r, i)] = val;
            }
        }
        let mut section = Matrix::zeros(sigma, c);
        for (j, &f) in image.free().iter().enumerate() {
            section[(f, j)] = num_traits::One::one();
        }
        dims[v] = c;
        let mut off = 0;
        for (&(k, _), &(_, d)) in arrows.iter().zip(&blocks) {
            // new arrow w -> v
            maps[k] = projection.block(0, c, off, off + d);
            off += d;
        }
        let r = Representation::new(new_quiver, dims, maps)?;
        Ok((
            r,
            Reflection::Source {
                v,
                projection,
                section,
                blocks,
            },
        ))
    } else {
        Err(Error::NotSinkOrSource(v))
    }
}

/// Block-diagonal `diag(f_u)` over the neighbour blocks of a reflection.
fn block_diag(f: &Morphism, src: &[(Vertex, usize)], tgt: &[(Vertex, usize)]) -> Matrix {
    let rows: usize = tgt.iter().map(|b| b.1).sum();
    let cols: usize = src.iter().map(|b| b.1).sum();
    let mut m = Matrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for (&(u, ds), &(u2, dt)) in src.iter().zip(tgt) {
        debug_assert_eq!(u, u2);
        debug_assert_eq!(f.maps[u].shape(), (dt, ds));
        m.set_block(r0, c0, &f.maps[u]);
        r0 += dt;
        c0 += ds;
    }
    m
}

/// The reflection functor applied to `f: X -> Y`, given the reflection data
/// of `X` and `Y` at the same vertex.
pub fn reflect_morphism(f: &Morphism, src: &Reflection, tgt: &Reflection) -> Result<Morphism> {
    let mut maps = f.maps.clone();
    match (src, tgt) {
        (
            Reflection::Sink {
                v,
                inclusion,
                blocks: sb,
                ..
            },
            Reflection::Sink {
                v: v2,
                retraction,
                blocks: tb,
                ..
            },
        ) if v == v2 => {
            let d = block_diag(f, sb, tb);
            maps[*v] = retraction.mul(&d).mul(inclusion);
        }
        (
            Reflection::Source {
                v,
                section,
                blocks: sb,
                ..
            },
            Reflection::Source {
                v: v2,
                projection,
                blocks: tb,
                ..
            },
        ) if v == v2 => {
            let d = block_diag(f, sb, tb);
            maps[*v] = projection.mul(&d).mul(section);
        }
        _ => {
            return Err(Error::Consistency(
                "reflection data of source and target do not match".into(),
            ))
        }
    }
    Ok(Morphism { maps })
}

/// The per-step data of a Coxeter functor applied to one representation.
#[derive(Clone, Debug)]
pub struct CoxeterTrace {
    steps: Vec<Reflection>,
}

impl CoxeterTrace {
    /// Pushes `f: X -> Y` through the same sequence of reflections.
    pub fn apply(&self, f: &Morphism, target: &CoxeterTrace) -> Result<Morphism> {
        if self.steps.len() != target.steps.len() {
            return Err(Error::Consistency("Coxeter traces differ in length".into()));
        }
        self.steps
            .iter()
            .zip(&target.steps)
            .try_fold(f.clone(), |g, (s, t)| reflect_morphism(&g, s, t))
    }
}

/// `C^+ = S^+_{i_n} ... S^+_{i_1}` along the admissible order.
pub fn coxeter_plus(x: &Representation) -> (Representation, CoxeterTrace) {
    let order = x.quiver.admissible_order();
    run(x, order.into_iter())
}

/// `C^- = S^-_{i_1} ... S^-_{i_n}`: reflect at `i_n` (a source) first.
pub fn coxeter_minus(x: &Representation) -> (Representation, CoxeterTrace) {
    let order = x.quiver.admissible_order();
    run(x, order.into_iter().rev())
}

fn run(x: &Representation, order: impl Iterator<Item = Vertex>) -> (Representation, CoxeterTrace) {
    let mut cur = x.clone();
    let mut steps = Vec::new();
    for v in order {
        let (next, step) = reflect_at(&cur, v).expect("admissible order yields sinks/sources");
        cur = next;
        steps.push(step);
    }
    debug_assert_eq!(cur.quiver, x.quiver);
    (cur, CoxeterTrace { steps })
}
