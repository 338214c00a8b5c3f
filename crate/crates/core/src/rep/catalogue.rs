use std::collections::HashMap;

use once_cell::sync::OnceCell;
use rayon::prelude::*;

use crate::error::{ensure_consistent, Result};
use crate::quiver::{DimVector, Quiver, Vertex};

use super::{coxeter_minus, hom_dim_of, Representation};

/// An indecomposable together with its position `tau^{-step} P(vertex)` in
/// the preprojective component.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub rep: Representation,
    pub vertex: Vertex,
    pub step: usize,
}

/// One representative per isoclass of indecomposables, generated by
/// iterating `tau^-` from the projectives, sorted by dimension vector.
///
/// Isomorphism classes are identified by dimension vector, which is sound
/// for Dynkin quivers only.
#[derive(Debug)]
pub struct Catalogue {
    quiver: Quiver,
    entries: Vec<CatalogueEntry>,
    index: HashMap<DimVector, usize>,
    tau_minus: Vec<Option<usize>>,
    tau_plus: Vec<Option<usize>>,
    projectives: Vec<usize>,
    injectives: Vec<usize>,
    hom: OnceCell<Vec<Vec<u32>>>,
}

impl Catalogue {
    pub fn build(quiver: &Quiver) -> Result<Self> {
        let mut raw: Vec<CatalogueEntry> = Vec::new();
        // Bounded by the root count; the chain for each vertex ends at an injective.
        let limit = quiver.dynkin().root_count() + 1;
        for a in quiver.vertices() {
            let mut x = Representation::projective(quiver, a)?;
            for step in 0..limit {
                let (next, _) = coxeter_minus(&x);
                raw.push(CatalogueEntry {
                    rep: x,
                    vertex: a,
                    step,
                });
                if next.is_zero() {
                    break;
                }
                x = next;
            }
        }
        raw.sort_by_key(|e| e.rep.dim_vector());
        let index: HashMap<DimVector, usize> = raw
            .iter()
            .enumerate()
            .map(|(i, e)| (e.rep.dim_vector(), i))
            .collect();
        ensure_consistent!(
            index.len() == raw.len(),
            "tau^- orbits of projectives produced repeated dimension vectors"
        );
        ensure_consistent!(
            raw.len() == quiver.dynkin().root_count(),
            "{} indecomposables found for {}, expected {}",
            raw.len(),
            quiver.dynkin(),
            quiver.dynkin().root_count()
        );

        let n = raw.len();
        let mut tau_minus = vec![None; n];
        let mut tau_plus = vec![None; n];
        let mut by_pos: HashMap<(Vertex, usize), usize> = HashMap::new();
        for (i, e) in raw.iter().enumerate() {
            by_pos.insert((e.vertex, e.step), i);
        }
        for (i, e) in raw.iter().enumerate() {
            if let Some(&j) = by_pos.get(&(e.vertex, e.step + 1)) {
                tau_minus[i] = Some(j);
                tau_plus[j] = Some(i);
            }
        }
        let projectives: Vec<usize> = quiver.vertices().map(|a| by_pos[&(a, 0)]).collect();
        let mut injectives = Vec::with_capacity(quiver.n());
        for a in quiver.vertices() {
            let d = quiver.dim_injective(a);
            let &i = index.get(&d).ok_or_else(|| {
                crate::error::Error::Consistency(format!("injective I({}) missing", a + 1))
            })?;
            ensure_consistent!(tau_minus[i].is_none(), "I({}) has a tau^- translate", a + 1);
            injectives.push(i);
        }
        Ok(Catalogue {
            quiver: quiver.clone(),
            entries: raw,
            index,
            tau_minus,
            tau_plus,
            projectives,
            injectives,
            hom: OnceCell::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CatalogueEntry] {
        &self.entries
    }

    pub fn rep(&self, i: usize) -> &Representation {
        &self.entries[i].rep
    }

    pub fn dim_vector(&self, i: usize) -> DimVector {
        self.entries[i].rep.dim_vector()
    }

    pub fn index_of(&self, d: &DimVector) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn tau_minus(&self, i: usize) -> Option<usize> {
        self.tau_minus[i]
    }

    pub fn tau_plus(&self, i: usize) -> Option<usize> {
        self.tau_plus[i]
    }

    pub fn projective(&self, a: Vertex) -> usize {
        self.projectives[a]
    }

    pub fn injective(&self, a: Vertex) -> usize {
        self.injectives[a]
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.tau_plus[i].is_none()
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.tau_minus[i].is_none()
    }

    /// `dim Hom_H(X_i, X_j)` for all pairs, by linear algebra. Computed once.
    pub fn hom_table(&self) -> &Vec<Vec<u32>> {
        self.hom.get_or_init(|| {
            (0..self.len())
                .into_par_iter()
                .map(|i| {
                    (0..self.len())
                        .map(|j| hom_dim_of(self.rep(i), self.rep(j)) as u32)
                        .collect()
                })
                .collect()
        })
    }

    pub fn hom_dim(&self, i: usize, j: usize) -> u32 {
        self.hom_table()[i][j]
    }

    /// `dim Hom - <dim X_i, dim X_j>`.
    pub fn ext_dim(&self, i: usize, j: usize) -> u32 {
        let e = self.hom_dim(i, j) as i64
            - self
                .quiver
                .euler_unchecked(&self.dim_vector(i), &self.dim_vector(j));
        debug_assert!(e >= 0);
        e.max(0) as u32
    }
}
