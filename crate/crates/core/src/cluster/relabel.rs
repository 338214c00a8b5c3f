use crate::error::{ensure_consistent, Error, Result};
use crate::quiver::{DimVector, Vertex};

use super::{CObject, ClusterCategory};

/// A bijection between the objects of two cluster categories induced by an
/// equivalence, as a map of object indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub map: Vec<usize>,
}

impl Relabeling {
    pub fn identity(len: usize) -> Self {
        Relabeling {
            map: (0..len).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Relabeling) -> Relabeling {
        Relabeling {
            map: self.map.iter().map(|&i| other.map[i]).collect(),
        }
    }
}

/// Labels moved along the reflection equivalence `C(Q) -> C(σ_v Q)` at a
/// sink `v` of `Q`.
///
/// A module `M ≠ S(v)` goes to the module with dimension vector `s_v(dim M)`,
/// `S(v)` goes to `P'(v)[1]`, and `P(a)[1]` goes to `τ_c` of the image of
/// `P(a)`.
pub fn reflection_relabeling(
    from: &ClusterCategory,
    to: &ClusterCategory,
    v: Vertex,
) -> Result<Relabeling> {
    let q = from.quiver();
    if !q.is_sink(v) {
        return Err(Error::NotSinkOrSource(v));
    }
    ensure_consistent!(
        to.quiver() == &q.reflected_at(v),
        "target category is not the reflection at vertex {}",
        v + 1
    );
    let n = q.n();
    let simple = DimVector::unit(n, v);
    let module_image = |i: usize| -> Result<usize> {
        let CObject::Module(d) = from.label(i) else {
            unreachable!("module index")
        };
        if *d == simple {
            Ok(to.shifted(v))
        } else {
            to.index_of(&CObject::Module(q.simple_reflection(v, d)))
        }
    };
    let mut map = Vec::with_capacity(from.len());
    for i in 0..from.module_count() {
        map.push(module_image(i)?);
    }
    for a in q.vertices() {
        map.push(to.tau(module_image(from.projective(a))?));
    }
    let mut seen = vec![false; to.len()];
    for &j in &map {
        ensure_consistent!(!seen[j], "reflection relabeling is not injective");
        seen[j] = true;
    }
    Ok(Relabeling { map })
}
