use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_consistent, Error, Result};
use crate::quiver::Vertex;
use crate::SCHEMA_VERSION;

use super::{CObject, ClusterCategory};

/// A translation quiver on a subset of the objects of `C(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CQuiver {
    /// Object indices in the category, canonical order.
    pub objects: Vec<usize>,
    pub labels: Vec<CObject>,
    /// Arrows between positions in `objects`, sorted.
    pub arrows: Vec<(usize, usize)>,
    /// `τ_c` where both ends are present.
    pub translation: Vec<Option<usize>>,
    /// `(slice, row)` per vertex.
    pub positions: Vec<(usize, Vertex)>,
    pub marked: Vec<bool>,
    pub twisted: bool,
}

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    pub name: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    label: CObject,
    slice: usize,
    row: usize,
    marked: bool,
}

#[derive(Serialize, Deserialize)]
struct JsonQuiver {
    schema_version: u32,
    dynkin: String,
    orientation: String,
    twisted: bool,
    vertices: Vec<JsonVertex>,
    arrows: Vec<(usize, usize)>,
    translation: Vec<Option<usize>>,
}

/// All arrows of the AR quiver of `C(H)`, as pairs of object indices.
///
/// Seeds come from the preprojective knitting pattern of `mod H` and the
/// shifted slice; the set is then closed under both directions of the mesh
/// rule `y -> x  ⇒  τx -> y`.
fn closed_arrows(cat: &ClusterCategory) -> Result<BTreeSet<(usize, usize)>> {
    let c = cat.catalogue();
    let mut arrows = BTreeSet::new();
    for &(s, t) in cat.quiver().arrows() {
        // irreducible P(t) -> P(s)
        arrows.insert((cat.shifted(t), cat.shifted(s)));
        let (mut lo, mut hi) = (Some(c.projective(t)), Some(c.projective(s)));
        while let (Some(x), Some(y)) = (lo, hi) {
            arrows.insert((x, y));
            let next = c.tau_minus(x);
            if let Some(nx) = next {
                arrows.insert((y, nx));
            }
            lo = next;
            hi = c.tau_minus(y);
        }
    }
    let bound = cat.len() * cat.len();
    loop {
        let before = arrows.len();
        let current: Vec<_> = arrows.iter().copied().collect();
        for (y, x) in current {
            arrows.insert((cat.tau(x), y));
            arrows.insert((x, cat.tau_inv(y)));
        }
        if arrows.len() == before {
            break;
        }
        ensure_consistent!(arrows.len() <= bound, "mesh closure does not stabilize");
    }
    Ok(arrows)
}

fn build(cat: &ClusterCategory, keep: &[bool], marks: &[usize]) -> Result<CQuiver> {
    let arrows_all = closed_arrows(cat)?;
    let objects: Vec<usize> = (0..cat.len()).filter(|&i| keep[i]).collect();
    let mut pos = vec![usize::MAX; cat.len()];
    for (p, &o) in objects.iter().enumerate() {
        pos[o] = p;
    }
    let arrows = arrows_all
        .iter()
        .filter(|&&(x, y)| keep[x] && keep[y])
        .map(|&(x, y)| (pos[x], pos[y]))
        .collect();
    let translation = objects
        .iter()
        .map(|&o| {
            let t = cat.tau(o);
            keep[t].then(|| pos[t])
        })
        .collect();
    Ok(CQuiver {
        labels: objects.iter().map(|&o| cat.label(o).clone()).collect(),
        positions: objects.iter().map(|&o| cat.position(o)).collect(),
        marked: objects.iter().map(|o| marks.contains(o)).collect(),
        objects,
        arrows,
        translation,
        twisted: cat.twisted(),
    })
}

/// The AR quiver of `C(H)`, optionally star-marking some objects.
pub fn ar_quiver_c(cat: &ClusterCategory, marks: &[usize]) -> Result<CQuiver> {
    build(cat, &vec![true; cat.len()], marks)
}

/// The AR quiver of `mod End_C(T)`: `C(H)` with the objects `τ_c T_i`
/// removed. The summands of `T` are marked.
pub fn mod_gamma_quiver(cat: &ClusterCategory, t: &[usize]) -> Result<CQuiver> {
    if !crate::tilt::is_cluster_tilting(cat, t) {
        let names: Vec<String> = t.iter().map(|&i| cat.label(i).to_string()).collect();
        return Err(Error::NotClusterTilting(names.join(" ")));
    }
    let mut keep = vec![true; cat.len()];
    for &x in t {
        keep[cat.tau(x)] = false;
    }
    build(cat, &keep, t)
}

impl CQuiver {
    pub fn vertex_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().filter(|&&m| m).count()
    }

    /// Arrows running from a later slice back to an earlier one; these are
    /// the ones crossing the identification seam.
    pub fn is_seam(&self, k: usize) -> bool {
        let (x, y) = self.arrows[k];
        self.positions[y].0 < self.positions[x].0
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }

    /// `#(y -> x) = #(τx -> y)` wherever `τx` is present.
    pub fn mesh_holds(&self) -> bool {
        let set: BTreeSet<_> = self.arrows.iter().copied().collect();
        (0..self.vertex_count()).all(|x| {
            let Some(tx) = self.translation[x] else {
                return true;
            };
            (0..self.vertex_count()).all(|y| set.contains(&(y, x)) == set.contains(&(tx, y)))
        })
    }

    pub fn to_dot(&self, title: &str, opts: &DotOptions) -> String {
        let name = opts.name.clone().unwrap_or_else(|| title.to_string());
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  // twisted={}", self.twisted);
        s.push_str("  rankdir=LR;\n  node [shape=plaintext, fontsize=10];\n");
        let slices: BTreeSet<usize> = self.positions.iter().map(|p| p.0).collect();
        let seam_vertices: BTreeSet<usize> = (0..self.arrows.len())
            .filter(|&k| self.is_seam(k))
            .flat_map(|k| [self.arrows[k].0, self.arrows[k].1])
            .collect();
        for v in 0..self.vertex_count() {
            let (x, y) = self.positions[v];
            let star = if self.marked[v] { "*" } else { "" };
            let mut attrs = format!(
                "label=\"{}{star}\", pos=\"{x},{y}!\"",
                self.labels[v]
            );
            if self.marked[v] {
                attrs.push_str(", fontcolor=red");
            }
            if seam_vertices.contains(&v) {
                attrs.push_str(", xlabel=\"seam\"");
            }
            let _ = writeln!(s, "  v{v} [{attrs}];");
        }
        for x in slices {
            let members: Vec<String> = (0..self.vertex_count())
                .filter(|&v| self.positions[v].0 == x)
                .map(|v| format!("v{v}"))
                .collect();
            let _ = writeln!(s, "  {{ rank=same; {}; }}", members.join("; "));
        }
        for (k, &(a, b)) in self.arrows.iter().enumerate() {
            if self.is_seam(k) {
                let _ = writeln!(s, "  v{a} -> v{b} [style=dashed, constraint=false];");
            } else {
                let _ = writeln!(s, "  v{a} -> v{b};");
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, dynkin: &str, orientation: &str) -> serde_json::Value {
        let doc = JsonQuiver {
            schema_version: SCHEMA_VERSION,
            dynkin: dynkin.to_string(),
            orientation: orientation.to_string(),
            twisted: self.twisted,
            vertices: (0..self.vertex_count())
                .map(|v| JsonVertex {
                    label: self.labels[v].clone(),
                    slice: self.positions[v].0,
                    row: self.positions[v].1 + 1,
                    marked: self.marked[v],
                })
                .collect(),
            arrows: self.arrows.clone(),
            translation: self.translation.clone(),
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{Family, Quiver};

    #[test]
    fn a3_counts() {
        let cat = ClusterCategory::new(&Quiver::build(Family::A, 3).unwrap()).unwrap();
        let g = ar_quiver_c(&cat, &[]).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.arrow_count(), 12);
        assert!(g.mesh_holds());
    }

    #[test]
    fn arrows_carry_morphisms() {
        let cat = ClusterCategory::new(&Quiver::build(Family::D, 5).unwrap()).unwrap();
        let g = ar_quiver_c(&cat, &[]).unwrap();
        for &(x, y) in &g.arrows {
            assert!(cat.hom(g.objects[x], g.objects[y]) >= 1);
        }
    }

    #[test]
    fn degrees_follow_rows() {
        let q = Quiver::build(Family::E, 6).unwrap();
        let cat = ClusterCategory::new(&q).unwrap();
        let g = ar_quiver_c(&cat, &[]).unwrap();
        for v in 0..g.vertex_count() {
            let row = g.positions[v].1;
            assert_eq!(g.in_degree(v), q.degree(row));
            assert_eq!(g.out_degree(v), q.degree(row));
        }
    }
}
