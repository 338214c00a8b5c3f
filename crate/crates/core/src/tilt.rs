//! Rigid and cluster-tilting objects of `C(H)` as cliques of the
//! Ext-compatibility graph.

use rayon::prelude::*;

use crate::cluster::{CObject, ClusterCategory};
use crate::error::{ensure_consistent, Error, Result};

type Bits = u128;

fn bits_iter(mut b: Bits) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if b == 0 {
            None
        } else {
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(i)
        }
    })
}

/// `x ~ y` iff `x ≠ y` and `Ext¹_C(x, y) = 0`.
#[derive(Clone, Debug)]
pub struct CompatGraph {
    adj: Vec<Bits>,
}

impl CompatGraph {
    pub fn new(cat: &ClusterCategory) -> Result<Self> {
        let len = cat.len();
        if len > Bits::BITS as usize {
            return Err(Error::Unsupported(format!(
                "{} objects exceed the clique search limit of {}",
                len,
                Bits::BITS
            )));
        }
        let mut adj = vec![0 as Bits; len];
        for (x, row) in adj.iter_mut().enumerate() {
            ensure_consistent!(cat.ext(x, x) == 0, "{} is not rigid", cat.label(x));
            for y in 0..len {
                ensure_consistent!(
                    cat.ext(x, y) == cat.ext(y, x),
                    "Ext table not symmetric at {} {}",
                    cat.label(x),
                    cat.label(y)
                );
                if x != y && cat.ext(x, y) == 0 {
                    *row |= 1 << y;
                }
            }
        }
        Ok(CompatGraph { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|b| b.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count_ones() as usize
    }

    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x] >> y & 1 == 1
    }

    /// All maximal cliques, each sorted, the list sorted.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let len = self.vertex_count();
        let mut out: Vec<Vec<usize>> = (0..len)
            .into_par_iter()
            .flat_map_iter(|v| {
                let later: Bits = if v + 1 >= Bits::BITS as usize {
                    0
                } else {
                    !0 << (v + 1)
                };
                let earlier: Bits = (1 << v) - 1;
                let mut found = Vec::new();
                let mut r = vec![v];
                self.bron_kerbosch(&mut r, self.adj[v] & later, self.adj[v] & earlier, &mut found);
                found
            })
            .collect();
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: &mut Vec<usize>, mut p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
        if p == 0 {
            if x == 0 {
                out.push(r.clone());
            }
            return;
        }
        let pivot = bits_iter(p | x)
            .max_by_key(|&u| (self.adj[u] & p).count_ones())
            .expect("nonempty");
        for v in bits_iter(p & !self.adj[pivot]) {
            r.push(v);
            self.bron_kerbosch(r, p & self.adj[v], x & self.adj[v], out);
            r.pop();
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
}

/// A basic object with `n` pairwise Ext-orthogonal summands, as sorted
/// object indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TiltingObject {
    pub summands: Vec<usize>,
}

impl TiltingObject {
    pub fn new(mut summands: Vec<usize>) -> Self {
        summands.sort_unstable();
        summands.dedup();
        TiltingObject { summands }
    }

    pub fn from_labels(cat: &ClusterCategory, labels: &[CObject]) -> Result<Self> {
        Ok(Self::new(
            labels
                .iter()
                .map(|l| cat.index_of(l))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    pub fn labels(&self, cat: &ClusterCategory) -> Vec<CObject> {
        self.summands.iter().map(|&i| cat.label(i).clone()).collect()
    }

    pub fn label_strings(&self, cat: &ClusterCategory) -> Vec<String> {
        self.summands.iter().map(|&i| cat.label(i).to_string()).collect()
    }

    pub fn tau_pow(&self, cat: &ClusterCategory, k: i64) -> TiltingObject {
        Self::new(self.summands.iter().map(|&i| cat.tau_pow(i, k)).collect())
    }

    pub fn is_tau2_fixed(&self, cat: &ClusterCategory) -> bool {
        &self.tau_pow(cat, 2) == self
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }
}

pub fn compat_graph(cat: &ClusterCategory) -> Result<CompatGraph> {
    CompatGraph::new(cat)
}

/// Every cluster-tilting object, canonically sorted. Fails if some maximal
/// rigid object has a number of summands other than `n`.
pub fn enumerate_cluster_tilting(cat: &ClusterCategory) -> Result<Vec<TiltingObject>> {
    let g = CompatGraph::new(cat)?;
    let cliques = g.maximal_cliques();
    let n = cat.n();
    if let Some(bad) = cliques.iter().find(|c| c.len() != n) {
        let names: Vec<String> = bad.iter().map(|&i| cat.label(i).to_string()).collect();
        return Err(Error::Consistency(format!(
            "maximal rigid object with {} summands: {}",
            bad.len(),
            names.join(" ")
        )));
    }
    Ok(cliques.into_iter().map(TiltingObject::new).collect())
}

pub fn is_cluster_tilting(cat: &ClusterCategory, s: &[usize]) -> bool {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len() == s.len()
        && v.len() == cat.n()
        && v.iter().all(|&x| x < cat.len())
        && v
            .iter()
            .all(|&x| v.iter().all(|&y| cat.ext(x, y) == 0))
}

/// Cluster-tilting objects with `τ_c² T = T`.
pub fn selfinjective_candidates(
    cat: &ClusterCategory,
    all: &[TiltingObject],
) -> Vec<TiltingObject> {
    all.iter()
        .filter(|t| t.is_tau2_fixed(cat))
        .cloned()
        .collect()
}
