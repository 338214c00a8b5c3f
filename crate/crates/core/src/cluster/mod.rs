//! The cluster category `C(H)` over the fundamental domain
//! `mod H ⊔ {P(a)[1]}`.

mod arquiver;
mod relabel;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_consistent, Error, Result};
use crate::quiver::{DimVector, Quiver, Vertex};
use crate::rep::Catalogue;

pub use arquiver::{ar_quiver_c, mod_gamma_quiver, CQuiver, DotOptions};
pub use relabel::{reflection_relabeling, Relabeling};

/// Label of an indecomposable object of `C(H)`.
///
/// The derived ordering is the canonical one: modules by dimension vector,
/// then shifted projectives by vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CObject {
    Module(DimVector),
    ShiftedProj(Vertex),
}

impl CObject {
    pub fn is_module(&self) -> bool {
        matches!(self, CObject::Module(_))
    }
}

impl fmt::Display for CObject {
    /// `M(0,1,1)` or `P(3)[1]`, vertices 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CObject::Module(d) => write!(f, "M{d}"),
            CObject::ShiftedProj(a) => write!(f, "P({})[1]", a + 1),
        }
    }
}

impl FromStr for CObject {
    type Err = Error;

    /// Accepts `M(0,1,1)`, a bare `(0,1,1)`, or `P(3)[1]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLabel(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = t.strip_prefix('P') {
            let inner = rest
                .strip_suffix("[1]")
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let a: usize = inner.parse().map_err(|_| bad())?;
            if a == 0 {
                return Err(bad());
            }
            return Ok(CObject::ShiftedProj(a - 1));
        }
        let body = t.strip_prefix('M').unwrap_or(&t);
        let inner = body
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let coords = inner
            .split(',')
            .map(|x| x.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(CObject::Module(DimVector(coords)))
    }
}

impl From<CObject> for String {
    fn from(c: CObject) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for CObject {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// One row of a hammock sequence: `(t, dim Hom(P(a), τ^{-t}P(a)), injective?)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammockEntry {
    pub t: usize,
    pub hom: u32,
    pub injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hammock {
    pub vertex: Vertex,
    pub entries: Vec<HammockEntry>,
    /// Some odd `t` has nonzero Hom into a non-injective `τ^{-t}P(a)`.
    pub odd_trigger: bool,
}

/// `C(H)` for one oriented Dynkin quiver: labels, `τ_c`, and the Hom/Ext
/// dimension tables.
///
/// Object indices follow the canonical order. Index `i < m` is the module
/// with catalogue index `i` (the catalogue is sorted by dimension vector),
/// and `m + a` is `P(a)[1]`.
#[derive(Debug)]
pub struct ClusterCategory {
    catalogue: Catalogue,
    labels: Vec<CObject>,
    index: HashMap<CObject, usize>,
    tau: Vec<usize>,
    tau_inv: Vec<usize>,
    hom: Vec<Vec<u32>>,
}

static SHARED: Lazy<Mutex<HashMap<Quiver, Arc<ClusterCategory>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl ClusterCategory {
    pub fn new(quiver: &Quiver) -> Result<Self> {
        let catalogue = Catalogue::build(quiver)?;
        let m = catalogue.len();
        let n = quiver.n();
        let mut labels: Vec<CObject> = (0..m)
            .map(|i| CObject::Module(catalogue.dim_vector(i)))
            .collect();
        labels.extend(quiver.vertices().map(CObject::ShiftedProj));
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();

        let mut tau = vec![0; m + n];
        for (i, t) in tau.iter_mut().enumerate().take(m) {
            *t = match catalogue.tau_plus(i) {
                Some(j) => j,
                None => m + catalogue.entries()[i].vertex,
            };
        }
        for a in 0..n {
            tau[m + a] = catalogue.injective(a);
        }
        let mut tau_inv = vec![usize::MAX; m + n];
        for (i, &t) in tau.iter().enumerate() {
            tau_inv[t] = i;
        }
        ensure_consistent!(
            tau_inv.iter().all(|&x| x != usize::MAX),
            "tau_c is not a permutation"
        );

        let mut cat = ClusterCategory {
            catalogue,
            labels,
            index,
            tau,
            tau_inv,
            hom: Vec::new(),
        };
        cat.hom = cat.compute_hom_table();
        Ok(cat)
    }

    /// Process-wide instance for `quiver`, built on first use.
    pub fn shared(quiver: &Quiver) -> Result<Arc<Self>> {
        if let Some(c) = SHARED.lock().expect("cache lock").get(quiver) {
            return Ok(Arc::clone(c));
        }
        let built = Arc::new(Self::new(quiver)?);
        let mut guard = SHARED.lock().expect("cache lock");
        Ok(Arc::clone(guard.entry(quiver.clone()).or_insert(built)))
    }

    fn compute_hom_table(&self) -> Vec<Vec<u32>> {
        let c = &self.catalogue;
        let q = c.quiver();
        let m = c.len();
        let total = self.len();
        let _ = c.hom_table();
        (0..total)
            .map(|x| {
                (0..total)
                    .map(|y| match (x < m, y < m) {
                        (true, true) => {
                            c.hom_dim(x, y) + c.tau_minus(y).map_or(0, |ty| c.ext_dim(x, ty))
                        }
                        (true, false) => c.ext_dim(x, c.projective(y - m)),
                        (false, true) => c
                            .tau_minus(y)
                            .map_or(0, |ty| c.dim_vector(ty)[x - m] as u32),
                        (false, false) => q.dim_projective(y - m)[x - m] as u32,
                    })
                    .collect()
            })
            .collect()
    }

    pub fn quiver(&self) -> &Quiver {
        self.catalogue.quiver()
    }

    pub fn catalogue(&self) -> &Catalogue {
        &self.catalogue
    }

    pub fn n(&self) -> usize {
        self.quiver().n()
    }

    /// Number of indecomposable objects, `|roots| + n`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn module_count(&self) -> usize {
        self.catalogue.len()
    }

    pub fn labels(&self) -> &[CObject] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &CObject {
        &self.labels[i]
    }

    pub fn index_of(&self, x: &CObject) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(x.to_string()))
    }

    pub fn parse_label(&self, s: &str) -> Result<usize> {
        self.index_of(&s.parse()?)
    }

    pub fn is_shifted(&self, i: usize) -> bool {
        i >= self.module_count()
    }

    pub fn shifted(&self, a: Vertex) -> usize {
        self.module_count() + a
    }

    /// Object index of the module `P(a)`.
    pub fn projective(&self, a: Vertex) -> usize {
        self.catalogue.projective(a)
    }

    pub fn injective(&self, a: Vertex) -> usize {
        self.catalogue.injective(a)
    }

    pub fn tau(&self, i: usize) -> usize {
        self.tau[i]
    }

    pub fn tau_inv(&self, i: usize) -> usize {
        self.tau_inv[i]
    }

    /// `τ_c^k`, negative `k` meaning `τ_c^{-1}`.
    pub fn tau_pow(&self, i: usize, k: i64) -> usize {
        let mut x = i;
        for _ in 0..k.unsigned_abs() {
            x = if k > 0 { self.tau[x] } else { self.tau_inv[x] };
        }
        x
    }

    pub fn tau_permutation(&self) -> &[usize] {
        &self.tau
    }

    /// Cycles of `τ_c`, each starting at its least index and listed in
    /// `τ_c` order; cycles sorted by representative.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.tau[x];
            }
            out.push(cyc);
        }
        out
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.orbits().iter().map(Vec::len).collect()
    }

    /// Least common multiple of the orbit lengths.
    pub fn tau_period(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.orbit_lengths()
            .into_iter()
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    pub fn hom(&self, x: usize, y: usize) -> u32 {
        self.hom[x][y]
    }

    pub fn ext(&self, x: usize, y: usize) -> u32 {
        self.hom[x][self.tau[y]]
    }

    pub fn hom_table(&self) -> &[Vec<u32>] {
        &self.hom
    }

    pub fn ext_table(&self) -> Vec<Vec<u32>> {
        (0..self.len())
            .map(|x| (0..self.len()).map(|y| self.ext(x, y)).collect())
            .collect()
    }

    pub fn hom_c_dim(&self, x: &CObject, y: &CObject) -> Result<u32> {
        Ok(self.hom(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn ext_c_dim(&self, x: &CObject, y: &CObject) -> Result<u32> {
        Ok(self.ext(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn tau_c(&self, x: &CObject) -> Result<CObject> {
        Ok(self.labels[self.tau(self.index_of(x)?)].clone())
    }

    pub fn tau_c_inv(&self, x: &CObject) -> Result<CObject> {
        Ok(self.labels[self.tau_inv(self.index_of(x)?)].clone())
    }

    /// Slice layout: `(column, row)` with shifted projectives in column 0
    /// and `τ^{-k}P(a)` at `(k + 1, a)`.
    pub fn position(&self, i: usize) -> (usize, Vertex) {
        if self.is_shifted(i) {
            (0, i - self.module_count())
        } else {
            let e = &self.catalogue.entries()[i];
            (e.step + 1, e.vertex)
        }
    }

    /// Row of `I(a)` in the slice layout, per vertex `a`.
    pub fn injective_rows(&self) -> Vec<Vertex> {
        self.quiver()
            .vertices()
            .map(|a| self.catalogue.entries()[self.injective(a)].vertex)
            .collect()
    }

    /// Whether the strip is glued back with a nontrivial row permutation.
    pub fn twisted(&self) -> bool {
        self.injective_rows()
            .iter()
            .enumerate()
            .any(|(a, &r)| a != r)
    }

    /// `dim Hom_H(P(a), τ^{-t}P(a))` for `t = 0, 1, …` until the injective.
    pub fn hammock(&self, a: Vertex) -> Result<Hammock> {
        self.quiver().check_vertex(a)?;
        let c = &self.catalogue;
        let p = c.projective(a);
        let mut entries = Vec::new();
        let mut cur = Some(p);
        let mut t = 0;
        while let Some(x) = cur {
            entries.push(HammockEntry {
                t,
                hom: c.hom_dim(p, x),
                injective: c.is_injective(x),
            });
            cur = c.tau_minus(x);
            t += 1;
        }
        let odd_trigger = entries
            .iter()
            .any(|e| e.t % 2 == 1 && e.hom > 0 && !e.injective);
        Ok(Hammock {
            vertex: a,
            entries,
            odd_trigger,
        })
    }
}
