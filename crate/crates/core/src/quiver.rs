//! Simply-laced Dynkin diagrams with an orientation, and the combinatorics
//! that only depends on dimension vectors: Euler form, roots, Coxeter
//! transformation, admissible orderings and arm lengths.
//!
//! Vertices are 0-based internally. Everything user-facing (labels, reports)
//! prints them 1-based, matching the usual numbering: A_n is the path
//! 1-2-...-n, D_n has edges 1-3, 2-3, 3-4, ..., (n-1)-n, and E_n uses the
//! Bourbaki numbering with branch vertex 4.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Edges of the diagram as `(lower, higher)` pairs, sorted.
    pub fn edges(self) -> Vec<(Vertex, Vertex)> {
        let n = self.rank;
        let mut edges: Vec<(Vertex, Vertex)> = match self.family {
            Family::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e = vec![(0, 2), (1, 2)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        };
        edges.sort_unstable();
        edges
    }

    pub fn coxeter_number(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n + 1,
            (Family::D, _) => 2 * n - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
        }
    }

    /// Closed-form number of positive roots.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
        }
    }

    /// Number of clusters (cluster-tilting objects) for this type.
    pub fn cluster_count(self) -> u64 {
        fn binom(n: u64, k: u64) -> u64 {
            (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
        }
        let n = self.rank as u64;
        match (self.family, n) {
            (Family::A, _) => binom(2 * n + 2, n + 1) / (n + 2),
            (Family::D, _) => (3 * n - 2) * binom(2 * n - 2, n - 1) / n,
            (Family::E, 6) => 833,
            (Family::E, 7) => 4160,
            (Family::E, _) => 25080,
        }
    }

    pub fn branch_vertex(self) -> Option<Vertex> {
        match self.family {
            Family::A => None,
            Family::D => Some(2),
            Family::E => Some(3),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Dimension vector, one integer per vertex. Also used for arbitrary root
/// lattice elements, which may have negative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, v: Vertex) -> Self {
        let mut d = vec![0; n];
        d[v] = 1;
        DimVector(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_usize(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x.max(0) as usize).collect()
    }
}

impl std::ops::Index<Vertex> for DimVector {
    type Output = i64;
    fn index(&self, v: Vertex) -> &i64 {
        &self.0[v]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// How to orient the edges when building a quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientationPolicy {
    /// Every arrow points toward the higher vertex index.
    Default,
    /// One entry per edge in canonical order; `true` keeps lower -> higher.
    Explicit(Vec<bool>),
}

impl FromStr for OrientationPolicy {
    type Err = Error;
    /// `default`, or one character per edge: `f` (lower -> higher) or `b`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.eq_ignore_ascii_case("default") {
            return Ok(OrientationPolicy::Default);
        }
        s.chars()
            .map(|c| match c {
                'f' | 'F' => Ok(true),
                'b' | 'B' => Ok(false),
                other => Err(Error::OrientationChar(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(OrientationPolicy::Explicit)
    }
}

/// A Dynkin diagram with an orientation of each edge: the quiver of the
/// hereditary algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    dynkin: DynkinType,
    edges: Vec<(Vertex, Vertex)>,
    forward: Vec<bool>,
    arrows: Vec<(Vertex, Vertex)>,
}

impl Quiver {
    pub fn new(dynkin: DynkinType, policy: &OrientationPolicy) -> Result<Self> {
        let edges = dynkin.edges();
        let forward = match policy {
            OrientationPolicy::Default => vec![true; edges.len()],
            OrientationPolicy::Explicit(f) => {
                if f.len() != edges.len() {
                    return Err(Error::OrientationLength {
                        expected: edges.len(),
                        got: f.len(),
                    });
                }
                f.clone()
            }
        };
        Ok(Self::from_parts(dynkin, edges, forward))
    }

    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Self::new(DynkinType::new(family, rank)?, &OrientationPolicy::Default)
    }

    fn from_parts(dynkin: DynkinType, edges: Vec<(Vertex, Vertex)>, forward: Vec<bool>) -> Self {
        let arrows = edges
            .iter()
            .zip(&forward)
            .map(|(&(a, b), &f)| if f { (a, b) } else { (b, a) })
            .collect();
        Quiver {
            dynkin,
            edges,
            forward,
            arrows,
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn n(&self) -> usize {
        self.dynkin.rank
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Arrows `(source, target)`, one per edge, in canonical edge order.
    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn orientation(&self) -> &[bool] {
        &self.forward
    }

    /// `f`/`b` string, parseable by [`OrientationPolicy::from_str`].
    pub fn orientation_code(&self) -> String {
        self.forward.iter().map(|&f| if f { 'f' } else { 'b' }).collect()
    }

    pub fn opposite(&self) -> Quiver {
        Self::from_parts(
            self.dynkin,
            self.edges.clone(),
            self.forward.iter().map(|f| !f).collect(),
        )
    }

    /// The quiver with every arrow at `v` reversed.
    pub fn reflected_at(&self, v: Vertex) -> Quiver {
        let forward = self
            .edges
            .iter()
            .zip(&self.forward)
            .map(|(&(a, b), &f)| if a == v || b == v { !f } else { f })
            .collect();
        Self::from_parts(self.dynkin, self.edges.clone(), forward)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.arrows.iter().all(|&(s, _)| s != v)
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.arrows.iter().all(|&(_, t)| t != v)
    }

    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbours(v).len()
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) <= 1).collect()
    }

    fn check_len(&self, d: &DimVector) -> Result<()> {
        if d.len() == self.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n(),
                got: d.len(),
            })
        }
    }

    /// `sum_v d_v e_v - sum_{a -> b} d_a e_b`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64> {
        self.check_len(d)?;
        self.check_len(e)?;
        Ok(self.euler_unchecked(d, e))
    }

    pub(crate) fn euler_unchecked(&self, d: &DimVector, e: &DimVector) -> i64 {
        let diag: i64 = d.0.iter().zip(&e.0).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| d[s] * e[t]).sum();
        diag - off
    }

    /// Symmetrized form `(d, e) = <d, e> + <e, d>`; its matrix is the Cartan
    /// matrix `2I - adjacency` of the diagram.
    pub fn symmetric_form(&self, d: &DimVector, e: &DimVector) -> i64 {
        self.euler_unchecked(d, e) + self.euler_unchecked(e, d)
    }

    /// Simple reflection `s_v(d) = d - (d, e_v) e_v`.
    pub fn simple_reflection(&self, v: Vertex, d: &DimVector) -> DimVector {
        let mut out = d.clone();
        let nb: i64 = self.neighbours(v).iter().map(|&w| d[w]).sum();
        out.0[v] = nb - d[v];
        out
    }

    /// All positive roots, obtained by closing the simple roots under simple
    /// reflections and keeping the positive images. Sorted lexicographically.
    pub fn positive_roots(&self) -> Vec<DimVector> {
        let n = self.n();
        let mut seen: BTreeSet<DimVector> = BTreeSet::new();
        let mut queue: VecDeque<DimVector> = VecDeque::new();
        for v in self.vertices() {
            let e = DimVector::unit(n, v);
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(d) = queue.pop_front() {
            for v in self.vertices() {
                let r = self.simple_reflection(v, &d);
                if r.is_nonnegative() && !r.is_zero() && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Sink-peeling order: each vertex is a sink of the quiver obtained by
    /// reflecting at all earlier vertices. Ties go to the smallest index.
    pub fn admissible_order(&self) -> Vec<Vertex> {
        let mut q = self.clone();
        let mut order = Vec::with_capacity(self.n());
        let mut used = vec![false; self.n()];
        for _ in 0..self.n() {
            let v = q
                .vertices()
                .find(|&v| !used[v] && q.is_sink(v))
                .expect("acyclic quiver always has an unused sink");
            used[v] = true;
            order.push(v);
            q = q.reflected_at(v);
        }
        order
    }

    /// Coxeter transformation `s_{i_n} ... s_{i_1}` along the admissible
    /// order; sends `dim X` to `dim tau X` for non-projective indecomposable
    /// `X`, and `dim P(a)` to `-dim I(a)`.
    pub fn coxeter_transform(&self, d: &DimVector) -> DimVector {
        self.admissible_order()
            .into_iter()
            .fold(d.clone(), |acc, v| self.simple_reflection(v, &acc))
    }

    pub fn coxeter_inverse(&self, d: &DimVector) -> DimVector {
        self.admissible_order()
            .into_iter()
            .rev()
            .fold(d.clone(), |acc, v| self.simple_reflection(v, &acc))
    }

    /// Number of directed paths from `a` to each vertex (0 or 1 on a tree).
    pub fn paths_from(&self, a: Vertex) -> DimVector {
        self.reach(a, |&(s, t)| (s, t))
    }

    /// Number of directed paths from each vertex to `a`.
    pub fn paths_to(&self, a: Vertex) -> DimVector {
        self.reach(a, |&(s, t)| (t, s))
    }

    fn reach(&self, a: Vertex, dir: impl Fn(&(Vertex, Vertex)) -> (Vertex, Vertex)) -> DimVector {
        let mut d = DimVector::zero(self.n());
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            d.0[v] += 1;
            for arrow in &self.arrows {
                let (s, t) = dir(arrow);
                if s == v {
                    stack.push(t);
                }
            }
        }
        d
    }

    pub fn dim_projective(&self, a: Vertex) -> DimVector {
        self.paths_from(a)
    }

    pub fn dim_injective(&self, a: Vertex) -> DimVector {
        self.paths_to(a)
    }

    /// Number of vertices on the minimal path from leaf `a` to the branch
    /// vertex, both ends included. `None` when `a` is not a leaf.
    pub fn arm_distance(&self, a: Vertex) -> Result<Option<usize>> {
        self.check_vertex(a)?;
        let branch = self
            .dynkin
            .branch_vertex()
            .ok_or_else(|| Error::NoBranchVertex(self.dynkin.to_string()))?;
        if self.degree(a) != 1 {
            return Ok(None);
        }
        // BFS distance on the tree.
        let mut dist = vec![usize::MAX; self.n()];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbours(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(Some(dist[branch] + 1))
    }

    /// Every orientation of the same diagram, default-first then in
    /// increasing code order.
    pub fn all_orientations(dynkin: DynkinType) -> Vec<Quiver> {
        let m = dynkin.edges().len();
        (0u32..(1 << m))
            .map(|mask| {
                let forward = (0..m).map(|i| mask & (1 << i) == 0).collect();
                Quiver::from_parts(dynkin, dynkin.edges(), forward)
            })
            .collect()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.dynkin, self.orientation_code())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(x: &[i64]) -> DimVector {
        DimVector(x.to_vec())
    }

    #[test]
    fn rank_constraints() {
        assert!(DynkinType::new(Family::A, 0).is_err());
        assert!(DynkinType::new(Family::D, 2).is_err());
        assert!(DynkinType::new(Family::E, 5).is_err());
        assert!(DynkinType::new(Family::E, 9).is_err());
        assert!(DynkinType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn default_a3_is_a_path() {
        let q = Quiver::build(Family::A, 3).unwrap();
        assert_eq!(q.arrows(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn d3_is_a3_shaped() {
        let q = Quiver::build(Family::D, 3).unwrap();
        let degrees: Vec<usize> = q.vertices().map(|v| q.degree(v)).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        assert_eq!(q.edges().len(), 2);
    }

    #[test]
    fn d4_branch_at_three() {
        let q = Quiver::build(Family::D, 4).unwrap();
        assert_eq!(q.neighbours(2), vec![0, 1, 3]);
        assert_eq!(q.leaves(), vec![0, 1, 3]);
    }

    #[test]
    fn explicit_orientation_checked() {
        let t = DynkinType::new(Family::A, 3).unwrap();
        assert!(Quiver::new(t, &OrientationPolicy::Explicit(vec![true])).is_err());
        let q = Quiver::new(t, &"bb".parse().unwrap()).unwrap();
        assert_eq!(q.arrows(), &[(1, 0), (2, 1)]);
        assert!("fx".parse::<OrientationPolicy>().is_err());
    }

    #[test]
    fn euler_form_examples() {
        let a2 = Quiver::build(Family::A, 2).unwrap();
        assert_eq!(a2.euler_form(&dv(&[1, 0]), &dv(&[0, 1])).unwrap(), -1);
        assert_eq!(a2.euler_form(&dv(&[1, 0]), &dv(&[1, 0])).unwrap(), 1);
        assert!(a2.euler_form(&dv(&[1]), &dv(&[0, 1])).is_err());
        // D4 default: arrows 1->3, 2->3, 3->4; d=(1,1,2,1), e=e_3.
        // 2*1 - (d_1 e_3 + d_2 e_3 + d_3 e_4) = 2 - 2 = 0.
        let d4 = Quiver::build(Family::D, 4).unwrap();
        assert_eq!(d4.euler_form(&dv(&[1, 1, 2, 1]), &dv(&[0, 0, 1, 0])).unwrap(), 0);
    }

    #[test]
    fn admissible_orders() {
        assert_eq!(Quiver::build(Family::A, 2).unwrap().admissible_order(), vec![1, 0]);
        assert_eq!(Quiver::build(Family::A, 3).unwrap().admissible_order(), vec![2, 1, 0]);
        assert_eq!(Quiver::build(Family::D, 4).unwrap().admissible_order(), vec![3, 2, 0, 1]);
    }

    #[test]
    fn coxeter_of_projective_leaves_positive_cone() {
        let a2 = Quiver::build(Family::A, 2).unwrap();
        assert_eq!(a2.coxeter_transform(&dv(&[1, 1])), dv(&[-1, 0]));
    }

    #[test]
    fn arm_distances() {
        let d4 = Quiver::build(Family::D, 4).unwrap();
        assert_eq!(d4.arm_distance(0).unwrap(), Some(2));
        assert_eq!(d4.arm_distance(2).unwrap(), None);
        let d6 = Quiver::build(Family::D, 6).unwrap();
        assert_eq!(d6.arm_distance(5).unwrap(), Some(4));
        let e7 = Quiver::build(Family::E, 7).unwrap();
        let ps: Vec<_> = e7.leaves().iter().map(|&a| e7.arm_distance(a).unwrap()).collect();
        assert!(ps.contains(&Some(4)));
        assert!(Quiver::build(Family::A, 3).unwrap().arm_distance(0).is_err());
    }

    #[test]
    fn projective_and_injective_dims() {
        let a3 = Quiver::build(Family::A, 3).unwrap();
        assert_eq!(a3.dim_projective(0), dv(&[1, 1, 1]));
        assert_eq!(a3.dim_injective(2), dv(&[1, 1, 1]));
        assert_eq!(a3.dim_projective(2), dv(&[0, 0, 1]));
    }
}
