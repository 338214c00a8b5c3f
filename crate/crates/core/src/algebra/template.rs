use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_consistent, Result};
use crate::linalg::Q;

use super::basic::{BasicAlgebra, BasisTag, Sparse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TemplateFamily {
    /// Cyclic quiver with `n` vertices, all paths of length `loewy` zero.
    NakayamaCycle { n: usize, loewy: usize },
    /// Vertices `t_1..t_m, b_1..b_m`; `α_i: t_i -> t_{i+1}`,
    /// `β_i: t_i -> b_i`, `β'_i: b_i -> t_{i+m-1}`; `αβ = βα = 0` and
    /// `α^{m-1} = β²`.
    BiserialD2m { m: usize },
}

impl fmt::Display for TemplateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemplateFamily::NakayamaCycle { n, loewy } => write!(f, "NakayamaCycle({n},{loewy})"),
            TemplateFamily::BiserialD2m { m } => write!(f, "BiserialD2m({m})"),
        }
    }
}

/// A quiver with monomial and commutativity relations. Paths are words of
/// arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationTemplate {
    pub family: TemplateFamily,
    pub vertices: usize,
    pub vertex_names: Vec<String>,
    pub arrows: Vec<(usize, usize)>,
    pub arrow_names: Vec<String>,
    pub zero_relations: Vec<Vec<usize>>,
    pub commutations: Vec<(Vec<usize>, Vec<usize>)>,
}

/// Equivalence classes of paths modulo the relations.
#[derive(Clone, Debug)]
pub struct PathClasses {
    /// Shortest-then-least representative word of each nonzero class.
    pub representatives: Vec<Vec<usize>>,
    class_of: HashMap<Vec<usize>, Option<usize>>,
    /// Every path of this length is zero.
    pub vanishing_length: usize,
}

impl PathClasses {
    pub fn class_of(&self, w: &[usize]) -> Option<usize> {
        if w.len() >= self.vanishing_length {
            return None;
        }
        self.class_of.get(w).copied().flatten()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn contains_at(w: &[usize], p: &[usize], at: usize) -> bool {
    at + p.len() <= w.len() && &w[at..at + p.len()] == p
}

impl PresentationTemplate {
    pub fn nakayama_cycle(n: usize, loewy: usize) -> Self {
        let arrows: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let zero_relations = (0..n)
            .map(|i| (0..loewy).map(|k| (i + k) % n).collect())
            .collect();
        PresentationTemplate {
            family: TemplateFamily::NakayamaCycle { n, loewy },
            vertices: n,
            vertex_names: (1..=n).map(|i| i.to_string()).collect(),
            arrow_names: (1..=n).map(|i| format!("a{i}")).collect(),
            arrows,
            zero_relations,
            commutations: Vec::new(),
        }
    }

    pub fn biserial_d2m(m: usize) -> Self {
        let t = |i: usize| i % m;
        let b = |i: usize| m + i % m;
        let alpha = |i: usize| i % m;
        let beta = |i: usize| m + i % m;
        let beta2 = |i: usize| 2 * m + i % m;
        let mut arrows = Vec::new();
        let mut arrow_names = Vec::new();
        for i in 0..m {
            arrows.push((t(i), t(i + 1)));
            arrow_names.push(format!("alpha{}", i + 1));
        }
        for i in 0..m {
            arrows.push((t(i), b(i)));
            arrow_names.push(format!("beta{}", i + 1));
        }
        for i in 0..m {
            arrows.push((b(i), t(i + m - 1)));
            arrow_names.push(format!("beta{}'", i + 1));
        }
        let mut zero_relations = Vec::new();
        let mut commutations = Vec::new();
        for i in 0..m {
            // α then β, and β then α
            zero_relations.push(vec![alpha(i), beta(i + 1)]);
            zero_relations.push(vec![beta2(i), alpha(i + m - 1)]);
            let power: Vec<usize> = (0..m - 1).map(|k| alpha(i + k)).collect();
            commutations.push((power, vec![beta(i), beta2(i)]));
        }
        PresentationTemplate {
            family: TemplateFamily::BiserialD2m { m },
            vertices: 2 * m,
            vertex_names: (1..=m)
                .map(|i| format!("t{i}"))
                .chain((1..=m).map(|i| format!("b{i}")))
                .collect(),
            arrows,
            arrow_names,
            zero_relations,
            commutations,
        }
    }

    pub fn name(&self) -> String {
        self.family.to_string()
    }

    fn words_up_to(&self, len: usize) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = Vec::new();
        let mut frontier: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &frontier {
                let end = self.arrows[*w.last().expect("nonempty")].1;
                for (a, &(s, _)) in self.arrows.iter().enumerate() {
                    if s == end {
                        let mut v = w.clone();
                        v.push(a);
                        next.push(v);
                    }
                }
            }
            all.append(&mut frontier);
            frontier = next;
        }
        all
    }

    fn classes_within(&self, max_len: usize) -> (Vec<Vec<usize>>, Vec<bool>, UnionFind) {
        let words = self.words_up_to(max_len);
        let index: HashMap<&[usize], usize> =
            words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let mut uf = UnionFind((0..words.len()).collect());
        for (i, w) in words.iter().enumerate() {
            for (p, q) in self
                .commutations
                .iter()
                .flat_map(|(p, q)| [(p, q), (q, p)])
            {
                for at in 0..w.len() {
                    if contains_at(w, p, at) {
                        let mut v = w[..at].to_vec();
                        v.extend_from_slice(q);
                        v.extend_from_slice(&w[at + p.len()..]);
                        if let Some(&j) = index.get(v.as_slice()) {
                            uf.union(i, j);
                        }
                    }
                }
            }
        }
        let mut zero = vec![false; words.len()];
        for (i, w) in words.iter().enumerate() {
            if self
                .zero_relations
                .iter()
                .any(|z| (0..w.len()).any(|at| contains_at(w, z, at)))
            {
                let r = uf.find(i);
                zero[r] = true;
            }
        }
        (words, zero, uf)
    }

    /// Enumerates path classes, growing the length bound until some length
    /// has only zero paths with room to spare for the relations.
    pub fn path_classes(&self) -> Result<PathClasses> {
        let rel_len = self
            .zero_relations
            .iter()
            .map(Vec::len)
            .chain(self.commutations.iter().map(|(p, q)| p.len().max(q.len())))
            .max()
            .unwrap_or(1);
        let mut bound = rel_len + 1;
        loop {
            ensure_consistent!(bound <= 64, "template paths do not vanish");
            let (words, zero, mut uf) = self.classes_within(bound);
            let is_zero = |uf: &mut UnionFind, i: usize| zero[uf.find(i)];
            let mut vanishing = None;
            for len in 1..=bound {
                let all_zero = words
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| w.len() == len)
                    .all(|(i, _)| is_zero(&mut uf, i));
                if all_zero {
                    vanishing = Some(len);
                    break;
                }
            }
            match vanishing {
                Some(l0) if l0 + rel_len <= bound => {
                    let mut root_class: HashMap<usize, usize> = HashMap::new();
                    let mut representatives = Vec::new();
                    let mut class_of = HashMap::new();
                    // words are generated by length, then lexicographically
                    for (i, w) in words.iter().enumerate() {
                        if w.len() >= l0 {
                            continue;
                        }
                        let r = uf.find(i);
                        let c = if zero[r] {
                            None
                        } else {
                            Some(*root_class.entry(r).or_insert_with(|| {
                                representatives.push(w.clone());
                                representatives.len() - 1
                            }))
                        };
                        class_of.insert(w.clone(), c);
                    }
                    return Ok(PathClasses {
                        representatives,
                        class_of,
                        vanishing_length: l0,
                    });
                }
                _ => bound += 2,
            }
        }
    }

    /// `dim kQ/I`: vertices plus nonzero path classes.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.vertices + self.path_classes()?.representatives.len())
    }

    pub fn algebra(&self) -> Result<BasicAlgebra> {
        let classes = self.path_classes()?;
        algebra_from_paths(self.vertices, &self.arrows, &classes.representatives, |w| {
            classes.class_of(w)
        })
    }
}

/// Algebra with basis `e_v` followed by the given path words, where
/// `class_of` sends a composable word to the index of its basis path or to
/// `None` when it vanishes. For a path algebra pass all paths and a lookup.
pub(crate) fn algebra_from_paths(
    vertices: usize,
    arrows: &[(usize, usize)],
    paths: &[Vec<usize>],
    class_of: impl Fn(&[usize]) -> Option<usize>,
) -> Result<BasicAlgebra> {
    let mut tags: Vec<BasisTag> = (0..vertices)
        .map(|v| BasisTag {
            source: v,
            target: v,
            degree: 0,
        })
        .collect();
    for w in paths {
        tags.push(BasisTag {
            source: arrows[w[0]].0,
            target: arrows[*w.last().expect("nonempty path")].1,
            degree: 0,
        });
    }
    let dim = tags.len();
    let one = Q::from_integer(1);
    let mut products: Vec<Vec<Sparse>> = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            if tags[b].target != tags[a].source {
                continue;
            }
            let p: Sparse = match (a < vertices, b < vertices) {
                (true, true) => vec![(a, one)],
                (true, false) => vec![(b, one)],
                (false, true) => vec![(a, one)],
                (false, false) => {
                    let mut w = paths[b - vertices].clone();
                    w.extend_from_slice(&paths[a - vertices]);
                    match class_of(&w) {
                        Some(c) => vec![(vertices + c, one)],
                        None => Vec::new(),
                    }
                }
            };
            products[a][b] = p.into_iter().filter(|e| !e.1.is_zero()).collect();
        }
    }
    BasicAlgebra::new(vertices, tags, (0..vertices).collect(), products)
}
