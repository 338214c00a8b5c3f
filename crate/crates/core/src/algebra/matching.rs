//! Isomorphism certificates between an algebra and a presentation
//! template.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{Matrix, Q};

use super::basic::BasicAlgebra;
use super::template::PresentationTemplate;

/// A surjection `kQ/I -> Γ` given on arrows, with `dim kQ/I = dim Γ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TemplateMatch {
    pub template: String,
    /// Template vertex to algebra vertex, 1-based.
    pub vertex_map: Vec<usize>,
    /// Template arrow to the basis element it is sent to.
    pub arrow_images: Vec<usize>,
    /// Scalar multiplying each arrow image.
    pub scalars: Vec<String>,
    /// `c` with `p = c·q` before rescaling, per commutativity relation.
    pub relation_scalars: Vec<String>,
    /// Zero relations and commutativity relations verified.
    pub relations_verified: usize,
    pub dimension: usize,
}

fn arrow_counts(vertices: usize, arrows: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0; vertices]; vertices];
    for &(s, t) in arrows {
        c[s][t] += 1;
    }
    c
}

/// Vertex bijections `f` with `count_t[u][v] == count_g[f u][f v]`.
fn quiver_isomorphisms(count_t: &[Vec<usize>], count_g: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = count_t.len();
    let mut out = Vec::new();
    let mut f = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        t: &[Vec<usize>],
        g: &[Vec<usize>],
        f: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = f.len();
        if u == t.len() {
            out.push(f.clone());
            return;
        }
        for x in 0..t.len() {
            if used[x] || t[u][u] != g[x][x] {
                continue;
            }
            let fits = f
                .iter()
                .enumerate()
                .all(|(w, &y)| t[u][w] == g[x][y] && t[w][u] == g[y][x]);
            if fits {
                used[x] = true;
                f.push(x);
                rec(t, g, f, used, out);
                f.pop();
                used[x] = false;
            }
        }
    }
    rec(count_t, count_g, &mut f, &mut used, &mut out);
    out
}

struct Evaluator<'a> {
    alg: &'a BasicAlgebra,
    images: Vec<Vec<Q>>,
}

impl Evaluator<'_> {
    /// Image of a word in traversal order: later arrows compose on the left.
    fn path(&self, word: &[usize]) -> Vec<Q> {
        let mut cur = self.images[word[0]].clone();
        for &a in &word[1..] {
            cur = self.alg.mul(&self.images[a], &cur);
        }
        cur
    }
}

fn ratio(p: &[Q], q: &[Q]) -> Option<Q> {
    let k = q.iter().position(|x| !x.is_zero())?;
    let c = p[k] / q[k];
    (!c.is_zero() && p.iter().zip(q).all(|(a, b)| *a == c * b)).then_some(c)
}

/// Looks for a presentation of `alg` by `template`. Relations are checked
/// exactly after rescaling the last arrow of each commutation.
pub fn match_template(alg: &BasicAlgebra, template: &PresentationTemplate) -> Result<Option<TemplateMatch>> {
    let classes = template.path_classes()?;
    let dim = template.vertices + classes.representatives.len();
    if alg.dim() != dim || alg.vertex_count() != template.vertices {
        return Ok(None);
    }
    let gq = alg.gabriel_quiver()?;
    if gq.arrows.len() != template.arrows.len() {
        return Ok(None);
    }
    let count_t = arrow_counts(template.vertices, &template.arrows);
    let count_g = arrow_counts(gq.vertices, &gq.arrows);
    for f in quiver_isomorphisms(&count_t, &count_g) {
        let mut taken = vec![false; gq.arrows.len()];
        let mut arrow_images = Vec::with_capacity(template.arrows.len());
        for &(s, t) in &template.arrows {
            let k = (0..gq.arrows.len())
                .find(|&k| !taken[k] && gq.arrows[k] == (f[s], f[t]))
                .expect("quiver isomorphism preserves arrow counts");
            taken[k] = true;
            arrow_images.push(gq.representatives[k]);
        }
        let mut ev = Evaluator {
            alg,
            images: arrow_images.iter().map(|&k| alg.unit_vector(k)).collect(),
        };
        let mut scalars = vec![Q::from_integer(1); template.arrows.len()];
        let mut relation_scalars = Vec::new();
        let mut ok = true;
        for (p, q) in &template.commutations {
            let last = *q.last().expect("nonempty relation");
            match ratio(&ev.path(p), &ev.path(q)) {
                Some(c) => {
                    scalars[last] *= c;
                    relation_scalars.push(c.to_string());
                    ev.images[last] = ev.images[last].iter().map(|x| *x * c).collect();
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let zero_ok = template
            .zero_relations
            .iter()
            .all(|z| ev.path(z).iter().all(Zero::is_zero));
        let comm_ok = template
            .commutations
            .iter()
            .all(|(p, q)| ev.path(p) == ev.path(q));
        if !zero_ok || !comm_ok {
            continue;
        }
        // images of the idempotents and of the path classes form a basis
        let mut cols: Vec<Vec<Q>> = f.iter().map(|&v| alg.unit_vector(alg.idempotent(v))).collect();
        cols.extend(classes.representatives.iter().map(|w| ev.path(w)));
        let m = Matrix::from_fn(alg.dim(), cols.len(), |r, c| cols[c][r]);
        if m.rank() != alg.dim() {
            continue;
        }
        return Ok(Some(TemplateMatch {
            template: template.name(),
            vertex_map: f.iter().map(|v| v + 1).collect(),
            arrow_images,
            scalars: scalars.iter().map(ToString::to_string).collect(),
            relation_scalars,
            relations_verified: template.zero_relations.len() + template.commutations.len(),
            dimension: dim,
        }));
    }
    Ok(None)
}
