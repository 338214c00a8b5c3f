//! The whole pipeline for one quiver: enumerate, filter by `τ_c² T = T`,
//! build `End_C(T)`, and identify the result.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    build_end_algebra, ext2_injective_projective, match_template, normalize_to_module_rep, tilted_algebra,
    BasicAlgebra, PresentationTemplate, TemplateMatch,
};
use crate::cluster::ClusterCategory;
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::tilt::{enumerate_cluster_tilting, selfinjective_candidates, TiltingObject};
use crate::SCHEMA_VERSION;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub indecomposables: usize,
    pub orbit_lengths: Vec<usize>,
    pub cluster_tilting: usize,
    pub candidates: usize,
}

/// Everything reported about one algebra. Vertex numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub dimension: usize,
    pub cartan: Vec<Vec<usize>>,
    pub quiver_vertices: usize,
    pub quiver_arrows: Vec<(usize, usize)>,
    pub loewy_length: usize,
    pub self_injective: bool,
    pub special_biserial: bool,
    pub nakayama_permutation: Option<Vec<usize>>,
    pub nakayama_cycle_type: Option<Vec<usize>>,
    pub kupisch_series: Option<Vec<usize>>,
}

/// Cycle lengths of a permutation, sorted descending.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

impl AlgebraReport {
    pub fn of(alg: &BasicAlgebra) -> Result<Self> {
        let gq = alg.gabriel_quiver()?;
        let nu = alg.nakayama_permutation();
        Ok(AlgebraReport {
            dimension: alg.dim(),
            cartan: alg.cartan(),
            quiver_vertices: gq.vertices,
            quiver_arrows: gq.arrows.iter().map(|&(s, t)| (s + 1, t + 1)).collect(),
            loewy_length: alg.loewy_length()?,
            self_injective: alg.is_self_injective(),
            special_biserial: alg.is_special_biserial()?,
            nakayama_cycle_type: nu.as_deref().map(cycle_type),
            nakayama_permutation: nu.map(|p| p.iter().map(|x| x + 1).collect()),
            kupisch_series: alg.kupisch_series()?.map(|k| k.0),
        })
    }
}

/// `Γ = A ⋉ Ext²_A(DA, A)` checked on dimensions and Cartan matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialExtensionCheck {
    pub tilted_dimension: usize,
    pub ext2_matrix: Vec<Vec<usize>>,
    pub ext2_total: usize,
    pub dimension_ok: bool,
    pub cartan_ok: bool,
}

impl TrivialExtensionCheck {
    pub fn holds(&self) -> bool {
        self.dimension_ok && self.cartan_ok
    }
}

pub fn trivial_extension_check(gamma: &BasicAlgebra, tilted: &BasicAlgebra) -> TrivialExtensionCheck {
    let e = ext2_injective_projective(tilted);
    let total = e.iter().flatten().sum();
    let (cg, ca) = (gamma.cartan(), tilted.cartan());
    let n = gamma.vertex_count();
    let cartan_ok = tilted.vertex_count() == n
        && (0..n).all(|i| (0..n).all(|j| cg[i][j] == ca[i][j] + e[i][j]));
    TrivialExtensionCheck {
        tilted_dimension: tilted.dim(),
        ext2_total: total,
        dimension_ok: gamma.dim() == tilted.dim() + total,
        cartan_ok,
        ext2_matrix: e,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationReport {
    /// Sink reflections applied, 1-based.
    pub reflections: Vec<usize>,
    pub orientation: String,
    pub power: usize,
    pub tilting: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Finalist {
    pub tilting: Vec<String>,
    pub normalization: NormalizationReport,
    pub algebra: AlgebraReport,
    pub family: String,
    pub template_match: TemplateMatch,
    pub trivial_extension: TrivialExtensionCheck,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub dynkin: String,
    pub rank: usize,
    pub orientation: String,
    pub counts: Counts,
    pub families: Vec<String>,
    pub finalists: Vec<Finalist>,
}

/// Templates that could present a self-injective algebra on `n` vertices.
pub fn templates_for(alg: &BasicAlgebra) -> Result<Vec<PresentationTemplate>> {
    let n = alg.vertex_count();
    let mut out = Vec::new();
    if let Some((lengths, _)) = alg.kupisch_series()? {
        if lengths.iter().all(|&l| l == lengths[0]) {
            out.push(PresentationTemplate::nakayama_cycle(n, lengths[0]));
        }
    }
    if n.is_multiple_of(2) && n >= 4 {
        out.push(PresentationTemplate::biserial_d2m(n / 2));
    }
    Ok(out)
}

/// The unique template matching `alg`, or an error when none or several do.
pub fn identify(alg: &BasicAlgebra) -> Result<TemplateMatch> {
    let mut found = Vec::new();
    for t in templates_for(alg)? {
        if let Some(m) = match_template(alg, &t)? {
            found.push(m);
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one match")),
        0 => Err(Error::Consistency(
            "self-injective algebra matches no template family".into(),
        )),
        _ => Err(Error::Consistency(format!(
            "algebra matches several templates: {}",
            found.iter().map(|m| m.template.as_str()).collect::<Vec<_>>().join(", ")
        ))),
    }
}

pub fn analyse_candidate(cat: &std::sync::Arc<ClusterCategory>, t: &TiltingObject) -> Result<Finalist> {
    let norm = normalize_to_module_rep(cat, t)?;
    let gamma = build_end_algebra(&norm.category, &norm.tilting)?;
    let algebra = AlgebraReport::of(&gamma)?;
    let names = || t.label_strings(cat).join(" ");
    if !algebra.self_injective {
        return Err(Error::Consistency(format!("τ_c²-fixed {} has non-self-injective End", names())));
    }
    if !algebra.special_biserial {
        return Err(Error::Consistency(format!("End of {} is not special biserial", names())));
    }
    let template_match = identify(&gamma)?;
    let tilted = tilted_algebra(&norm.category, &norm.tilting)?;
    let trivial_extension = trivial_extension_check(&gamma, &tilted);
    if !trivial_extension.holds() {
        return Err(Error::Consistency(format!("trivial-extension check fails for {}", names())));
    }
    Ok(Finalist {
        tilting: t.label_strings(cat),
        normalization: NormalizationReport {
            reflections: norm.reflections.iter().map(|v| v + 1).collect(),
            orientation: norm.category.quiver().orientation_code(),
            power: norm.power,
            tilting: norm.tilting.label_strings(&norm.category),
        },
        algebra,
        family: template_match.template.clone(),
        template_match,
        trivial_extension,
    })
}

pub fn classify(quiver: &Quiver) -> Result<ClassificationReport> {
    let cat = ClusterCategory::shared(quiver)?;
    let all = enumerate_cluster_tilting(&cat)?;
    let candidates = selfinjective_candidates(&cat, &all);
    let finalists = candidates
        .par_iter()
        .map(|t| analyse_candidate(&cat, t))
        .collect::<Result<Vec<_>>>()?;
    let mut families: Vec<String> = finalists.iter().map(|f| f.family.clone()).collect();
    families.sort();
    families.dedup();
    let d = quiver.dynkin();
    Ok(ClassificationReport {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        dynkin: d.to_string(),
        rank: d.rank(),
        orientation: quiver.orientation_code(),
        counts: Counts {
            indecomposables: cat.len(),
            orbit_lengths: cat.orbit_lengths(),
            cluster_tilting: all.len(),
            candidates: candidates.len(),
        },
        families,
        finalists,
    })
}

impl ClassificationReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} (orientation {})\n  indecomposables: {}\n  orbit lengths: {:?}\n  cluster-tilting objects: {}\n  tau_c^2-fixed candidates: {}\n",
            self.dynkin,
            self.orientation,
            self.counts.indecomposables,
            self.counts.orbit_lengths,
            self.counts.cluster_tilting,
            self.counts.candidates
        );
        if self.families.is_empty() {
            s.push_str("  no self-injective cluster tilted algebras\n");
        } else {
            s.push_str(&format!("  families: {}\n", self.families.join(", ")));
        }
        for f in &self.finalists {
            s.push_str(&format!(
                "  T = {}\n    {} dim {} Loewy {}",
                f.tilting.join(" "),
                f.family,
                f.algebra.dimension,
                f.algebra.loewy_length
            ));
            if let Some(k) = &f.algebra.kupisch_series {
                s.push_str(&format!(" Kupisch {k:?}"));
            }
            if let Some(c) = &f.algebra.nakayama_cycle_type {
                s.push_str(&format!(" nu-cycles {c:?}"));
            }
            s.push('\n');
        }
        s
    }
}
