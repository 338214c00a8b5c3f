//! Finite-dimensional basic algebras given by structure constants, the
//! cluster-tilted algebras built from cluster-tilting objects, and the
//! presentation templates they are matched against.

mod basic;
mod endo;
mod matching;
mod modules;
mod template;

pub use basic::{BasicAlgebra, BasisTag, GabrielQuiver, RadicalLayers, Sparse};
pub use endo::{build_end_algebra, normalize_to_module_rep, tilted_algebra, Normalization};
pub use matching::{match_template, TemplateMatch};
pub use modules::{ext2_injective_projective, ModuleCategory, RightModule};
pub use template::{PathClasses, PresentationTemplate, TemplateFamily};
