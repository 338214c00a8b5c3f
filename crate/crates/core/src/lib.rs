pub mod error;
pub mod linalg;
pub mod quiver;
pub mod rep;

pub use error::{Error, Result};
pub use quiver::{DimVector, DynkinType, Family, OrientationPolicy, Quiver, Vertex};
pub mod cluster;
pub mod tilt;
pub mod algebra;
pub mod classify;
pub mod selfcheck;

/// Version tag carried by every JSON document.
pub const SCHEMA_VERSION: u32 = 1;
