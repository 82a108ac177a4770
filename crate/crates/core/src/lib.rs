//! Conway–Coxeter friezes of polygon triangulations.
//!
//! Each entry of the frieze of a triangulation counts the submodules of a
//! string module, and flipping a diagonal changes every entry by an amount
//! read off a handful of neighbouring entries. The modules are layered:
//!
//! * [`polygon`]: arcs, triangulations, flips and quiddity sequences.
//! * [`quiver`]: the quiver with relations of a triangulation.
//! * [`strings`]: string modules, submodule counts and the closed formula.
//! * [`frieze`]: frieze grids from quiddities or from submodule counts.
//! * [`mutation`]: regions, projections and the frieze difference.
//! * [`checks`]: exhaustive cross-checks over all small triangulations.

pub mod checks;
pub mod frieze;
pub mod mutation;
pub mod polygon;
pub mod quiver;
pub mod strings;

pub use frieze::{frieze_from_quiddity, frieze_from_triangulation, verify, Frieze};
pub use mutation::{
    classify, delta, mutate_frieze, project, rays, support_change_check, RegionLabel,
};
pub use polygon::{
    enumerate_triangulations, flip, quadrilateral, quiddity, validate, Arc, Triangulation,
};
pub use quiver::{quiver_of_triangulation, QuiverWithRelations};
pub use strings::{cc_entry, module_of_arc, submodule_count_bruteforce, StringModule};
