//! From vertex cuts to trees on finite connected graphs.
//!
//! Given a connected graph and a family of vertex sets ("cuts") satisfying
//! three compatibility conditions — every cut separates the graph, no cut
//! separates another, and no pairwise intersection separates — this crate
//! builds a complete median pretree whose elements are the cuts together
//! with the maximal inseparable vertex sets ("blobs"), and realizes it as a
//! simplicial tree. Graph symmetries that preserve the cut family transport
//! to tree symmetries.
//!
//! Everything is exhaustively checkable at this scale: the pretree axioms,
//! median uniqueness, path/interval agreement on the realized tree, and
//! equivariance of induced symmetries all have verification entry points
//! that report violations instead of assuming the theory.

#![forbid(unsafe_code)]

pub mod actions;
pub mod blobs;
pub mod cuts;
pub mod error;
pub mod io;
pub mod pretree;
pub mod space;
pub mod tree;

pub use actions::{
    enumerate_automorphisms, induce, verify_equivariance, Automorphism, EquivarianceReport,
};
pub use blobs::{
    inseparable, is_inseparable_set, maximal_inseparable_sets, pretree_elements, quotient_blobs,
    ElementKind, InseparabilityRelation, PretreeElement,
};
pub use cuts::{
    articulation_cuts, filter_admissible, validate, AxiomReport, ConditionStatus, CutSystem,
};
pub use error::{Error, Result};
pub use pretree::{AxiomViolation, Interval, IntervalKind, Pretree, PretreeAxiomReport};
pub use space::{Separation, Space, VertexSet};
pub use tree::{realize, ExportFormat, SimplicialTree};
