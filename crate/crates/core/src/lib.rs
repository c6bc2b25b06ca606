//! Arc-types of vertex-transitive graphs.
//!
//! The crate computes automorphism groups of simple graphs, derives the
//! arc-orbit structure and the resulting arc-type and edge-type, builds the
//! graph families used to realise arc-types (Cayley graphs, Cartesian
//! products, thickened covers, Bouwer graphs, ...) and synthesizes a certified
//! vertex-transitive graph for any realisable marked partition.

pub mod automorphism;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod partitions;
pub mod perm;
pub mod realize;
pub mod symmetry;

pub use automorphism::{aut, canonical_form, AutConfig, AutGroup, AutResult};
pub use error::{Error, Result};
pub use partitions::MarkedPartition;
pub use symmetry::{analyze, arc_type, classify, edge_type, Analysis, ArcOrbitData, Classification};
pub use graph::{are_isomorphic, disjoint_union, Graph, LcfCode};
pub use realize::{plan, realize, Blueprint, Certificate, CertificateMode, RealizeConfig, VerifyMode};
pub use perm::{builtin_group, FiniteGroup, GroupDescriptor, PermGroup, Permutation};
