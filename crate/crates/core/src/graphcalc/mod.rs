//! Decorated graph monomials and the free / cofree constructions built on
//! them.

pub mod canon;
pub mod delta;
pub mod derivation;
pub mod enumerate;
pub mod graft;
pub mod graph;
pub mod policy;
pub mod sum;

pub use canon::{canonicalize, orbit_rep};
pub use delta::{convex_subsets, delta_11, delta_graph, quotient, Split};
pub use derivation::{apply_coderivation, apply_derivation, lookup_equivariant, lookup_scalar, Coderivation, Derivation};
pub use enumerate::{enumerate_reps, two_level_composites};
pub use graft::{encode_blocks, encode_tensor, graft, graft_at, graft_graphs, placeholder, rep_dec};
pub use graph::{Dec, Graph, Slot};
pub use policy::TruncationPolicy;
pub use sum::FormalSum;
