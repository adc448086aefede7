//! Graph symmetry toolkit.
//!
//! Automorphism groups of colored graphs, permutation-group structure
//! (orders, composition factors, Γ_d and Θ_d membership), minor search,
//! Menger-type separators, the sliding-pebble minor construction and the
//! recursive decomposition of automorphism groups into direct products,
//! wreath products and extensions.

pub mod acceptance;
pub mod automorphism;
pub mod families;
pub mod graph;
pub mod io;
pub mod minors;
pub mod oracle;
pub mod pebble;
pub mod perm;
pub mod report;
pub mod separators;
pub mod structure;
pub mod util;

pub use graph::{ColoredGraph, Graph, GraphError, Partition};
pub use perm::{PermError, PermGroup, Permutation};
