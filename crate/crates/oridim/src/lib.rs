//! Exact tools for the directed metric dimension of oriented graphs.
//!
//! The distance from u to v is the length of a shortest directed path,
//! and a set B resolves the digraph when the vectors of distances *to*
//! the vertices of B are pairwise distinct. This crate provides:
//!
//! - [`Digraph`]: arc-list oriented graphs (no loops, no opposite arc
//!   pairs) with BFS distance matrices;
//! - [`metric_dimension`]: exact dimension and lexicographically least
//!   basis by pruned subset search, under either the strong-connectivity
//!   convention or an unreachable-distance sentinel;
//! - [`is_dim_one_by_characterization`]: the Hamiltonian-path test for
//!   dimension one;
//! - [`families`]: generators for oriented wheels, fans, and path
//!   amalgamations of cycles with known dimensions;
//! - [`orient`]: exhaustive orientation search and the orientation
//!   dimension (least dimension over strongly connected orientations);
//! - [`verify`]: closed-form dimension tables checked against search.

#![forbid(unsafe_code)]

pub mod digraph;
pub mod distance;
pub mod families;
pub mod io;
pub mod orient;
pub mod resolver;
pub mod verify;

pub use digraph::{Digraph, DigraphError};
pub use distance::{Dist, DistanceMatrix};
pub use families::{ClosingArc, FamilyError, FamilyInstance, FamilySpec, FanVariant, WheelVariant};
pub use io::{parse_digraph, serialize_digraph, to_dot, ParseError};
pub use orient::{
    enumerate_orientations, ord, orientation_log, OrdReport, OrientError, UndirectedGraph,
    DEFAULT_EDGE_BUDGET,
};
pub use resolver::{
    distance_twin_pairs, is_dim_one_by_characterization, is_resolving, metric_dimension,
    BasisResult, DimMode, DimRecord, Representation, ResolverError,
};
pub use verify::{
    fan_dimension, has_unflagged_mismatch, render_rows, table, wheel_even_dimension,
    wheel_odd_stated_dimension, Bounds, TableBounds, VerificationRow, VerifyTarget,
};
