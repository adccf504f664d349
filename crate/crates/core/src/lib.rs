//! General position numbers of graphs and their Mycielskians.
//!
//! A set of vertices is in *general position* when no member lies strictly
//! inside a shortest path between two others; gp(G) is the largest size of
//! such a set. This crate computes gp for arbitrary graphs up to 128
//! vertices and specialises in gp of the Mycielskian mu(G), which it can
//! obtain by three independent routes:
//!
//! * exhaustive search on mu(G) itself ([`gp::gp_number`], [`gp::gp_brute`]);
//! * a search over four-block partitions of V(G) that encode root-free
//!   general position sets of mu(G) ([`partition::best_partition`]);
//! * closed forms for recognised families ([`bounds::closed_form`]).
//!
//! The [`bounds`] module adds lower/upper bounds (independence, regularity,
//! matchings, trees) and the meagre/abundant classification, and
//! [`mycielski::check_geodesic_classification`] exhaustively audits the
//! shapes of shortest paths in mu(G).
//!
//! ```
//! use gpmyc::families;
//! use gpmyc::gp::gp_number;
//! use gpmyc::mycielski::mycielskian;
//! use gpmyc::partition::best_partition;
//!
//! let g = families::cycle(5).unwrap();
//! let mu = mycielskian(&g).unwrap();
//! let direct = gp_number(mu.graph());
//! let dual = best_partition(&g).unwrap();
//! assert_eq!(direct.value, 6);
//! assert_eq!(dual.value(), 6);
//! ```

pub mod bounds;
pub mod families;
pub mod gp;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod mycielski;
pub mod partition;

pub use bounds::{BoundError, BoundReport, ClosedFormFamily, GpClass, TreeBounds};
pub use gp::{GpCertificate, GpMethod, SolverError};
pub use graph::{DistMatrix, Girth, Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use matching::matching_number;
pub use mycielski::{mycielskian, MycielskiError, MycielskiGraph, VertexRole};
pub use partition::{MycielskiPartition, PartitionError, PartitionViolation};
