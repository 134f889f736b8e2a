//! Clique values and clique packings on small graphs.
//!
//! Everything here revolves around the value of a k-clique, the number of
//! common neighbors of its vertices. Clique values satisfy a handshaking
//! identity that counts (k+1)-cliques, and they drive a Mantel-type bound
//! `c_{k+1} <= c_k^2 / (4k)` for graphs with no (k+2)-clique. The crate
//! provides the graph types and generators, clique enumeration and
//! censuses, an exact solver for maximum independent sets of k-cliques,
//! checkers for the identities and bounds with exact rational arithmetic,
//! and slow reference oracles used to cross-examine all of the above.

pub mod bitset;
pub mod bounds;
pub mod clique;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod packing;
pub mod report;
pub mod subgraph;
pub mod suites;

pub use graph::{Edge, Graph, GraphError};
