//! Moore-like bounds and exhaustive search for totally regular mixed graphs.
//!
//! A mixed graph has undirected edges and directed arcs. It is
//! `(r, z)`-regular when every vertex has `r` edges, `z` outgoing arcs and
//! `z` incoming arcs. This crate provides:
//!
//! - [`bounds`]: the Moore bound `M(r, z, k)` by three independent routes,
//!   the improved bound `M - r` for diameter at least 3 and its parity
//!   refinement.
//! - [`mixedgraph`]: the graph type, distances, Moore-tree walk counts and
//!   repeats, canonical forms and the MGF file format.
//! - [`search`]: isomorph-free enumeration of `(r, z)`-regular mixed graphs of
//!   given order and diameter.
//! - [`spectral`]: exact characteristic polynomials and cospectrality.
//! - [`constructions`]: cycles, the line digraph of a digon cycle and dihedral
//!   Cayley graphs.
//! - [`cli`]: the `mixed-moore` command line.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod mixedgraph;
pub mod search;
pub mod spectral;

pub use bounds::{improved_bound, moore_bound, BoundReport, DegreePair};
pub use mixedgraph::{CanonicalForm, MixedGraph};
pub use search::{enumerate, max_order, DiameterMode, SearchResult, SearchSpec};
