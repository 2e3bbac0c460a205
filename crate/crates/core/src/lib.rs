//! Exact toolkit for vertex-k-maximal r-uniform hypergraphs.
//!
//! A hypergraph is vertex-k-maximal when every subhypergraph has vertex
//! connectivity at most `k`, but adding any missing r-set creates one with
//! connectivity at least `k + 1`. This crate builds the extremal families,
//! computes connectivity and kappa-bar exactly under induced-subhypergraph
//! deletion semantics, saturates admissible hypergraphs to maximal ones, and
//! verifies the size bounds on desk-scale instances, exhaustively where the
//! edge universe permits.
//!
//! Kernels are data-parallel through rayon (feature `parallel`, enabled by
//! default); disabling the feature yields a sequential build with identical
//! results, since every parallel reduction is order-independent.
//!
//! ```
//! use vkmax::{Hypergraph, connectivity, maximality};
//!
//! // the lower-extremal construction on 7 vertices with a 2-vertex hub
//! let h = Hypergraph::h_l(7, 2, 3)?;
//! assert_eq!(h.edge_count(), 25); // C(7,3) - C(5,3)
//! assert_eq!(connectivity::kappa(&h), 2);
//! assert_eq!(connectivity::kappa_bar(&h).value, 2);
//!
//! // adding any missing edge creates a 3-connected induced subhypergraph
//! let report = maximality::is_vertex_k_maximal(&h, 2)?;
//! assert_eq!(report.verdict, maximality::Verdict::Maximal);
//! # Ok::<(), vkmax::HgError>(())
//! ```
#![forbid(unsafe_code)]

pub mod bounds;
pub mod connectivity;
mod error;
mod exec;
pub mod harness;
pub mod io;
mod kernel;
pub mod maximality;

mod hypergraph;
mod set;

pub use error::{HgError, Result};
pub use hypergraph::{CrossingQuery, Hypergraph};
pub use set::{VertexSet, MAX_VERTICES};
