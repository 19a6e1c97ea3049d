//! Sparse additive spanners and collective additive tree spanners for
//! unweighted graphs.
//!
//! The construction recursively splits a graph with balanced separators made
//! of one or more BFS disks, replacing each removed disk by a *meta vertex*
//! in the child graphs. The resulting hierarchy yields
//!
//! - a sparse additive spanner: the union of BFS trees rooted at the
//!   separator centers ([`spanners::sparse_spanner`]);
//! - a small system of spanning trees such that every vertex pair is served
//!   by at least one of them with bounded additive surplus
//!   ([`spanners::collective_system`]).
//!
//! Guarantees are stated in terms of the *tree-breadth* of the input, which
//! [`verify::brute_tree_breadth`] computes exactly on small graphs. The
//! [`treedec`] module carries the tree-decomposition model used to relate
//! spanners of bounded tree-width to `k`-tree-breadth.
//!
//! ```
//! use spannerweave::{graph::named, hierarchy::build_hierarchy, spanners, verify};
//!
//! let g = named::cycle(12);
//! let h = build_hierarchy(&g, 1).unwrap();
//! let system = spanners::collective_system(&h);
//! let report = verify::collective_surplus(&g, &system.tree_graphs(&g).unwrap()).unwrap();
//! assert!(f64::from(report.max_surplus) <= spanners::surplus_bound(&h));
//! ```

pub mod cli;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hierarchy;
pub mod io;
pub mod separators;
pub mod spanners;
pub mod treedec;
pub mod unionfind;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Dist, Graph, VertexSet};
