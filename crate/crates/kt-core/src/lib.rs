//! A toolkit for KT orientations of graphs.
//!
//! An orientation of a graph is a *KT orientation* if every pair of vertices
//! is joined by at most one directed path (in either direction). Such
//! orientations are necessarily acyclic, and graphs that admit one are
//! triangle-free. This crate provides:
//!
//! - [`graph`]: simple undirected graphs with 1-based vertex ids, plus the
//!   structural queries (bridges, girth, bipartitions) the solvers rely on;
//! - [`orientation`]: edge-direction assignments and gluing;
//! - [`io`]: line-oriented `.g` / `.d` file formats with bit-exact round trips;
//! - [`verify`]: polynomial-time verification with witness extraction;
//! - [`solve`]: an exact backtracking decision procedure and an exhaustive
//!   counter, usable as ground truth at small scale;
//! - [`cubic`]: a polynomial-time decision procedure for graphs of maximum
//!   degree at most three, built on a four-cycle hypergraph analysis;
//! - [`families`]: generators for ladders, twincut and copycut graphs and the
//!   exact rational sequence governing their independence numbers;
//! - [`reductions`]: a compiler from monotone NAE-3SAT to KT-orientation
//!   instances, with an assignment decoder;
//! - [`independence`]: an exact maximum-independent-set solver.
//!
//! ```
//! use kt_core::families::{gen_named, NamedGraph};
//! use kt_core::solve::{count_kt_orientations, solve_exact};
//! use kt_core::verify::verify_kt;
//!
//! let c5 = gen_named(NamedGraph::Cycle(5));
//! let outcome = solve_exact(&c5, None).unwrap();
//! let orientation = outcome.found().expect("C5 admits a KT orientation");
//! assert!(verify_kt(orientation).is_kt());
//! assert_eq!(count_kt_orientations(&c5).unwrap(), 10);
//! ```

pub mod cubic;
pub mod families;
pub mod graph;
pub mod independence;
pub mod io;
pub mod orientation;
pub mod reductions;
pub mod solve;
pub mod verify;

pub use graph::{Graph, GraphError, Vertex};
pub use orientation::{glue_at_edge, Orientation, OrientationError, WitnessPair};
pub use solve::{SolveOutcome, SolveStatus};
pub use verify::{is_acyclic, verify_kt, Acyclicity, VerifyResult};
