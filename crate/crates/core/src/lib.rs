//! Exact enumeration of cost-bounded solutions over zero-suppressed
//! decision diagrams.
//!
//! The usual flow: build the diagram of all feasible solutions (for example
//! every `s`–`t` path of a graph with [`build_path_zdd`]), open a [`Bounder`]
//! with the item costs, and filter with
//! [`Bounder::backtrack_interval_memo`]. The result is an ordinary diagram in
//! the same [`Forest`], so it can be counted, sampled, combined with set
//! operations or written out.
//!
//! ```
//! use costzdd::{grid_graph, build_path_zdd, Bounder, ExtInt, Forest, PathKind};
//!
//! let g = grid_graph(2, 1, 9, 7).unwrap();
//! let mut forest = Forest::new(g.n_edges() as u32);
//! let f = build_path_zdd(&mut forest, &g, 1, 9, PathKind::Simple).unwrap();
//! let mut bounder = Bounder::new(&mut forest, g.costs()).unwrap();
//! let all = bounder.backtrack_interval_memo(f, ExtInt::PosInf).unwrap();
//! assert_eq!(all.h, f);
//! assert_eq!(bounder.forest_mut().count(f), 12u32.into());
//! ```

pub mod bound;
pub mod error;
pub mod ext_int;
pub mod frontier;
pub mod graph;
pub mod graph_io;
pub mod zdd;

pub use bound::{naive_call_count, BoundResult, Bounder, CostVector, Interval, IntervalMemo};
pub use error::{Error, Result};
pub use ext_int::ExtInt;
pub use frontier::{build_path_zdd, frontier_width, PathKind};
pub use graph::{grid_graph, grid_vertex, Edge, Graph, VertexId};
pub use graph_io::{parse_graph, parse_report, write_graph, write_report, RunReport};
pub use num_bigint::BigUint;
pub use zdd::{Forest, ItemSet, NodeId, SetOp, ZddNode};
