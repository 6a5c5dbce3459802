//! Combinatorics of generalized binomial edge ideals `J_{K_m, G}`: graph
//! invariants, vertex connectivity, cut sets, completions, class recognizers
//! and depth bounds.

pub mod bounds;
pub mod canon;
pub mod caps;
pub mod classes;
pub mod completion;
pub mod connectivity;
pub mod cutsets;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod io;
pub mod par;

pub use bounds::{exact_depth, lower_bound, report, upper_bound, DepthReport, ExactDepth, ExactSource};
pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{invariants, GraphInvariants, SimpleGraph, VertexSet};
pub use par::Exec;
