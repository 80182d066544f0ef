//! Limited packings and tuple domination in graphs.
//!
//! A set `X` of vertices is a k-limited packing when every closed
//! neighbourhood `N[v]` contains at most `k` members of `X`. On an
//! `r`-regular graph the complement of a maximum k-limited packing is a
//! minimum `(r + 1 - k)`-tuple dominating set.

pub mod bounds;
pub mod catalog;
pub mod cubic;
pub mod error;
pub mod exact;
pub mod field;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeKind, Graph, TypedMultigraph};
