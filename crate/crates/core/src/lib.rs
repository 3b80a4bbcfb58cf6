//! Self-complementary graphs and their Hadwiger numbers.

pub mod bounds;
pub mod canon;
pub mod catalog;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod minors;
pub mod sc;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
