//! Quasi-Ramsey toolkit: homogeneous-set finders, lower-bound constructions,
//! closed-form bounds and an exhaustive engine for small exact values.
//!
//! A set of vertices is `t`-homogeneous when it induces minimum degree at
//! least `t` in the graph or in its complement. Every search result comes with
//! enough data to be rechecked independently.

pub mod bounds;
pub mod certificate;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod finders;
pub mod graph;
pub mod graph6;
pub mod measures;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph, Side, VertexSet};
pub use graph6::{decode_graph6, encode_graph6, to_graph6_string};
