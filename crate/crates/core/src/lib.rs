//! Partial groups built from decorated graphs.
//!
//! A decorated graph is a simple graph with a non-trivial finite group on
//! each vertex. Its partial group has as elements the cyclically reduced
//! free-product words supported on cliques, multiplies by free reduction,
//! and admits a word of elements into its domain when every contiguous
//! segment multiplies to a cyclically reduced word on a common clique.
//!
//! Everything is intensional and bounded: handles answer membership and
//! domain queries, and all enumeration takes explicit size limits.

pub mod analysis;
pub mod decpart;
pub mod error;
pub mod fingroup;
pub mod graph;
pub mod io;
pub mod morphisms;
pub mod nerve;
pub mod partial;
pub mod suite;
pub mod words;

pub use error::{Error, Result};
