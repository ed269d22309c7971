//! Perfect codes (efficient dominating sets) in hypercubes, Fibonacci cubes,
//! Lucas cubes and generalized Lucas cubes.
//!
//! The crate covers string families and their weight-level counts
//! ([`bitstrings`]), induced subgraphs of `Q_n` ([`graph`]), an exact-cover
//! search for perfect codes ([`engine`]), Hamming codes and the codes they
//! induce in generalized Lucas cubes ([`hamming`]), and a table of
//! executable claim checks ([`verify`]).

pub mod bitstrings;
pub mod engine;
mod error;
pub mod graph;
pub mod hamming;
pub mod verify;

pub use bitstrings::{BitWord, CubeFamily};
pub use engine::{CodeSet, SearchConfig, SearchMode, SearchOutcome, SearchStatus};
pub use error::{Error, Result};
pub use graph::{InducedGraph, VertexSet};
